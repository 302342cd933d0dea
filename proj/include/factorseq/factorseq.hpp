#pragma once

// Degree-sequence sufficiency conditions for factors, matchings,
// hamiltonicity, and toughness, with exhaustive small-graph oracles,
// realization enumeration, extremal families, and scan experiments.

#include "factorseq/cli.hpp"
#include "factorseq/conditions.hpp"
#include "factorseq/degree_sequence.hpp"
#include "factorseq/enumerate.hpp"
#include "factorseq/errors.hpp"
#include "factorseq/explorer.hpp"
#include "factorseq/oracle.hpp"
#include "factorseq/rational.hpp"
#include "factorseq/small_graph.hpp"
#include "factorseq/verdict.hpp"
