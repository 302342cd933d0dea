#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "factorseq/factorseq.hpp"
#include "support.hpp"

using namespace factorseq;

namespace {

DegreeSequence seq(std::initializer_list<int> v) { return DegreeSequence(std::vector<int>(v)); }

template <typename F>
errc code_of(F&& f) {
  try {
    f();
  } catch (const error& e) {
    return e.code();
  }
  FAIL("expected a factorseq::error");
  return errc::parse_error;
}

SmallGraph star4() {
  SmallGraph g(4);
  g.add_edge(0, 3);
  g.add_edge(1, 3);
  g.add_edge(2, 3);
  return g;
}

SmallGraph cycle(int n) {
  SmallGraph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

SmallGraph path(int n) {
  SmallGraph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

// outer 5-cycle, inner pentagram, spokes
SmallGraph petersen() {
  SmallGraph g(10);
  for (int v = 0; v < 5; ++v) {
    g.add_edge(v, (v + 1) % 5);
    g.add_edge(5 + v, 5 + (v + 2) % 5);
    g.add_edge(v, 5 + v);
  }
  return g;
}

SmallGraph complete_bipartite(int a, int b) {
  SmallGraph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = a; v < a + b; ++v) g.add_edge(u, v);
  return g;
}

}  // namespace

TEST_CASE("odd component counting") {
  SmallGraph k4 = SmallGraph::complete(4);
  CHECK(odd_components(k4, 0, 0, 1) == 0);  // k|H| = 4, even
  CHECK(odd_components(k4, 0, 0, 3) == 0);  // 12, even

  SmallGraph star = star4();
  CHECK(odd_components(star, vbit(3), 0, 1) == 3);  // three isolated leaves
  CHECK(odd_components(star, 0, 0, 1) == 0);        // k|H| + 0 = 4

  // leaves in B: the center component has |H| = 1, e(H,B) = 3, so parity 1+3
  CHECK(odd_components(star, 0, static_cast<VertexSet>(vbit(0) | vbit(1) | vbit(2)), 1) == 0);

  CHECK(odd_components(cycle(5), 0, 0, 2) == 0);   // 10, even
  CHECK(odd_components(cycle(5), 0, 0, 1) == 1);   // 5, odd

  CHECK(code_of([&] { odd_components(k4, 0, 0, 0); }) == errc::bad_k);
  CHECK(code_of([&] { odd_components(k4, 1, 1, 1); }) == errc::overlapping_sets);
  CHECK(code_of([&] { odd_components(k4, vbit(5), 0, 1); }) == errc::range_error);
}

TEST_CASE("theta on known pairs") {
  SmallGraph star = star4();
  CHECK(theta(star, vbit(3), 0, 1) == -2);
  CHECK(theta(star, 0, 0, 1) == 0);
  CHECK(theta(SmallGraph::complete(4), 0, 0, 1) == 0);
  // C5 at k = 2: removing one vertex leaves a path, one component, 2*4 even
  CHECK(theta(cycle(5), vbit(0), 0, 2) == 2);
}

TEST_CASE("theta parity matches k times n") {
  for (int n = 1; n <= 4; ++n)
    testsupport::for_all_graphs(n, [&](const SmallGraph& g) {
      const VertexSet all = g.full_set();
      for (int k = 1; k <= 3; ++k)
        for (VertexSet A = 0;; ++A) {
          if ((A & all) == A)
            for (VertexSet B = 0;; ++B) {
              if ((B & all) == B && !(A & B))
                REQUIRE(((theta(g, A, B, k) - static_cast<long long>(k) * n) % 2) == 0);
              if (B == all) break;
            }
          if (A == all) break;
        }
    });
}

TEST_CASE("tutte_minimum matches the exhaustive reference") {
  for (int n = 0; n <= 5; ++n)
    testsupport::for_all_graphs(n, [&](const SmallGraph& g) {
      for (int k = 1; k <= 3; ++k) {
        auto ref = testsupport::ref_tutte_best(g, k);
        TutteCertificate got = tutte_minimum(g, k);
        REQUIRE(got.theta == ref.theta);
        REQUIRE(got.A == ref.A);  // lex-least tie-break, A before B
        REQUIRE(got.B == ref.B);
        REQUIRE(got.k == k);
        REQUIRE(theta(g, got.A, got.B, k) == got.theta);
        REQUIRE(odd_components(g, got.A, got.B, k) == got.odd_count);
      }
    });

  std::mt19937 rng(7001);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 6 + static_cast<int>(rng() % 3);  // 6..8
    SmallGraph g = testsupport::random_graph(rng, n);
    for (int k = 1; k <= 3; ++k) {
      auto ref = testsupport::ref_tutte_best(g, k);
      TutteCertificate got = tutte_minimum(g, k);
      REQUIRE(got.theta == ref.theta);
      REQUIRE(got.A == ref.A);
      REQUIRE(got.B == ref.B);
    }
  }
}

TEST_CASE("find_tutte_pair returns a certificate exactly when theta dips below zero") {
  SmallGraph star = star4();
  auto cert = find_tutte_pair(star, 1);
  REQUIRE(cert.has_value());
  CHECK(cert->A == vbit(3));
  CHECK(cert->B == 0);
  CHECK(cert->theta == -2);
  CHECK(cert->odd_count == 3);

  CHECK_FALSE(find_tutte_pair(SmallGraph::complete(4), 1).has_value());
  CHECK_FALSE(find_tutte_pair(cycle(5), 2).has_value());
  CHECK(find_tutte_pair(cycle(5), 1).has_value());  // odd cycle, no 1-factor
}

TEST_CASE("negative certificates satisfy the degree-sum bound") {
  // whenever theta < 0 and k*n is even:
  // sum of d_G(u) over B <= k|B| + |A||B| - k|A| + odd - 2
  for (int n = 1; n <= 5; ++n)
    testsupport::for_all_graphs(n, [&](const SmallGraph& g) {
      for (int k = 1; k <= 2; ++k) {
        if ((k * n) % 2 != 0) continue;
        TutteCertificate cert = tutte_minimum(g, k);
        if (cert.theta >= 0) continue;
        long long sum_b = 0;
        int size_a = std::popcount(cert.A), size_b = std::popcount(cert.B);
        for (int v = 0; v < n; ++v)
          if (cert.B & vbit(v)) sum_b += g.degree(v);
        REQUIRE(sum_b <= static_cast<long long>(k) * size_b +
                             static_cast<long long>(size_a) * size_b -
                             static_cast<long long>(k) * size_a + cert.odd_count - 2);
      }
    });
}

TEST_CASE("k-factor existence on known graphs") {
  SmallGraph k4 = SmallGraph::complete(4);
  CHECK(has_k_factor(k4, 0));
  CHECK(has_k_factor(k4, 1));
  CHECK(has_k_factor(k4, 2));
  CHECK(has_k_factor(k4, 3));
  CHECK_FALSE(has_k_factor(k4, 4));  // exceeds max degree

  CHECK_FALSE(has_k_factor(star4(), 1));
  CHECK(has_k_factor(cycle(5), 2));
  CHECK_FALSE(has_k_factor(cycle(5), 1));  // odd order
  CHECK(has_k_factor(cycle(6), 1));
  CHECK(has_k_factor(petersen(), 1));
  CHECK(has_k_factor(petersen(), 2));  // two disjoint 5-cycles
  CHECK(has_k_factor(petersen(), 3));

  CHECK(code_of([&] { has_k_factor(k4, -1); }) == errc::bad_k);
}

TEST_CASE("k-factor existence agrees with the Tutte scan") {
  for (int n = 1; n <= 5; ++n)
    testsupport::for_all_graphs(n, [&](const SmallGraph& g) {
      for (int k = 1; k <= 4; ++k) {
        bool exists = has_k_factor(g, k);
        bool tutte_ok = tutte_minimum(g, k).theta >= 0;
        REQUIRE(exists == tutte_ok);
      }
    });

  std::mt19937 rng(7002);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 6 + static_cast<int>(rng() % 3);
    SmallGraph g = testsupport::random_graph(rng, n);
    for (int k = 1; k <= 3; ++k)
      REQUIRE(has_k_factor(g, k) == (tutte_minimum(g, k).theta >= 0));
  }
}

TEST_CASE("maximum matching matches the subset DP") {
  for (int n = 0; n <= 5; ++n)
    testsupport::for_all_graphs(n, [&](const SmallGraph& g) {
      REQUIRE(max_matching_size(g) == testsupport::dp_max_matching(g));
    });

  std::mt19937 rng(7003);
  for (int trial = 0; trial < 80; ++trial) {
    int n = 6 + static_cast<int>(rng() % 9);  // 6..14
    SmallGraph g = testsupport::random_graph(rng, n);
    REQUIRE(max_matching_size(g) == testsupport::dp_max_matching(g));
  }
}

TEST_CASE("deficiency of known graphs") {
  CHECK(deficiency(path(3)) == 1);
  CHECK(deficiency(SmallGraph::complete(4)) == 0);
  CHECK(deficiency(star4()) == 2);
  CHECK(deficiency(cycle(5)) == 1);
  CHECK(deficiency(SmallGraph(4)) == 4);
  CHECK(deficiency(petersen()) == 0);
}

TEST_CASE("zero deficiency is exactly a 1-factor") {
  for (int n = 1; n <= 5; ++n)
    testsupport::for_all_graphs(n, [&](const SmallGraph& g) {
      REQUIRE((deficiency(g) == 0) == has_k_factor(g, 1));
    });
}

TEST_CASE("hamiltonicity of known graphs") {
  CHECK(is_hamiltonian(cycle(5)));
  CHECK(is_hamiltonian(SmallGraph::complete(4)));
  CHECK(is_hamiltonian(cycle(6)));
  CHECK(is_hamiltonian(complete_bipartite(3, 3)));
  CHECK_FALSE(is_hamiltonian(star4()));
  CHECK_FALSE(is_hamiltonian(path(4)));
  CHECK_FALSE(is_hamiltonian(petersen()));
  CHECK_FALSE(is_hamiltonian(complete_bipartite(2, 3)));

  SmallGraph disconnected(6);
  disconnected.add_edge(0, 1);
  disconnected.add_edge(1, 2);
  disconnected.add_edge(2, 0);
  disconnected.add_edge(3, 4);
  disconnected.add_edge(4, 5);
  disconnected.add_edge(5, 3);
  CHECK_FALSE(is_hamiltonian(disconnected));

  CHECK(code_of([] { is_hamiltonian(SmallGraph(2)); }) == errc::too_few_vertices);
}

TEST_CASE("exact toughness of known graphs") {
  CHECK(toughness(cycle(5)) == Rational(1));
  CHECK(toughness(star4()) == Rational(1, 3));
  CHECK(toughness(path(3)) == Rational(1, 2));
  CHECK(toughness(complete_bipartite(3, 3)) == Rational(1));
  CHECK(toughness(petersen()) == Rational(4, 3));
  CHECK(toughness(SmallGraph(4)) == Rational(0));  // already disconnected

  // complete graphs disconnect nowhere; reported by convention
  CHECK(toughness(SmallGraph::complete(4)) == Rational(3, 2));
  CHECK(toughness(SmallGraph(1)) == Rational(0));
  CHECK(code_of([] { toughness(SmallGraph(0)); }) == errc::too_few_vertices);
}

TEST_CASE("toughness threshold checks") {
  CHECK(toughness_at_least(cycle(5), Rational(1)));
  CHECK_FALSE(toughness_at_least(cycle(5), Rational(6, 5)));
  CHECK(toughness_at_least(petersen(), Rational(4, 3)));
  CHECK_FALSE(toughness_at_least(petersen(), Rational(7, 5)));
  // complete graphs pass every threshold
  CHECK(toughness_at_least(SmallGraph::complete(4), Rational(100)));
}

TEST_CASE("toughness threshold agrees with the exact value") {
  std::mt19937 rng(7004);
  const Rational levels[] = {Rational(1, 2), Rational(1), Rational(4, 3),
                             Rational(3, 2), Rational(2)};
  auto check_graph = [&](const SmallGraph& g) {
    bool complete = g.edge_count() == g.n() * (g.n() - 1) / 2;
    if (complete) return;  // threshold is vacuous there
    Rational exact = toughness(g);
    for (const Rational& t : levels)
      REQUIRE(toughness_at_least(g, t) == (exact >= t));
  };
  for (int n = 1; n <= 4; ++n) testsupport::for_all_graphs(n, check_graph);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 5 + static_cast<int>(rng() % 6);  // 5..10
    check_graph(testsupport::random_graph(rng, n));
  }
}

TEST_CASE("unique realization without a 2-factor") {
  // (2,2,3,3,5,5) realizes only one labeled structure up to the join pattern;
  // the realized graph must lack a 2-factor while its sequence is graphical
  SmallGraph g = realize(seq({2, 2, 3, 3, 5, 5}));
  CHECK(g.degree_sequence() == seq({2, 2, 3, 3, 5, 5}));
  CHECK_FALSE(has_k_factor(g, 2));
  CHECK(find_tutte_pair(g, 2).has_value());
}
