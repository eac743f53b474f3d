#include <doctest.h>

#include "oracles.hpp"
#include "sepindex/error.hpp"
#include "sepindex/moves.hpp"
#include "sepindex/separation.hpp"
#include "support.hpp"

using namespace sepindex;

TEST_CASE("hand-computed indices") {
  // Path 0-1-2: only {0, 2} is disconnected, so s = -1 + 1/3.
  const std::array<std::array<Vertex, 2>, 2> path{{{0, 1}, {1, 2}}};
  CHECK(separation_index(Graph::from_edges(3, path)).s == Rational(-2, 3));
  // Octahedron: the three antipodal pairs are the only disconnected subsets.
  CHECK(separation_of(octahedron()) == Rational(-4, 5));
  CHECK(separation_of(standard_sphere(2)) == -1);
}

TEST_CASE("profile entries") {
  const SeparationProfile p = separation_index(one_skeleton(octahedron()));
  CHECK(p.sum_q_minus_1[0] == -1);
  CHECK(p.sum_q_minus_1[2] == 3);
  CHECK(p.s_i[2] == Rational(1, 5));
  for (int i : {1, 3, 4, 5, 6}) CHECK(p.sum_q_minus_1[i] == 0);
  CHECK(profile_csv(p).find("total,-4,5\n") != std::string::npos);
}

TEST_CASE("extremal graphs") {
  for (int n = 1; n <= 16; ++n) {
    CAPTURE(n);
    CHECK(separation_index(Graph::complete(n)).s == -1);
    // Edgeless: sum over i of (i - 1) = (n + 1)(n - 2) / 2.
    CHECK(separation_index(Graph::edgeless(n)).s == Rational((n + 1) * (n - 2), 2));
    CHECK(separation_index_fast(Graph::edgeless(n)).s == Rational((n + 1) * (n - 2), 2));
  }
}

TEST_CASE("agreement with the union-find oracle on random graphs") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 11);
    const double p = (rng() % 100) / 100.0;
    const Graph g = testing_support::random_graph(n, p, rng);
    const Rational expected = oracle::separation_index(testing_support::adjacency(g));
    CAPTURE(n);
    CHECK(separation_index(g).s == expected);
    CHECK(separation_index_fast(g).s == expected);
  }
}

TEST_CASE("fast path matches brute force profile exactly") {
  std::mt19937_64 rng(5);
  for (int n = 4; n <= 18; n += 2) {
    const Graph g = one_skeleton(build_stacked(n, rng()).first);
    CHECK(separation_index_fast(g) == separation_index(g));
    const Graph h = testing_support::random_graph(n, 0.3, rng);
    CHECK(separation_index_fast(h) == separation_index(h));
  }
}

TEST_CASE("adding an edge never increases s") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 9);
    Graph g = testing_support::random_graph(n, 0.3, rng);
    const Rational before = separation_index(g).s;
    const Vertex u = static_cast<Vertex>(rng() % n);
    Vertex v = static_cast<Vertex>(rng() % n);
    if (u == v) v = (v + 1) % n;
    if (g.adjacent(u, v)) continue;
    g.add_edge(u, v);
    CHECK(separation_index(g).s <= before);
  }
}

TEST_CASE("result does not depend on the thread count") {
  const Graph g = one_skeleton(build_stacked(18, 42).first);
  const SeparationProfile one = separation_index(g, {kDefaultSeparationCap, 1});
  for (int threads : {2, 3, 7}) {
    CHECK(separation_index(g, {kDefaultSeparationCap, threads}) == one);
    CHECK(separation_index_fast(g, {kDefaultFastSeparationCap, threads}) == one);
  }
}

TEST_CASE("caps are enforced") {
  CHECK_THROWS_AS(separation_index(Graph::edgeless(29)), CapExceeded);
  CHECK_THROWS_AS(separation_index_fast(Graph::edgeless(41)), CapExceeded);
  CHECK_NOTHROW(separation_index(Graph::edgeless(20), {20, 0}));
}

TEST_CASE("stacked closed form") {
  CHECK(stacked_value(4) == -1);
  CHECK(stacked_value(5) == Rational(-9, 10));
  CHECK(stacked_value(6) == Rational(-7, 10));
  CHECK(stacked_value(8) == 0);
  CHECK_THROWS_AS(stacked_value(3), InputError);
  for (int n = 4; n <= 16; ++n) {
    for (std::uint64_t seed : {1, 2, 3}) CHECK(separation_of(build_stacked(n, seed).first) == stacked_value(n));
  }
}

TEST_CASE("0-move recurrence") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 8);
    const Complex y = build_stacked(n, rng()).first;
    const auto& f = y.facets()[rng() % y.facets().size()];
    CHECK(check_zero_move_recurrence(y, {f[0], f[1], f[2]}).equal);
  }
  CHECK(check_zero_move_recurrence(octahedron(), {0, 2, 4}).equal);
}

TEST_CASE("upper bound verdicts") {
  CHECK(verify_theorem1(build_stacked(9, 4).first).outcome == Theorem1Outcome::EqualityStacked);
  CHECK(verify_theorem1(octahedron()).outcome == Theorem1Outcome::StrictlyBelowNotStacked);
  CHECK(to_string(Theorem1Outcome::EqualityStacked) == "equality, stacked");
}

TEST_CASE("component counts") {
  const Graph oct = one_skeleton(octahedron());
  CHECK(component_count(oct, 0) == 0);
  CHECK(component_count(oct, bit(0) | bit(1)) == 2);
  CHECK(component_count(oct, bit(0) | bit(2)) == 1);
  for (VertexSet a = 1; a < 16; ++a) CHECK(component_count(Graph::complete(4), a) == 1);
}

TEST_CASE("an added edge lowers q(G[A]) by at most one") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 20);
    Graph g = testing_support::random_graph(n, 0.15, rng);
    const Vertex u = static_cast<Vertex>(rng() % n);
    const Vertex v = static_cast<Vertex>((u + 1 + rng() % (n - 1)) % n);
    Graph h = g;
    h.add_edge(u, v);
    for (int k = 0; k < 50; ++k) {
      const VertexSet a = rng() & full_set(n);
      const int before = component_count(g, a), after = component_count(h, a);
      CHECK((after == before || after == before - 1));
    }
  }
}

TEST_CASE("binomial identity behind the recurrence") {
  for (int n = 4; n <= 60; ++n) {
    BigInt sum = 0;
    for (int j = 0; j <= n - 3; ++j) sum += binomial(n - j, 3) * (j + 1);
    CHECK(sum == binomial(n + 2, 5));
    CHECK(binomial(n, 3) == oracle::choose(n, 3));
  }
}

TEST_CASE("recurrence examples") {
  const RecurrenceCheck s24 = check_zero_move_recurrence(standard_sphere(2), {0, 1, 2});
  CHECK(s24.lhs == Rational(-9, 10));
  CHECK(s24.rhs == Rational(-9, 10));
  const RecurrenceCheck oct = check_zero_move_recurrence(octahedron(), {1, 3, 5});
  CHECK(oct.rhs == Rational(8, 7) * Rational(-4, 5) + Rational(8, 20));
  CHECK(oct.equal);
  CHECK(stacked_value(12) == Rational(13, 5));
}

TEST_CASE("index is invariant under relabelling") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 5 + static_cast<int>(rng() % 10);
    const Complex x = build_stacked(n, rng()).first;
    const Complex y = testing_support::relabel(x, testing_support::random_permutation(n, rng));
    CHECK(separation_index(one_skeleton(x)) == separation_index(one_skeleton(y)));
  }
}
