#include <doctest.h>

#include "sepindex/enumeration.hpp"
#include "sepindex/error.hpp"
#include "sepindex/moves.hpp"
#include "sepindex/separation.hpp"
#include "support.hpp"

using namespace sepindex;

TEST_CASE("starring adds a degree-3 vertex and unstarring removes it") {
  const MoveResult s = star_vertex(octahedron(), {0, 2, 4});
  CHECK(s.record.vertex == 6);
  CHECK(s.complex.num_vertices() == 7);
  CHECK(is_triangulated_2sphere(s.complex));
  CHECK(one_skeleton(s.complex).degree(6) == 3);
  const MoveResult back = unstar_vertex(s.complex, 6);
  CHECK(back.complex == octahedron());
  CHECK_THROWS_AS(star_vertex(octahedron(), {0, 1, 2}), InputError);
  CHECK_THROWS_AS(unstar_vertex(octahedron(), 0), InputError);
}

TEST_CASE("unstarring compacts labels") {
  const Complex x = star_vertex(star_vertex(standard_sphere(2), {0, 1, 2}).complex, {0, 1, 3}).complex;
  const MoveResult r = unstar_vertex(x, 4);
  CHECK(r.complex.num_vertices() == 5);
  CHECK(is_triangulated_2sphere(r.complex));
}

TEST_CASE("edge flips") {
  // In the octahedron the edge 02 has apexes 4 and 5, which are antipodal.
  CHECK(edge_apexes(octahedron(), 0, 2) == std::array<Vertex, 2>{4, 5});
  const MoveResult f = edge_flip(octahedron(), {0, 2}, {4, 5});
  CHECK(is_triangulated_2sphere(f.complex));
  CHECK(f.complex.num_vertices() == 6);
  CHECK_FALSE(one_skeleton(f.complex).adjacent(0, 2));
  CHECK(one_skeleton(f.complex).adjacent(4, 5));
  CHECK(edge_flip(f.complex, {4, 5}, {0, 2}).complex == octahedron());
  // Apexes already adjacent: the flip would create a double edge.
  CHECK_THROWS_AS(edge_flip(f.complex, {0, 4}, {2, 5}), InputError);
}

TEST_CASE("1-move classes by endpoint degree") {
  // Star a facet of the octahedron, then flip so the new vertex gains an edge.
  const Complex z = star_vertex(octahedron(), {0, 2, 4}).complex;
  const auto apex = edge_apexes(z, 0, 2);
  const Vertex d = apex[0] == 6 ? apex[1] : apex[0];
  CHECK(classify_1_move(z, {0, 2}, {6, d}) == OneMoveClass::OneA);
  CHECK(edge_flip(z, {0, 2}, {6, d}).record.subkind == MoveSubkind::OneA);
  CHECK(classify_1_move(octahedron(), {0, 2}, {4, 5}) == OneMoveClass::OneB);
}

TEST_CASE("move log round trip and replay") {
  const auto [x, seq] = build_stacked(11, 9);
  const std::string log = to_log(seq.records);
  CHECK(parse_log(log) == seq.records);
  CHECK(replay({standard_sphere(2), parse_log(log)}) == x);
  CHECK(format_move(seq.records.front()).rfind("0 ", 0) == 0);
}

TEST_CASE("replay names the failing record") {
  const std::vector<MoveRecord> bad = parse_log("0 0 1 2 -> 4\n2 0 -> 1 2 3\n");
  try {
    replay({standard_sphere(2), bad});
    FAIL("expected a replay error");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("move 1") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_log("3 0 1\n"), InputError);
}

TEST_CASE("stacked construction is deterministic and recognised") {
  CHECK(build_stacked(15, 77).first == build_stacked(15, 77).first);
  for (std::uint64_t seed = 0; seed < 10; ++seed) CHECK(is_stacked(build_stacked(12, seed).first));
  CHECK(is_stacked(standard_sphere(2)));
  CHECK_FALSE(is_stacked(octahedron()));
  const StackedCheck c = check_stacked(build_stacked(9, 1).first);
  CHECK(c.witness.records.size() == 5);
}

TEST_CASE("reduction to S^2_4 replays to an isomorphic sphere") {
  for (int n = 4; n <= 8; ++n) {
    for (const Complex& x : enumerate_spheres(n).representatives) {
      const MoveSequence seq = reduce_to_s24(x);
      CHECK(seq.start == standard_sphere(2));
      for (const auto& r : seq.records) {
        CHECK(r.kind != MoveKind::Two);
        if (r.kind == MoveKind::One) CHECK(r.subkind != MoveSubkind::None);
      }
      CHECK(canonical_code(replay(seq)) == canonical_code(x));
    }
  }
  std::mt19937_64 rng(21);
  const Complex shuffled = testing_support::relabel(octahedron(), testing_support::random_permutation(6, rng));
  CHECK(canonical_code(replay(reduce_to_s24(shuffled))) == canonical_code(octahedron()));
}

TEST_CASE("separating-triangle flip lowers s") {
  const Complex x = build_stacked(8, 3).first;
  REQUIRE_FALSE(is_flag(x));
  const MoveResult r = theorem2_flip(x);
  CHECK(is_triangulated_2sphere(r.complex));
  CHECK(separation_of(r.complex) < separation_of(x));
  CHECK_THROWS_AS(theorem2_flip(octahedron()), InputError);
}

TEST_CASE("move examples on small spheres") {
  const MoveResult five = star_vertex(standard_sphere(2), {0, 1, 2});
  CHECK(f_vector(five.complex).counts == std::vector<std::int64_t>{5, 9, 6});
  CHECK(link(five.complex, 4).labels == std::vector<Vertex>{0, 1, 2});
  CHECK(unstar_vertex(five.complex, 4).complex == standard_sphere(2));
  CHECK_THROWS_AS(edge_flip(standard_sphere(2), {0, 1}, {2, 3}), InputError);
  // Any flip of the octahedron lands on the other 6-vertex sphere.
  const Complex flipped = edge_flip(octahedron(), {0, 2}, {4, 5}).complex;
  CHECK(is_stacked(flipped));
  CHECK(canonical_code(flipped) == canonical_code(build_stacked(6, 11).first));
}

TEST_CASE("stacked spheres have two degree-3 vertices") {
  for (int n = 5; n <= 14; ++n) {
    const Graph g = one_skeleton(build_stacked(n, n).first);
    int low = 0;
    for (Vertex v = 0; v < n; ++v) low += g.degree(v) == 3 ? 1 : 0;
    CHECK(low >= 2);
  }
  CHECK(build_stacked(4, 0).first == standard_sphere(2));
  CHECK_THROWS_AS(build_stacked(3, 0), InputError);
}

TEST_CASE("f-vector changes under moves") {
  const Complex x = build_stacked(9, 6).first;
  const auto f = f_vector(x).counts;
  const auto f0 = f_vector(star_vertex(x, {x.facets()[3][0], x.facets()[3][1], x.facets()[3][2]}).complex).counts;
  CHECK(f0 == std::vector<std::int64_t>{f[0] + 1, f[1] + 3, f[2] + 2});
  const Graph g = one_skeleton(x);
  for (const auto& e : x.faces(1)) {
    const auto apex = edge_apexes(x, e[0], e[1]);
    if (g.adjacent(apex[0], apex[1])) continue;
    const MoveResult r = edge_flip(x, {e[0], e[1]}, apex);
    CHECK(f_vector(r.complex).counts == f);
    CHECK(edge_flip(r.complex, apex, {e[0], e[1]}).complex == x);
  }
}

TEST_CASE("reduction examples") {
  CHECK(reduce_to_s24(standard_sphere(2)).records.empty());
  const MoveSequence five = reduce_to_s24(build_stacked(5, 0).first);
  REQUIRE(five.records.size() == 1);
  CHECK(five.records[0].kind == MoveKind::Zero);
  const MoveSequence oct = reduce_to_s24(octahedron());
  REQUIRE(oct.records.size() >= 2);
  const auto& last = oct.records[oct.records.size() - 1];
  const auto& before = oct.records[oct.records.size() - 2];
  CHECK(before.kind == MoveKind::Zero);
  CHECK(last.subkind == MoveSubkind::OneA);
}

TEST_CASE("a flip between high-degree vertices is neither 1A nor 1B") {
  bool found = false;
  for (const Complex& x : enumerate_spheres(10).representatives) {
    const Graph g = one_skeleton(x);
    for (const auto& e : x.faces(1)) {
      const auto apex = edge_apexes(x, e[0], e[1]);
      if (g.adjacent(apex[0], apex[1]) || g.degree(apex[0]) < 5 || g.degree(apex[1]) < 5) continue;
      CHECK(classify_1_move(x, {e[0], e[1]}, apex) == OneMoveClass::Other);
      CHECK(edge_flip(x, {e[0], e[1]}, apex).record.subkind == MoveSubkind::None);
      found = true;
    }
    if (found) break;
  }
  CHECK(found);
}

TEST_CASE("flip descent on every non-flag sphere up to 9 vertices") {
  for (int n = 6; n <= 9; ++n) {
    for (const Complex& t : enumerate_spheres(n).representatives) {
      if (is_flag(t)) continue;
      CHECK(separation_of(theorem2_flip(t).complex) < separation_of(t));
    }
  }
  const Complex stacked6 = build_stacked(6, 2).first;
  CHECK(separation_of(theorem2_flip(stacked6).complex) < Rational(-7, 10));
  CHECK_THROWS_AS(theorem2_flip(build_stacked(5, 0).first), InputError);
}

TEST_CASE("greedy stacked recognition agrees with the closed form") {
  for (int n = 4; n <= 9; ++n) {
    for (const Complex& x : enumerate_spheres(n).representatives) {
      CHECK(is_stacked(x) == (separation_of(x) == stacked_value(n)));
    }
  }
}
