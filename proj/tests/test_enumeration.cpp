#include <doctest.h>

#include <numeric>

#include "oracles.hpp"
#include "sepindex/enumeration.hpp"
#include "sepindex/error.hpp"
#include "sepindex/moves.hpp"
#include "sepindex/separation.hpp"
#include "support.hpp"

using namespace sepindex;
using testing_support::random_permutation;
using testing_support::relabel;

namespace {

// Swapping labels 0 and 1 reverses the orientation that propagation starts
// from whenever the first facet contains both, so the code must come from
// scanning both global orientations.
Complex swap01(const Complex& x) {
  std::vector<Vertex> perm(x.num_vertices());
  std::iota(perm.begin(), perm.end(), 0);
  std::swap(perm[0], perm[1]);
  return relabel(x, perm);
}

}  // namespace

TEST_CASE("census sizes") {
  const auto all = enumerate_up_to(10);
  const std::vector<std::size_t> expected{1, 1, 2, 5, 14, 50, 233};
  for (std::size_t k = 0; k < all.size(); ++k) {
    CHECK(all[k].n == static_cast<int>(k) + 4);
    CHECK(all[k].size() == expected[k]);
  }
}

TEST_CASE("census matches the naive generator for n <= 7") {
  for (int n = 4; n <= 7; ++n) {
    CAPTURE(n);
    const auto naive = oracle::naive_spheres(n);
    const Census c = enumerate_spheres(n);
    CHECK(c.size() == naive.size());
    std::set<std::vector<oracle::Triangle>> ours;
    for (const auto& x : c.representatives) ours.insert(oracle::brute_canonical(oracle::triangles_of(x), n));
    CHECK(ours == naive);
  }
}

TEST_CASE("permissive generation finds nothing new") {
  for (int n = 5; n <= 9; ++n) {
    CAPTURE(n);
    EnumerationOptions permissive;
    permissive.generation = Generation::Permissive;
    CHECK(enumerate_spheres(n, permissive).codes == enumerate_spheres(n).codes);
  }
}

TEST_CASE("canonical code is a complete invariant") {
  std::mt19937_64 rng(2024);
  for (int n = 4; n <= 9; ++n) {
    for (const Complex& x : enumerate_spheres(n).representatives) {
      const CanonicalCode code = canonical_code(x);
      for (int trial = 0; trial < 1000; ++trial) {
        if (canonical_code(relabel(x, random_permutation(n, rng))) != code) {
          FAIL("code changed under relabelling at n = " << n);
        }
      }
    }
  }
  CHECK(canonical_code(octahedron()) != canonical_code(build_stacked(6, 0).first));
  CHECK(canonical_code(swap01(build_stacked(10, 4).first)) == canonical_code(build_stacked(10, 4).first));
}

TEST_CASE("codes decode to their own representatives") {
  const Census c = enumerate_spheres(8);
  for (std::size_t i = 0; i < c.size(); ++i) {
    CHECK(decode(c.codes[i]) == c.representatives[i]);
    CHECK(canonical_code(c.representatives[i]) == c.codes[i]);
    CHECK(CanonicalCode::from_hex(c.codes[i].hex()) == c.codes[i]);
    CHECK(c.codes[i].num_vertices() == 8);
  }
  CHECK(std::is_sorted(c.codes.begin(), c.codes.end()));
  CHECK_THROWS_AS(CanonicalCode::from_hex("0g"), InputError);
  CHECK_THROWS_AS(canonical_code(cyclic_polytope_boundary(6)), InputError);
}

TEST_CASE("single 1-moves stay inside the census") {
  for (int n = 6; n <= 8; ++n) {
    const Census c = enumerate_spheres(n);
    for (const Complex& x : c.representatives) {
      const Graph g = one_skeleton(x);
      for (const auto& e : x.faces(1)) {
        const auto apex = edge_apexes(x, e[0], e[1]);
        if (g.adjacent(apex[0], apex[1])) continue;
        const Complex y = edge_flip(x, {e[0], e[1]}, apex).complex;
        CHECK(std::binary_search(c.codes.begin(), c.codes.end(), canonical_code(y)));
      }
    }
  }
}

TEST_CASE("six-vertex classification") {
  Census c = enumerate_spheres(6);
  annotate(c);
  const ExtremalReport r = classify_census(c);
  CHECK(r.count == 2);
  CHECK(r.max_s == Rational(-7, 10));
  CHECK(r.min_s == Rational(-4, 5));
  REQUIRE(r.argmax.size() == 1);
  REQUIRE(r.argmin.size() == 1);
  CHECK(c.annotations[r.argmax[0]].stacked);
  CHECK(c.annotations[r.argmin[0]].flag);
  CHECK(r.stacked == 1);
  CHECK(r.flag == 1);
  CHECK(filter_flag(c).size() == 1);
}

TEST_CASE("census output is independent of the thread count") {
  EnumerationOptions one{kDefaultCensusCap, 1, Generation::Lemma};
  EnumerationOptions many{kDefaultCensusCap, 3, Generation::Lemma};
  Census a = enumerate_spheres(10, one);
  Census b = enumerate_spheres(10, many);
  annotate(a, 1);
  annotate(b, 4);
  CHECK(census_codes(a) == census_codes(b));
  CHECK(census_csv(a) == census_csv(b));
  CHECK(census_csv(a).rfind("code,f0,s_num,s_den,stacked,flag\n", 0) == 0);
}

TEST_CASE("census cap") {
  CHECK_THROWS_AS(enumerate_spheres(13), CapExceeded);
  CHECK_THROWS_AS(enumerate_spheres(3), InputError);
}

namespace {

bool contains_k5(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<Vertex> pick(5);
  auto extend = [&](auto&& self, int depth, Vertex from) -> bool {
    if (depth == 5) return true;
    for (Vertex v = from; v < n; ++v) {
      bool ok = true;
      for (int i = 0; i < depth && ok; ++i) ok = g.adjacent(pick[i], v);
      if (!ok) continue;
      pick[depth] = v;
      if (self(self, depth + 1, v + 1)) return true;
    }
    return false;
  };
  return extend(extend, 0, 0);
}

}  // namespace

TEST_CASE("planarity consequences on every census member") {
  for (const Census& c : enumerate_up_to(10)) {
    for (const Complex& x : c.representatives) {
      const auto f = f_vector(x);
      CHECK(is_triangulated_2sphere(x));
      CHECK(f[1] == 3 * f[0] - 6);
      CHECK(f[2] == 2 * f[0] - 4);
      const Graph g = one_skeleton(x);
      CHECK_FALSE(contains_k5(g));
      int min_degree = c.n;
      for (Vertex v = 0; v < c.n; ++v) min_degree = std::min(min_degree, g.degree(v));
      CHECK(min_degree <= 5);
    }
  }
}
