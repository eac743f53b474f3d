#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "sepindex/complex.hpp"

namespace testing_support {

using namespace sepindex;

inline Complex relabel(const Complex& x, const std::vector<Vertex>& perm) {
  std::vector<Simplex> facets;
  for (auto f : x.facets()) {
    for (auto& v : f) v = perm[v];
    std::sort(f.begin(), f.end());
    facets.push_back(std::move(f));
  }
  return Complex::from_facets(x.num_vertices(), std::move(facets));
}

inline std::vector<Vertex> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

// The 7-vertex torus: triangles {i, i+1, i+3} and {i, i+2, i+3} mod 7.
inline Complex torus7() {
  std::vector<Simplex> facets;
  for (int i = 0; i < 7; ++i) {
    Simplex a{i, (i + 1) % 7, (i + 3) % 7};
    Simplex b{i, (i + 2) % 7, (i + 3) % 7};
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    facets.push_back(a);
    facets.push_back(b);
  }
  return Complex::from_facets(7, std::move(facets));
}

// Suspension of a 2-complex with apexes n and n+1.
inline Complex suspension(const Complex& x) {
  const int n = x.num_vertices();
  std::vector<Simplex> facets;
  for (const auto& f : x.facets()) {
    for (int apex : {n, n + 1}) {
      auto g = f;
      g.push_back(apex);
      facets.push_back(std::move(g));
    }
  }
  return Complex::from_facets(n + 2, std::move(facets));
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

inline std::vector<std::vector<bool>> adjacency(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) adj[u][v] = g.adjacent(u, v);
  }
  return adj;
}

inline std::vector<std::vector<int>> facet_lists(const Complex& x) {
  return {x.facets().begin(), x.facets().end()};
}

}  // namespace testing_support
