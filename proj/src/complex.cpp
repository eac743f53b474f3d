#include "sepindex/complex.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

#include "sepindex/error.hpp"

namespace sepindex {

namespace {

bool is_subset(const Simplex& small, const Simplex& big) {
  return small.size() < big.size() && std::includes(big.begin(), big.end(), small.begin(), small.end());
}

void normalise(std::vector<Simplex>& facets) {
  for (auto& f : facets) std::sort(f.begin(), f.end());
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
}

std::string format_simplex(const Simplex& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + ")";
}

// Calls fn(face) for every (k+1)-subset of the sorted simplex.
template <typename Fn>
void for_each_subface(const Simplex& s, int k, Fn&& fn) {
  const int size = static_cast<int>(s.size());
  if (k + 1 > size || k < 0) return;
  std::vector<int> idx(k + 1);
  std::iota(idx.begin(), idx.end(), 0);
  Simplex face(k + 1);
  while (true) {
    for (int i = 0; i <= k; ++i) face[i] = s[idx[i]];
    fn(face);
    int i = k;
    while (i >= 0 && idx[i] == size - (k + 1) + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j <= k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

void require_graph_size(int n) {
  if (n > kMaxGraphVertices) throw CapExceeded("graph bitset", n, kMaxGraphVertices);
}

}  // namespace

// ---------------------------------------------------------------- Graph

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n), 0) { require_graph_size(n); }

Graph Graph::from_edges(int n, std::span<const std::array<Vertex, 2>> edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw InputError("edge label out of range");
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    g.add_edge(u, v);
  }
  return g;
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (Vertex v = 0; v < n; ++v) g.adj_[v] = full_set(n) & ~bit(v);
  return g;
}

Graph Graph::edgeless(int n) { return Graph(n); }

std::size_t Graph::num_edges() const {
  std::size_t total = 0;
  for (VertexSet row : adj_) total += std::popcount(row);
  return total / 2;
}

int Graph::degree(Vertex v) const { return std::popcount(adj_[v]); }

void Graph::add_edge(Vertex u, Vertex v) {
  adj_[u] |= bit(v);
  adj_[v] |= bit(u);
}

void Graph::remove_edge(Vertex u, Vertex v) {
  adj_[u] &= ~bit(v);
  adj_[v] &= ~bit(u);
}

std::int64_t FVector::euler_characteristic() const {
  std::int64_t chi = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) chi += (i % 2 == 0) ? counts[i] : -counts[i];
  return chi;
}

// ---------------------------------------------------------------- Complex

Complex Complex::from_facets(int n, std::vector<Simplex> facets, bool strict) {
  if (facets.empty()) throw InputError("empty facet list");
  if (n <= 0) throw InputError("vertex count must be positive");
  for (const auto& f : facets) {
    if (f.empty()) throw InputError("empty facet");
    for (Vertex v : f) {
      if (v < 0 || v >= n) {
        throw InputError("vertex label " + std::to_string(v) + " out of range 0.." + std::to_string(n - 1));
      }
    }
  }
  normalise(facets);
  for (const auto& f : facets) {
    if (std::adjacent_find(f.begin(), f.end()) != f.end()) {
      throw InputError("repeated vertex in facet " + format_simplex(f));
    }
  }
  std::vector<bool> maximal(facets.size(), true);
  for (std::size_t i = 0; i < facets.size(); ++i) {
    for (std::size_t j = 0; j < facets.size(); ++j) {
      if (i != j && is_subset(facets[i], facets[j])) {
        if (strict) {
          throw InputError("facet " + format_simplex(facets[i]) + " is contained in " + format_simplex(facets[j]));
        }
        maximal[i] = false;
        break;
      }
    }
  }
  std::vector<Simplex> kept;
  for (std::size_t i = 0; i < facets.size(); ++i) {
    if (maximal[i]) kept.push_back(std::move(facets[i]));
  }
  std::vector<bool> seen(n, false);
  for (const auto& f : kept) {
    for (Vertex v : f) seen[v] = true;
  }
  for (Vertex v = 0; v < n; ++v) {
    if (!seen[v]) throw InputError("vertex " + std::to_string(v) + " occurs in no facet");
  }
  return Complex(n, std::move(kept));
}

Complex Complex::from_facets_unchecked(int n, std::vector<Simplex> facets) {
  normalise(facets);
  return Complex(n, std::move(facets));
}

int Complex::dim() const {
  int d = -1;
  for (const auto& f : facets_) d = std::max(d, static_cast<int>(f.size()) - 1);
  return d;
}

bool Complex::is_pure() const {
  if (facets_.empty()) return true;
  const auto size = facets_.front().size();
  return std::all_of(facets_.begin(), facets_.end(), [&](const Simplex& f) { return f.size() == size; });
}

bool Complex::has_facet(const Simplex& sorted) const {
  return std::binary_search(facets_.begin(), facets_.end(), sorted);
}

bool Complex::has_face(const Simplex& sorted) const {
  if (sorted.empty()) return !facets_.empty();
  return std::any_of(facets_.begin(), facets_.end(), [&](const Simplex& f) {
    return std::includes(f.begin(), f.end(), sorted.begin(), sorted.end());
  });
}

std::vector<Simplex> Complex::faces(int k) const {
  std::vector<Simplex> out;
  for (const auto& f : facets_) for_each_subface(f, k, [&](const Simplex& s) { out.push_back(s); });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---------------------------------------------------------------- queries

FVector f_vector(const Complex& x) {
  FVector fv;
  for (int k = 0; k <= x.dim(); ++k) fv.counts.push_back(static_cast<std::int64_t>(x.faces(k).size()));
  return fv;
}

namespace {

Relabelled relabel_dense(std::vector<Simplex> faces_old) {
  std::vector<Vertex> labels;
  for (const auto& f : faces_old) labels.insert(labels.end(), f.begin(), f.end());
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  for (auto& f : faces_old) {
    for (Vertex& v : f) v = static_cast<Vertex>(std::lower_bound(labels.begin(), labels.end(), v) - labels.begin());
  }
  std::vector<Simplex> maximal;
  normalise(faces_old);
  for (std::size_t i = 0; i < faces_old.size(); ++i) {
    bool contained = false;
    for (std::size_t j = 0; j < faces_old.size() && !contained; ++j) {
      contained = (i != j) && is_subset(faces_old[i], faces_old[j]);
    }
    if (!contained) maximal.push_back(faces_old[i]);
  }
  const int n = static_cast<int>(labels.size());
  return {Complex::from_facets_unchecked(n, std::move(maximal)), std::move(labels)};
}

}  // namespace

Relabelled link(const Complex& x, Vertex v) {
  if (v < 0 || v >= x.num_vertices()) throw InputError("unknown vertex " + std::to_string(v));
  std::vector<Simplex> faces;
  for (const auto& f : x.facets()) {
    if (!std::binary_search(f.begin(), f.end(), v)) continue;
    Simplex rest;
    for (Vertex u : f) {
      if (u != v) rest.push_back(u);
    }
    if (!rest.empty()) faces.push_back(std::move(rest));
  }
  return relabel_dense(std::move(faces));
}

Relabelled induced_subcomplex(const Complex& x, std::span<const Vertex> vertices) {
  std::vector<bool> in(x.num_vertices(), false);
  for (Vertex v : vertices) {
    if (v < 0 || v >= x.num_vertices()) throw InputError("unknown vertex " + std::to_string(v));
    in[v] = true;
  }
  std::vector<Simplex> faces;
  for (const auto& f : x.facets()) {
    Simplex part;
    for (Vertex u : f) {
      if (in[u]) part.push_back(u);
    }
    if (!part.empty()) faces.push_back(std::move(part));
  }
  return relabel_dense(std::move(faces));
}

Complex skeleton(const Complex& x, int k) {
  if (k < 0) throw InputError("skeleton dimension must be nonnegative");
  if (k >= x.dim()) return x;
  std::vector<Simplex> faces;
  for (const auto& f : x.facets()) {
    if (static_cast<int>(f.size()) <= k + 1) {
      faces.push_back(f);
    } else {
      for_each_subface(f, k, [&](const Simplex& s) { faces.push_back(s); });
    }
  }
  return relabel_dense(std::move(faces)).complex;
}

Graph one_skeleton(const Complex& x) {
  Graph g(x.num_vertices());
  for (const auto& f : x.facets()) {
    for (std::size_t i = 0; i < f.size(); ++i) {
      for (std::size_t j = i + 1; j < f.size(); ++j) g.add_edge(f[i], f[j]);
    }
  }
  return g;
}

Diagnostic check_2sphere(const Complex& x) {
  auto fail = [](std::string why) { return Diagnostic{false, std::move(why)}; };
  if (x.empty()) return fail("empty complex");
  if (x.dim() != 2 || !x.is_pure()) return fail("not pure 2-dimensional");
  const int n = x.num_vertices();
  if (n > kMaxGraphVertices) return fail("more than 64 vertices");

  std::map<std::pair<Vertex, Vertex>, int> edge_use;
  for (const auto& f : x.facets()) {
    ++edge_use[{f[0], f[1]}];
    ++edge_use[{f[0], f[2]}];
    ++edge_use[{f[1], f[2]}];
  }
  for (const auto& [e, count] : edge_use) {
    if (count != 2) {
      return fail("edge (" + std::to_string(e.first) + "," + std::to_string(e.second) + ") lies in " +
                  std::to_string(count) + " facets");
    }
  }

  // With every edge in two triangles, each link is 2-regular; it must be one cycle.
  for (Vertex v = 0; v < n; ++v) {
    const Relabelled lk = link(x, v);
    const Graph g = one_skeleton(lk.complex);
    VertexSet reached = 1, frontier = 1;
    while (frontier) {
      VertexSet next = 0;
      for (VertexSet f = frontier; f; f &= f - 1) next |= g.neighbours(std::countr_zero(f));
      frontier = next & ~reached;
      reached |= next;
    }
    if (reached != g.vertices()) return fail("link of vertex " + std::to_string(v) + " is not a single cycle");
  }

  if (!is_connected(x)) return fail("not connected");
  const FVector fv = f_vector(x);
  if (fv.euler_characteristic() != 2) {
    return fail("Euler characteristic " + std::to_string(fv.euler_characteristic()) + " != 2");
  }
  return {};
}

Diagnostic check_3manifold(const Complex& x) {
  if (x.empty()) return {false, "empty complex"};
  if (x.dim() != 3 || !x.is_pure()) return {false, "not pure 3-dimensional"};
  for (Vertex v = 0; v < x.num_vertices(); ++v) {
    const Diagnostic d = check_2sphere(link(x, v).complex);
    if (!d) return {false, "link of vertex " + std::to_string(v) + " is not a 2-sphere: " + d.reason};
  }
  return {};
}

bool is_connected(const Complex& x) {
  const int n = x.num_vertices();
  if (n == 0) return false;
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& f : x.facets()) {
    for (std::size_t i = 1; i < f.size(); ++i) parent[find(f[i])] = find(f[0]);
  }
  const int root = find(0);
  for (int v = 1; v < n; ++v) {
    if (find(v) != root) return false;
  }
  return true;
}

bool is_neighbourly(const Complex& x) {
  const auto n = static_cast<std::int64_t>(x.num_vertices());
  return static_cast<std::int64_t>(x.faces(1).size()) == n * (n - 1) / 2;
}

std::vector<std::array<Vertex, 3>> find_induced_3cycles(const Complex& x) {
  const Diagnostic d = check_2sphere(x);
  if (!d) throw InputError("not a triangulated 2-sphere: " + d.reason);
  const Graph g = one_skeleton(x);
  std::vector<std::array<Vertex, 3>> out;
  const int n = x.num_vertices();
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (!g.adjacent(a, b)) continue;
      for (VertexSet common = g.neighbours(a) & g.neighbours(b) & ~full_set(b + 1); common; common &= common - 1) {
        const Vertex c = std::countr_zero(common);
        if (!x.has_facet({a, b, c})) out.push_back({a, b, c});
      }
    }
  }
  return out;
}

bool is_flag(const Complex& x) { return find_induced_3cycles(x).empty(); }

bool is_flag_clique(const Complex& x) {
  const Graph g = one_skeleton(x);
  bool flag = true;
  Simplex clique;
  // Extends `clique` by candidates above its last vertex; every clique is visited once.
  auto visit = [&](auto&& self, VertexSet candidates) -> void {
    if (!flag) return;
    if (clique.size() >= 3 && !x.has_face(clique)) {
      flag = false;
      return;
    }
    for (VertexSet c = candidates; c; c &= c - 1) {
      const Vertex v = std::countr_zero(c);
      clique.push_back(v);
      self(self, candidates & g.neighbours(v) & ~full_set(v + 1));
      clique.pop_back();
    }
  };
  visit(visit, g.vertices());
  return flag;
}

Complex standard_sphere(int d) {
  if (d < 0) throw InputError("dimension must be nonnegative");
  const int n = d + 2;
  std::vector<Simplex> facets;
  for (Vertex skip = 0; skip < n; ++skip) {
    Simplex f;
    for (Vertex v = 0; v < n; ++v) {
      if (v != skip) f.push_back(v);
    }
    facets.push_back(std::move(f));
  }
  return Complex::from_facets(n, std::move(facets));
}

Complex octahedron() {
  // Antipodal pairs {0,1}, {2,3}, {4,5}.
  std::vector<Simplex> facets;
  for (Vertex a : {0, 1}) {
    for (Vertex b : {2, 3}) {
      for (Vertex c : {4, 5}) facets.push_back({a, b, c});
    }
  }
  return Complex::from_facets(6, std::move(facets));
}

Complex cyclic_polytope_boundary(int n) {
  if (n < 5) throw InputError("cyclic 4-polytope needs at least 5 vertices");
  std::vector<Simplex> facets;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      for (Vertex c = b + 1; c < n; ++c) {
        for (Vertex d = c + 1; d < n; ++d) {
          const std::array<Vertex, 4> s{a, b, c, d};
          bool even = true;
          // Consecutive outside pairs suffice: gaps between any two are sums of these.
          std::vector<Vertex> outside;
          for (Vertex v = 0; v < n; ++v) {
            if (std::find(s.begin(), s.end(), v) == s.end()) outside.push_back(v);
          }
          for (std::size_t i = 0; i + 1 < outside.size() && even; ++i) {
            const auto between = std::count_if(s.begin(), s.end(), [&](Vertex v) {
              return v > outside[i] && v < outside[i + 1];
            });
            even = between % 2 == 0;
          }
          if (even) facets.push_back({a, b, c, d});
        }
      }
    }
  }
  return Complex::from_facets(n, std::move(facets));
}

}  // namespace sepindex
