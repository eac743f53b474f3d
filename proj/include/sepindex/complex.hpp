#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace sepindex {

using Vertex = int;
/// Sorted, duplicate-free vertex tuple.
using Simplex = std::vector<Vertex>;
/// Vertex subset of a graph with at most 64 vertices; bit v is vertex v.
using VertexSet = std::uint64_t;

inline constexpr int kMaxGraphVertices = 64;

inline VertexSet bit(Vertex v) { return VertexSet{1} << v; }
inline VertexSet full_set(int n) { return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1; }

/// Simple undirected graph on vertices 0..n-1, stored as neighbour bitsets.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  static Graph from_edges(int n, std::span<const std::array<Vertex, 2>> edges);
  static Graph complete(int n);
  static Graph edgeless(int n);

  int num_vertices() const { return n_; }
  std::size_t num_edges() const;
  VertexSet vertices() const { return full_set(n_); }
  VertexSet neighbours(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const { return (adj_[u] >> v) & 1U; }
  std::span<const VertexSet> rows() const { return adj_; }

  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::vector<VertexSet> adj_;
};

struct FVector {
  std::vector<std::int64_t> counts;  // counts[i] = number of i-faces

  std::int64_t operator[](std::size_t i) const { return i < counts.size() ? counts[i] : 0; }
  std::int64_t euler_characteristic() const;
  friend bool operator==(const FVector&, const FVector&) = default;
};

/// Finite abstract simplicial complex stored by its facets over labels 0..n-1.
///
/// Facets are sorted tuples, the list is sorted lexicographically, and no
/// facet contains another. Every label 0..n-1 occurs in some facet. The
/// default-constructed value is the empty complex.
class Complex {
 public:
  Complex() = default;

  /// Validating constructor. With `strict` a declared facet that is a proper
  /// subset of another is an error; otherwise it is dropped.
  static Complex from_facets(int n, std::vector<Simplex> facets, bool strict = true);

  /// Sorts and deduplicates but trusts the caller on range and maximality.
  static Complex from_facets_unchecked(int n, std::vector<Simplex> facets);

  int num_vertices() const { return n_; }
  int dim() const;
  bool empty() const { return facets_.empty(); }
  bool is_pure() const;
  const std::vector<Simplex>& facets() const { return facets_; }

  bool has_facet(const Simplex& sorted) const;
  bool has_face(const Simplex& sorted) const;

  /// All faces with k+1 vertices, sorted lexicographically.
  std::vector<Simplex> faces(int k) const;

  friend bool operator==(const Complex&, const Complex&) = default;

 private:
  Complex(int n, std::vector<Simplex> facets) : n_(n), facets_(std::move(facets)) {}

  int n_ = 0;
  std::vector<Simplex> facets_;
};

/// A complex on dense labels together with the original label of each vertex.
struct Relabelled {
  Complex complex;
  std::vector<Vertex> labels;  // labels[new] = old
};

/// Outcome of a validation; `reason` names the first failed condition.
struct Diagnostic {
  bool ok = true;
  std::string reason;
  explicit operator bool() const { return ok; }
};

FVector f_vector(const Complex& x);

Relabelled link(const Complex& x, Vertex v);
Relabelled induced_subcomplex(const Complex& x, std::span<const Vertex> vertices);

Complex skeleton(const Complex& x, int k);
Graph one_skeleton(const Complex& x);

Diagnostic check_2sphere(const Complex& x);
inline bool is_triangulated_2sphere(const Complex& x) { return check_2sphere(x).ok; }

/// Pure 3-dimensional with every vertex link a triangulated 2-sphere.
Diagnostic check_3manifold(const Complex& x);

bool is_connected(const Complex& x);
bool is_neighbourly(const Complex& x);

/// Vertex triples spanning three edges but no face. Requires a 2-sphere.
std::vector<std::array<Vertex, 3>> find_induced_3cycles(const Complex& x);

/// The 2-sphere flag criterion: no induced 3-cycle. Requires a 2-sphere.
bool is_flag(const Complex& x);

/// General flag condition: every clique of the 1-skeleton spans a face.
/// Differs from is_flag only on the tetrahedron boundary.
bool is_flag_clique(const Complex& x);

/// Boundary of the (d+1)-simplex on d+2 vertices.
Complex standard_sphere(int d);
Complex octahedron();

/// Boundary of the cyclic 4-polytope on n vertices via Gale's evenness condition.
Complex cyclic_polytope_boundary(int n);

}  // namespace sepindex
