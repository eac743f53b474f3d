#include "sepindex/moves.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <sstream>

#include "sepindex/error.hpp"

namespace sepindex {

namespace {

std::array<Vertex, 2> sorted2(std::array<Vertex, 2> e) {
  if (e[0] > e[1]) std::swap(e[0], e[1]);
  return e;
}

std::array<Vertex, 3> sorted3(std::array<Vertex, 3> f) {
  std::sort(f.begin(), f.end());
  return f;
}

Simplex as_simplex(std::array<Vertex, 3> f) {
  f = sorted3(f);
  return {f[0], f[1], f[2]};
}

std::string fmt_vertices(std::initializer_list<Vertex> vs) {
  std::string s;
  for (Vertex v : vs) s += (s.empty() ? "" : " ") + std::to_string(v);
  return s;
}

void require_pure2(const Complex& x) {
  if (x.empty() || x.dim() != 2 || !x.is_pure()) throw InputError("bistellar moves need a pure 2-dimensional complex");
}

void check_vertex(const Complex& x, Vertex v) {
  if (v < 0 || v >= x.num_vertices()) throw InputError("unknown vertex " + std::to_string(v));
}

// Facets containing v, each with v removed.
std::vector<std::array<Vertex, 2>> star_edges(const Complex& x, Vertex v) {
  std::vector<std::array<Vertex, 2>> out;
  for (const auto& f : x.facets()) {
    if (f[0] == v) out.push_back({f[1], f[2]});
    else if (f[1] == v) out.push_back({f[0], f[2]});
    else if (f[2] == v) out.push_back({f[0], f[1]});
  }
  return out;
}

// Link of v in a 2-sphere as a cyclic vertex sequence starting at its smallest
// neighbour and continuing towards the smaller of that neighbour's two link
// neighbours.
std::vector<Vertex> link_cycle(const Complex& x, Vertex v) {
  const auto edges = star_edges(x, v);
  std::vector<Vertex> cycle;
  if (edges.empty()) return cycle;
  Vertex start = edges[0][0];
  for (const auto& e : edges) start = std::min({start, e[0], e[1]});
  auto next_of = [&](Vertex cur, Vertex prev) {
    Vertex best = -1;
    for (const auto& e : edges) {
      Vertex other = -1;
      if (e[0] == cur) other = e[1];
      else if (e[1] == cur) other = e[0];
      if (other >= 0 && other != prev && (best < 0 || other < best)) best = other;
    }
    return best;
  };
  cycle.push_back(start);
  Vertex prev = -1, cur = start;
  for (std::size_t i = 1; i < edges.size(); ++i) {
    const Vertex nxt = next_of(cur, prev);
    if (nxt < 0) throw InternalError("link of vertex " + std::to_string(v) + " is not a cycle");
    cycle.push_back(nxt);
    prev = cur;
    cur = nxt;
  }
  return cycle;
}

// Removes vertex v (not occurring in `facets`) by moving label n-1 into its slot.
Complex compact_removing(int n, Vertex v, std::vector<Simplex> facets) {
  const Vertex last = n - 1;
  if (v != last) {
    for (auto& f : facets) {
      for (Vertex& u : f) {
        if (u == last) u = v;
      }
    }
  }
  return Complex::from_facets_unchecked(n - 1, std::move(facets));
}

MoveSubkind to_subkind(OneMoveClass c) {
  switch (c) {
    case OneMoveClass::OneA: return MoveSubkind::OneA;
    case OneMoveClass::OneB: return MoveSubkind::OneB;
    case OneMoveClass::Other: break;
  }
  return MoveSubkind::None;
}

}  // namespace

std::array<Vertex, 2> edge_apexes(const Complex& x, Vertex u, Vertex v) {
  std::array<Vertex, 2> out{-1, -1};
  int found = 0;
  for (const auto& f : x.facets()) {
    if (std::binary_search(f.begin(), f.end(), u) && std::binary_search(f.begin(), f.end(), v)) {
      for (Vertex w : f) {
        if (w != u && w != v) {
          if (found == 2) throw InputError("edge lies in more than two facets");
          out[found++] = w;
        }
      }
    }
  }
  if (found != 2) {
    throw InputError("edge " + fmt_vertices({u, v}) + " does not lie in exactly two facets");
  }
  return out;
}

MoveResult star_vertex(const Complex& x, std::array<Vertex, 3> facet) {
  require_pure2(x);
  const Simplex f = as_simplex(facet);
  if (!x.has_facet(f)) throw InputError("facet " + fmt_vertices({f[0], f[1], f[2]}) + " is not in the complex");
  const Vertex nv = x.num_vertices();
  std::vector<Simplex> facets;
  facets.reserve(x.facets().size() + 2);
  for (const auto& g : x.facets()) {
    if (g != f) facets.push_back(g);
  }
  facets.push_back({f[0], f[1], nv});
  facets.push_back({f[0], f[2], nv});
  facets.push_back({f[1], f[2], nv});
  MoveRecord rec;
  rec.kind = MoveKind::Zero;
  rec.facet = {f[0], f[1], f[2]};
  rec.vertex = nv;
  return {Complex::from_facets_unchecked(nv + 1, std::move(facets)), rec};
}

MoveResult unstar_vertex(const Complex& x, Vertex v) {
  require_pure2(x);
  check_vertex(x, v);
  const auto edges = star_edges(x, v);
  std::vector<Vertex> nbrs;
  for (const auto& e : edges) nbrs.insert(nbrs.end(), e.begin(), e.end());
  std::sort(nbrs.begin(), nbrs.end());
  nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
  if (nbrs.size() != 3 || edges.size() != 3) {
    throw InputError("vertex " + std::to_string(v) + " has degree " + std::to_string(nbrs.size()) + ", not 3");
  }
  const Simplex restored{nbrs[0], nbrs[1], nbrs[2]};
  if (x.has_face(restored)) {
    throw InputError("cannot remove vertex " + std::to_string(v) + ": " + fmt_vertices({nbrs[0], nbrs[1], nbrs[2]}) +
                     " is already a face");
  }
  std::vector<Simplex> facets;
  for (const auto& f : x.facets()) {
    if (!std::binary_search(f.begin(), f.end(), v)) facets.push_back(f);
  }
  facets.push_back(restored);
  MoveRecord rec;
  rec.kind = MoveKind::Two;
  rec.vertex = v;
  rec.facet = {nbrs[0], nbrs[1], nbrs[2]};
  return {compact_removing(x.num_vertices(), v, std::move(facets)), rec};
}

namespace {

struct FlipSite {
  Simplex abd, bdc;
  Vertex a, b, c, d;
};

FlipSite validate_flip(const Complex& x, std::array<Vertex, 2> bd, std::array<Vertex, 2> ac) {
  require_pure2(x);
  for (Vertex v : {bd[0], bd[1], ac[0], ac[1]}) check_vertex(x, v);
  const auto [b, d] = sorted2(bd);
  const auto [a, c] = sorted2(ac);
  if (b == d || a == c || a == b || a == d || c == b || c == d) throw InputError("flip vertices must be distinct");
  FlipSite site{as_simplex({a, b, d}), as_simplex({b, d, c}), a, b, c, d};
  if (!x.has_facet(site.abd) || !x.has_facet(site.bdc)) {
    throw InputError("flip " + fmt_vertices({b, d}) + " -> " + fmt_vertices({a, c}) +
                     ": facets abd and bdc are not both present");
  }
  if (x.has_face({a, c})) {
    throw InputError("flip " + fmt_vertices({b, d}) + " -> " + fmt_vertices({a, c}) + ": " + fmt_vertices({a, c}) +
                     " is already an edge");
  }
  return site;
}

int degree_of(const Complex& x, Vertex v) {
  VertexSet nb = 0;
  for (const auto& e : star_edges(x, v)) nb |= bit(e[0]) | bit(e[1]);
  return std::popcount(nb);
}

}  // namespace

OneMoveClass classify_1_move(const Complex& x, std::array<Vertex, 2> bd, std::array<Vertex, 2> ac) {
  const FlipSite s = validate_flip(x, bd, ac);
  const int da = degree_of(x, s.a);
  const int dc = degree_of(x, s.c);
  if (da == 3 || dc == 3) return OneMoveClass::OneA;
  if (std::min(da, dc) == 4) return OneMoveClass::OneB;
  return OneMoveClass::Other;
}

MoveResult edge_flip(const Complex& x, std::array<Vertex, 2> bd, std::array<Vertex, 2> ac) {
  const FlipSite s = validate_flip(x, bd, ac);
  const OneMoveClass cls = classify_1_move(x, bd, ac);
  std::vector<Simplex> facets;
  facets.reserve(x.facets().size());
  for (const auto& f : x.facets()) {
    if (f != s.abd && f != s.bdc) facets.push_back(f);
  }
  facets.push_back(as_simplex({s.a, s.b, s.c}));
  facets.push_back(as_simplex({s.a, s.c, s.d}));
  MoveRecord rec;
  rec.kind = MoveKind::One;
  rec.subkind = to_subkind(cls);
  rec.old_edge = {s.b, s.d};
  rec.new_edge = {s.a, s.c};
  return {Complex::from_facets_unchecked(x.num_vertices(), std::move(facets)), rec};
}

Complex apply_move(const Complex& x, const MoveRecord& record) {
  switch (record.kind) {
    case MoveKind::Zero: {
      if (record.vertex != x.num_vertices()) {
        throw InputError("0-move must introduce vertex " + std::to_string(x.num_vertices()) + ", got " +
                         std::to_string(record.vertex));
      }
      return star_vertex(x, record.facet).complex;
    }
    case MoveKind::One: {
      auto result = edge_flip(x, record.old_edge, record.new_edge);
      if (record.subkind != MoveSubkind::None && record.subkind != result.record.subkind) {
        throw InputError("flip " + fmt_vertices({record.old_edge[0], record.old_edge[1]}) + " -> " +
                         fmt_vertices({record.new_edge[0], record.new_edge[1]}) + " is not of the recorded type");
      }
      return std::move(result.complex);
    }
    case MoveKind::Two: {
      auto result = unstar_vertex(x, record.vertex);
      if (sorted3(record.facet) != result.record.facet) {
        throw InputError("2-move at vertex " + std::to_string(record.vertex) + " restores a different facet");
      }
      return std::move(result.complex);
    }
  }
  throw InternalError("unknown move kind");
}

Complex replay(const MoveSequence& sequence) {
  Complex x = sequence.start;
  for (std::size_t i = 0; i < sequence.records.size(); ++i) {
    try {
      x = apply_move(x, sequence.records[i]);
    } catch (const InputError& e) {
      throw InputError("move " + std::to_string(i) + " (" + format_move(sequence.records[i]) + "): " + e.what());
    }
  }
  return x;
}

std::string format_move(const MoveRecord& r) {
  switch (r.kind) {
    case MoveKind::Zero:
      return "0 " + fmt_vertices({r.facet[0], r.facet[1], r.facet[2]}) + " -> " + std::to_string(r.vertex);
    case MoveKind::One: {
      const char* tag = r.subkind == MoveSubkind::OneA ? "1A" : r.subkind == MoveSubkind::OneB ? "1B" : "1";
      return std::string(tag) + " " + fmt_vertices({r.old_edge[0], r.old_edge[1]}) + " -> " +
             fmt_vertices({r.new_edge[0], r.new_edge[1]});
    }
    case MoveKind::Two:
      return "2 " + std::to_string(r.vertex) + " -> " + fmt_vertices({r.facet[0], r.facet[1], r.facet[2]});
  }
  return {};
}

std::string to_log(const std::vector<MoveRecord>& records) {
  std::string out;
  for (const auto& r : records) out += format_move(r) + "\n";
  return out;
}

std::vector<MoveRecord> parse_log(std::string_view text) {
  std::vector<MoveRecord> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    auto fail = [&](const std::string& why) -> MoveRecord {
      throw InputError("log line " + std::to_string(number) + ": " + why);
    };
    const auto arrow = line.find("->");
    if (arrow == std::string::npos) fail("missing '->'");
    std::istringstream lhs(line.substr(0, arrow)), rhs(line.substr(arrow + 2));
    std::string tag;
    lhs >> tag;
    std::vector<Vertex> left, right;
    for (Vertex v; lhs >> v;) left.push_back(v);
    if (!lhs.eof()) fail("expected integers before '->'");
    for (Vertex v; rhs >> v;) right.push_back(v);
    if (!rhs.eof()) fail("expected integers after '->'");
    MoveRecord r;
    if (tag == "0") {
      if (left.size() != 3 || right.size() != 1) fail("expected '0 a b c -> x'");
      r.kind = MoveKind::Zero;
      r.facet = sorted3({left[0], left[1], left[2]});
      r.vertex = right[0];
    } else if (tag == "1" || tag == "1A" || tag == "1B") {
      if (left.size() != 2 || right.size() != 2) fail("expected '" + tag + " b d -> a c'");
      r.kind = MoveKind::One;
      r.subkind = tag == "1A" ? MoveSubkind::OneA : tag == "1B" ? MoveSubkind::OneB : MoveSubkind::None;
      r.old_edge = sorted2({left[0], left[1]});
      r.new_edge = sorted2({right[0], right[1]});
    } else if (tag == "2") {
      if (left.size() != 1 || right.size() != 3) fail("expected '2 x -> a b c'");
      r.kind = MoveKind::Two;
      r.vertex = left[0];
      r.facet = sorted3({right[0], right[1], right[2]});
    } else {
      fail("unknown move tag '" + tag + "'");
    }
    out.push_back(r);
  }
  return out;
}

std::pair<Complex, MoveSequence> build_stacked(int n, std::uint64_t seed) {
  if (n < 4) throw InputError("stacked 2-spheres need at least 4 vertices");
  std::mt19937_64 rng(seed);
  MoveSequence seq{standard_sphere(2), {}};
  Complex x = seq.start;
  while (x.num_vertices() < n) {
    const auto& f = x.facets()[rng() % x.facets().size()];
    auto step = star_vertex(x, {f[0], f[1], f[2]});
    seq.records.push_back(step.record);
    x = std::move(step.complex);
  }
  return {std::move(x), std::move(seq)};
}

StackedCheck check_stacked(const Complex& x) {
  const Diagnostic d = check_2sphere(x);
  if (!d) throw InputError("not a triangulated 2-sphere: " + d.reason);
  StackedCheck out{false, {x, {}}};
  Complex cur = x;
  while (cur.num_vertices() > 4) {
    const Graph g = one_skeleton(cur);
    Vertex pick = -1;
    for (Vertex v = 0; v < cur.num_vertices() && pick < 0; ++v) {
      if (g.degree(v) != 3) continue;
      const VertexSet nb = g.neighbours(v);
      Simplex abc;
      for (VertexSet s = nb; s; s &= s - 1) abc.push_back(std::countr_zero(s));
      if (!cur.has_facet(abc)) pick = v;
    }
    if (pick < 0) return out;
    auto step = unstar_vertex(cur, pick);
    out.witness.records.push_back(step.record);
    cur = std::move(step.complex);
  }
  out.stacked = true;  // every 4-vertex 2-sphere is S^2_4
  return out;
}

namespace {

// One inductive step of the reduction. `forward` lists the moves rebuilding the
// removed vertex, expressed in the compacted labels of the smaller sphere with
// the reinserted vertex labelled n-1.
struct ReductionStep {
  Complex smaller;
  Vertex removed = -1;
  int n = 0;
  std::vector<MoveRecord> forward;
};

ReductionStep reduce_once(const Complex& x) {
  const int n = x.num_vertices();
  const Graph g = one_skeleton(x);
  const Vertex last = n - 1;
  auto pi = [&](Vertex v, Vertex removed) { return v == last ? removed : v; };

  auto pick_degree = [&](int deg) {
    for (Vertex v = 0; v < n; ++v) {
      if (g.degree(v) == deg) return v;
    }
    return -1;
  };

  ReductionStep step;
  step.n = n;
  std::vector<Simplex> facets;
  auto keep_outside_star = [&](Vertex v) {
    for (const auto& f : x.facets()) {
      if (!std::binary_search(f.begin(), f.end(), v)) facets.push_back(f);
    }
  };
  auto zero = [&](Vertex p, Vertex q, Vertex r, Vertex v) {
    MoveRecord m;
    m.kind = MoveKind::Zero;
    m.facet = sorted3({pi(p, v), pi(q, v), pi(r, v)});
    m.vertex = last;
    return m;
  };
  auto one = [&](Vertex p, Vertex q, Vertex r, Vertex s, Vertex v) {
    MoveRecord m;
    m.kind = MoveKind::One;
    m.old_edge = sorted2({p == v ? last : pi(p, v), q == v ? last : pi(q, v)});
    m.new_edge = sorted2({r == v ? last : pi(r, v), s == v ? last : pi(s, v)});
    return m;
  };

  if (Vertex x3 = pick_degree(3); x3 >= 0) {
    const auto cyc = link_cycle(x, x3);
    keep_outside_star(x3);
    facets.push_back(as_simplex({cyc[0], cyc[1], cyc[2]}));
    step.removed = x3;
    step.forward.push_back(zero(cyc[0], cyc[1], cyc[2], x3));
  } else if (Vertex x4 = pick_degree(4); x4 >= 0) {
    const auto cyc = link_cycle(x, x4);
    // Diagonals (c0,c2) and (c1,c3); take the lexicographically smaller non-edge.
    std::array<std::array<Vertex, 2>, 2> diag{sorted2({cyc[0], cyc[2]}), sorted2({cyc[1], cyc[3]})};
    std::array<bool, 2> usable{!g.adjacent(cyc[0], cyc[2]), !g.adjacent(cyc[1], cyc[3])};
    int k = -1;
    for (int i : {0, 1}) {
      if (usable[i] && (k < 0 || diag[i] < diag[k])) k = i;
    }
    if (k < 0) throw InternalError("degree-4 vertex whose link spans K4");
    const Vertex a = cyc[k], b = cyc[k + 1], c = cyc[(k + 2) % 4], d = cyc[(k + 3) % 4];
    keep_outside_star(x4);
    facets.push_back(as_simplex({a, b, c}));
    facets.push_back(as_simplex({a, c, d}));
    step.removed = x4;
    step.forward.push_back(zero(a, b, c, x4));
    step.forward.push_back(one(a, c, x4, d, x4));
  } else if (Vertex x5 = pick_degree(5); x5 >= 0) {
    const auto cyc = link_cycle(x, x5);
    int k = -1;
    for (int i = 0; i < 5; ++i) {
      const bool ok = !g.adjacent(cyc[i], cyc[(i + 2) % 5]) && !g.adjacent(cyc[i], cyc[(i + 3) % 5]);
      if (ok && (k < 0 || cyc[i] < cyc[k])) k = i;
    }
    if (k < 0) throw InternalError("degree-5 vertex with no link vertex having two non-neighbours");
    const Vertex a = cyc[k], b = cyc[(k + 1) % 5], c = cyc[(k + 2) % 5], d = cyc[(k + 3) % 5], e = cyc[(k + 4) % 5];
    keep_outside_star(x5);
    facets.push_back(as_simplex({a, b, c}));
    facets.push_back(as_simplex({a, c, d}));
    facets.push_back(as_simplex({a, d, e}));
    step.removed = x5;
    step.forward.push_back(zero(a, c, d, x5));
    step.forward.push_back(one(a, c, b, x5, x5));
    step.forward.push_back(one(a, d, e, x5, x5));
  } else {
    throw InternalError("2-sphere without a vertex of degree at most 5");
  }
  step.smaller = compact_removing(n, step.removed, std::move(facets));
  return step;
}

}  // namespace

MoveSequence reduce_to_s24(const Complex& x) {
  const Diagnostic d = check_2sphere(x);
  if (!d) throw InputError("not a triangulated 2-sphere: " + d.reason);
  std::vector<ReductionStep> steps;
  Complex cur = x;
  while (cur.num_vertices() > 4) {
    steps.push_back(reduce_once(cur));
    cur = steps.back().smaller;
  }

  // tau maps labels of the current reduction stage to labels of the forward complex.
  MoveSequence seq{standard_sphere(2), {}};
  Complex fwd = seq.start;
  std::vector<Vertex> tau{0, 1, 2, 3};
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    const int n = it->n;
    std::vector<Vertex> ext = tau;
    ext.push_back(n - 1);
    auto map = [&](Vertex v) { return ext[v]; };
    for (MoveRecord m : it->forward) {
      if (m.kind == MoveKind::Zero) {
        m.facet = sorted3({map(m.facet[0]), map(m.facet[1]), map(m.facet[2])});
        auto r = star_vertex(fwd, m.facet);
        seq.records.push_back(r.record);
        fwd = std::move(r.complex);
      } else {
        auto r = edge_flip(fwd, {map(m.old_edge[0]), map(m.old_edge[1])}, {map(m.new_edge[0]), map(m.new_edge[1])});
        if (r.record.subkind == MoveSubkind::None) throw InternalError("reduction produced a 1-move that is neither 1A nor 1B");
        seq.records.push_back(r.record);
        fwd = std::move(r.complex);
      }
    }
    std::vector<Vertex> next(n);
    for (Vertex v = 0; v < n; ++v) {
      next[v] = v == it->removed ? n - 1 : tau[v == n - 1 ? it->removed : v];
    }
    tau = std::move(next);
  }
  return seq;
}

MoveResult theorem2_flip(const Complex& t) {
  const Diagnostic diag = check_2sphere(t);
  if (!diag) throw InputError("not a triangulated 2-sphere: " + diag.reason);
  const int n = t.num_vertices();
  if (n <= 5) throw InputError("separating-triangle flip needs at least 6 vertices");
  const auto cycles = find_induced_3cycles(t);
  if (cycles.empty()) throw InputError("sphere is flag: no induced 3-cycle to flip across");
  const Graph g = one_skeleton(t);

  for (const auto& tri : cycles) {
    const VertexSet boundary = bit(tri[0]) | bit(tri[1]) | bit(tri[2]);
    // Components of the skeleton with the triangle removed, ordered by least vertex.
    std::vector<VertexSet> sides;
    for (VertexSet rest = g.vertices() & ~boundary; rest;) {
      VertexSet comp = rest & -rest, frontier = comp;
      while (frontier) {
        VertexSet nb = 0;
        for (VertexSet f = frontier; f; f &= f - 1) nb |= g.neighbours(std::countr_zero(f));
        frontier = nb & rest & ~comp;
        comp |= frontier;
      }
      sides.push_back(comp);
      rest &= ~comp;
    }
    if (sides.size() != 2) throw InternalError("induced 3-cycle does not split the sphere into two discs");

    for (const VertexSet inner : sides) {
      if (std::popcount(inner) < 2) continue;
      std::array<Vertex, 3> p = tri;
      do {
        const Vertex u = p[0], v = p[1], w = p[2];
        auto apex_in = [&](Vertex s, Vertex r, bool inside) {
          for (Vertex z : edge_apexes(t, s, r)) {
            if (((inner >> z) & 1U) == static_cast<unsigned>(inside)) return z;
          }
          throw InternalError("edge of separating triangle lacks a facet on one side");
        };
        const Vertex b = apex_in(u, v, true);
        const Vertex c = apex_in(v, w, true);
        if (b == c || g.adjacent(b, w)) continue;
        const Vertex a = apex_in(u, v, false);
        return edge_flip(t, {u, v}, {a, b});
      } while (std::next_permutation(p.begin(), p.end()));
    }
  }
  throw InternalError("no admissible separating-triangle flip found");
}

}  // namespace sepindex
