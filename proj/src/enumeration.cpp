#include "sepindex/enumeration.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <sstream>
#include <unordered_set>

#include "sepindex/error.hpp"
#include "sepindex/moves.hpp"
#include "sepindex/parallel.hpp"
#include "sepindex/separation.hpp"

namespace sepindex {

// ---------------------------------------------------------------- codes

std::string CanonicalCode::hex() const {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    out += digits[c >> 4];
    out += digits[c & 15];
  }
  return out;
}

CanonicalCode CanonicalCode::from_hex(const std::string& hex) {
  if (hex.size() % 2 != 0) throw InputError("hex code of odd length");
  auto nibble = [&](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw InputError("invalid hex digit '" + std::string(1, c) + "'");
  };
  CanonicalCode code;
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    code.bytes += static_cast<char>(nibble(hex[i]) * 16 + nibble(hex[i + 1]));
  }
  return code;
}

namespace {

// Oriented embedding of a 2-sphere: third[u * n + v] = w iff (u, v, w) is a
// positively oriented facet, so w follows v in the rotation around u.
struct Embedding {
  int n = 0;
  std::vector<int> third;
  std::vector<int> degree;
};

Embedding orient(const Complex& x) {
  const int n = x.num_vertices();
  const auto& facets = x.facets();
  const std::size_t m = facets.size();
  std::vector<std::array<int, 2>> edge_facets(static_cast<std::size_t>(n) * n, {-1, -1});
  for (std::size_t i = 0; i < m; ++i) {
    const auto& f = facets[i];
    for (auto [p, q] : {std::pair{f[0], f[1]}, std::pair{f[0], f[2]}, std::pair{f[1], f[2]}}) {
      auto& slot = edge_facets[p * n + q];
      slot[slot[0] < 0 ? 0 : 1] = static_cast<int>(i);
    }
  }
  std::vector<std::array<int, 3>> oriented(m);
  std::vector<bool> done(m, false);
  oriented[0] = {facets[0][0], facets[0][1], facets[0][2]};
  done[0] = true;
  std::vector<std::size_t> stack{0};
  while (!stack.empty()) {
    const std::size_t f = stack.back();
    stack.pop_back();
    const auto o = oriented[f];
    for (int k = 0; k < 3; ++k) {
      const int p = o[k], q = o[(k + 1) % 3];
      const auto slot = edge_facets[std::min(p, q) * n + std::max(p, q)];
      const int g = slot[0] == static_cast<int>(f) ? slot[1] : slot[0];
      if (g < 0) throw InternalError("orientation propagation: boundary edge");
      int r = -1;
      for (Vertex v : facets[g]) {
        if (v != p && v != q) r = v;
      }
      const std::array<int, 3> want{q, p, r};
      if (!done[g]) {
        oriented[g] = want;
        done[g] = true;
        stack.push_back(static_cast<std::size_t>(g));
      } else {
        const auto& h = oriented[g];
        bool consistent = false;
        for (int s = 0; s < 3; ++s) {
          consistent |= h[s] == want[0] && h[(s + 1) % 3] == want[1] && h[(s + 2) % 3] == want[2];
        }
        if (!consistent) throw InternalError("orientation propagation failed: complex is not an oriented sphere");
      }
    }
  }
  Embedding e{n, std::vector<int>(static_cast<std::size_t>(n) * n, -1), std::vector<int>(n, 0)};
  for (const auto& o : oriented) {
    for (int k = 0; k < 3; ++k) e.third[o[k] * n + o[(k + 1) % 3]] = o[(k + 2) % 3];
  }
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) e.degree[u] += e.third[u * n + v] >= 0 ? 1 : 0;
  }
  return e;
}

}  // namespace

CanonicalCode canonical_code(const Complex& x) {
  const Diagnostic d = check_2sphere(x);
  if (!d) throw InputError("not a triangulated 2-sphere: " + d.reason);
  const Embedding e = orient(x);
  const int n = e.n;
  if (n > 255) throw CapExceeded("canonical_code", n, 255);

  // Roots are directed edges (r, s) minimising (deg r, deg s); the choice is
  // isomorphism-invariant so the minimum over them is still canonical.
  int best_r = n, best_s = n;
  for (int r = 0; r < n; ++r) {
    for (int s = 0; s < n; ++s) {
      if (e.third[r * n + s] < 0) continue;
      if (std::pair{e.degree[r], e.degree[s]} < std::pair{best_r, best_s}) {
        best_r = e.degree[r];
        best_s = e.degree[s];
      }
    }
  }

  std::vector<std::uint32_t> best, cur;
  std::vector<int> label(n), first(n), order;
  order.reserve(n);
  for (int mirror = 0; mirror < 2; ++mirror) {
    auto rot = [&](int u, int v) { return mirror ? e.third[v * n + u] : e.third[u * n + v]; };
    for (int r = 0; r < n; ++r) {
      if (e.degree[r] != best_r) continue;
      for (int s = 0; s < n; ++s) {
        if (e.third[r * n + s] < 0 || e.degree[s] != best_s) continue;
        std::fill(label.begin(), label.end(), -1);
        order.clear();
        label[r] = 0;
        first[r] = s;
        order.push_back(r);
        int next = 1;
        for (std::size_t i = 0; i < order.size(); ++i) {
          const int u = order[i];
          int v = first[u];
          for (int t = 0; t < e.degree[u]; ++t) {
            if (label[v] < 0) {
              label[v] = next++;
              first[v] = u;
              order.push_back(v);
            }
            v = rot(u, v);
          }
        }
        cur.clear();
        for (const auto& f : x.facets()) {
          std::array<std::uint32_t, 3> t{static_cast<std::uint32_t>(label[f[0]]), static_cast<std::uint32_t>(label[f[1]]),
                                         static_cast<std::uint32_t>(label[f[2]])};
          std::sort(t.begin(), t.end());
          cur.push_back(t[0] << 16 | t[1] << 8 | t[2]);
        }
        std::sort(cur.begin(), cur.end());
        if (best.empty() || cur < best) best.swap(cur);
      }
    }
  }

  CanonicalCode code;
  code.bytes.reserve(1 + 3 * best.size());
  code.bytes += static_cast<char>(n);
  for (std::uint32_t t : best) {
    code.bytes += static_cast<char>((t >> 16) & 0xff);
    code.bytes += static_cast<char>((t >> 8) & 0xff);
    code.bytes += static_cast<char>(t & 0xff);
  }
  return code;
}

Complex decode(const CanonicalCode& code) {
  if (code.bytes.empty() || (code.bytes.size() - 1) % 3 != 0) throw InputError("malformed canonical code");
  const int n = static_cast<unsigned char>(code.bytes[0]);
  std::vector<Simplex> facets;
  for (std::size_t i = 1; i < code.bytes.size(); i += 3) {
    facets.push_back({static_cast<unsigned char>(code.bytes[i]), static_cast<unsigned char>(code.bytes[i + 1]),
                      static_cast<unsigned char>(code.bytes[i + 2])});
  }
  return Complex::from_facets(n, std::move(facets));
}

// ---------------------------------------------------------------- generation

namespace {

struct CodeHash {
  std::size_t operator()(const CanonicalCode& c) const { return std::hash<std::string>{}(c.bytes); }
};

using CodeSet = std::unordered_set<CanonicalCode, CodeHash>;

std::vector<std::array<Vertex, 2>> edges_of(const Complex& x) {
  std::vector<std::array<Vertex, 2>> out;
  for (const auto& e : x.faces(1)) out.push_back({e[0], e[1]});
  return out;
}

// Every valid 1-move of a sphere.
std::vector<Complex> all_flips(const Complex& x) {
  const Graph g = one_skeleton(x);
  std::vector<Complex> out;
  for (const auto& [b, d] : edges_of(x)) {
    const auto apex = edge_apexes(x, b, d);
    if (g.adjacent(apex[0], apex[1])) continue;
    out.push_back(edge_flip(x, {b, d}, {apex[0], apex[1]}).complex);
  }
  return out;
}

void expand_lemma(const Complex& parent, CodeSet& found) {
  for (const auto& f : parent.facets()) {
    const auto star = star_vertex(parent, {f[0], f[1], f[2]});
    const Complex& z = star.complex;
    const Vertex x = star.record.vertex;
    found.insert(canonical_code(z));
    for (auto [p, q] : {std::pair{f[0], f[1]}, std::pair{f[0], f[2]}, std::pair{f[1], f[2]}}) {
      const auto apex = edge_apexes(z, p, q);
      const Vertex d = apex[0] == x ? apex[1] : apex[0];
      if (classify_1_move(z, {p, q}, {x, d}) != OneMoveClass::OneA) continue;
      const Complex z1 = edge_flip(z, {p, q}, {x, d}).complex;
      found.insert(canonical_code(z1));
      const Graph g1 = one_skeleton(z1);
      for (const auto& h : z1.facets()) {
        if (!std::binary_search(h.begin(), h.end(), x)) continue;
        std::array<Vertex, 2> pq{};
        int k = 0;
        for (Vertex v : h) {
          if (v != x) pq[k++] = v;
        }
        const auto apex2 = edge_apexes(z1, pq[0], pq[1]);
        const Vertex r = apex2[0] == x ? apex2[1] : apex2[0];
        if (g1.adjacent(x, r)) continue;
        if (classify_1_move(z1, pq, {x, r}) != OneMoveClass::OneB) continue;
        found.insert(canonical_code(edge_flip(z1, pq, {x, r}).complex));
      }
    }
  }
}

void expand_permissive(const Complex& parent, CodeSet& found) {
  for (const auto& f : parent.facets()) {
    const Complex z = star_vertex(parent, {f[0], f[1], f[2]}).complex;
    found.insert(canonical_code(z));
    for (const auto& z1 : all_flips(z)) {
      found.insert(canonical_code(z1));
      for (const auto& z2 : all_flips(z1)) found.insert(canonical_code(z2));
    }
  }
}

Census from_codes(int n, std::vector<CanonicalCode> codes) {
  std::sort(codes.begin(), codes.end());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
  Census c;
  c.n = n;
  c.representatives.reserve(codes.size());
  for (const auto& code : codes) c.representatives.push_back(decode(code));
  c.codes = std::move(codes);
  return c;
}

}  // namespace

Census expand_census(const Census& parent, const EnumerationOptions& options) {
  const int n = parent.n + 1;
  if (n > options.cap) throw CapExceeded("enumerate_spheres", n, options.cap);
  if (n > kMaxCensusVertices) throw CapExceeded("enumerate_spheres", n, kMaxCensusVertices);
  const int workers = resolve_threads(options.threads);
  std::vector<CodeSet> partial(workers);
  parallel_ranges(parent.size(), workers, [&](int w, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      if (options.generation == Generation::Lemma) {
        expand_lemma(parent.representatives[i], partial[w]);
      } else {
        expand_permissive(parent.representatives[i], partial[w]);
      }
    }
  });
  std::vector<CanonicalCode> codes;
  for (auto& set : partial) codes.insert(codes.end(), set.begin(), set.end());
  return from_codes(n, std::move(codes));
}

std::vector<Census> enumerate_up_to(int n, const EnumerationOptions& options) {
  if (n < 4) throw InputError("2-spheres need at least 4 vertices");
  if (n > options.cap) throw CapExceeded("enumerate_spheres", n, options.cap);
  std::vector<Census> out;
  out.push_back(from_codes(4, {canonical_code(standard_sphere(2))}));
  while (out.back().n < n) out.push_back(expand_census(out.back(), options));
  return out;
}

Census enumerate_spheres(int n, const EnumerationOptions& options) {
  return std::move(enumerate_up_to(n, options).back());
}

void annotate(Census& census, int threads) {
  census.annotations.assign(census.size(), {});
  parallel_ranges(census.size(), resolve_threads(threads), [&](int, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const Complex& x = census.representatives[i];
      auto& a = census.annotations[i];
      a.s = separation_index(one_skeleton(x), {kDefaultSeparationCap, 1}).s;
      a.stacked = is_stacked(x);
      a.flag = is_flag(x);
    }
  });
}

Census filter_flag(const Census& census) {
  Census out;
  out.n = census.n;
  const bool annotated = census.annotations.size() == census.size();
  for (std::size_t i = 0; i < census.size(); ++i) {
    const bool flag = annotated ? census.annotations[i].flag : is_flag(census.representatives[i]);
    if (!flag) continue;
    out.codes.push_back(census.codes[i]);
    out.representatives.push_back(census.representatives[i]);
    if (annotated) out.annotations.push_back(census.annotations[i]);
  }
  return out;
}

ExtremalReport classify_census(const Census& census) {
  if (census.annotations.size() != census.size() || census.size() == 0) {
    throw InputError("classify_census needs a nonempty annotated census");
  }
  ExtremalReport r;
  r.n = census.n;
  r.count = census.size();
  r.max_s = r.min_s = census.annotations[0].s;
  std::set<Rational> values;
  for (const auto& a : census.annotations) {
    r.max_s = std::max(r.max_s, a.s);
    r.min_s = std::min(r.min_s, a.s);
    values.insert(a.s);
    r.stacked += a.stacked ? 1 : 0;
    r.flag += a.flag ? 1 : 0;
  }
  for (std::size_t i = 0; i < census.size(); ++i) {
    if (census.annotations[i].s == r.max_s) r.argmax.push_back(i);
    if (census.annotations[i].s == r.min_s) r.argmin.push_back(i);
  }
  r.distinct_s = values.size();
  return r;
}

std::string census_codes(const Census& census) {
  std::string out;
  for (const auto& c : census.codes) out += c.hex() + "\n";
  return out;
}

std::string census_csv(const Census& census) {
  if (census.annotations.size() != census.size()) throw InputError("census_csv needs an annotated census");
  std::ostringstream out;
  out << "code,f0,s_num,s_den,stacked,flag\n";
  for (std::size_t i = 0; i < census.size(); ++i) {
    const auto& a = census.annotations[i];
    out << census.codes[i].hex() << ',' << census.n << ',' << numerator_of(a.s) << ',' << denominator_of(a.s) << ','
        << (a.stacked ? 1 : 0) << ',' << (a.flag ? 1 : 0) << '\n';
  }
  return out.str();
}

}  // namespace sepindex
