#include "sepindex/homology.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <json.hpp>

#include "sepindex/error.hpp"
#include "sepindex/moves.hpp"
#include "sepindex/parallel.hpp"
#include "sepindex/separation.hpp"

namespace sepindex {

namespace {

using Bits = std::vector<std::uint64_t>;

std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

int top_bit(const Bits& v) {
  for (std::size_t w = v.size(); w-- > 0;) {
    if (v[w]) return static_cast<int>(w * 64 + 63 - std::countl_zero(v[w]));
  }
  return -1;
}

void xor_into(Bits& dst, const Bits& src) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] ^= src[i];
}

/// Row-echelon basis over the two-element field, pivoting on the highest bit.
class Gf2Echelon {
 public:
  explicit Gf2Echelon(std::size_t bits) : pivot_row_(bits, -1) {}

  /// Adds v to the span; returns whether it was independent.
  bool add(Bits v) {
    for (int p = top_bit(v); p >= 0; p = top_bit(v)) {
      const int r = pivot_row_[p];
      if (r < 0) {
        pivot_row_[p] = static_cast<int>(rows_.size());
        rows_.push_back(std::move(v));
        return true;
      }
      xor_into(v, rows_[r]);
    }
    return false;
  }

  std::size_t rank() const { return rows_.size(); }

 private:
  std::vector<Bits> rows_;
  std::vector<int> pivot_row_;
};

/// Faces of a complex by dimension, as vertex masks, with boundary columns
/// indexed into the faces one dimension down.
class FaceTable {
 public:
  explicit FaceTable(const Complex& x) : n_(x.num_vertices()) {
    if (n_ > kMaxGraphVertices) throw CapExceeded("homology face table", n_, kMaxGraphVertices);
    const int d = x.dim();
    masks_.resize(std::max(d + 1, 0));
    boundary_.resize(masks_.size());
    for (int k = 0; k <= d; ++k) {
      for (const auto& f : x.faces(k)) {
        VertexSet m = 0;
        for (Vertex v : f) m |= bit(v);
        masks_[k].push_back(m);
      }
      std::sort(masks_[k].begin(), masks_[k].end());
      if (k == 0) continue;
      const std::size_t words = words_for(masks_[k - 1].size());
      for (VertexSet m : masks_[k]) {
        Bits col(words, 0);
        for (VertexSet rest = m; rest; rest &= rest - 1) {
          const VertexSet sub = m & ~(rest & -rest);
          const auto idx = index_of(k - 1, sub);
          col[idx / 64] |= std::uint64_t{1} << (idx % 64);
        }
        boundary_[k].push_back(std::move(col));
      }
    }
  }

  int dim() const { return static_cast<int>(masks_.size()) - 1; }
  int num_vertices() const { return n_; }
  std::size_t count(int k) const { return masks_[k].size(); }
  VertexSet mask(int k, std::size_t i) const { return masks_[k][i]; }
  const Bits& boundary(int k, std::size_t i) const { return boundary_[k][i]; }

  std::size_t index_of(int k, VertexSet m) const {
    const auto& v = masks_[k];
    return static_cast<std::size_t>(std::lower_bound(v.begin(), v.end(), m) - v.begin());
  }

  /// Rank of the boundary map from k-faces inside `subset`.
  std::size_t boundary_rank(int k, VertexSet subset) const {
    if (k <= 0 || k > dim()) return 0;
    Gf2Echelon e(count(k - 1));
    for (std::size_t i = 0; i < count(k); ++i) {
      if ((masks_[k][i] & ~subset) == 0) e.add(boundary_[k][i]);
    }
    return e.rank();
  }

  std::size_t faces_inside(int k, VertexSet subset) const {
    if (k > dim()) return 0;
    return static_cast<std::size_t>(
        std::count_if(masks_[k].begin(), masks_[k].end(), [&](VertexSet m) { return (m & ~subset) == 0; }));
  }

  /// Basis of the k-cycles supported in `subset`, as chains over all k-faces.
  std::vector<Bits> cycle_basis(int k, VertexSet subset) const {
    std::vector<Bits> out;
    const std::size_t words = words_for(count(k));
    if (k == 0) {
      for (std::size_t i = 0; i < count(0); ++i) {
        if ((masks_[0][i] & ~subset) == 0) {
          Bits e(words, 0);
          e[i / 64] |= std::uint64_t{1} << (i % 64);
          out.push_back(std::move(e));
        }
      }
      return out;
    }
    struct Row {
      Bits boundary, chain;
    };
    std::vector<Row> rows;
    std::vector<int> pivot_row(count(k - 1), -1);
    for (std::size_t i = 0; i < count(k); ++i) {
      if ((masks_[k][i] & ~subset) != 0) continue;
      Row r{boundary_[k][i], Bits(words, 0)};
      r.chain[i / 64] |= std::uint64_t{1} << (i % 64);
      bool placed = false;
      for (int p = top_bit(r.boundary); p >= 0; p = top_bit(r.boundary)) {
        const int j = pivot_row[p];
        if (j < 0) {
          pivot_row[p] = static_cast<int>(rows.size());
          rows.push_back(std::move(r));
          placed = true;
          break;
        }
        xor_into(r.boundary, rows[j].boundary);
        xor_into(r.chain, rows[j].chain);
      }
      if (!placed) out.push_back(std::move(r.chain));
    }
    return out;
  }

  /// Betti numbers of the induced subcomplex on `subset` (non-reduced).
  std::vector<int> betti(VertexSet subset) const {
    std::vector<int> out(std::max(dim() + 1, 0));
    std::vector<std::size_t> rank(dim() + 2, 0);
    for (int k = 1; k <= dim(); ++k) rank[k] = boundary_rank(k, subset);
    for (int k = 0; k <= dim(); ++k) {
      out[k] = static_cast<int>(faces_inside(k, subset) - rank[k] - rank[k + 1]);
    }
    return out;
  }

 private:
  int n_;
  std::vector<std::vector<VertexSet>> masks_;
  std::vector<std::vector<Bits>> boundary_;
};

void require_3manifold(const Complex& x) {
  const Diagnostic d = check_3manifold(x);
  if (!d) throw InputError("not a triangulated 3-manifold: " + d.reason);
}

}  // namespace

int BettiVector::reduced(std::size_t i) const {
  if (i == 0) return beta.empty() ? -1 : beta[0] - 1;
  return (*this)[i];
}

std::int64_t BettiVector::euler_characteristic() const {
  std::int64_t chi = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) chi += (i % 2 == 0) ? beta[i] : -beta[i];
  return chi;
}

BettiVector betti_z2(const Complex& x) {
  if (x.empty()) return {};
  const FaceTable table(x);
  return {table.betti(full_set(x.num_vertices()))};
}

std::vector<Rational> sigma_vector(const Complex& x, const SubsetOptions& options) {
  const int n = x.num_vertices();
  if (n > options.cap) throw CapExceeded("sigma_vector", n, options.cap);
  const int d = x.dim();
  if (d < 0) return {};
  const FaceTable table(x);
  const int workers = resolve_threads(options.threads);
  // partial[w][i][size] = sum of reduced beta_i over subsets of that size
  std::vector<std::vector<std::vector<std::int64_t>>> partial(
      workers, std::vector<std::vector<std::int64_t>>(d + 1, std::vector<std::int64_t>(n + 1, 0)));
  parallel_ranges(std::size_t{1} << n, workers, [&](int w, std::size_t begin, std::size_t end) {
    auto& acc = partial[w];
    for (std::size_t a = begin; a < end; ++a) {
      const int size = std::popcount(a);
      if (a == 0) {
        acc[0][0] += -1;
        continue;
      }
      const auto b = table.betti(a);
      for (int i = 0; i <= d; ++i) acc[i][size] += (i == 0) ? b[0] - 1 : b[i];
    }
  });
  std::vector<Rational> sigma(d + 1, Rational(0));
  for (int i = 0; i <= d; ++i) {
    for (int size = 0; size <= n; ++size) {
      std::int64_t total = 0;
      for (const auto& p : partial) total += p[i][size];
      sigma[i] += Rational(BigInt(total), binomial(n, size));
    }
  }
  return sigma;
}

std::vector<Rational> mu_vector(const Complex& x, const SubsetOptions& options) {
  const int n = x.num_vertices();
  const int d = x.dim();
  std::vector<Rational> mu(std::max(d + 1, 1), Rational(0));
  mu[0] = 1;
  std::vector<Rational> link_sums(std::max(d, 0), Rational(0));
  for (Vertex v = 0; v < n; ++v) {
    const auto sigma = sigma_vector(link(x, v).complex, options);
    for (int i = 0; i < d && i < static_cast<int>(sigma.size()); ++i) link_sums[i] += sigma[i];
  }
  for (int i = 1; i <= d; ++i) mu[i] = (i == 1 ? Rational(1) : Rational(0)) + link_sums[i - 1] / n;
  return mu;
}

Rational mu1_from_links(const Complex& x) {
  require_3manifold(x);
  const int n = x.num_vertices();
  Rational total = 0;
  for (Vertex v = 0; v < n; ++v) total += separation_of(link(x, v).complex);
  return Rational(1) + total / n;
}

Rational mu1_via_links(const Complex& x) {
  require_3manifold(x);
  if (!is_neighbourly(x)) throw InputError("mu1_via_links needs a neighbourly complex");
  return mu1_from_links(x);
}

bool in_walkup_K3(const Complex& x) {
  require_3manifold(x);
  for (Vertex v = 0; v < x.num_vertices(); ++v) {
    if (!is_stacked(link(x, v).complex)) return false;
  }
  return true;
}

TightNeighbourly check_tight_neighbourly(const Complex& x) {
  if (x.dim() != 3) throw InputError("tight-neighbourliness is implemented for dimension 3 only");
  if (!is_connected(x)) throw InputError("tight-neighbourliness needs a connected complex");
  TightNeighbourly out;
  out.beta1 = betti_z2(x)[1];
  out.lhs = BigInt(10) * out.beta1;
  out.rhs = binomial(x.num_vertices() - 4, 2);
  out.equal = out.lhs == out.rhs;
  return out;
}

bool is_tight_bruteforce(const Complex& x, const SubsetOptions& options) {
  const int n = x.num_vertices();
  if (n > options.cap) throw CapExceeded("is_tight_bruteforce", n, options.cap);
  if (!is_connected(x)) throw InputError("tightness is defined for connected complexes");
  const FaceTable table(x);
  const int d = table.dim();
  const VertexSet all = full_set(n);

  // Echelon bases of the boundaries B_i(X), i = 0..d.
  std::vector<Gf2Echelon> boundaries;
  for (int i = 0; i <= d; ++i) {
    Gf2Echelon e(table.count(i));
    if (i + 1 <= d) {
      for (std::size_t j = 0; j < table.count(i + 1); ++j) e.add(table.boundary(i + 1, j));
    }
    boundaries.push_back(std::move(e));
  }

  const int workers = resolve_threads(options.threads);
  std::atomic<bool> tight{true};
  parallel_ranges(std::size_t{1} << n, workers, [&](int, std::size_t begin, std::size_t end) {
    for (std::size_t a = begin; a < end && tight.load(std::memory_order_relaxed); ++a) {
      if (a == 0 || a == all) continue;
      for (int i = 0; i <= d; ++i) {
        const auto cycles = table.cycle_basis(i, a);
        const std::size_t homology = cycles.size() - table.boundary_rank(i + 1, a);
        Gf2Echelon image = boundaries[i];
        std::size_t image_dim = 0;
        for (const auto& z : cycles) image_dim += image.add(z) ? 1 : 0;
        if (image_dim != homology) {
          tight.store(false, std::memory_order_relaxed);
          return;
        }
      }
    }
  });
  return tight.load();
}

ManifoldReport verify_theorem3(const Complex& x, bool brute_force_tightness, const SubsetOptions& options) {
  require_3manifold(x);
  if (!is_connected(x)) throw InputError("3-manifold report needs a connected complex");
  ManifoldReport r;
  r.n = x.num_vertices();
  r.f = f_vector(x);
  r.betti = betti_z2(x);
  r.mu_1 = mu1_from_links(x);
  const auto tn = check_tight_neighbourly(x);
  r.eq1_lhs = tn.lhs;
  r.eq1_rhs = tn.rhs;
  r.tight_neighbourly = tn.equal;
  r.in_K3 = in_walkup_K3(x);
  r.neighbourly = is_neighbourly(x);

  if (tn.lhs > tn.rhs) r.violations.push_back("10*beta_1 exceeds C(n-4,2)");
  if (r.tight_neighbourly && !(r.neighbourly && r.in_K3)) {
    r.violations.push_back("tight-neighbourly but not a neighbourly member of K(3)");
  }
  if (r.neighbourly) {
    const Rational bound(BigInt(r.n - 4) * (r.n - 5), BigInt(20));
    if (Rational(r.betti[1]) > r.mu_1) r.violations.push_back("beta_1 exceeds mu_1");
    if (r.mu_1 > bound) r.violations.push_back("mu_1 exceeds (n-4)(n-5)/20");
    if ((r.mu_1 == bound) != r.in_K3) r.violations.push_back("mu_1 = (n-4)(n-5)/20 disagrees with K(3) membership");
  }
  if (brute_force_tightness) {
    r.tight = is_tight_bruteforce(x, options);
    if (r.tight_neighbourly && !*r.tight) r.violations.push_back("tight-neighbourly but not tight");
  }
  return r;
}

std::string report_json(const ManifoldReport& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["f_vector"] = r.f.counts;
  j["betti"] = r.betti.beta;
  j["mu_1"] = {{"num", numerator_of(r.mu_1).convert_to<long long>()},
               {"den", denominator_of(r.mu_1).convert_to<long long>()}};
  j["eq1_lhs"] = r.eq1_lhs.convert_to<long long>();
  j["eq1_rhs"] = r.eq1_rhs.convert_to<long long>();
  j["tight_neighbourly"] = r.tight_neighbourly;
  j["in_K3"] = r.in_K3;
  j["neighbourly"] = r.neighbourly;
  if (r.tight) j["tight"] = *r.tight;
  j["violations"] = r.violations;
  return j.dump(2) + "\n";
}

}  // namespace sepindex
