#include "sepindex/separation.hpp"

#include <bit>
#include <cstdint>
#include <sstream>

#include "sepindex/error.hpp"
#include "sepindex/moves.hpp"
#include "sepindex/parallel.hpp"

namespace sepindex {

int component_count(const Graph& g, VertexSet subset) {
  const auto rows = g.rows();
  int q = 0;
  while (subset) {
    VertexSet comp = subset & -subset;
    VertexSet frontier = comp;
    while (frontier) {
      VertexSet nb = 0;
      for (VertexSet f = frontier; f; f &= f - 1) nb |= rows[std::countr_zero(f)];
      frontier = nb & subset & ~comp;
      comp |= frontier;
    }
    subset &= ~comp;
    ++q;
  }
  return q;
}

namespace {

void check_cap(const char* routine, const Graph& g, int cap) {
  if (g.num_vertices() > cap) throw CapExceeded(routine, g.num_vertices(), cap);
}

SeparationProfile finish(int n, std::vector<BigInt> sums) {
  SeparationProfile p;
  p.n = n;
  p.s = 0;
  for (int i = 0; i <= n; ++i) {
    p.s_i.emplace_back(sums[i], binomial(n, i));
    p.s += p.s_i.back();
  }
  p.sum_q_minus_1 = std::move(sums);
  return p;
}

constexpr int kBlockBits = 12;  // 4096 subsets per block

}  // namespace

SeparationProfile separation_index(const Graph& g, const SeparationOptions& options) {
  check_cap("separation_index", g, options.cap);
  const int n = g.num_vertices();
  const int low_bits = std::min(n, kBlockBits);
  const std::uint64_t blocks = std::uint64_t{1} << (n - low_bits);
  const std::uint64_t block_size = std::uint64_t{1} << low_bits;
  const int workers = resolve_threads(options.threads);

  std::vector<std::vector<std::int64_t>> partial(workers, std::vector<std::int64_t>(n + 1, 0));
  parallel_ranges(blocks, workers, [&](int w, std::size_t begin, std::size_t end) {
    auto& acc = partial[w];
    for (std::uint64_t blk = begin; blk < end; ++blk) {
      const VertexSet base = blk << low_bits;
      for (std::uint64_t low = 0; low < block_size; ++low) {
        const VertexSet a = base | low;
        acc[std::popcount(a)] += component_count(g, a) - 1;
      }
    }
  });

  std::vector<BigInt> sums(n + 1, 0);
  for (const auto& acc : partial) {
    for (int i = 0; i <= n; ++i) sums[i] += acc[i];
  }
  return finish(n, std::move(sums));
}

namespace {

// Enumerates every connected vertex set whose least vertex is `root` exactly
// once and tallies (|C|, n - |C| - |N(C)|).
class ConnectedSetCounter {
 public:
  ConnectedSetCounter(const Graph& g, std::vector<std::vector<std::int64_t>>& tally)
      : rows_(g.rows()), n_(g.num_vertices()), tally_(tally) {}

  void from_root(Vertex root) {
    const VertexSet below = full_set(root);
    const VertexSet c = bit(root);
    extend(c, rows_[root], rows_[root] & ~below, below | c);
  }

 private:
  void extend(VertexSet c, VertexSet nbr_union, VertexSet candidates, VertexSet forbidden) {
    const int size = std::popcount(c);
    const int free = n_ - size - std::popcount(nbr_union & ~c);
    ++tally_[size][free];
    for (VertexSet rest = candidates; rest; rest &= rest - 1) {
      const VertexSet w = rest & -rest;
      const Vertex v = std::countr_zero(w);
      const VertexSet grown = c | w;
      extend(grown, nbr_union | rows_[v], (rest | rows_[v]) & ~grown & ~forbidden, forbidden);
      forbidden |= w;
    }
  }

  std::span<const VertexSet> rows_;
  int n_;
  std::vector<std::vector<std::int64_t>>& tally_;
};

}  // namespace

SeparationProfile separation_index_fast(const Graph& g, const SeparationOptions& options) {
  check_cap("separation_index_fast", g, options.cap);
  const int n = g.num_vertices();
  const int workers = resolve_threads(options.threads);
  using Tally = std::vector<std::vector<std::int64_t>>;
  std::vector<Tally> partial(workers, Tally(n + 1, std::vector<std::int64_t>(n + 1, 0)));
  parallel_ranges(static_cast<std::size_t>(n), workers, [&](int w, std::size_t begin, std::size_t end) {
    ConnectedSetCounter counter(g, partial[w]);
    for (std::size_t v = begin; v < end; ++v) counter.from_root(static_cast<Vertex>(v));
  });

  // sum over |A| = i of q(G[A]) = sum_{c, r} tally[c][r] * C(r, i - c).
  std::vector<BigInt> sums(n + 1, 0);
  for (int c = 1; c <= n; ++c) {
    for (int r = 0; r + c <= n; ++r) {
      BigInt count = 0;
      for (const auto& t : partial) count += t[c][r];
      if (count == 0) continue;
      for (int i = c; i <= c + r; ++i) sums[i] += count * binomial(r, i - c);
    }
  }
  for (int i = 0; i <= n; ++i) sums[i] -= binomial(n, i);
  return finish(n, std::move(sums));
}

Rational stacked_value(int n) {
  if (n < 4) throw InputError("stacked 2-spheres need at least 4 vertices");
  return Rational(BigInt(n - 8) * (n + 1), BigInt(20));
}

RecurrenceCheck check_zero_move_recurrence(const Complex& y, std::array<Vertex, 3> facet,
                                           const SeparationOptions& options) {
  const Diagnostic d = check_2sphere(y);
  if (!d) throw InputError("not a triangulated 2-sphere: " + d.reason);
  const int n = y.num_vertices();
  const Complex x = star_vertex(y, facet).complex;
  RecurrenceCheck out;
  out.lhs = separation_of(x, options);
  out.rhs = Rational(n + 2, n + 1) * separation_of(y, options) + Rational(n + 2, 20);
  out.equal = out.lhs == out.rhs;
  return out;
}

Theorem1Check verify_theorem1(const Complex& x, const SeparationOptions& options) {
  const Diagnostic d = check_2sphere(x);
  if (!d) throw InputError("not a triangulated 2-sphere: " + d.reason);
  Theorem1Check out;
  out.s = separation_of(x, options);
  out.bound = stacked_value(x.num_vertices());
  out.stacked = is_stacked(x);
  if (out.s == out.bound && out.stacked) {
    out.outcome = Theorem1Outcome::EqualityStacked;
  } else if (out.s < out.bound && !out.stacked) {
    out.outcome = Theorem1Outcome::StrictlyBelowNotStacked;
  } else {
    out.outcome = Theorem1Outcome::Violation;
  }
  return out;
}

std::string to_string(Theorem1Outcome outcome) {
  switch (outcome) {
    case Theorem1Outcome::EqualityStacked: return "equality, stacked";
    case Theorem1Outcome::StrictlyBelowNotStacked: return "strictly below, not stacked";
    case Theorem1Outcome::Violation: return "VIOLATION";
  }
  return {};
}

std::string profile_csv(const SeparationProfile& p) {
  std::ostringstream out;
  out << "i,sum_q_minus_1,binom,s_i_num,s_i_den\n";
  for (int i = 0; i <= p.n; ++i) {
    out << i << ',' << p.sum_q_minus_1[i] << ',' << binomial(p.n, i) << ',' << numerator_of(p.s_i[i]) << ','
        << denominator_of(p.s_i[i]) << '\n';
  }
  out << "total," << numerator_of(p.s) << ',' << denominator_of(p.s) << '\n';
  return out.str();
}

}  // namespace sepindex
