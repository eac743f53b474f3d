#pragma once

#include <string>
#include <vector>

#include "sepindex/complex.hpp"
#include "sepindex/rational.hpp"

namespace sepindex {

struct SeparationOptions {
  int cap = 28;
  int threads = 0;  // 0: SEPINDEX_THREADS or 1
};

inline constexpr int kDefaultSeparationCap = 28;
inline constexpr int kDefaultFastSeparationCap = 40;

/// Per-size breakdown of the separation index.
///
/// sum_q_minus_1[i] is the sum of (components - 1) over all i-subsets, the
/// empty set included; s_i = sum_q_minus_1[i] / C(n, i) and s = sum of s_i.
struct SeparationProfile {
  int n = 0;
  std::vector<BigInt> sum_q_minus_1;
  std::vector<Rational> s_i;
  Rational s;

  friend bool operator==(const SeparationProfile&, const SeparationProfile&) = default;
};

/// Connected components of the induced subgraph on `subset`; 0 for the empty set.
int component_count(const Graph& g, VertexSet subset);

/// Exhaustive subset enumeration.
SeparationProfile separation_index(const Graph& g, const SeparationOptions& options = {});

/// Same result via enumeration of connected vertex sets: each connected C is a
/// component of exactly the supersets A of C avoiding N(C), i.e. of
/// C(n - |C| - |N(C)|, i - |C|) subsets of size i.
SeparationProfile separation_index_fast(const Graph& g,
                                        const SeparationOptions& options = {kDefaultFastSeparationCap, 0});

inline Rational separation_of(const Complex& x, const SeparationOptions& options = {}) {
  return separation_index(one_skeleton(x), options).s;
}

/// (n - 8)(n + 1) / 20, the value on n-vertex stacked 2-spheres.
Rational stacked_value(int n);

struct RecurrenceCheck {
  Rational lhs;  // s after starring a vertex in `facet`
  Rational rhs;  // (n+2) s(Y) / (n+1) + (n+2)/20
  bool equal = false;
};

RecurrenceCheck check_zero_move_recurrence(const Complex& y, std::array<Vertex, 3> facet,
                                           const SeparationOptions& options = {});

enum class Theorem1Outcome { EqualityStacked, StrictlyBelowNotStacked, Violation };

struct Theorem1Check {
  Theorem1Outcome outcome = Theorem1Outcome::Violation;
  Rational s;
  Rational bound;
  bool stacked = false;
};

Theorem1Check verify_theorem1(const Complex& x, const SeparationOptions& options = {});

std::string to_string(Theorem1Outcome outcome);

/// CSV with header `i,sum_q_minus_1,binom,s_i_num,s_i_den` and a final
/// `total,s_num,s_den` row.
std::string profile_csv(const SeparationProfile& profile);

}  // namespace sepindex
