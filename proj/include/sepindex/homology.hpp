#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sepindex/complex.hpp"
#include "sepindex/rational.hpp"

namespace sepindex {

inline constexpr int kDefaultSigmaCap = 16;
inline constexpr int kDefaultTightCap = 14;

/// Betti numbers over the two-element field.
struct BettiVector {
  std::vector<int> beta;

  int operator[](std::size_t i) const { return i < beta.size() ? beta[i] : 0; }
  /// beta_0 - 1 in degree 0, with -1 for the empty complex.
  int reduced(std::size_t i) const;
  std::int64_t euler_characteristic() const;
  friend bool operator==(const BettiVector&, const BettiVector&) = default;
};

/// Z2 Betti numbers of a complex of dimension at most 3 (any dimension works,
/// the bound is only on cost). Empty complex gives an empty vector.
BettiVector betti_z2(const Complex& x);

struct SubsetOptions {
  int cap = kDefaultSigmaCap;
  int threads = 0;
};

/// sigma_i = sum over vertex subsets A of reduced beta_i(X[A]) / C(n, |A|).
std::vector<Rational> sigma_vector(const Complex& x, const SubsetOptions& options = {});

/// mu_0 = 1 and mu_i = [i == 1] + (1/n) sum over vertices of sigma_{i-1}(link).
std::vector<Rational> mu_vector(const Complex& x, const SubsetOptions& options = {});

/// mu_1 of a neighbourly 3-manifold from the separation indices of its links.
Rational mu1_via_links(const Complex& x);

/// The same link formula without the neighbourliness precondition.
Rational mu1_from_links(const Complex& x);

/// Every vertex link is a stacked 2-sphere. Requires a 3-manifold.
bool in_walkup_K3(const Complex& x);

struct TightNeighbourly {
  int beta1 = 0;
  BigInt lhs;  // 10 * beta_1
  BigInt rhs;  // C(n - 4, 2)
  bool equal = false;
};

/// Equality case of 10 beta_1 <= C(n - 4, 2) for a connected 3-manifold.
TightNeighbourly check_tight_neighbourly(const Complex& x);
inline bool is_tight_neighbourly(const Complex& x) { return check_tight_neighbourly(x).equal; }

/// Z2-tightness by brute force: every induced subcomplex injects in homology.
bool is_tight_bruteforce(const Complex& x, const SubsetOptions& options = {kDefaultTightCap, 0});

struct ManifoldReport {
  int n = 0;
  FVector f;
  BettiVector betti;
  Rational mu_1;
  BigInt eq1_lhs;
  BigInt eq1_rhs;
  bool tight_neighbourly = false;
  bool in_K3 = false;
  bool neighbourly = false;
  std::optional<bool> tight;  // brute force, only when requested
  std::vector<std::string> violations;
};

/// Validates a 3-manifold and checks: tight-neighbourly implies neighbourly
/// and in K(3); for neighbourly inputs beta_1 <= mu_1 <= (n-4)(n-5)/20, with
/// mu_1 on the bound exactly for members of K(3); when brute-force tightness
/// is requested, tight-neighbourly inputs must be tight.
ManifoldReport verify_theorem3(const Complex& x, bool brute_force_tightness = false,
                               const SubsetOptions& options = {kDefaultTightCap, 0});

/// JSON object {n, f_vector, betti, mu_1: {num, den}, eq1_lhs, eq1_rhs,
/// tight_neighbourly, in_K3, neighbourly[, tight], violations}.
std::string report_json(const ManifoldReport& report);

}  // namespace sepindex
