#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "sepindex/complex.hpp"
#include "sepindex/rational.hpp"

namespace sepindex {

inline constexpr int kDefaultCensusCap = 12;
inline constexpr int kMaxCensusVertices = 14;

/// Canonical form of a triangulated 2-sphere: the lexicographically least
/// sorted facet list over all breadth-first relabellings of the embedding.
/// Equal codes iff the spheres are isomorphic, mirror images included.
struct CanonicalCode {
  std::string bytes;  // n, then three labels per facet

  std::string hex() const;
  static CanonicalCode from_hex(const std::string& hex);
  int num_vertices() const { return bytes.empty() ? 0 : static_cast<unsigned char>(bytes[0]); }

  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

CanonicalCode canonical_code(const Complex& x);

/// The canonically labelled sphere a code describes.
Complex decode(const CanonicalCode& code);

/// Lemma: after each 0-move, only the 1A-move and 1A-then-1B pairs whose new
/// edges meet the new vertex (all that the inductive reduction needs).
/// Permissive: after each 0-move, every 1-move and every pair of 1-moves.
enum class Generation { Lemma, Permissive };

struct EnumerationOptions {
  int cap = kDefaultCensusCap;
  int threads = 0;
  Generation generation = Generation::Lemma;
};

struct SphereAnnotation {
  Rational s;
  bool stacked = false;
  bool flag = false;
};

/// All n-vertex triangulated 2-spheres up to isomorphism, sorted by code.
struct Census {
  int n = 0;
  std::vector<CanonicalCode> codes;
  std::vector<Complex> representatives;
  std::vector<SphereAnnotation> annotations;  // empty until annotate()

  std::size_t size() const { return codes.size(); }
};

/// One inductive step: the (n+1)-vertex census from the n-vertex one.
Census expand_census(const Census& parent, const EnumerationOptions& options = {});

/// Censuses for 4..n, index k holding the (k+4)-vertex spheres.
std::vector<Census> enumerate_up_to(int n, const EnumerationOptions& options = {});
Census enumerate_spheres(int n, const EnumerationOptions& options = {});

void annotate(Census& census, int threads = 0);

/// Keeps the flag members; annotations are carried over when present.
Census filter_flag(const Census& census);

struct ExtremalReport {
  int n = 0;
  std::size_t count = 0;
  Rational max_s;
  std::vector<std::size_t> argmax;
  Rational min_s;
  std::vector<std::size_t> argmin;
  std::size_t stacked = 0;
  std::size_t flag = 0;
  std::size_t distinct_s = 0;
};

/// Requires an annotated, nonempty census.
ExtremalReport classify_census(const Census& census);

/// Sorted hex codes, one per line.
std::string census_codes(const Census& census);

/// `code,f0,s_num,s_den,stacked,flag` rows. Requires annotations.
std::string census_csv(const Census& census);

}  // namespace sepindex
