#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sepindex/complex.hpp"

namespace sepindex {

enum class MoveKind { Zero, One, Two };
enum class MoveSubkind { None, OneA, OneB };

/// Classification of a 1-move by the degrees of the new edge's endpoints.
enum class OneMoveClass { OneA, OneB, Other };

/// One bistellar move in dimension two, in the labels of the complex it acts on.
///
///  Zero: star `vertex` (always the next free label) in `facet`.
///  One:  replace `old_edge` by `new_edge`.
///  Two:  remove the degree-3 `vertex`, restoring `facet`.
struct MoveRecord {
  MoveKind kind = MoveKind::Zero;
  MoveSubkind subkind = MoveSubkind::None;
  std::array<Vertex, 3> facet{};
  Vertex vertex = -1;
  std::array<Vertex, 2> old_edge{};
  std::array<Vertex, 2> new_edge{};

  friend bool operator==(const MoveRecord&, const MoveRecord&) = default;
};

struct MoveSequence {
  Complex start;
  std::vector<MoveRecord> records;
};

struct MoveResult {
  Complex complex;
  MoveRecord record;
};

/// Bistellar 0-move: the new vertex gets label n.
MoveResult star_vertex(const Complex& x, std::array<Vertex, 3> facet);

/// Bistellar 2-move. The last label is moved into the freed slot.
MoveResult unstar_vertex(const Complex& x, Vertex v);

/// Bistellar 1-move bd -> ac. The record's subkind carries the 1A/1B class.
MoveResult edge_flip(const Complex& x, std::array<Vertex, 2> bd, std::array<Vertex, 2> ac);

OneMoveClass classify_1_move(const Complex& x, std::array<Vertex, 2> bd, std::array<Vertex, 2> ac);

/// Applies a record, validating every precondition including a claimed 1A/1B class.
Complex apply_move(const Complex& x, const MoveRecord& record);

/// Replays all records from `start`. Failures name the 0-based record index.
Complex replay(const MoveSequence& sequence);

/// Line-based log: `0 a b c -> x`, `1A b d -> a c`, `1B ...`, `1 ...`, `2 x -> a b c`.
std::string format_move(const MoveRecord& record);
std::string to_log(const std::vector<MoveRecord>& records);
std::vector<MoveRecord> parse_log(std::string_view text);

/// n-vertex stacked 2-sphere from S^2_4 by n-4 starrings at facets drawn from
/// a 64-bit Mersenne twister seeded with `seed`.
std::pair<Complex, MoveSequence> build_stacked(int n, std::uint64_t seed);

struct StackedCheck {
  bool stacked = false;
  MoveSequence witness;  // 2-moves from the input, as far as the reduction got
};

/// Greedy reduction: repeatedly remove the lowest-labelled degree-3 vertex.
StackedCheck check_stacked(const Complex& x);
inline bool is_stacked(const Complex& x) { return check_stacked(x).stacked; }

/// Moves that rebuild `x` (up to relabelling) from S^2_4 using only 0-, 1A- and
/// 1B-moves. The sequence starts at S^2_4 and is in forward order.
MoveSequence reduce_to_s24(const Complex& x);

/// For a non-flag sphere with n >= 6: flip an edge of a separating triangle
/// uvw into the two apexes on either side, which lowers the separation index.
MoveResult theorem2_flip(const Complex& t);

/// Third vertices of the two facets containing edge uv of a 2-sphere.
std::array<Vertex, 2> edge_apexes(const Complex& x, Vertex u, Vertex v);

}  // namespace sepindex
