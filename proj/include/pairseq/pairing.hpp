#pragma once

// Closed-form pairing functions between the positive grid and the positive
// integers. All index arithmetic is checked: results that do not fit in 64
// bits raise OverflowError instead of wrapping.

#include <compare>
#include <cstdint>
#include <ostream>
#include <utility>

namespace pairseq {

/// Position n >= 1 in an enumeration.
using Position = std::uint64_t;

/// 1-based cell (i, j) of the infinite array: i is the row, j the column.
struct GridIndex {
  std::uint64_t i = 1;
  std::uint64_t j = 1;

  friend constexpr auto operator<=>(const GridIndex&, const GridIndex&) = default;
  GridIndex transposed() const noexcept { return {j, i}; }
};

std::ostream& operator<<(std::ostream& os, const GridIndex& p);

/// Throws DomainError unless i >= 1 and j >= 1.
void require_valid(const GridIndex& p);

// Cantor anti-diagonal order: (1,1), (1,2), (2,1), (1,3), ...
Position cantor_encode(const GridIndex& p);
GridIndex cantor_decode(Position n);

/// Classical zero-based Cantor pairing z = ((x+y)^2 + 3x + y) / 2.
std::uint64_t cantor_z(std::uint64_t x, std::uint64_t y);
std::pair<std::uint64_t, std::uint64_t> cantor_z_decode(std::uint64_t z);

// Diagonal permutations: each anti-diagonal is visited in a fixed
// permutation of its cells. No closed-form inverses; see decode_by_search.

/// Neighbouring diagonals run in opposite directions.
Position diag_boustrophedon_encode(const GridIndex& p);
/// Centre cell(s) first, then symmetric pairs towards the edges.
Position diag_center_out_encode(const GridIndex& p);
/// Edge pairs first, moving inwards to the centre.
Position diag_edges_in_encode(const GridIndex& p);
/// Alternates between the two ends; direction flips on neighbouring diagonals.
Position diag_alternating_encode(const GridIndex& p);

// Square-shell ("angle") order: shell s runs (1,s) down to (s,s), then
// left to (s,1).
Position angle_encode(const GridIndex& p);
GridIndex angle_decode(Position n);

/// Angle order with odd shells reversed.
Position oxplow_encode(const GridIndex& p);
GridIndex oxplow_decode(Position n);

}  // namespace pairseq
