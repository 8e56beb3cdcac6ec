#pragma once

// Generalised Cantor enumeration over a cover of the grid by rectangles.
//
// Tile column s (1-based) has length l_s cells along j; tile row r has height
// h_r cells along i. Tiles are visited in Cantor order of their (row, column)
// tile coordinates and the cells of one tile form a contiguous block.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pairseq/pairing.hpp"

namespace pairseq {

/// A positive integer sequence m -> x_m used for tile lengths or heights.
class TileRule {
 public:
  enum class Kind { Constant, List, Ramp };

  static TileRule constant(std::uint64_t c);
  static TileRule list(std::vector<std::uint64_t> values);
  /// a + b(m-1); a >= 1, b >= 0.
  static TileRule ramp(std::uint64_t a, std::uint64_t b);

  Kind kind() const noexcept { return kind_; }

  /// x_m for m >= 1; SpecExhaustedError past the end of a list.
  std::uint64_t at(std::uint64_t m) const;
  /// x_1 + ... + x_m (0 for m == 0).
  std::uint64_t prefix(std::uint64_t m) const;
  /// max{m : prefix(m) < coord}; the number of whole tiles before coord.
  std::uint64_t tiles_before(std::uint64_t coord) const;

  std::string to_string() const;

  friend bool operator==(const TileRule&, const TileRule&) = default;

 private:
  TileRule() = default;

  Kind kind_ = Kind::Constant;
  std::uint64_t a_ = 1;
  std::uint64_t b_ = 0;
  std::vector<std::uint64_t> values_;
  std::vector<std::uint64_t> prefix_;  // prefix_[m] = sum of the first m list values
};

/// Lengths (along j) and heights (along i) of the rectangle cover.
///
/// Immutable after construction: prefix sums are closed-form for constant
/// and ramp rules and precomputed for lists, so a spec can be shared freely
/// between threads.
struct TilingSpec {
  TileRule lengths = TileRule::constant(1);
  TileRule heights = TileRule::constant(1);

  static TilingSpec constant(std::uint64_t l, std::uint64_t h) {
    return {TileRule::constant(l), TileRule::constant(h)};
  }

  /// Parses `const:<l>x<h>`, `list:<l1,l2,...>x<h1,h2,...>` or
  /// `ramp:<a>+<b>x<a>+<b>` (lengths first, then heights).
  static TilingSpec parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const TilingSpec&, const TilingSpec&) = default;
};

/// Whole tile rows above (R) and whole tile columns left of (S) a cell.
struct TileCoords {
  std::uint64_t R = 0;
  std::uint64_t S = 0;
  friend constexpr bool operator==(const TileCoords&, const TileCoords&) = default;
};

enum class InnerOrder { RowWise, ColumnWise, Parity };

/// What decides the inner order in InnerOrder::Parity: the parity of the
/// 0-based tile number (Cantor number of (R, S)) or of the tile diagonal R+S.
/// Even selects row-wise, odd column-wise.
enum class ParitySource { TileNumber, TileDiagonal };

TileCoords locate_tile(const GridIndex& p, const TilingSpec& spec);

/// Number of cells in tile diagonals 0 .. diagonals-1.
std::uint64_t staircase_cells(const TilingSpec& spec, std::uint64_t diagonals);

Position rect_encode_rowwise(const GridIndex& p, const TilingSpec& spec);
Position rect_encode_colwise(const GridIndex& p, const TilingSpec& spec);
Position rect_encode_parity(const GridIndex& p, const TilingSpec& spec, ParitySource source);
/// Closed form for constant l x h tiles.
Position rect_encode_const(const GridIndex& p, std::uint64_t l, std::uint64_t h);

Position rect_encode(const GridIndex& p, const TilingSpec& spec, InnerOrder order,
                     ParitySource source = ParitySource::TileNumber);

/// Inverse of rect_encode: locates the tile diagonal by bisection over the
/// staircase counts, then the tile, then the cell inside it.
GridIndex rect_decode(const TilingSpec& spec, InnerOrder order, Position n,
                      ParitySource source = ParitySource::TileNumber);

/// True when the tile at (R, S) is numbered row by row.
bool tile_is_rowwise(TileCoords tile, InnerOrder order, ParitySource source);

}  // namespace pairseq
