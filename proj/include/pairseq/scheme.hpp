#pragma once

// A closed set of enumeration schemes with uniform encode/decode.

#include <string>
#include <string_view>
#include <variant>

#include "pairseq/pairing.hpp"
#include "pairseq/tiling.hpp"

namespace pairseq {

enum class BasicScheme {
  CantorAntiDiagonal,
  /// Operates on 0-based pairs: encode takes (x, y) >= (0, 0) in the
  /// GridIndex fields and returns z >= 0; decode is its inverse.
  CantorClassicZeroBased,
  DiagBoustrophedon,
  DiagCenterOut,
  DiagEdgesIn,
  DiagAlternating,
  AngleRowwise,
  OxPlow,
};

struct RectTiling {
  TilingSpec spec;
  InnerOrder order = InnerOrder::RowWise;
  ParitySource parity = ParitySource::TileNumber;

  friend bool operator==(const RectTiling&, const RectTiling&) = default;
};

using EnumerationScheme = std::variant<BasicScheme, RectTiling>;

Position encode(const EnumerationScheme& scheme, const GridIndex& p);

/// Closed-form inverse where one exists, block search otherwise.
GridIndex decode(const EnumerationScheme& scheme, Position n);

/// Inverse found by scanning only the diagonal, shell or tile block that
/// must contain n. Independent of the closed-form inverses.
GridIndex decode_by_search(const EnumerationScheme& scheme, Position n);

bool is_zero_based(const EnumerationScheme& scheme);

/// Names: cantor, cantor0, boustrophedon, center-out, edges-in, alternating,
/// angle, oxplow, tiling. `tiling` needs a TilingSpec string and an order
/// (row, col, parity, parity-diagonal).
EnumerationScheme parse_scheme(std::string_view name, std::string_view tiling_spec = {},
                               std::string_view order = "row");
std::string scheme_name(const EnumerationScheme& scheme);
InnerOrder parse_inner_order(std::string_view text, ParitySource& source);

}  // namespace pairseq
