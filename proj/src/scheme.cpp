#include "pairseq/scheme.hpp"

#include <array>
#include <utility>

#include "pairseq/arith.hpp"
#include "pairseq/error.hpp"

namespace pairseq {

using arith::u64;

namespace {

struct Named {
  std::string_view name;
  BasicScheme scheme;
};

constexpr std::array<Named, 8> kNames{{
    {"cantor", BasicScheme::CantorAntiDiagonal},
    {"cantor0", BasicScheme::CantorClassicZeroBased},
    {"boustrophedon", BasicScheme::DiagBoustrophedon},
    {"center-out", BasicScheme::DiagCenterOut},
    {"edges-in", BasicScheme::DiagEdgesIn},
    {"alternating", BasicScheme::DiagAlternating},
    {"angle", BasicScheme::AngleRowwise},
    {"oxplow", BasicScheme::OxPlow},
}};

Position encode_basic(BasicScheme scheme, const GridIndex& p) {
  switch (scheme) {
    case BasicScheme::CantorAntiDiagonal: return cantor_encode(p);
    case BasicScheme::CantorClassicZeroBased: return cantor_z(p.i, p.j);
    case BasicScheme::DiagBoustrophedon: return diag_boustrophedon_encode(p);
    case BasicScheme::DiagCenterOut: return diag_center_out_encode(p);
    case BasicScheme::DiagEdgesIn: return diag_edges_in_encode(p);
    case BasicScheme::DiagAlternating: return diag_alternating_encode(p);
    case BasicScheme::AngleRowwise: return angle_encode(p);
    case BasicScheme::OxPlow: return oxplow_encode(p);
  }
  throw DomainError("unknown scheme");
}

bool is_shell_scheme(BasicScheme s) { return s == BasicScheme::AngleRowwise || s == BasicScheme::OxPlow; }

[[noreturn]] void not_found(Position n) {
  throw Error("block search found no cell for position " + std::to_string(n));
}

GridIndex search_basic(BasicScheme scheme, Position n) {
  if (scheme == BasicScheme::CantorClassicZeroBased) {
    // Diagonal x + y = s holds z in [s(s+1)/2, s(s+1)/2 + s].
    const u64 s = (arith::isqrt(arith::add(arith::mul(8, n), 1)) - 1) / 2;
    for (u64 x = 0; x <= s; ++x) {
      if (cantor_z(x, s - x) == n) return {x, s - x};
    }
    not_found(n);
  }
  if (n == 0) throw DomainError("position must be >= 1");
  if (is_shell_scheme(scheme)) {
    const u64 t = arith::shell_of(n);
    for (u64 r = 1; r <= t; ++r) {
      if (encode_basic(scheme, {r, t}) == n) return {r, t};
    }
    for (u64 c = 1; c < t; ++c) {
      if (encode_basic(scheme, {t, c}) == n) return {t, c};
    }
    not_found(n);
  }
  const u64 d = arith::diagonal_of(n) + 1;  // cells on the diagonal
  for (u64 i = 1; i <= d; ++i) {
    if (encode_basic(scheme, {i, d + 1 - i}) == n) return {i, d + 1 - i};
  }
  not_found(n);
}

GridIndex search_tiled(const RectTiling& tiling, Position n) {
  if (n == 0) throw DomainError("position must be >= 1");
  const TilingSpec& spec = tiling.spec;
  u64 diagonal = 0;
  while (staircase_cells(spec, diagonal + 1) < n) ++diagonal;
  // Tiles of one diagonal are numbered one after another, top row first.
  u64 before = staircase_cells(spec, diagonal);
  for (u64 r = 1; r <= diagonal + 1; ++r) {
    const u64 s = diagonal + 2 - r;
    const u64 size = arith::mul(spec.heights.at(r), spec.lengths.at(s));
    if (before + size < n) {
      before += size;
      continue;
    }
    const u64 row0 = spec.heights.prefix(r - 1);
    const u64 col0 = spec.lengths.prefix(s - 1);
    for (u64 i = row0 + 1; i <= row0 + spec.heights.at(r); ++i) {
      for (u64 j = col0 + 1; j <= col0 + spec.lengths.at(s); ++j) {
        if (rect_encode({i, j}, spec, tiling.order, tiling.parity) == n) return {i, j};
      }
    }
  }
  not_found(n);
}

}  // namespace

Position encode(const EnumerationScheme& scheme, const GridIndex& p) {
  if (const auto* basic = std::get_if<BasicScheme>(&scheme)) return encode_basic(*basic, p);
  const auto& t = std::get<RectTiling>(scheme);
  return rect_encode(p, t.spec, t.order, t.parity);
}

GridIndex decode(const EnumerationScheme& scheme, Position n) {
  if (const auto* basic = std::get_if<BasicScheme>(&scheme)) {
    switch (*basic) {
      case BasicScheme::CantorAntiDiagonal: return cantor_decode(n);
      case BasicScheme::CantorClassicZeroBased: {
        const auto [x, y] = cantor_z_decode(n);
        return {x, y};
      }
      case BasicScheme::AngleRowwise: return angle_decode(n);
      case BasicScheme::OxPlow: return oxplow_decode(n);
      default: return search_basic(*basic, n);
    }
  }
  const auto& t = std::get<RectTiling>(scheme);
  return rect_decode(t.spec, t.order, n, t.parity);
}

GridIndex decode_by_search(const EnumerationScheme& scheme, Position n) {
  if (const auto* basic = std::get_if<BasicScheme>(&scheme)) return search_basic(*basic, n);
  return search_tiled(std::get<RectTiling>(scheme), n);
}

bool is_zero_based(const EnumerationScheme& scheme) {
  const auto* basic = std::get_if<BasicScheme>(&scheme);
  return basic != nullptr && *basic == BasicScheme::CantorClassicZeroBased;
}

InnerOrder parse_inner_order(std::string_view text, ParitySource& source) {
  source = ParitySource::TileNumber;
  if (text == "row") return InnerOrder::RowWise;
  if (text == "col") return InnerOrder::ColumnWise;
  if (text == "parity") return InnerOrder::Parity;
  if (text == "parity-diagonal") {
    source = ParitySource::TileDiagonal;
    return InnerOrder::Parity;
  }
  throw ParseError("unknown inner order '" + std::string(text) + "' (row, col, parity, parity-diagonal)");
}

EnumerationScheme parse_scheme(std::string_view name, std::string_view tiling_spec, std::string_view order) {
  if (name == "tiling") {
    if (tiling_spec.empty()) throw ParseError("scheme 'tiling' needs a tiling spec");
    RectTiling t{TilingSpec::parse(tiling_spec)};
    t.order = parse_inner_order(order, t.parity);
    return t;
  }
  for (const auto& n : kNames) {
    if (n.name == name) return n.scheme;
  }
  throw ParseError("unknown scheme '" + std::string(name) + "'");
}

std::string scheme_name(const EnumerationScheme& scheme) {
  if (const auto* basic = std::get_if<BasicScheme>(&scheme)) {
    for (const auto& n : kNames) {
      if (n.scheme == *basic) return std::string(n.name);
    }
    return "?";
  }
  const auto& t = std::get<RectTiling>(scheme);
  std::string order = "row";
  if (t.order == InnerOrder::ColumnWise) order = "col";
  if (t.order == InnerOrder::Parity) order = t.parity == ParitySource::TileNumber ? "parity" : "parity-diagonal";
  return "tiling " + t.spec.to_string() + " " + order;
}

}  // namespace pairseq
