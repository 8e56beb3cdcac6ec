#include "pairseq/tiling.hpp"

#include <algorithm>
#include <charconv>

#include "pairseq/arith.hpp"
#include "pairseq/error.hpp"

namespace pairseq {

using arith::i64;
using arith::u64;

TileRule TileRule::constant(std::uint64_t c) {
  if (c == 0) throw DomainError("tile size must be >= 1");
  TileRule r;
  r.kind_ = Kind::Constant;
  r.a_ = c;
  return r;
}

TileRule TileRule::list(std::vector<std::uint64_t> values) {
  if (values.empty()) throw DomainError("tile list must not be empty");
  if (std::ranges::any_of(values, [](u64 v) { return v == 0; })) {
    throw DomainError("tile size must be >= 1");
  }
  TileRule r;
  r.kind_ = Kind::List;
  r.prefix_.reserve(values.size() + 1);
  r.prefix_.push_back(0);
  for (u64 v : values) r.prefix_.push_back(arith::add(r.prefix_.back(), v));
  r.values_ = std::move(values);
  return r;
}

TileRule TileRule::ramp(std::uint64_t a, std::uint64_t b) {
  if (a == 0) throw DomainError("ramp start must be >= 1");
  TileRule r;
  r.kind_ = Kind::Ramp;
  r.a_ = a;
  r.b_ = b;
  return r;
}

std::uint64_t TileRule::at(std::uint64_t m) const {
  if (m == 0) throw DomainError("tile index is 1-based");
  switch (kind_) {
    case Kind::Constant:
      return a_;
    case Kind::Ramp:
      return arith::add(a_, arith::mul(b_, m - 1));
    case Kind::List:
      if (m > values_.size()) {
        throw SpecExhaustedError("tile list has " + std::to_string(values_.size()) +
                                 " entries; entry " + std::to_string(m) + " requested");
      }
      return values_[m - 1];
  }
  return 0;
}

std::uint64_t TileRule::prefix(std::uint64_t m) const {
  switch (kind_) {
    case Kind::Constant:
      return arith::mul(a_, m);
    case Kind::Ramp:
      // m*a + b*m(m-1)/2
      return m == 0 ? 0 : arith::add(arith::mul(a_, m), arith::mul(b_, arith::triangular(m - 1)));
    case Kind::List:
      if (m >= prefix_.size()) {
        throw SpecExhaustedError("tile list has " + std::to_string(values_.size()) +
                                 " entries; prefix of " + std::to_string(m) + " requested");
      }
      return prefix_[m];
  }
  return 0;
}

std::uint64_t TileRule::tiles_before(std::uint64_t coord) const {
  if (coord == 0) throw DomainError("grid coordinate is 1-based");
  switch (kind_) {
    case Kind::Constant:
      return (coord - 1) / a_;
    case Kind::List: {
      if (prefix_.back() < coord) {
        throw SpecExhaustedError("tile list covers " + std::to_string(prefix_.back()) +
                                 " cells; coordinate " + std::to_string(coord) + " requested");
      }
      const auto it = std::lower_bound(prefix_.begin(), prefix_.end(), coord);
      return static_cast<u64>(it - prefix_.begin()) - 1;
    }
    case Kind::Ramp: {
      // prefix(m) >= m, so the answer lies in [0, coord - 1].
      u64 lo = 0;
      u64 hi = coord - 1;
      while (lo < hi) {
        const u64 mid = lo + (hi - lo + 1) / 2;
        bool below;
        try {
          below = prefix(mid) < coord;
        } catch (const OverflowError&) {
          below = false;
        }
        if (below) {
          lo = mid;
        } else {
          hi = mid - 1;
        }
      }
      return lo;
    }
  }
  return 0;
}

std::string TileRule::to_string() const {
  switch (kind_) {
    case Kind::Constant:
      return std::to_string(a_);
    case Kind::Ramp:
      return std::to_string(a_) + "+" + std::to_string(b_);
    case Kind::List: {
      std::string out;
      for (u64 v : values_) {
        if (!out.empty()) out += ',';
        out += std::to_string(v);
      }
      return out;
    }
  }
  return {};
}

namespace {

u64 parse_u64(std::string_view text, std::string_view what) {
  u64 v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ParseError("bad " + std::string(what) + " '" + std::string(text) + "'");
  }
  return v;
}

TileRule parse_rule(std::string_view kind, std::string_view body) {
  if (kind == "const") return TileRule::constant(parse_u64(body, "tile size"));
  if (kind == "ramp") {
    const auto plus = body.find('+');
    if (plus == std::string_view::npos) throw ParseError("ramp rule needs <a>+<b>, got '" + std::string(body) + "'");
    return TileRule::ramp(parse_u64(body.substr(0, plus), "ramp start"),
                          parse_u64(body.substr(plus + 1), "ramp step"));
  }
  std::vector<u64> values;
  size_t start = 0;
  while (start <= body.size()) {
    const auto comma = body.find(',', start);
    const auto end = comma == std::string_view::npos ? body.size() : comma;
    values.push_back(parse_u64(body.substr(start, end - start), "tile size"));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return TileRule::list(std::move(values));
}

}  // namespace

TilingSpec TilingSpec::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError("tiling spec needs a kind prefix: '" + std::string(text) + "'");
  const auto kind = text.substr(0, colon);
  if (kind != "const" && kind != "list" && kind != "ramp") {
    throw ParseError("unknown tiling kind '" + std::string(kind) + "'");
  }
  const auto body = text.substr(colon + 1);
  const auto x = body.find('x');
  if (x == std::string_view::npos) throw ParseError("tiling spec needs <lengths>x<heights>: '" + std::string(text) + "'");
  try {
    return {parse_rule(kind, body.substr(0, x)), parse_rule(kind, body.substr(x + 1))};
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

std::string TilingSpec::to_string() const {
  const auto kind = [](const TileRule& r) {
    switch (r.kind()) {
      case TileRule::Kind::Constant: return "const";
      case TileRule::Kind::List: return "list";
      case TileRule::Kind::Ramp: return "ramp";
    }
    return "";
  };
  // Mixed kinds have no single-prefix text form; fall back to ramps,
  // which express constants as <c>+0.
  if (lengths.kind() == heights.kind()) {
    return std::string(kind(lengths)) + ":" + lengths.to_string() + "x" + heights.to_string();
  }
  if (lengths.kind() != TileRule::Kind::List && heights.kind() != TileRule::Kind::List) {
    const auto as_ramp = [](const TileRule& r) {
      return r.kind() == TileRule::Kind::Ramp ? r.to_string() : r.to_string() + "+0";
    };
    return "ramp:" + as_ramp(lengths) + "x" + as_ramp(heights);
  }
  throw DomainError("tiling spec mixing a list with another rule kind has no text form");
}

TileCoords locate_tile(const GridIndex& p, const TilingSpec& spec) {
  require_valid(p);
  return {spec.heights.tiles_before(p.i), spec.lengths.tiles_before(p.j)};
}

std::uint64_t staircase_cells(const TilingSpec& spec, std::uint64_t diagonals) {
  u64 total = 0;
  for (u64 r = 1; r <= diagonals; ++r) {
    total = arith::add(total, arith::mul(spec.heights.at(r), spec.lengths.prefix(diagonals + 1 - r)));
  }
  return total;
}

namespace {

/// Cells of tiles in the same tile diagonal that sit in tile rows above.
u64 cells_above_on_diagonal(const TilingSpec& spec, TileCoords tile) {
  u64 total = 0;
  for (u64 r = 1; r <= tile.R; ++r) {
    total = arith::add(total, arith::mul(spec.heights.at(r), spec.lengths.at(tile.R + tile.S + 2 - r)));
  }
  return total;
}

struct TileFrame {
  TileCoords tile;
  u64 leading;  // staircase + cells above on the diagonal
  u64 row;      // 0-based row inside the tile
  u64 col;      // 0-based column inside the tile
  u64 length;   // l_{S+1}
  u64 height;   // h_{R+1}
};

TileFrame frame(const GridIndex& p, const TilingSpec& spec) {
  const TileCoords tile = locate_tile(p, spec);
  const u64 leading = arith::add(staircase_cells(spec, arith::add(tile.R, tile.S)),
                                 cells_above_on_diagonal(spec, tile));
  return {tile,
          leading,
          p.i - spec.heights.prefix(tile.R) - 1,
          p.j - spec.lengths.prefix(tile.S) - 1,
          spec.lengths.at(tile.S + 1),
          spec.heights.at(tile.R + 1)};
}

u64 rowwise_offset(const TileFrame& f) { return arith::add(arith::mul(f.length, f.row), f.col + 1); }
u64 colwise_offset(const TileFrame& f) { return arith::add(arith::mul(f.height, f.col), f.row + 1); }

}  // namespace

bool tile_is_rowwise(TileCoords tile, InnerOrder order, ParitySource source) {
  switch (order) {
    case InnerOrder::RowWise:
      return true;
    case InnerOrder::ColumnWise:
      return false;
    case InnerOrder::Parity: {
      const u64 t = source == ParitySource::TileNumber ? cantor_z(tile.R, tile.S) : arith::add(tile.R, tile.S);
      return t % 2 == 0;
    }
  }
  return true;
}

Position rect_encode_rowwise(const GridIndex& p, const TilingSpec& spec) {
  const TileFrame f = frame(p, spec);
  return arith::add(f.leading, rowwise_offset(f));
}

Position rect_encode_colwise(const GridIndex& p, const TilingSpec& spec) {
  const TileFrame f = frame(p, spec);
  return arith::add(f.leading, colwise_offset(f));
}

Position rect_encode_parity(const GridIndex& p, const TilingSpec& spec, ParitySource source) {
  const TileFrame f = frame(p, spec);
  const u64 t = source == ParitySource::TileNumber ? cantor_z(f.tile.R, f.tile.S) : arith::add(f.tile.R, f.tile.S);
  // ((-1)^t + 1)/2 * rowwise - ((-1)^t - 1)/2 * colwise
  const i64 sign = arith::neg1_pow(t);
  const i64 mixed = arith::ssub(arith::smul((sign + 1) / 2, arith::to_signed(rowwise_offset(f))),
                                arith::smul((sign - 1) / 2, arith::to_signed(colwise_offset(f))));
  return arith::add(f.leading, arith::to_unsigned(mixed));
}

Position rect_encode_const(const GridIndex& p, std::uint64_t l, std::uint64_t h) {
  require_valid(p);
  if (l == 0 || h == 0) throw DomainError("tile size must be >= 1");
  const i64 R = arith::to_signed((p.i - 1) / h);
  const i64 S = arith::to_signed((p.j - 1) / l);
  const i64 L = arith::to_signed(l);
  const i64 H = arith::to_signed(h);
  const i64 D = arith::sadd(R, S);
  // (lh/2)((R+S)^2 + 3R + S); the bracket is always even.
  const i64 bracket = arith::sadd(arith::smul(D, D), arith::sadd(arith::smul(3, R), S));
  const i64 tiles = arith::smul(arith::smul(L, H), bracket / 2);
  const i64 inner = arith::smul(L, arith::ssub(arith::ssub(arith::to_signed(p.i), arith::smul(H, R)), S + 1));
  return arith::to_unsigned(arith::sadd(arith::sadd(tiles, inner), arith::to_signed(p.j)));
}

Position rect_encode(const GridIndex& p, const TilingSpec& spec, InnerOrder order, ParitySource source) {
  switch (order) {
    case InnerOrder::RowWise:
      return rect_encode_rowwise(p, spec);
    case InnerOrder::ColumnWise:
      return rect_encode_colwise(p, spec);
    case InnerOrder::Parity:
      return rect_encode_parity(p, spec, source);
  }
  return 0;
}

GridIndex rect_decode(const TilingSpec& spec, InnerOrder order, Position n, ParitySource source) {
  if (n == 0) throw DomainError("position must be >= 1");
  // Smallest D with staircase_cells(D + 1) >= n; every tile diagonal holds
  // at least one cell, so D < n.
  // Lists are finite, so step instead of galloping past their end.
  const bool finite = spec.lengths.kind() == TileRule::Kind::List || spec.heights.kind() == TileRule::Kind::List;
  u64 hi = 1;
  while (staircase_cells(spec, hi) < n) hi = finite ? hi + 1 : arith::mul(hi, 2);
  u64 lo = 0;
  while (lo < hi) {
    const u64 mid = lo + (hi - lo) / 2;
    if (staircase_cells(spec, mid) < n) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  const u64 diagonal = lo - 1;  // 0-based tile diagonal R + S
  u64 before = staircase_cells(spec, diagonal);
  for (u64 r = 1; r <= diagonal + 1; ++r) {
    const u64 s = diagonal + 2 - r;
    const u64 height = spec.heights.at(r);
    const u64 length = spec.lengths.at(s);
    const u64 cells = arith::mul(height, length);
    if (n - before <= cells) {
      const u64 q = n - before - 1;
      const TileCoords tile{r - 1, s - 1};
      const bool rowwise = tile_is_rowwise(tile, order, source);
      const u64 row = rowwise ? q / length : q % height;
      const u64 col = rowwise ? q % length : q / height;
      return {spec.heights.prefix(r - 1) + row + 1, spec.lengths.prefix(s - 1) + col + 1};
    }
    before += cells;
  }
  throw Error("rect_decode: position not found in its tile diagonal");
}

}  // namespace pairseq
