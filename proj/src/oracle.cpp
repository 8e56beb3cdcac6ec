#include "pairseq/oracle.hpp"

#include <algorithm>

#include "pairseq/error.hpp"

namespace pairseq::oracle {

using u64 = std::uint64_t;

Walk::Walk(EnumerationScheme scheme) : scheme_(std::move(scheme)) {}

GridIndex Walk::next() {
  while (cursor_ == block_.size()) fill_block();
  return block_[cursor_++];
}

void Walk::fill_block() {
  block_.clear();
  cursor_ = 0;
  ++block_no_;
  if (std::holds_alternative<RectTiling>(scheme_)) {
    fill_tile_diagonal(block_no_ - 1);
    return;
  }
  switch (std::get<BasicScheme>(scheme_)) {
    case BasicScheme::CantorClassicZeroBased:
      fill_zero_based_diagonal(block_no_ - 1);
      break;
    case BasicScheme::AngleRowwise:
    case BasicScheme::OxPlow:
      fill_shell(block_no_);
      break;
    default:
      fill_diagonal(block_no_);
  }
}

// Diagonal d holds the d cells with i + j = d + 1.
void Walk::fill_diagonal(u64 d) {
  const auto cell = [d](u64 row) { return GridIndex{row, d + 1 - row}; };
  switch (std::get<BasicScheme>(scheme_)) {
    case BasicScheme::CantorAntiDiagonal:
      for (u64 r = 1; r <= d; ++r) block_.push_back(cell(r));
      break;

    case BasicScheme::DiagBoustrophedon:
      // top-right to bottom-left on even diagonals, back up on odd ones
      if (d % 2 == 0) {
        for (u64 r = 1; r <= d; ++r) block_.push_back(cell(r));
      } else {
        for (u64 r = d; r >= 1; --r) block_.push_back(cell(r));
      }
      break;

    case BasicScheme::DiagCenterOut: {
      // Centre cell (odd d) or the two centre cells (even d), then the
      // symmetric pair one step further out, upper cell of a pair first.
      u64 upper = (d + 1) / 2;
      u64 lower = upper;
      if (d % 2 == 1) {
        block_.push_back(cell(upper));
        --upper;
        ++lower;
      } else {
        lower = upper + 1;
      }
      for (; upper >= 1; --upper, ++lower) {
        block_.push_back(cell(upper));
        block_.push_back(cell(lower));
      }
      break;
    }

    case BasicScheme::DiagEdgesIn: {
      // Both edge cells, then the pair one step in; the centre cell last.
      u64 upper = 1;
      u64 lower = d;
      for (; upper < lower; ++upper, --lower) {
        block_.push_back(cell(upper));
        block_.push_back(cell(lower));
      }
      if (upper == lower) block_.push_back(cell(upper));
      break;
    }

    case BasicScheme::DiagAlternating: {
      // Two walkers cover the diagonal: one from the top-right edge (rows
      // 1, 2, ...) and one from the bottom-left edge (rows d, d-1, ...).
      // Slot p takes row p from the first or row d+1-p from the second.
      // Odd diagonals start with the bottom-left walker and alternate;
      // even diagonals start with the top-right walker, alternate up to the
      // midpoint, and mirror the pattern on the far half so the last slot
      // is again the bottom-left edge.
      for (u64 p = 1; p <= d; ++p) {
        bool from_top;
        if (d % 2 == 1) {
          from_top = p % 2 == 0;
        } else if (2 * p <= d) {
          from_top = p % 2 == 1;
        } else {
          from_top = p % 2 == 0;
        }
        block_.push_back(cell(from_top ? p : d + 1 - p));
      }
      break;
    }

    default:
      throw DomainError("not a diagonal scheme");
  }
}

// Zero-based diagonal x + y = s, x ascending.
void Walk::fill_zero_based_diagonal(u64 s) {
  for (u64 x = 0; x <= s; ++x) block_.push_back({x, s - x});
}

// Shell s: down the right side from (1,s) to (s,s), then left along the
// bottom to (s,1). Ox-plowing reverses every odd shell.
void Walk::fill_shell(u64 s) {
  for (u64 r = 1; r <= s; ++r) block_.push_back({r, s});
  for (u64 c = s - 1; c >= 1; --c) block_.push_back({s, c});
  if (std::get<BasicScheme>(scheme_) == BasicScheme::OxPlow && s % 2 == 1) {
    std::reverse(block_.begin(), block_.end());
  }
}

// Tile diagonal d: tiles (row r, column d+2-r) for r = 1 .. d+1.
void Walk::fill_tile_diagonal(u64 d) {
  const auto& tiling = std::get<RectTiling>(scheme_);
  const TileRule& lengths = tiling.spec.lengths;
  const TileRule& heights = tiling.spec.heights;
  u64 row0 = 0;  // rows covered by tile rows above r
  for (u64 r = 1; r <= d + 1; ++r) {
    const u64 s = d + 2 - r;
    u64 col0 = 0;
    for (u64 c = 1; c < s; ++c) col0 += lengths.at(c);
    const u64 height = heights.at(r);
    const u64 length = lengths.at(s);

    bool rowwise = tiling.order == InnerOrder::RowWise;
    if (tiling.order == InnerOrder::Parity) {
      const u64 t = tiling.parity == ParitySource::TileNumber ? tiles_seen_ : d;
      rowwise = t % 2 == 0;
    }
    if (rowwise) {
      for (u64 a = 1; a <= height; ++a)
        for (u64 b = 1; b <= length; ++b) block_.push_back({row0 + a, col0 + b});
    } else {
      for (u64 b = 1; b <= length; ++b)
        for (u64 a = 1; a <= height; ++a) block_.push_back({row0 + a, col0 + b});
    }
    ++tiles_seen_;
    row0 += height;
  }
}

std::vector<GridIndex> traverse(const EnumerationScheme& scheme, std::uint64_t count) {
  if (count == 0) throw DomainError("traversal length must be >= 1");
  Walk walk(scheme);
  std::vector<GridIndex> cells;
  cells.reserve(count);
  for (u64 k = 0; k < count; ++k) cells.push_back(walk.next());
  return cells;
}

VerificationReport verify_scheme(const EnumerationScheme& scheme, std::uint64_t count) {
  if (count == 0) throw DomainError("verification length must be >= 1");
  VerificationReport report{scheme_name(scheme), 0, std::nullopt};
  const u64 base = is_zero_based(scheme) ? 0 : 1;
  Walk walk(scheme);
  for (u64 k = 0; k < count; ++k) {
    const GridIndex cell = walk.next();
    const Position expected = k + base;
    std::string actual;
    try {
      const Position got = encode(scheme, cell);
      if (got != expected) actual = std::to_string(got);
    } catch (const Error& e) {
      actual = std::string("error: ") + e.what();
    }
    if (!actual.empty()) {
      report.mismatch = Mismatch{expected, cell, actual};
      return report;
    }
    report.checked = k + 1;
  }
  return report;
}

}  // namespace pairseq::oracle
