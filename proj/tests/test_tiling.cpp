#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "pairseq/error.hpp"
#include "pairseq/oracle.hpp"
#include "pairseq/pairing.hpp"
#include "pairseq/tiling.hpp"
#include "support.hpp"

using namespace pairseq;
using testsupport::u64;

namespace {

const TilingSpec kRamp = TilingSpec::parse("ramp:1+1x1+1");

/// 1-based walk position of a cell, read off the oracle.
u64 walk_position(const RectTiling& scheme, const GridIndex& cell, u64 limit = 2000) {
  const auto cells = oracle::traverse(scheme, limit);
  const auto it = std::find(cells.begin(), cells.end(), cell);
  REQUIRE(it != cells.end());
  return static_cast<u64>(it - cells.begin()) + 1;
}

std::vector<RectTiling> all_orders(const TilingSpec& spec) {
  return {{spec, InnerOrder::RowWise, ParitySource::TileNumber},
          {spec, InnerOrder::ColumnWise, ParitySource::TileNumber},
          {spec, InnerOrder::Parity, ParitySource::TileNumber},
          {spec, InnerOrder::Parity, ParitySource::TileDiagonal}};
}

}  // namespace

TEST_CASE("locate_tile examples") {
  CHECK(locate_tile({3, 1}, TilingSpec::constant(2, 2)) == TileCoords{1, 0});
  CHECK(locate_tile({1, 1}, TilingSpec::constant(5, 7)) == TileCoords{0, 0});
  CHECK(locate_tile({1, 1}, kRamp) == TileCoords{0, 0});
  CHECK(locate_tile({2, 4}, kRamp) == TileCoords{1, 2});
}

TEST_CASE("locate_tile satisfies the prefix-sum bracket") {
  const TilingSpec specs[] = {kRamp, TilingSpec::constant(3, 2), TilingSpec::parse("list:2,1,3,1,2,5,4x1,3,1,2,2,4,1")};
  for (const auto& spec : specs) {
    for (u64 i = 1; i <= 12; ++i) {
      for (u64 j = 1; j <= 12; ++j) {
        const auto [R, S] = locate_tile({i, j}, spec);
        REQUIRE(spec.heights.prefix(R) < i);
        REQUIRE(i <= spec.heights.prefix(R + 1));
        REQUIRE(spec.lengths.prefix(S) < j);
        REQUIRE(j <= spec.lengths.prefix(S + 1));
      }
    }
  }
}

TEST_CASE("row-wise examples") {
  const auto spec = TilingSpec::constant(3, 2);
  CHECK(rect_encode_rowwise({1, 4}, spec) == 7);
  CHECK(rect_encode_rowwise({2, 3}, spec) == 6);
  CHECK(rect_encode_rowwise({2, 1}, kRamp) == 4);
}

TEST_CASE("column-wise examples") {
  CHECK(rect_encode_colwise({2, 1}, TilingSpec::constant(1, 1)) == 3);
  const RectTiling scheme{TilingSpec::constant(3, 2), InnerOrder::ColumnWise};
  CHECK(rect_encode_colwise({2, 1}, scheme.spec) == walk_position(scheme, {2, 1}));
  CHECK(rect_encode_colwise({2, 1}, scheme.spec) == 2);
  CHECK(rect_encode_colwise({1, 4}, scheme.spec) == walk_position(scheme, {1, 4}));
  CHECK(rect_encode_colwise({1, 4}, scheme.spec) == 7);
}

TEST_CASE("parity examples") {
  const auto unit = TilingSpec::constant(1, 1);
  for (u64 i = 1; i <= 20; ++i) {
    for (u64 j = 1; j <= 20; ++j) {
      CHECK(rect_encode_parity({i, j}, unit, ParitySource::TileNumber) == cantor_encode({i, j}));
      CHECK(rect_encode_parity({i, j}, unit, ParitySource::TileDiagonal) == cantor_encode({i, j}));
    }
  }
  const RectTiling scheme{TilingSpec::constant(2, 2), InnerOrder::Parity, ParitySource::TileDiagonal};
  CHECK(rect_encode_parity({1, 1}, scheme.spec, ParitySource::TileDiagonal) == 1);
  // Tile (R, S) = (0, 1) lies on tile diagonal 1, which is numbered column by column.
  CHECK(rect_encode_parity({2, 3}, scheme.spec, ParitySource::TileDiagonal) == walk_position(scheme, {2, 3}));
  CHECK(rect_encode_parity({2, 3}, scheme.spec, ParitySource::TileDiagonal) == 6);
}

TEST_CASE("parity by tile number follows the Cantor number of the tile") {
  const auto spec = TilingSpec::constant(2, 2);
  // Tile numbers 0, 1, 2, 3, 4, 5 sit at (R,S) = (0,0), (0,1), (1,0), (0,2), (1,1), (2,0).
  CHECK(tile_is_rowwise({0, 0}, InnerOrder::Parity, ParitySource::TileNumber));
  CHECK_FALSE(tile_is_rowwise({0, 1}, InnerOrder::Parity, ParitySource::TileNumber));
  CHECK(tile_is_rowwise({1, 0}, InnerOrder::Parity, ParitySource::TileNumber));
  CHECK_FALSE(tile_is_rowwise({0, 2}, InnerOrder::Parity, ParitySource::TileNumber));
  CHECK(tile_is_rowwise({1, 1}, InnerOrder::Parity, ParitySource::TileNumber));
  CHECK_FALSE(tile_is_rowwise({1, 0}, InnerOrder::Parity, ParitySource::TileDiagonal));
  // Tile (1, 0) holds 9..12 row by row.
  CHECK(rect_encode_parity({3, 1}, spec, ParitySource::TileNumber) == 9);
  CHECK(rect_encode_parity({3, 2}, spec, ParitySource::TileNumber) == 10);
  CHECK(rect_encode_parity({4, 1}, spec, ParitySource::TileNumber) == 11);
}

TEST_CASE("constant fast path examples") {
  CHECK(rect_encode_const({1, 4}, 3, 2) == 7);
  for (u64 i = 1; i < 50; ++i) {
    for (u64 j = 1; i + j <= 50; ++j) REQUIRE(rect_encode_const({i, j}, 1, 1) == cantor_encode({i, j}));
  }
  const RectTiling scheme{TilingSpec::constant(2, 2), InnerOrder::RowWise};
  CHECK(rect_encode_const({3, 3}, 2, 2) == walk_position(scheme, {3, 3}));
  CHECK(rect_encode_const({3, 3}, 2, 2) == 17);
}

TEST_CASE("rect_decode examples") {
  CHECK(rect_decode(TilingSpec::constant(3, 2), InnerOrder::RowWise, 7) == GridIndex{1, 4});
  for (const auto& s : all_orders(kRamp)) CHECK(rect_decode(s.spec, s.order, 1, s.parity) == GridIndex{1, 1});
  CHECK(rect_decode(kRamp, InnerOrder::RowWise, 4) == GridIndex{2, 1});
}

TEST_CASE("unit tiles reduce to the Cantor order") {
  const auto unit = TilingSpec::constant(1, 1);
  for (const auto& s : all_orders(unit)) {
    for (u64 i = 1; i < 200; ++i) {
      for (u64 j = 1; i + j <= 200; ++j) REQUIRE(rect_encode({i, j}, s.spec, s.order, s.parity) == cantor_encode({i, j}));
    }
  }
}

TEST_CASE("constant fast path agrees with the general row-wise formula") {
  for (auto [l, h] : {std::pair<u64, u64>{1, 1}, {2, 2}, {3, 2}, {2, 3}, {5, 1}, {1, 4}, {7, 3}}) {
    const RectTiling scheme{TilingSpec::constant(l, h), InnerOrder::RowWise};
    for (const auto& p : oracle::traverse(scheme, 10'000)) {
      REQUIRE(rect_encode_const(p, l, h) == rect_encode_rowwise(p, scheme.spec));
    }
  }
}

TEST_CASE("each tile occupies one contiguous block") {
  const TilingSpec specs[] = {TilingSpec::constant(3, 2), kRamp, TilingSpec::parse("list:2,1,3,1,2,5,4,1x1,3,1,2,2,4,1,3")};
  for (const auto& spec : specs) {
    for (const auto& scheme : all_orders(spec)) {
      CAPTURE(spec.to_string());
      std::map<std::pair<u64, u64>, std::vector<u64>> by_tile;
      for (u64 i = 1; i <= spec.heights.prefix(5); ++i) {
        for (u64 j = 1; j <= spec.lengths.prefix(5); ++j) {
          const auto [R, S] = locate_tile({i, j}, spec);
          if (R + S > 5) continue;  // numbering needs l and h up to index R+S+2
          by_tile[{R, S}].push_back(rect_encode({i, j}, spec, scheme.order, scheme.parity));
        }
      }
      for (auto& [tile, ns] : by_tile) {
        std::sort(ns.begin(), ns.end());
        REQUIRE(ns.size() == spec.lengths.at(tile.second + 1) * spec.heights.at(tile.first + 1));
        REQUIRE(ns.back() - ns.front() + 1 == ns.size());
      }
    }
  }
}

TEST_CASE("bijectivity and roundtrip") {
  const TilingSpec specs[] = {TilingSpec::constant(2, 2), TilingSpec::constant(3, 2), kRamp};
  for (const auto& spec : specs) {
    for (const auto& scheme : all_orders(spec)) {
      CAPTURE(scheme_name(scheme));
      std::set<u64> seen;
      for (const auto& p : oracle::traverse(scheme, 10'000)) seen.insert(encode(scheme, p));
      REQUIRE(seen.size() == 10'000);
      REQUIRE(*seen.rbegin() == 10'000);
      for (u64 n = 1; n <= 10'000; ++n) {
        const GridIndex p = decode(scheme, n);
        REQUIRE(encode(scheme, p) == n);
        REQUIRE(decode_by_search(scheme, n) == p);
      }
    }
  }
}

TEST_CASE("explicit lists run out") {
  const auto spec = TilingSpec::parse("list:1,2x2,1");
  CHECK(rect_encode_rowwise({2, 3}, spec) >= 1);
  CHECK_THROWS_AS(rect_encode_rowwise({1, 4}, spec), SpecExhaustedError);
  CHECK_THROWS_AS(locate_tile({4, 1}, spec), SpecExhaustedError);
  CHECK_THROWS_AS(rect_decode(spec, InnerOrder::RowWise, 1000), SpecExhaustedError);
}

TEST_CASE("tiling spec text form") {
  for (const char* text : {"const:3x2", "list:1,2,3x4,5", "ramp:1+1x2+0", "ramp:2+3x1+1"}) {
    const auto spec = TilingSpec::parse(text);
    CHECK(TilingSpec::parse(spec.to_string()) == spec);
  }
  CHECK(TilingSpec::parse("const:3x2") == TilingSpec::constant(3, 2));
  CHECK(TilingSpec::parse("const:3x2").lengths.at(5) == 3);
  CHECK(TilingSpec::parse("ramp:1+1x1+1").heights.at(4) == 4);
  for (const char* bad : {"", "const:0x1", "const:3", "list:x1", "ramp:0+1x1+1", "cube:1x1", "const:ax2", "list:1,,2x1"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(TilingSpec::parse(bad), ParseError);
  }
}

TEST_CASE("large coordinates overflow cleanly") {
  CHECK_THROWS_AS(rect_encode_const({u64{1} << 40, u64{1} << 40}, 3, 2), OverflowError);
  CHECK_THROWS_AS(rect_encode_rowwise({u64{1} << 40, u64{1} << 40}, kRamp), OverflowError);
}
