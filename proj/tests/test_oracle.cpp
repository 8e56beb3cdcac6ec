#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include "listings.hpp"
#include "pairseq/error.hpp"
#include "pairseq/oracle.hpp"
#include "support.hpp"

using namespace pairseq;
using testsupport::u64;

namespace {

std::vector<EnumerationScheme> all_schemes() {
  std::vector<EnumerationScheme> out = {
      BasicScheme::CantorAntiDiagonal, BasicScheme::DiagBoustrophedon, BasicScheme::DiagCenterOut,
      BasicScheme::DiagEdgesIn,        BasicScheme::DiagAlternating,   BasicScheme::AngleRowwise,
      BasicScheme::OxPlow,
  };
  for (const char* spec : {"const:2x2", "const:3x2", "ramp:1+1x1+1"}) {
    for (const char* order : {"row", "col", "parity", "parity-diagonal"}) out.push_back(parse_scheme("tiling", spec, order));
  }
  return out;
}

}  // namespace

TEST_CASE("traverse examples") {
  using testsupport::render_cells;
  CHECK(render_cells(oracle::traverse(BasicScheme::CantorAntiDiagonal, 6)) == "11, 12, 21, 13, 22, 31");
  CHECK(render_cells(oracle::traverse(BasicScheme::AngleRowwise, 4)) == "11, 12, 22, 21");
  const auto ox = oracle::traverse(BasicScheme::OxPlow, 9);
  CHECK(ox[7] == GridIndex{2, 3});
  CHECK(ox[8] == GridIndex{1, 3});
}

TEST_CASE("walks reproduce the published cell listings") {
  // The same fixtures the closed forms are held to, read off the walks instead.
  const std::pair<const char*, EnumerationScheme> walks[] = {
      {"cantor order", BasicScheme::CantorAntiDiagonal},
      {"boustrophedon diagonals", BasicScheme::DiagBoustrophedon},
      {"center-out diagonals", BasicScheme::DiagCenterOut},
      {"edges-in diagonals", BasicScheme::DiagEdgesIn},
      {"alternating diagonals", BasicScheme::DiagAlternating},
      {"angle order", BasicScheme::AngleRowwise},
      {"ox-plow", BasicScheme::OxPlow},
      {"ramp tiling, row by row", parse_scheme("tiling", "ramp:1+1x1+1", "row")},
      {"3x2 tiling, row by row", parse_scheme("tiling", "const:3x2", "row")},
  };
  const auto listings = testsupport::published_listings();
  for (const auto& [name, scheme] : walks) {
    CAPTURE(name);
    const auto it = std::find_if(listings.begin(), listings.end(), [&](const auto& l) { return l.name == name; });
    REQUIRE(it != listings.end());
    const u64 count = std::count(it->expected.begin(), it->expected.end(), ',') + 1;
    CHECK(testsupport::render_cells(oracle::traverse(scheme, count)) == it->expected);
  }
}

TEST_CASE("verify_scheme passes for every scheme") {
  for (const auto& s : all_schemes()) {
    CAPTURE(scheme_name(s));
    const auto report = oracle::verify_scheme(s, 10'000);
    CHECK(report.passed());
    CHECK(report.checked == 10'000);
  }
  CHECK(oracle::verify_scheme(BasicScheme::CantorClassicZeroBased, 10'000).passed());
}

TEST_CASE("walk blocks are permutations of whole diagonals, shells and tiles") {
  for (auto s : {BasicScheme::CantorAntiDiagonal, BasicScheme::DiagBoustrophedon, BasicScheme::DiagCenterOut,
                 BasicScheme::DiagEdgesIn, BasicScheme::DiagAlternating}) {
    const auto cells = oracle::traverse(s, 60 * 61 / 2);
    std::size_t at = 0;
    for (u64 d = 1; d <= 60; ++d) {
      std::set<GridIndex> block(cells.begin() + at, cells.begin() + at + d);
      REQUIRE(block.size() == d);
      for (const auto& c : block) REQUIRE(c.i + c.j - 1 == d);
      at += d;
    }
  }
  for (auto s : {BasicScheme::AngleRowwise, BasicScheme::OxPlow}) {
    const auto cells = oracle::traverse(s, 60 * 60);
    std::size_t at = 0;
    for (u64 shell = 1; shell <= 60; ++shell) {
      std::set<GridIndex> block(cells.begin() + at, cells.begin() + at + 2 * shell - 1);
      REQUIRE(block.size() == 2 * shell - 1);
      for (const auto& c : block) REQUIRE(std::max(c.i, c.j) == shell);
      at += 2 * shell - 1;
    }
  }
  const auto spec = TilingSpec::parse("ramp:1+1x2+1");
  const RectTiling tiling{spec, InnerOrder::Parity};
  const auto cells = oracle::traverse(tiling, 5000);
  std::size_t at = 0;
  // Tile diagonal D holds tiles (r, s) with r + s = D + 2, top row first.
  for (u64 d = 0; at < 4000; ++d) {
    for (u64 r = 1; r <= d + 1; ++r) {
      const u64 s = d + 2 - r;
      const u64 size = spec.heights.at(r) * spec.lengths.at(s);
      if (at + size > cells.size()) break;
      std::set<GridIndex> block(cells.begin() + at, cells.begin() + at + size);
      REQUIRE(block.size() == size);
      for (const auto& c : block) {
        REQUIRE(spec.heights.prefix(r - 1) < c.i);
        REQUIRE(c.i <= spec.heights.prefix(r));
        REQUIRE(spec.lengths.prefix(s - 1) < c.j);
        REQUIRE(c.j <= spec.lengths.prefix(s));
      }
      at += size;
    }
  }
}

TEST_CASE("walks stream identically to one-shot traversals") {
  for (const auto& s : all_schemes()) {
    const auto cells = oracle::traverse(s, 3000);
    oracle::Walk walk(s);
    for (const auto& c : cells) REQUIRE(walk.next() == c);
  }
}

TEST_CASE("walks over a finite tile list stop with an error") {
  const auto spec = TilingSpec::parse("list:1,1,1,1,1,1,1,1x1,1,1,1,1,1,1,1");
  const RectTiling scheme{spec, InnerOrder::RowWise};
  CHECK(oracle::verify_scheme(scheme, 36).passed());
  CHECK_THROWS_AS(oracle::traverse(scheme, 100), SpecExhaustedError);
  CHECK_THROWS_AS(oracle::verify_scheme(scheme, 100), SpecExhaustedError);
}

TEST_CASE("the walks never call a closed-form position formula") {
  std::ifstream in(PAIRSEQ_SOURCE_DIR "/src/oracle.cpp");
  REQUIRE(in);
  std::stringstream text;
  text << in.rdbuf();
  std::string body = text.str();
  // verify_scheme is the one place allowed to call encode().
  const auto verify = body.find("VerificationReport verify_scheme");
  REQUIRE(verify != std::string::npos);
  body = body.substr(0, verify);
  const std::regex forbidden(R"(\b(\w+_encode\w*|\w+_decode\w*|encode|decode|decode_by_search|locate_tile|staircase_cells|cantor_z|isqrt|diagonal_of|shell_of)\s*\()");
  std::smatch m;
  CHECK_FALSE(std::regex_search(body, m, forbidden));
  CHECK(body.find("pairing.hpp") == std::string::npos);
  CHECK(body.find("arith.hpp") == std::string::npos);
}
