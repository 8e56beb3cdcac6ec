#pragma once

// Published first-terms listings, copied term for term (group separators
// dropped), and the renderings the library produces for them.

#include <functional>
#include <string>
#include <vector>

#include "pairseq/scheme.hpp"
#include "pairseq/transforms.hpp"
#include "support.hpp"

namespace testsupport {

struct Listing {
  std::string name;
  std::string expected;
  std::function<std::string()> actual;
};

inline std::string decoded_cells(const pairseq::EnumerationScheme& scheme, u64 count) {
  std::vector<pairseq::GridIndex> cells;
  for (u64 n = 1; n <= count; ++n) cells.push_back(pairseq::decode(scheme, n));
  return render_cells(cells);
}

inline std::string values(const pairseq::TransformSpec& spec, const pairseq::Sources& sources, u64 count) {
  std::vector<std::string> out;
  for (const auto& v : pairseq::generate_prefix(spec, sources, count)) out.push_back(v.str());
  return join(out);
}

inline std::string eta_values(u64 d, u64 count) {
  std::vector<std::string> out;
  for (u64 n = 1; n <= count; ++n) out.push_back(pairseq::eta(d, n).str());
  return join(out);
}

inline std::vector<Listing> published_listings() {
  using namespace pairseq;
  const auto phi = SequenceSource::euler_phi();
  const RectTiling tiles_3x2{TilingSpec::constant(3, 2), InnerOrder::RowWise};
  const RectTiling ramp{TilingSpec::parse("ramp:1+1x1+1"), InnerOrder::RowWise};

  return {
      {"cantor order", "11, 12, 21, 13, 22, 31",
       [] { return decoded_cells(BasicScheme::CantorAntiDiagonal, 6); }},
      {"reluctant", "a_{1}, a_{1}, a_{2}, a_{1}, a_{2}, a_{3}",
       [] { return render_plain(reluctant_index, 6); }},
      {"double reluctant",
       "a_{1}, a_{1}, a_{1}, a_{1}, a_{1}, a_{2}, a_{1}, a_{1}, a_{2}, a_{1}, a_{1}, a_{1}, a_{2}, a_{1}, a_{2}, "
       "a_{1}, a_{1}, a_{2}, a_{1}, a_{2}, a_{3}",
       [] { return render_plain(double_reluctant_index, 21); }},
      {"reverse reluctant", "a_{1}, a_{2}, a_{1}, a_{3}, a_{2}, a_{1}",
       [] { return render_plain(reverse_reluctant_index, 6); }},
      {"self-composition of phi", "1, 1, 1, 1, 1, 2, 1, 1, 1, 2, 1, 1, 1, 1, 4, 1, 1, 1, 1, 2, 2",
       [phi] {
         TransformSpec spec;
         spec.family = Family::SelfCompose;
         return values(spec, {phi, {}, {}}, 21);
       }},
      {"shifted columns",
       "a_{1}, a_{k+1}, a_{2}, a_{2k+1}, a_{k+2}, a_{3}, a_{3k+1}, a_{2k+2}, a_{k+3}, a_{4}",
       [] { return render_symbolic(shifted_columns_index, 10); }},
      {"max shift",
       "a_{1}, a_{k+1}, a_{k+1}, a_{2k+1}, a_{k+2}, a_{2k+1}, a_{3k+1}, a_{2k+2}, a_{2k+2}, a_{3k+1}",
       [] { return render_symbolic(max_shift_index, 10); }},
      {"segment shift",
       "a_{1}, a_{k}, a_{2}, a_{k+1}, a_{1}, a_{3}, a_{k+2}, a_{k}, a_{2}, a_{4}, a_{k+3}, a_{k+1}, a_{1}, a_{3}, "
       "a_{5}",
       [] { return render_symbolic(segment_shift_index, 15); }},
      {"eta^2", "11, 12, 21, 13, 22, 31, 14, 23, 32, 41", [] { return eta_values(2, 10); }},
      {"eta^3", "111, 112, 121, 113, 122, 211, 114, 123, 212, 131", [] { return eta_values(3, 10); }},
      {"eta^4", "1111, 1112, 1121, 1113, 1122, 1211, 1114, 1123, 1212, 1131", [] { return eta_values(4, 10); }},
      {"eta^5", "11111, 11112, 11121, 11113, 11122, 11211, 11114, 11123, 11212, 11131",
       [] { return eta_values(5, 10); }},
      {"multi-replicate, l = 3",
       "a^{1}_{1}, a^{2}_{1}, a^{1}_{2}, a^{3}_{1}, a^{2}_{2}, a^{1}_{3}, a^{1}_{1}, a^{3}_{2}, a^{2}_{3}, "
       "a^{1}_{4}, a^{2}_{1}, a^{1}_{2}, a^{3}_{3}, a^{2}_{4}, a^{1}_{5}",
       [] {
         return render_multi([](u64 n) { const auto x = multi_replicate_index(3, n); return std::pair{x.m, x.r}; },
                             15);
       }},
      {"braid, l = 3",
       "a^{1}_{1}, a^{2}_{1}, a^{2}_{2}, a^{3}_{1}, a^{3}_{2}, a^{3}_{3}, a^{1}_{1}, a^{1}_{2}, a^{1}_{3}, "
       "a^{1}_{4}, a^{2}_{1}, a^{2}_{2}, a^{2}_{3}, a^{2}_{4}, a^{2}_{5}",
       [] { return render_multi([](u64 n) { const auto x = braid_index(3, n); return std::pair{x.m, x.r}; }, 15); }},
      {"segment braid, l = 3",
       "a^{1}_{1}, a^{3}_{1}, a^{1}_{2}, a^{3}_{2}, a^{2}_{1}, a^{1}_{3}, a^{3}_{3}, a^{3}_{1}, a^{2}_{2}, "
       "a^{1}_{4}, a^{3}_{4}, a^{3}_{2}, a^{1}_{1}, a^{2}_{3}, a^{1}_{5}, a^{3}_{5}, a^{3}_{3}, a^{3}_{1}, "
       "a^{1}_{2}, a^{2}_{4}, a^{1}_{6}",
       [] {
         return render_multi([](u64 n) { const auto x = segment_braid_index(3, n); return std::pair{x.m, x.r}; },
                             21);
       }},
      {"boustrophedon diagonals", "11, 12, 21, 31, 22, 13, 14, 23, 32, 41, 51, 42, 33, 24, 15, 16, 25, 34, 43, 52, 61",
       [] { return decoded_cells(BasicScheme::DiagBoustrophedon, 21); }},
      {"center-out diagonals", "11, 12, 21, 22, 13, 31, 23, 32, 14, 41, 33, 24, 42, 15, 51, 34, 43, 25, 52, 16, 61",
       [] { return decoded_cells(BasicScheme::DiagCenterOut, 21); }},
      {"edges-in diagonals", "11, 12, 21, 13, 31, 22, 14, 41, 23, 32, 15, 51, 24, 42, 33, 16, 61, 25, 52, 34, 43",
       [] { return decoded_cells(BasicScheme::DiagEdgesIn, 21); }},
      {"alternating diagonals", "11, 12, 21, 31, 22, 13, 14, 32, 23, 41, 51, 24, 33, 42, 15, 16, 52, 34, 43, 25, 61",
       [] { return decoded_cells(BasicScheme::DiagAlternating, 21); }},
      {"angle order", "11, 12, 22, 21, 13, 23, 33, 32, 31, 14, 24, 34, 44, 43, 42, 41",
       [] { return decoded_cells(BasicScheme::AngleRowwise, 16); }},
      {"angle order of shifted columns",
       "a_{1}, a_{k+1}, a_{k+2}, a_{2}, a_{2k+1}, a_{2k+2}, a_{2k+3}, a_{k+3}, a_{3}, a_{3k+1}, a_{3k+2}, "
       "a_{3k+3}, a_{3k+4}, a_{2k+4}, a_{k+4}, a_{4}",
       [] { return render_symbolic(angle_shifted_index, 16); }},
      {"angle order of max shift",
       "a_{1}, a_{k+1}, a_{k+2}, a_{k+1}, a_{2k+1}, a_{2k+2}, a_{2k+3}, a_{2k+2}, a_{2k+1}, a_{3k+1}, a_{3k+2}, "
       "a_{3k+3}, a_{3k+4}, a_{3k+3}, a_{3k+2}, a_{3k+1}",
       [] { return render_symbolic(angle_max_shift_index, 16); }},
      {"angle order of segment shift",
       "a_{1}, a_{k}, a_{1}, a_{2}, a_{k+1}, a_{k}, a_{1}, a_{2}, a_{3}, a_{k+2}, a_{k+1}, a_{k}, a_{1}, a_{2}, "
       "a_{3}, a_{4}",
       [] { return render_symbolic(angle_segment_shift_index, 16); }},
      {"ox-plow",
       "11, 12, 22, 21, 31, 32, 33, 23, 13, 14, 24, 34, 44, 43, 42, 41, 51, 52, 53, 54, 55, 45, 35, 25, 15",
       [] { return decoded_cells(BasicScheme::OxPlow, 25); }},
      {"ramp tiling, row by row", "11, 12, 13, 21, 31, 14, 15, 16, 22, 23, 32, 33, 41, 51, 61",
       [ramp] { return decoded_cells(ramp, 15); }},
      {"3x2 tiling, row by row", "11, 12, 13, 21, 22, 23, 14, 15, 16, 24, 25, 26, 31, 32, 33, 41, 42, 43",
       [tiles_3x2] { return decoded_cells(tiles_3x2, 18); }},
      {"3x2 tiling read center-out", "a_{1}, a_{2}, a_{4}, a_{5}, a_{3}, a_{13}",
       [tiles_3x2] {
         return render_plain([&](u64 n) { return superpose_index(tiles_3x2, BasicScheme::DiagCenterOut, n); }, 6);
       }},
  };
}

}  // namespace testsupport
