#pragma once

// Reference helpers shared by the test binaries. Nothing here calls a
// closed-form encode or index formula from the library.

#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "pairseq/oracle.hpp"
#include "pairseq/scheme.hpp"

namespace testsupport {

using u64 = std::uint64_t;

/// floor(sqrt(n)) by counting up.
inline u64 loop_isqrt(u64 n) {
  u64 r = 0;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

/// Cell list in the compact "ij" notation used for small grids: 11, 12, 21.
inline std::string render_cells(const std::vector<pairseq::GridIndex>& cells) {
  std::string out;
  for (const auto& c : cells) {
    if (!out.empty()) out += ", ";
    out += std::to_string(c.i) + std::to_string(c.j);
  }
  return out;
}

/// a_{ck+d} in the usual notation (a_{1}, a_{k}, a_{2k+1}).
inline std::string render_linear(u64 c, u64 d) {
  std::string idx;
  if (c == 0) {
    idx = std::to_string(d);
  } else {
    idx = (c == 1 ? std::string() : std::to_string(c)) + "k";
    if (d != 0) idx += "+" + std::to_string(d);
  }
  return "a_{" + idx + "}";
}

/// Renders index sequences that are affine in k by sampling two k values.
inline std::string render_symbolic(const std::function<u64(u64 k, u64 n)>& index, u64 count) {
  std::string out;
  for (u64 n = 1; n <= count; ++n) {
    const u64 lo = index(20, n);
    const u64 hi = index(21, n);
    const u64 c = hi - lo;
    const u64 d = lo - 20 * c;
    if (!out.empty()) out += ", ";
    out += render_linear(c, d);
  }
  return out;
}

inline std::string render_plain(const std::function<u64(u64 n)>& index, u64 count) {
  std::string out;
  for (u64 n = 1; n <= count; ++n) {
    if (!out.empty()) out += ", ";
    out += "a_{" + std::to_string(index(n)) + "}";
  }
  return out;
}

/// a^{r}_{m} terms for multi-source families.
inline std::string render_multi(const std::function<std::pair<u64, u64>(u64 n)>& index, u64 count) {
  std::string out;
  for (u64 n = 1; n <= count; ++n) {
    const auto [m, r] = index(n);
    if (!out.empty()) out += ", ";
    out += "a^{" + std::to_string(r) + "}_{" + std::to_string(m) + "}";
  }
  return out;
}

template <class T>
std::string join(const std::vector<T>& values) {
  std::ostringstream out;
  for (std::size_t k = 0; k < values.size(); ++k) out << (k ? ", " : "") << values[k];
  return out.str();
}

/// Value at position n of an array filled cell by cell with `cell_value`
/// and read in the walk order of `scheme`.
template <class V>
std::vector<V> read_array(const pairseq::EnumerationScheme& scheme, u64 count,
                          const std::function<V(u64 i, u64 j)>& cell_value) {
  std::vector<V> out;
  out.reserve(count);
  for (const auto& c : pairseq::oracle::traverse(scheme, count)) out.push_back(cell_value(c.i, c.j));
  return out;
}

// Array definitions, taken from the verbal descriptions of each family.

inline u64 shifted_columns_cell(u64 k, u64 i, u64 j) { return i + k * j - k; }

inline u64 max_shift_cell(u64 k, u64 i, u64 j) {
  const u64 a = k * i + j - k;
  const u64 b = i + k * j - k;
  return a > b ? a : b;
}

inline u64 segment_shift_cell(u64 k, u64 i, u64 j) { return i >= j ? i - j + 1 : j - i + k - 1; }

/// (m, r): element m of sequence r.
inline std::pair<u64, u64> multi_replicate_cell(u64 l, u64 i, u64 j) { return {i, 1 + (j - 1) % l}; }

inline std::pair<u64, u64> braid_cell(u64 l, u64 i, u64 j) { return {i, 1 + (i + j - 2) % l}; }

inline std::pair<u64, u64> segment_braid_cell(u64 l, u64 i, u64 j) {
  if (i >= j) return {i - j + 1, 1 + (j - 1) % (l - 1)};
  return {j - i, l};
}

}  // namespace testsupport
