#include "pairseq/pairing.hpp"

#include <algorithm>

#include "pairseq/arith.hpp"
#include "pairseq/error.hpp"

namespace pairseq {

using arith::i64;
using arith::u64;
using arith::neg1_pow;
using arith::sadd;
using arith::smul;
using arith::ssub;

std::ostream& operator<<(std::ostream& os, const GridIndex& p) {
  return os << '(' << p.i << ',' << p.j << ')';
}

void require_valid(const GridIndex& p) {
  if (p.i == 0 || p.j == 0) throw DomainError("grid indices are 1-based: i, j must be >= 1");
}

namespace {

struct Signed {
  i64 i;
  i64 j;
};

Signed checked(const GridIndex& p) {
  require_valid(p);
  return {arith::to_signed(p.i), arith::to_signed(p.j)};
}

Position to_position(i64 n) { return arith::to_unsigned(n); }

/// (i+j-1)(i+j-2), the doubled cell count of the preceding diagonals.
i64 doubled_prefix(i64 i, i64 j) {
  const i64 s = sadd(i, j);
  return smul(s - 1, s - 2);
}

}  // namespace

Position cantor_encode(const GridIndex& p) {
  const auto [i, j] = checked(p);
  return to_position(sadd(doubled_prefix(i, j) / 2, i));
}

GridIndex cantor_decode(Position n) {
  const u64 t = arith::diagonal_of(n);
  const u64 i = n - arith::triangular(t);
  // (t^2 + 3t + 4) / 2 == (t+1)(t+2)/2 + 1
  const u64 j = arith::add(arith::triangular(t + 1), 1) - n;
  return {i, j};
}

std::uint64_t cantor_z(std::uint64_t x, std::uint64_t y) {
  const u64 s = arith::add(x, y);
  return arith::add(arith::mul(s, s), arith::add(arith::mul(3, x), y)) / 2;
}

std::pair<std::uint64_t, std::uint64_t> cantor_z_decode(std::uint64_t z) {
  // s = x + y is the largest s with s(s+1)/2 <= z.
  const u64 s = (arith::isqrt(arith::add(arith::mul(8, z), 1)) - 1) / 2;
  const u64 x = z - arith::triangular(s);
  return {x, s - x};
}

Position diag_boustrophedon_encode(const GridIndex& p) {
  const auto [i, j] = checked(p);
  const i64 sign = neg1_pow(p.i + p.j);
  const i64 twice = sadd(ssub(doubled_prefix(i, j), smul(sign - 1, i)), smul(sign + 1, j));
  return to_position(twice / 2);
}

Position diag_center_out_encode(const GridIndex& p) {
  const auto [i, j] = checked(p);
  const i64 base = sadd(smul(i, i + 1), smul(j - 1, sadd(2 * i, j) - 4)) / 2;
  if (i >= j) return to_position(base);
  return to_position(sadd(base, 2 * (j - i) - 1));
}

Position diag_edges_in_encode(const GridIndex& p) {
  const auto [i, j] = checked(p);
  if (i <= j) {
    return to_position(sadd(smul(i, 2 * i - 1), smul(j - i, sadd(3 * i, j) - 3) / 2));
  }
  return to_position(sadd(sadd(smul(j, 2 * j - 1), smul(i - j, sadd(3 * j, i) - 3) / 2), 1));
}

Position diag_alternating_encode(const GridIndex& p) {
  const auto [i, j] = checked(p);
  const i64 sign = neg1_pow(std::max(p.i, p.j));
  const i64 twice = ssub(sadd(doubled_prefix(i, j), smul(sign + 1, i)), smul(sign - 1, j));
  return to_position(twice / 2);
}

Position angle_encode(const GridIndex& p) {
  const auto [i, j] = checked(p);
  if (i >= j) return to_position(smul(i, i) - j + 1);
  return to_position(sadd(smul(j - 1, j - 1), i));
}

GridIndex angle_decode(Position n) {
  const u64 t = arith::shell_of(n);
  const u64 i = std::min(t, n - (t - 1) * (t - 1));
  const u64 j = std::min(t, arith::mul(t, t) - n + 1);
  return {i, j};
}

Position oxplow_encode(const GridIndex& p) {
  const auto [i, j] = checked(p);
  if (i <= j) {
    return to_position(sadd(sadd(smul(j - 1, j - 1), j), neg1_pow(p.j - 1) * (j - i)));
  }
  return to_position(ssub(sadd(smul(i - 1, i - 1), i), neg1_pow(p.i - 1) * (i - j)));
}

GridIndex oxplow_decode(Position n) {
  const u64 t = arith::shell_of(n);
  const u64 down = std::min(t, n - (t - 1) * (t - 1));  // row component of angle order
  const u64 across = std::min(t, arith::mul(t, t) - n + 1);  // column component of angle order
  const u64 odd = t % 2;
  const u64 even = (t + 1) % 2;
  return {odd * across + even * down, odd * down + even * across};
}

}  // namespace pairseq
