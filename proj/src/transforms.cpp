#include "pairseq/transforms.hpp"

#include <array>
#include <cstdlib>

#include "pairseq/arith.hpp"
#include "pairseq/error.hpp"

namespace pairseq {

using arith::i64;
using arith::u64;
using arith::sadd;
using arith::smul;
using arith::ssub;

namespace {

/// Anti-diagonal quantities shared by the Cantor-order index formulas.
struct Diag {
  i64 n;
  i64 t;
  i64 tri;   // t(t+1)/2
  i64 next;  // (t^2 + 3t + 4)/2
};

Diag diag(Position n) {
  const u64 t = arith::diagonal_of(n);
  const i64 tri = arith::to_signed(arith::triangular(t));
  return {arith::to_signed(n), arith::to_signed(t), tri, sadd(sadd(tri, arith::to_signed(t)), 2)};
}

u64 positive(i64 m) {
  if (m < 1) throw Error("index formula produced a non-positive index " + std::to_string(m));
  return static_cast<u64>(m);
}

void require_k(u64 k, u64 min, const char* family) {
  if (k < min) throw DomainError(std::string(family) + " needs k >= " + std::to_string(min));
}

/// |(t+1)^2 - 2n| + k floor((t^2 + 3t + 2 - 2n)/(t+1))
i64 segment_index(i64 k, const Diag& g) {
  const i64 sq = smul(g.t + 1, g.t + 1);
  const i64 head = std::llabs(ssub(sq, smul(2, g.n)));
  const i64 num = ssub(sadd(smul(g.t, g.t), 3 * g.t + 2), smul(2, g.n));
  return sadd(head, smul(k, arith::floor_div(num, g.t + 1)));
}

BigInt apply_chain(const SequenceSource& a, BigInt x, u64 times, bool capped) {
  const u64 limit = a.budget().max_iterations;
  for (u64 step = 0; step < times; ++step) {
    if (step == limit) {
      throw BudgetExceededError("composition chain needs more than " + std::to_string(limit) + " applications");
    }
    if (x < 1) throw DomainError("composition reached non-positive value " + x.str());
    BigInt next = a.at(x);
    if (capped && next == x) break;  // fixed point: further applications change nothing
    x = std::move(next);
  }
  if (x < 1) throw DomainError("composition reached non-positive value " + x.str());
  return x;
}

const SequenceSource& pick(std::span<const SequenceSource> sources, const MultiIndex& idx) {
  return sources[idx.r - 1];
}

void require_family(std::span<const SequenceSource> sources) {
  if (sources.size() < 2) throw DomainError("multi-source transforms need l >= 2 sources");
}

}  // namespace

// --- single sequence -----------------------------------------------------------

std::uint64_t reluctant_index(Position n) {
  const Diag g = diag(n);
  return positive(g.n - g.tri);
}

std::uint64_t reverse_reluctant_index(Position n) {
  const Diag g = diag(n);
  return positive(g.next - g.n);
}

std::uint64_t double_reluctant_index(Position n) { return reluctant_index(reluctant_index(n)); }

BigInt reluctant(const SequenceSource& alpha, Position n) { return alpha.at(reluctant_index(n)); }
BigInt reverse_reluctant(const SequenceSource& alpha, Position n) { return alpha.at(reverse_reluctant_index(n)); }
BigInt double_reluctant(const SequenceSource& alpha, Position n) { return alpha.at(double_reluctant_index(n)); }

BigInt self_compose_cell(const SequenceSource& alpha, const GridIndex& cell, Composition convention) {
  require_valid(cell);
  u64 times = cell.j;
  if (convention == Composition::Doubling) {
    times = cell.j - 1 >= 64 ? std::numeric_limits<u64>::max() : u64{1} << (cell.j - 1);
  }
  return apply_chain(alpha, BigInt(cell.i), times, true);
}

BigInt self_compose(const SequenceSource& alpha, Position n, Composition convention) {
  return self_compose_cell(alpha, cantor_decode(n), convention);
}

std::uint64_t shifted_columns_index(std::uint64_t k, Position n) {
  const Diag g = diag(n);
  const i64 K = arith::to_signed(k);
  // k(t+1) + (k-1)(t(t+1)/2 - n)
  return positive(sadd(smul(K, g.t + 1), smul(K - 1, g.tri - g.n)));
}

std::uint64_t max_shift_index(std::uint64_t k, Position n) {
  require_k(k, 1, "max-shift");
  const Diag g = diag(n);
  const i64 K = arith::to_signed(k);
  return positive(sadd(smul(K, g.t + 1), smul(K - 1, std::max(g.tri - g.n, g.n - g.next))));
}

std::uint64_t segment_shift_index(std::uint64_t k, Position n) {
  require_k(k, 1, "segment-shift");
  return positive(segment_index(arith::to_signed(k), diag(n)));
}

BigInt shifted_columns(const SequenceSource& alpha, std::uint64_t k, Position n) {
  return alpha.at(shifted_columns_index(k, n));
}
BigInt max_shift(const SequenceSource& alpha, std::uint64_t k, Position n) { return alpha.at(max_shift_index(k, n)); }
BigInt segment_shift(const SequenceSource& alpha, std::uint64_t k, Position n) {
  return alpha.at(segment_shift_index(k, n));
}

// --- angle order ---------------------------------------------------------------

std::uint64_t angle_shifted_index(std::uint64_t k, Position n) {
  if (n == 0) throw DomainError("position must be >= 1");
  const i64 s = arith::to_signed(arith::isqrt(n - 1));
  const i64 t = ssub(ssub(arith::to_signed(n), smul(s, s)), s + 1);
  const i64 K = arith::to_signed(k);
  // (k+1)(s - (|t|+t)/2) + t + 1
  return positive(sadd(smul(K + 1, s - (std::llabs(t) + t) / 2), t + 1));
}

std::uint64_t angle_max_shift_index(std::uint64_t k, Position n) {
  require_k(k, 1, "angle-max-shift");
  if (n == 0) throw DomainError("position must be >= 1");
  const i64 s = arith::to_signed(arith::isqrt(n - 1));
  const i64 off = ssub(ssub(arith::to_signed(n), smul(s, s)), s + 1);
  // (k+1)s + 1 - |n - s^2 - s - 1|
  return positive(smul(arith::to_signed(k) + 1, s) + 1 - std::llabs(off));
}

namespace {

i64 angle_segment_formula(u64 k, Position n, i64 t) {
  const i64 N = arith::to_signed(n);
  const i64 v = (N - 1) / t - t + 1;
  // kv + (2v-1)(t^2 - n) + t
  return sadd(sadd(smul(arith::to_signed(k), v), smul(2 * v - 1, ssub(smul(t, t), N))), t);
}

}  // namespace

std::uint64_t angle_segment_shift_index(std::uint64_t k, Position n) {
  require_k(k, 1, "angle-segment-shift");
  if (n == 0) throw DomainError("position must be >= 1");
  // floor(sqrt(n) + 1/2) == floor((isqrt(4n) + 1) / 2)
  const i64 t = arith::to_signed((arith::isqrt(arith::mul(4, n)) + 1) / 2);
  return positive(angle_segment_formula(k, n, t));
}

std::int64_t angle_segment_shift_index_uncorrected(std::uint64_t k, Position n) {
  require_k(k, 1, "angle-segment-shift");
  if (n == 0) throw DomainError("position must be >= 1");
  const i64 t = arith::to_signed((arith::isqrt(arith::mul(4, n)) + 1) / 2) + 1;
  return angle_segment_formula(k, n, t);
}

BigInt angle_shifted(const SequenceSource& alpha, std::uint64_t k, Position n) {
  return alpha.at(angle_shifted_index(k, n));
}
BigInt angle_max_shift(const SequenceSource& alpha, std::uint64_t k, Position n) {
  return alpha.at(angle_max_shift_index(k, n));
}
BigInt angle_segment_shift(const SequenceSource& alpha, std::uint64_t k, Position n) {
  return alpha.at(angle_segment_shift_index(k, n));
}

// --- pairs ---------------------------------------------------------------------

DecodedPair pair_coordinates(Position n) { return {reluctant_index(n), reverse_reluctant_index(n)}; }

BigInt concat_numbers(const BigInt& a, const BigInt& b) {
  if (a < 1 || b < 1) throw DomainError("concatenation is defined for positive integers");
  return a * boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(decimal_digits(b))) + b;
}

BigInt pair_transform(const SequenceSource& alpha, const SequenceSource& beta, Combiner combiner, Position n) {
  const auto [m1, m2] = pair_coordinates(n);
  switch (combiner.kind) {
    case Combiner::Kind::Product:
      return alpha.at(m1) * beta.at(m2);
    case Combiner::Kind::PowerSum: {
      const auto k = static_cast<unsigned>(combiner.k);
      return boost::multiprecision::pow(alpha.at(m1), k) + boost::multiprecision::pow(beta.at(m2), k);
    }
    case Combiner::Kind::Concat:
      return concat_numbers(alpha.at(m1), beta.at(m2));
    case Combiner::Kind::Iterate:
      return apply_chain(beta, alpha.at(m1), m2, false);
  }
  throw DomainError("unknown combiner");
}

BigInt eta(std::uint64_t d, Position n) {
  if (d == 0) throw DomainError("eta depth must be >= 1");
  if (n == 0) throw DomainError("position must be >= 1");
  if (d == 1) return BigInt(n);
  return pair_transform(eta_source(d - 1), SequenceSource::identity(), {Combiner::Kind::Concat}, n);
}

SequenceSource eta_source(std::uint64_t d) {
  if (d == 0) throw DomainError("eta depth must be >= 1");
  if (d == 1) return SequenceSource::identity();
  return SequenceSource::custom("eta" + std::to_string(d), [d](u64 m) { return eta(d, m); });
}

// --- several sequences ---------------------------------------------------------

MultiIndex multi_replicate_index(std::uint64_t l, Position n) {
  if (l < 2) throw DomainError("multi-replicate needs l >= 2");
  const Diag g = diag(n);
  const i64 r = 1 + arith::mod(g.next - g.n - 1, arith::to_signed(l));
  return {positive(g.n - g.tri), positive(r)};
}

MultiIndex braid_index(std::uint64_t l, Position n) {
  if (l < 2) throw DomainError("braid needs l >= 2");
  const Diag g = diag(n);
  return {positive(g.n - g.tri), positive(1 + arith::mod(g.t, arith::to_signed(l)))};
}

MultiIndex segment_braid_index(std::uint64_t l, Position n) {
  if (l < 2) throw DomainError("segment-braid needs l >= 2");
  const Diag g = diag(n);
  const i64 L = arith::to_signed(l);
  const i64 m = segment_index(1, g);
  // v = floor((2n - t(t+1) + 1)/(t+3)) is 1 on or below the diagonal, 0 above
  const i64 v = arith::floor_div(2 * g.n - 2 * g.tri + 1, g.t + 3);
  const i64 r = L + v * (arith::mod(g.next - g.n - 1, L - 1) - L + 1);
  return {positive(m), positive(r)};
}

BigInt multi_replicate(std::span<const SequenceSource> sources, Position n) {
  require_family(sources);
  const MultiIndex idx = multi_replicate_index(sources.size(), n);
  return pick(sources, idx).at(idx.m);
}

BigInt braid(std::span<const SequenceSource> sources, Position n) {
  require_family(sources);
  const MultiIndex idx = braid_index(sources.size(), n);
  return pick(sources, idx).at(idx.m);
}

BigInt segment_braid(std::span<const SequenceSource> sources, Position n) {
  require_family(sources);
  const MultiIndex idx = segment_braid_index(sources.size(), n);
  return pick(sources, idx).at(idx.m);
}

// --- superposition -------------------------------------------------------------

std::uint64_t superpose_index(const EnumerationScheme& inner, const EnumerationScheme& outer, Position n,
                              bool transpose) {
  if (is_zero_based(inner) || is_zero_based(outer)) {
    throw DomainError("superposition needs 1-based schemes");
  }
  GridIndex cell = decode(outer, n);
  if (transpose) cell = cell.transposed();
  return encode(inner, cell);
}

BigInt superpose(const SequenceSource& alpha, const EnumerationScheme& inner, const EnumerationScheme& outer,
                 Position n, bool transpose) {
  return alpha.at(superpose_index(inner, outer, n, transpose));
}

// --- descriptors ---------------------------------------------------------------

namespace {

struct FamilyName {
  std::string_view name;
  Family family;
};

constexpr std::array<FamilyName, 17> kFamilies{{
    {"reluctant", Family::Reluctant},
    {"reverse-reluctant", Family::ReverseReluctant},
    {"double-reluctant", Family::DoubleReluctant},
    {"self-compose", Family::SelfCompose},
    {"self-compose-column", Family::SelfComposeColumn},
    {"shifted-columns", Family::ShiftedColumns},
    {"max-shift", Family::MaxShift},
    {"segment-shift", Family::SegmentShift},
    {"angle-shifted", Family::AngleShifted},
    {"angle-max-shift", Family::AngleMaxShift},
    {"angle-segment-shift", Family::AngleSegmentShift},
    {"pair", Family::Pair},
    {"eta", Family::Eta},
    {"multi-replicate", Family::MultiReplicate},
    {"braid", Family::Braid},
    {"segment-braid", Family::SegmentBraid},
    {"superpose", Family::Superpose},
}};

const SequenceSource& need_alpha(const Sources& s) {
  if (!s.alpha) throw DomainError("this family needs an alpha source");
  return *s.alpha;
}

bool needs_alpha(Family f) {
  switch (f) {
    case Family::Eta:
    case Family::MultiReplicate:
    case Family::Braid:
    case Family::SegmentBraid:
      return false;
    default:
      return true;
  }
}

}  // namespace

Family parse_family(std::string_view name) {
  for (const auto& f : kFamilies) {
    if (f.name == name) return f.family;
  }
  throw ParseError("unknown transform family '" + std::string(name) + "'");
}

std::string_view family_name(Family family) {
  for (const auto& f : kFamilies) {
    if (f.family == family) return f.name;
  }
  return "?";
}

Combiner parse_combiner(std::string_view name, std::uint64_t k) {
  if (name == "product") return {Combiner::Kind::Product, k};
  if (name == "power-sum") return {Combiner::Kind::PowerSum, k};
  if (name == "concat") return {Combiner::Kind::Concat, k};
  if (name == "iterate") return {Combiner::Kind::Iterate, k};
  throw ParseError("unknown combiner '" + std::string(name) + "' (product, power-sum, concat, iterate)");
}

void validate(const TransformSpec& spec, const Sources& sources) {
  if (needs_alpha(spec.family)) need_alpha(sources);
  switch (spec.family) {
    case Family::MaxShift:
    case Family::SegmentShift:
    case Family::AngleMaxShift:
    case Family::AngleSegmentShift:
      require_k(spec.k, 1, family_name(spec.family).data());
      break;
    case Family::SelfComposeColumn:
      if (spec.column < 1) throw DomainError("column must be >= 1");
      break;
    case Family::Pair:
      if (!sources.beta) throw DomainError("pair transform needs a beta source");
      if (spec.combiner.kind == Combiner::Kind::PowerSum && spec.k < 1) {
        throw DomainError("power-sum needs k >= 1");
      }
      break;
    case Family::Eta:
      if (spec.d < 1) throw DomainError("eta depth must be >= 1");
      break;
    case Family::MultiReplicate:
    case Family::Braid:
    case Family::SegmentBraid:
      if (sources.many.size() < 2) throw DomainError("multi-source transforms need l >= 2 sources");
      break;
    case Family::Superpose:
      if (!spec.inner || !spec.outer) throw DomainError("superpose needs inner and outer schemes");
      if (is_zero_based(*spec.inner) || is_zero_based(*spec.outer)) {
        throw DomainError("superposition needs 1-based schemes");
      }
      break;
    default:
      break;
  }
}

BigInt term(const TransformSpec& spec, const Sources& sources, Position n) {
  switch (spec.family) {
    case Family::Reluctant: return reluctant(need_alpha(sources), n);
    case Family::ReverseReluctant: return reverse_reluctant(need_alpha(sources), n);
    case Family::DoubleReluctant: return double_reluctant(need_alpha(sources), n);
    case Family::SelfCompose: return self_compose(need_alpha(sources), n, spec.composition);
    case Family::SelfComposeColumn:
      return self_compose_cell(need_alpha(sources), {n, spec.column}, spec.composition);
    case Family::ShiftedColumns: return shifted_columns(need_alpha(sources), spec.k, n);
    case Family::MaxShift: return max_shift(need_alpha(sources), spec.k, n);
    case Family::SegmentShift: return segment_shift(need_alpha(sources), spec.k, n);
    case Family::AngleShifted: return angle_shifted(need_alpha(sources), spec.k, n);
    case Family::AngleMaxShift: return angle_max_shift(need_alpha(sources), spec.k, n);
    case Family::AngleSegmentShift: return angle_segment_shift(need_alpha(sources), spec.k, n);
    case Family::Pair:
      if (!sources.beta) throw DomainError("pair transform needs a beta source");
      return pair_transform(need_alpha(sources), *sources.beta, spec.combiner, n);
    case Family::Eta: return eta(spec.d, n);
    case Family::MultiReplicate: return multi_replicate(sources.many, n);
    case Family::Braid: return braid(sources.many, n);
    case Family::SegmentBraid: return segment_braid(sources.many, n);
    case Family::Superpose:
      if (!spec.inner || !spec.outer) throw DomainError("superpose needs inner and outer schemes");
      return superpose(need_alpha(sources), *spec.inner, *spec.outer, n, spec.transpose);
  }
  throw DomainError("unknown family");
}

std::vector<BigInt> generate_prefix(const TransformSpec& spec, const Sources& sources, std::uint64_t count) {
  if (count == 0) throw DomainError("count must be >= 1");
  validate(spec, sources);
  std::vector<BigInt> out;
  out.reserve(count);
  for (u64 n = 1; n <= count; ++n) out.push_back(term(spec, sources, n));
  return out;
}

}  // namespace pairseq
