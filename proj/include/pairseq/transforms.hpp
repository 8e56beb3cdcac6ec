#pragma once

// Sequence transformations: fill the grid from one, two or l source
// sequences and read it back in an enumeration order. Each family exposes
// its closed-form element index (and sequence number, for multi-source
// families) separately from the term so the index formulas can be checked
// on their own.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pairseq/pairing.hpp"
#include "pairseq/scheme.hpp"
#include "pairseq/sources.hpp"

namespace pairseq {

// --- single sequence, Cantor order -----------------------------------------

/// Triangle whose k-th row is a_1 .. a_k.
BigInt reluctant(const SequenceSource& alpha, Position n);
/// Triangle whose k-th row is a_k .. a_1.
BigInt reverse_reluctant(const SequenceSource& alpha, Position n);
/// Reluctant sequence of the reluctant sequence.
BigInt double_reluctant(const SequenceSource& alpha, Position n);

std::uint64_t reluctant_index(Position n);
std::uint64_t reverse_reluctant_index(Position n);
std::uint64_t double_reluctant_index(Position n);

/// How column j of the self-composition array is built from a.
enum class Composition {
  Linear,    ///< w(i, j) = a applied j times to i
  Doubling,  ///< w(i, j) = a applied 2^(j-1) times to i
};

/// w(i, j) of the self-composition array. Requires positive values.
BigInt self_compose_cell(const SequenceSource& alpha, const GridIndex& cell, Composition convention);
BigInt self_compose(const SequenceSource& alpha, Position n, Composition convention = Composition::Linear);

/// Column j is column 1 shifted by k(j-1): f(i, j) = i + kj - k, k >= 0.
std::uint64_t shifted_columns_index(std::uint64_t k, Position n);
/// f(i, j) = max(ki + j - k, i + kj - k), k >= 1.
std::uint64_t max_shift_index(std::uint64_t k, Position n);
/// f(i, j) = i - j + 1 below the diagonal, j - i + k - 1 above, k >= 1.
std::uint64_t segment_shift_index(std::uint64_t k, Position n);

BigInt shifted_columns(const SequenceSource& alpha, std::uint64_t k, Position n);
BigInt max_shift(const SequenceSource& alpha, std::uint64_t k, Position n);
BigInt segment_shift(const SequenceSource& alpha, std::uint64_t k, Position n);

// --- the same three arrays read in angle (square-shell) order --------------

std::uint64_t angle_shifted_index(std::uint64_t k, Position n);
std::uint64_t angle_max_shift_index(std::uint64_t k, Position n);
std::uint64_t angle_segment_shift_index(std::uint64_t k, Position n);
/// The segment-shift angle index with the shell index taken one larger,
/// t = floor(sqrt(n) + 1/2) + 1, as the formula was first published. Kept
/// only to demonstrate that it disagrees with the array; may be <= 0.
std::int64_t angle_segment_shift_index_uncorrected(std::uint64_t k, Position n);

BigInt angle_shifted(const SequenceSource& alpha, std::uint64_t k, Position n);
BigInt angle_max_shift(const SequenceSource& alpha, std::uint64_t k, Position n);
BigInt angle_segment_shift(const SequenceSource& alpha, std::uint64_t k, Position n);

// --- pairs of sequences ------------------------------------------------------

/// Row index m1 into alpha and column index m2 into beta; m1 + m2 = t + 2.
struct DecodedPair {
  std::uint64_t m1;
  std::uint64_t m2;
};
DecodedPair pair_coordinates(Position n);

struct Combiner {
  enum class Kind {
    Product,   ///< a * b
    PowerSum,  ///< a^k + b^k
    Concat,    ///< decimal concatenation a ++ b
    Iterate,   ///< beta applied m2 times to a
  };
  Kind kind = Kind::Product;
  std::uint64_t k = 1;  // exponent for PowerSum
};

BigInt pair_transform(const SequenceSource& alpha, const SequenceSource& beta, Combiner combiner, Position n);

/// a * 10^digits(b) + b for a, b >= 1.
BigInt concat_numbers(const BigInt& a, const BigInt& b);

/// eta^1(n) = n; eta^d = pair_transform(eta^(d-1), eta^1, concat).
BigInt eta(std::uint64_t d, Position n);
SequenceSource eta_source(std::uint64_t d);

// --- several sequences -------------------------------------------------------

/// Element m of sequence r (1 <= r <= l).
struct MultiIndex {
  std::uint64_t m;
  std::uint64_t r;
  friend constexpr bool operator==(const MultiIndex&, const MultiIndex&) = default;
};

/// Columns repeat alpha^1 .. alpha^l cyclically.
MultiIndex multi_replicate_index(std::uint64_t l, Position n);
/// Anti-diagonal d draws from alpha^(1 + (d-1) mod l).
MultiIndex braid_index(std::uint64_t l, Position n);
/// Segment shift at k = 1; the part above the diagonal comes from alpha^l,
/// the rest cycles through alpha^1 .. alpha^(l-1) by column.
MultiIndex segment_braid_index(std::uint64_t l, Position n);

BigInt multi_replicate(std::span<const SequenceSource> sources, Position n);
BigInt braid(std::span<const SequenceSource> sources, Position n);
BigInt segment_braid(std::span<const SequenceSource> sources, Position n);

// --- superposition -----------------------------------------------------------

/// a_{encode(inner, decode(outer, n))}: alpha is laid out in the inner
/// scheme's order and read back in the outer scheme's order. With
/// `transpose` the array is read with rows and columns exchanged.
std::uint64_t superpose_index(const EnumerationScheme& inner, const EnumerationScheme& outer, Position n,
                              bool transpose = false);
BigInt superpose(const SequenceSource& alpha, const EnumerationScheme& inner, const EnumerationScheme& outer,
                 Position n, bool transpose = false);

// --- descriptors -------------------------------------------------------------

enum class Family {
  Reluctant,
  ReverseReluctant,
  DoubleReluctant,
  SelfCompose,
  SelfComposeColumn,
  ShiftedColumns,
  MaxShift,
  SegmentShift,
  AngleShifted,
  AngleMaxShift,
  AngleSegmentShift,
  Pair,
  Eta,
  MultiReplicate,
  Braid,
  SegmentBraid,
  Superpose,
};

struct TransformSpec {
  Family family = Family::Reluctant;
  std::uint64_t k = 1;       // shift parameter / power-sum exponent
  std::uint64_t l = 2;       // number of sources for multi-source families
  std::uint64_t d = 2;       // eta depth
  std::uint64_t column = 1;  // SelfComposeColumn: column j, terms indexed by row
  Combiner combiner{};
  Composition composition = Composition::Linear;
  std::optional<EnumerationScheme> inner;
  std::optional<EnumerationScheme> outer;
  bool transpose = false;
};

struct Sources {
  std::optional<SequenceSource> alpha;
  std::optional<SequenceSource> beta;
  std::vector<SequenceSource> many;  // alpha^1 .. alpha^l
};

/// Throws DomainError when a parameter is outside the family's range or a
/// required source is missing.
void validate(const TransformSpec& spec, const Sources& sources);

BigInt term(const TransformSpec& spec, const Sources& sources, Position n);

/// [omega(1), ..., omega(count)].
std::vector<BigInt> generate_prefix(const TransformSpec& spec, const Sources& sources, std::uint64_t count);

Family parse_family(std::string_view name);
std::string_view family_name(Family family);
Combiner parse_combiner(std::string_view name, std::uint64_t k);

}  // namespace pairseq
