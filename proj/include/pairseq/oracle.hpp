#pragma once

// Ground-truth traversals built by walking the grid: diagonals with their
// per-diagonal cell orders, square shells along their two sides, and
// rectangle tiles in anti-diagonal tile order. Nothing here evaluates a
// closed-form position formula, so the walks can check those formulas.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pairseq/scheme.hpp"

namespace pairseq::oracle {

/// Streams the cells of a scheme in enumeration order, one block
/// (diagonal, shell or tile diagonal) at a time.
class Walk {
 public:
  explicit Walk(EnumerationScheme scheme);

  GridIndex next();

 private:
  void fill_block();
  void fill_diagonal(std::uint64_t d);
  void fill_zero_based_diagonal(std::uint64_t s);
  void fill_shell(std::uint64_t s);
  void fill_tile_diagonal(std::uint64_t d);

  EnumerationScheme scheme_;
  std::vector<GridIndex> block_;
  std::size_t cursor_ = 0;
  std::uint64_t block_no_ = 0;
  std::uint64_t tiles_seen_ = 0;
};

/// First `count` cells in enumeration order.
std::vector<GridIndex> traverse(const EnumerationScheme& scheme, std::uint64_t count);

struct Mismatch {
  Position expected;   // 1-based walk position (0-based z for cantor0)
  GridIndex cell;
  std::string actual;  // encoded value, or the error the encoder raised
};

struct VerificationReport {
  std::string scheme;
  std::uint64_t checked = 0;
  std::optional<Mismatch> mismatch;

  bool passed() const noexcept { return !mismatch.has_value(); }
};

/// Checks encode(scheme, walk[k]) == k + 1 for k < count. Encoder failures
/// are reported as mismatches; a walk that runs past the end of a finite
/// tile list throws SpecExhaustedError.
VerificationReport verify_scheme(const EnumerationScheme& scheme, std::uint64_t count);

}  // namespace pairseq::oracle
