#pragma once

// Lazily evaluated 1-based integer sequences with arbitrary-precision values.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace pairseq {

using BigInt = boost::multiprecision::cpp_int;

/// Limits that keep self-composition of fast-growing sequences finite.
struct Budget {
  /// Largest index a primes source will sieve up to.
  std::uint64_t max_prime_index = 5'000'000;
  /// Largest argument an Euler-phi source will factor.
  std::uint64_t max_phi_argument = 1'000'000'000'000ULL;
  /// Largest bit length of a term of a power or geometric source.
  std::uint64_t max_value_bits = 1u << 20;
  /// Most applications a single composition chain may perform.
  std::uint64_t max_iterations = 1u << 20;
};

/// Total map m -> a_m for m >= 1. Copies share state; the memoizing kinds
/// (primes, phi) guard their caches with a mutex, so a source may be read
/// from several threads at once.
class SequenceSource {
 public:
  enum class Kind { Identity, Primes, EulerPhi, Power, Geometric, List, File, Custom };

  static SequenceSource identity();
  static SequenceSource primes(Budget budget = {});
  static SequenceSource euler_phi(Budget budget = {});
  /// a_m = base^m.
  static SequenceSource power(std::uint64_t base, Budget budget = {});
  /// p^1, p^2, ...; same terms as power(p) but tagged separately.
  static SequenceSource geometric(std::uint64_t p, Budget budget = {});
  static SequenceSource list(std::vector<BigInt> values);
  /// One integer per line; line k holds a_k.
  static SequenceSource file(const std::filesystem::path& path);
  static SequenceSource custom(std::string name, std::function<BigInt(std::uint64_t)> fn);

  /// `id`, `primes`, `phi`, `pow:<m>`, `geo:<p>`, `list:<v1,v2,...>`, `file:<path>`.
  static SequenceSource parse(std::string_view text, Budget budget = {});

  Kind kind() const noexcept;
  const std::string& name() const noexcept;
  const Budget& budget() const noexcept;

  /// a_m; SourceExhaustedError past the end of finite sources,
  /// BudgetExceededError beyond the configured limits.
  BigInt at(std::uint64_t m) const;
  /// a_m for an index that is itself a sequence value.
  BigInt at(const BigInt& m) const;

  class Impl;

 private:
  explicit SequenceSource(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// Optional sign followed by decimal digits; ParseError otherwise.
BigInt parse_bigint(std::string_view text);

/// Decimal digit count of a positive integer.
std::uint64_t decimal_digits(const BigInt& v);

}  // namespace pairseq
