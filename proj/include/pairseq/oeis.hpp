#pragma once

// OEIS b-files: parsing, prefix comparison and a caching fetch client.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pairseq/error.hpp"
#include "pairseq/sources.hpp"

namespace pairseq::oeis {

class NetworkError : public Error {
 public:
  using Error::Error;
};

class NotFoundError : public Error {
 public:
  using Error::Error;
};

class CacheWriteError : public Error {
 public:
  using Error::Error;
};

struct BFileRecord {
  std::int64_t index;
  BigInt value;
  friend bool operator==(const BFileRecord&, const BFileRecord&) = default;
};

/// `<index> <value>` per line; `#` comments and blank lines skipped.
/// ParseError names the offending line; indices must be consecutive.
std::vector<BFileRecord> parse_bfile(std::string_view text);
std::string format_bfile(std::span<const BFileRecord> records);

/// How generated term 1 lines up with the b-file: Auto tries b-file
/// indices 0 and 1 and keeps the one whose value matches term 1.
struct Alignment {
  enum class Mode { Auto, Fixed };
  Mode mode = Mode::Auto;
  std::int64_t offset = 1;

  static Alignment automatic() { return {}; }
  static Alignment fixed(std::int64_t k) { return {Mode::Fixed, k}; }
};

struct ComparisonReport {
  enum class Status { Match, Mismatch, InsufficientData };

  std::string anum;
  std::uint64_t compared = 0;
  Status status = Status::InsufficientData;
  std::int64_t offset = 1;  // b-file index aligned with term 1
  // Set when status == Mismatch.
  std::uint64_t position = 0;
  BigInt expected;
  BigInt actual;

  std::string describe() const;
};

ComparisonReport compare_prefix(std::span<const BigInt> generated, std::span<const BFileRecord> records,
                                std::uint64_t count, Alignment alignment = Alignment::automatic(),
                                std::string anum = {});

/// `A` followed by six digits.
bool is_anum(std::string_view anum);
/// b-file name for an A-number: A002260 -> b002260.txt.
std::string bfile_name(std::string_view anum);

struct FetchOptions {
  bool online = false;
  std::filesystem::path fixture_dir = default_fixture_dir();
  std::filesystem::path cache_dir = default_cache_dir();
  std::string base_url = "https://oeis.org";
  int timeout_seconds = 30;

  /// $PAIRSEQ_FIXTURE_DIR, else the fixtures shipped with the build.
  static std::filesystem::path default_fixture_dir();
  /// $PAIRSEQ_OEIS_CACHE, else $XDG_CACHE_HOME/pairseq/oeis, else ~/.cache/pairseq/oeis.
  static std::filesystem::path default_cache_dir();
};

/// Offline: reads the shipped fixture. Online: serves from the cache when
/// present, otherwise downloads `<base_url>/Annnnnn/bnnnnnn.txt` and
/// stores it in the cache (write-then-rename, last writer wins).
std::string fetch_bfile(std::string_view anum, const FetchOptions& options = {});

}  // namespace pairseq::oeis
