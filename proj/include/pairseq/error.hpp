#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pairseq {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Index arithmetic left the 64-bit range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// A caller passed an argument outside the documented domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An explicit tiling list ended before covering the requested cell.
class SpecExhaustedError : public Error {
 public:
  using Error::Error;
};

/// A sequence source has no term at the requested index.
class SourceExhaustedError : public Error {
 public:
  SourceExhaustedError(const std::string& what, std::uint64_t index)
      : Error(what), index_(index) {}
  std::uint64_t index() const noexcept { return index_; }

 private:
  std::uint64_t index_;
};

/// A term would exceed the configured value-size or index budget.
class BudgetExceededError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input (scheme strings, source strings, b-files).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace pairseq
