#include "pairseq/sources.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <mutex>
#include <unordered_map>

#include "pairseq/error.hpp"

namespace pairseq {

using u64 = std::uint64_t;

class SequenceSource::Impl {
 public:
  Impl(Kind kind, std::string name, Budget budget) : kind_(kind), name_(std::move(name)), budget_(budget) {}
  virtual ~Impl() = default;
  virtual BigInt value(u64 m) const = 0;

  Kind kind_;
  std::string name_;
  Budget budget_;
};

namespace {

using Impl = SequenceSource::Impl;
using Kind = SequenceSource::Kind;

class IdentityImpl final : public Impl {
 public:
  IdentityImpl() : Impl(Kind::Identity, "id", {}) {}
  BigInt value(u64 m) const override { return BigInt(m); }
};

/// Sieve of Eratosthenes, re-run with a doubled limit whenever a request
/// outruns the primes found so far.
class PrimesImpl final : public Impl {
 public:
  explicit PrimesImpl(Budget b) : Impl(Kind::Primes, "primes", b) {}

  BigInt value(u64 m) const override {
    if (m > budget_.max_prime_index) {
      throw BudgetExceededError("prime index " + std::to_string(m) + " exceeds budget " +
                                std::to_string(budget_.max_prime_index));
    }
    std::lock_guard lock(mutex_);
    while (primes_.size() < m) grow();
    return BigInt(primes_[m - 1]);
  }

 private:
  void grow() const {
    limit_ = limit_ == 0 ? 1024 : limit_ * 2;
    std::vector<bool> composite(limit_ + 1, false);
    primes_.clear();
    for (u64 p = 2; p <= limit_; ++p) {
      if (composite[p]) continue;
      primes_.push_back(p);
      for (u64 q = p * p; q <= limit_; q += p) composite[q] = true;
    }
  }

  mutable std::mutex mutex_;
  mutable std::vector<u64> primes_;
  mutable u64 limit_ = 0;
};

class PhiImpl final : public Impl {
 public:
  explicit PhiImpl(Budget b) : Impl(Kind::EulerPhi, "phi", b) {}

  BigInt value(u64 m) const override {
    if (m > budget_.max_phi_argument) {
      throw BudgetExceededError("phi argument " + std::to_string(m) + " exceeds budget " +
                                std::to_string(budget_.max_phi_argument));
    }
    {
      std::lock_guard lock(mutex_);
      if (auto it = memo_.find(m); it != memo_.end()) return BigInt(it->second);
    }
    const u64 result = totient(m);
    std::lock_guard lock(mutex_);
    memo_.emplace(m, result);
    return BigInt(result);
  }

 private:
  static u64 totient(u64 n) {
    u64 result = n;
    for (u64 p = 2; p <= n / p; ++p) {
      if (n % p != 0) continue;
      while (n % p == 0) n /= p;
      result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
  }

  mutable std::mutex mutex_;
  mutable std::unordered_map<u64, u64> memo_;
};

class PowerImpl final : public Impl {
 public:
  PowerImpl(Kind kind, std::string name, u64 base, Budget b) : Impl(kind, std::move(name), b), base_(base) {
    if (base < 2) throw DomainError("power/geometric base must be >= 2");
  }

  BigInt value(u64 m) const override {
    const double bits = static_cast<double>(m) * std::log2(static_cast<double>(base_));
    if (bits > static_cast<double>(budget_.max_value_bits)) {
      throw BudgetExceededError(name_ + " term " + std::to_string(m) + " needs ~" +
                                std::to_string(static_cast<u64>(bits)) + " bits; budget is " +
                                std::to_string(budget_.max_value_bits));
    }
    return boost::multiprecision::pow(BigInt(base_), static_cast<unsigned>(m));
  }

 private:
  u64 base_;
};

class ListImpl final : public Impl {
 public:
  ListImpl(Kind kind, std::string name, std::vector<BigInt> values)
      : Impl(kind, std::move(name), {}), values_(std::move(values)) {}

  BigInt value(u64 m) const override {
    if (m > values_.size()) {
      throw SourceExhaustedError(name_ + " has " + std::to_string(values_.size()) + " terms; term " +
                                     std::to_string(m) + " requested",
                                 m);
    }
    return values_[m - 1];
  }

 private:
  std::vector<BigInt> values_;
};

class CustomImpl final : public Impl {
 public:
  CustomImpl(std::string name, std::function<BigInt(u64)> fn)
      : Impl(Kind::Custom, std::move(name), {}), fn_(std::move(fn)) {}
  BigInt value(u64 m) const override { return fn_(m); }

 private:
  std::function<BigInt(u64)> fn_;
};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

u64 parse_u64(std::string_view text, std::string_view what) {
  u64 v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ParseError("bad " + std::string(what) + " '" + std::string(text) + "'");
  }
  return v;
}

}  // namespace

BigInt parse_bigint(std::string_view text) {
  const std::string_view digits = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? text.substr(1) : text;
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos) {
    throw ParseError("not an integer: '" + std::string(text) + "'");
  }
  // Strip leading zeros: the string constructor reads them as an octal prefix.
  const auto first = digits.find_first_not_of('0');
  const BigInt v{first == std::string_view::npos ? std::string("0") : std::string(digits.substr(first))};
  return text[0] == '-' ? BigInt(-v) : v;
}

SequenceSource SequenceSource::identity() { return SequenceSource(std::make_shared<IdentityImpl>()); }

SequenceSource SequenceSource::primes(Budget budget) { return SequenceSource(std::make_shared<PrimesImpl>(budget)); }

SequenceSource SequenceSource::euler_phi(Budget budget) { return SequenceSource(std::make_shared<PhiImpl>(budget)); }

SequenceSource SequenceSource::power(std::uint64_t base, Budget budget) {
  return SequenceSource(std::make_shared<PowerImpl>(Kind::Power, "pow:" + std::to_string(base), base, budget));
}

SequenceSource SequenceSource::geometric(std::uint64_t p, Budget budget) {
  return SequenceSource(std::make_shared<PowerImpl>(Kind::Geometric, "geo:" + std::to_string(p), p, budget));
}

SequenceSource SequenceSource::list(std::vector<BigInt> values) {
  if (values.empty()) throw DomainError("list source needs at least one value");
  return SequenceSource(std::make_shared<ListImpl>(Kind::List, "list", std::move(values)));
}

SequenceSource SequenceSource::file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open sequence file '" + path.string() + "'");
  std::vector<BigInt> values;
  std::string line;
  std::size_t line_no = 0;
  std::size_t blank_run = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto body = trim(line);
    if (body.empty()) {
      ++blank_run;
      continue;
    }
    if (blank_run != 0) {
      throw ParseError(path.string() + ":" + std::to_string(line_no - blank_run) + ": blank line inside sequence");
    }
    try {
      values.push_back(parse_bigint(body));
    } catch (const ParseError& e) {
      throw ParseError(path.string() + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (values.empty()) throw ParseError("sequence file '" + path.string() + "' has no terms");
  return SequenceSource(std::make_shared<ListImpl>(Kind::File, "file:" + path.string(), std::move(values)));
}

SequenceSource SequenceSource::custom(std::string name, std::function<BigInt(std::uint64_t)> fn) {
  return SequenceSource(std::make_shared<CustomImpl>(std::move(name), std::move(fn)));
}

SequenceSource SequenceSource::parse(std::string_view text, Budget budget) {
  if (text == "id") return identity();
  if (text == "primes") return primes(budget);
  if (text == "phi") return euler_phi(budget);
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError("unknown sequence source '" + std::string(text) + "'");
  const auto kind = text.substr(0, colon);
  const auto body = text.substr(colon + 1);
  try {
    if (kind == "pow") return power(parse_u64(body, "power base"), budget);
    if (kind == "geo") return geometric(parse_u64(body, "geometric base"), budget);
    if (kind == "file") return file(std::filesystem::path(std::string(body)));
    if (kind == "list") {
      std::vector<BigInt> values;
      std::size_t start = 0;
      while (true) {
        const auto comma = body.find(',', start);
        const auto end = comma == std::string_view::npos ? body.size() : comma;
        values.push_back(parse_bigint(trim(body.substr(start, end - start))));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
      }
      return list(std::move(values));
    }
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
  throw ParseError("unknown sequence source '" + std::string(text) + "'");
}

SequenceSource::Kind SequenceSource::kind() const noexcept { return impl_->kind_; }
const std::string& SequenceSource::name() const noexcept { return impl_->name_; }
const Budget& SequenceSource::budget() const noexcept { return impl_->budget_; }

BigInt SequenceSource::at(std::uint64_t m) const {
  if (m == 0) throw DomainError("sequence index is 1-based");
  return impl_->value(m);
}

BigInt SequenceSource::at(const BigInt& m) const {
  if (m < 1) throw DomainError("sequence index must be positive, got " + m.str());
  if (kind() == Kind::Identity) return m;
  if (m > std::numeric_limits<u64>::max()) {
    throw BudgetExceededError("sequence index " + std::to_string(boost::multiprecision::msb(m) + 1) +
                              " bits wide is beyond the 64-bit index range");
  }
  return at(m.convert_to<u64>());
}

std::uint64_t decimal_digits(const BigInt& v) {
  return v.is_zero() ? 1 : static_cast<u64>(BigInt(abs(v)).str().size());
}

}  // namespace pairseq
