#include "pairseq/oeis.hpp"

#include <atomic>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <system_error>

#include <httplib.h>

#ifndef PAIRSEQ_DEFAULT_FIXTURE_DIR
#define PAIRSEQ_DEFAULT_FIXTURE_DIR "data/bfiles"
#endif

namespace pairseq::oeis {

namespace fs = std::filesystem;

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void bad_line(std::size_t line_no, const std::string& why) {
  throw ParseError("b-file line " + std::to_string(line_no) + ": " + why);
}

std::optional<std::string> read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

std::vector<BFileRecord> parse_bfile(std::string_view text) {
  std::vector<BFileRecord> records;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    const auto nl = text.find('\n', start);
    const auto end = nl == std::string_view::npos ? text.size() : nl;
    const auto line = trim(text.substr(start, end - start));
    start = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;

    const auto gap = line.find_first_of(" \t");
    if (gap == std::string_view::npos) bad_line(line_no, "expected '<index> <value>'");
    const auto index_text = line.substr(0, gap);
    const auto value_text = trim(line.substr(gap));
    if (value_text.find_first_of(" \t") != std::string_view::npos) bad_line(line_no, "trailing fields");

    std::int64_t index = 0;
    const auto [ptr, ec] = std::from_chars(index_text.data(), index_text.data() + index_text.size(), index);
    if (ec != std::errc{} || ptr != index_text.data() + index_text.size()) {
      bad_line(line_no, "bad index '" + std::string(index_text) + "'");
    }
    BigInt value;
    try {
      value = parse_bigint(value_text);
    } catch (const ParseError&) {
      bad_line(line_no, "bad value '" + std::string(value_text) + "'");
    }
    if (!records.empty() && index != records.back().index + 1) {
      throw ParseError("b-file line " + std::to_string(line_no) + ": non-consecutive index " +
                       std::to_string(index) + " after " + std::to_string(records.back().index));
    }
    records.push_back({index, std::move(value)});
  }
  return records;
}

std::string format_bfile(std::span<const BFileRecord> records) {
  std::string out;
  for (const auto& r : records) {
    out += std::to_string(r.index);
    out += ' ';
    out += r.value.str();
    out += '\n';
  }
  return out;
}

std::string ComparisonReport::describe() const {
  std::string out = anum.empty() ? std::string("sequence") : anum;
  switch (status) {
    case Status::Match:
      out += ": match (" + std::to_string(compared) + " terms, offset " + std::to_string(offset) + ")";
      break;
    case Status::Mismatch:
      out += ": mismatch at position " + std::to_string(position) + ": expected " + expected.str() + ", got " +
             actual.str() + " (offset " + std::to_string(offset) + ")";
      break;
    case Status::InsufficientData:
      out += ": insufficient data (" + std::to_string(compared) + " terms agree, offset " +
             std::to_string(offset) + ")";
      break;
  }
  return out;
}

ComparisonReport compare_prefix(std::span<const BigInt> generated, std::span<const BFileRecord> records,
                                std::uint64_t count, Alignment alignment, std::string anum) {
  if (count == 0) throw DomainError("comparison count must be >= 1");
  ComparisonReport report;
  report.anum = std::move(anum);
  if (records.empty()) return report;

  const std::int64_t first = records.front().index;
  const auto record_at = [&](std::int64_t index) -> const BFileRecord* {
    if (index < first) return nullptr;
    const auto pos = static_cast<std::uint64_t>(index - first);
    return pos < records.size() ? &records[pos] : nullptr;
  };

  std::int64_t offset = alignment.offset;
  if (alignment.mode == Alignment::Mode::Auto) {
    offset = first;
    for (std::int64_t k : {0, 1}) {
      const auto* r = record_at(k);
      if (r != nullptr && !generated.empty() && r->value == generated[0]) {
        offset = k;
        break;
      }
    }
  }
  report.offset = offset;

  for (std::uint64_t p = 1; p <= count; ++p) {
    const auto* r = record_at(offset + static_cast<std::int64_t>(p) - 1);
    if (r == nullptr || p > generated.size()) return report;
    if (r->value != generated[p - 1]) {
      report.status = ComparisonReport::Status::Mismatch;
      report.position = p;
      report.expected = r->value;
      report.actual = generated[p - 1];
      return report;
    }
    report.compared = p;
  }
  report.status = ComparisonReport::Status::Match;
  return report;
}

bool is_anum(std::string_view anum) {
  return anum.size() == 7 && anum[0] == 'A' && anum.substr(1).find_first_not_of("0123456789") == std::string_view::npos;
}

std::string bfile_name(std::string_view anum) {
  if (!is_anum(anum)) throw DomainError("not an A-number: '" + std::string(anum) + "'");
  return "b" + std::string(anum.substr(1)) + ".txt";
}

fs::path FetchOptions::default_fixture_dir() {
  if (const char* env = std::getenv("PAIRSEQ_FIXTURE_DIR"); env != nullptr && *env != '\0') return env;
  return PAIRSEQ_DEFAULT_FIXTURE_DIR;
}

fs::path FetchOptions::default_cache_dir() {
  if (const char* env = std::getenv("PAIRSEQ_OEIS_CACHE"); env != nullptr && *env != '\0') return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg != nullptr && *xdg != '\0') {
    return fs::path(xdg) / "pairseq" / "oeis";
  }
  if (const char* home = std::getenv("HOME"); home != nullptr && *home != '\0') {
    return fs::path(home) / ".cache" / "pairseq" / "oeis";
  }
  return fs::path(".pairseq-cache") / "oeis";
}

namespace {

void store_in_cache(const fs::path& dir, const std::string& name, const std::string& body) {
  static std::atomic<unsigned> counter{0};
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw CacheWriteError("cannot create cache directory '" + dir.string() + "': " + ec.message());
  const fs::path tmp = dir / (name + ".tmp" + std::to_string(counter++));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw CacheWriteError("cannot write '" + tmp.string() + "'");
    out << body;
    if (!out.flush()) throw CacheWriteError("cannot write '" + tmp.string() + "'");
  }
  fs::rename(tmp, dir / name, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw CacheWriteError("cannot move b-file into cache '" + dir.string() + "'");
  }
}

std::string download(std::string_view anum, const std::string& name, const FetchOptions& options) {
  httplib::Client client(options.base_url);
  client.set_connection_timeout(options.timeout_seconds, 0);
  client.set_read_timeout(options.timeout_seconds, 0);
  client.set_follow_location(true);
  const std::string path = "/" + std::string(anum) + "/" + name;
  const auto res = client.Get(path);
  if (!res) {
    throw NetworkError("fetching " + options.base_url + path + " failed: " + httplib::to_string(res.error()));
  }
  if (res->status == 404) throw NotFoundError("no b-file for " + std::string(anum));
  if (res->status != 200) {
    throw NetworkError("fetching " + options.base_url + path + " returned HTTP " + std::to_string(res->status));
  }
  // Unknown sequences can come back as an HTML page rather than a 404.
  try {
    if (parse_bfile(res->body).empty()) throw NotFoundError("no b-file for " + std::string(anum));
  } catch (const ParseError&) {
    throw NotFoundError("no b-file for " + std::string(anum) + " (response is not a b-file)");
  }
  return res->body;
}

}  // namespace

std::string fetch_bfile(std::string_view anum, const FetchOptions& options) {
  const std::string name = bfile_name(anum);
  if (!options.online) {
    if (auto body = read_file(options.fixture_dir / name)) return *body;
    throw NotFoundError("no offline fixture for " + std::string(anum) + " in '" + options.fixture_dir.string() + "'");
  }
  if (auto body = read_file(options.cache_dir / name)) return *body;
  std::string body = download(anum, name, options);
  store_in_cache(options.cache_dir, name, body);
  return body;
}

}  // namespace pairseq::oeis
