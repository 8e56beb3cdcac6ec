#include "pairseq/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <ostream>

#include "pairseq/error.hpp"
#include "pairseq/oeis.hpp"
#include "pairseq/oracle.hpp"
#include "pairseq/scheme.hpp"
#include "pairseq/transforms.hpp"

namespace pairseq::cli {

namespace {

/// Thrown for flag combinations CLI11 cannot validate by itself.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SchemeFlags {
  std::string scheme = "cantor";
  std::string spec;
  std::string order = "row";

  void add_to(CLI::App* cmd) {
    cmd->add_option("--scheme", scheme, "cantor, cantor0, boustrophedon, center-out, edges-in, alternating, angle, oxplow, tiling")
        ->capture_default_str();
    cmd->add_option("--spec", spec, "tiling spec: const:<l>x<h>, list:<l,..>x<h,..>, ramp:<a>+<b>x<a>+<b>");
    cmd->add_option("--order", order, "tile inner order: row, col, parity, parity-diagonal")->capture_default_str();
  }

  EnumerationScheme resolve() const {
    try {
      return parse_scheme(scheme, spec, order);
    } catch (const ParseError& e) {
      throw UsageError(std::string("--scheme/--spec/--order: ") + e.what());
    }
  }
};

/// `name` or `tiling/<spec>/<order>` for the superposition schemes.
EnumerationScheme scheme_from_text(const std::string& text, const char* flag) {
  try {
    if (text.rfind("tiling/", 0) == 0) {
      const auto rest = std::string_view(text).substr(7);
      const auto slash = rest.find('/');
      if (slash == std::string_view::npos) return parse_scheme("tiling", rest, "row");
      return parse_scheme("tiling", rest.substr(0, slash), rest.substr(slash + 1));
    }
    return parse_scheme(text);
  } catch (const ParseError& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

struct FamilyFlags {
  std::string family = "reluctant";
  std::string alpha = "id";
  std::string beta;
  std::vector<std::string> sources;
  std::uint64_t k = 1;
  std::uint64_t l = 0;
  std::uint64_t d = 2;
  std::uint64_t column = 1;
  std::string combiner = "product";
  std::string composition = "linear";
  std::string inner;
  std::string outer;
  bool transpose = false;
  std::uint64_t count = 10;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--family", family, "transform family")->capture_default_str();
    cmd->add_option("--alpha", alpha, "source: id, primes, phi, pow:<m>, geo:<p>, list:<v,..>, file:<path>")
        ->capture_default_str();
    cmd->add_option("--beta", beta, "second source for --family pair");
    cmd->add_option("--source", sources, "sources alpha^1..alpha^l for multi-source families (repeat)");
    cmd->add_option("--k", k, "shift parameter or power-sum exponent")->capture_default_str();
    cmd->add_option("--l", l, "number of sources (checked against --source)");
    cmd->add_option("--d", d, "eta depth")->capture_default_str();
    cmd->add_option("--column", column, "column for self-compose-column")->capture_default_str();
    cmd->add_option("--combiner", combiner, "product, power-sum, concat, iterate")->capture_default_str();
    cmd->add_option("--composition", composition, "linear or doubling")->capture_default_str();
    cmd->add_option("--inner", inner, "superpose: scheme that lays out alpha (name or tiling/<spec>/<order>)");
    cmd->add_option("--outer", outer, "superpose: scheme that reads the array back");
    cmd->add_flag("--transpose", transpose, "superpose: read the array transposed");
    cmd->add_option("--count", count, "number of terms")->capture_default_str()->check(CLI::PositiveNumber);
  }

  std::pair<TransformSpec, Sources> resolve() const {
    TransformSpec spec;
    Sources src;
    try {
      spec.family = parse_family(family);
      spec.k = k;
      spec.d = d;
      spec.column = column;
      spec.combiner = parse_combiner(combiner, k);
      spec.transpose = transpose;
      if (composition == "linear") {
        spec.composition = Composition::Linear;
      } else if (composition == "doubling") {
        spec.composition = Composition::Doubling;
      } else {
        throw UsageError("--composition: expected linear or doubling, got '" + composition + "'");
      }
      if (!inner.empty()) spec.inner = scheme_from_text(inner, "--inner");
      if (!outer.empty()) spec.outer = scheme_from_text(outer, "--outer");
      src.alpha = SequenceSource::parse(alpha);
      if (!beta.empty()) src.beta = SequenceSource::parse(beta);
      for (const auto& s : sources) src.many.push_back(SequenceSource::parse(s));
    } catch (const ParseError& e) {
      throw UsageError(e.what());
    }
    if (l != 0 && !sources.empty() && l != sources.size()) {
      throw UsageError("--l " + std::to_string(l) + " does not match " + std::to_string(sources.size()) + " --source flags");
    }
    spec.l = sources.size();
    try {
      validate(spec, src);
    } catch (const DomainError& e) {
      throw UsageError(std::string("--family ") + family + ": " + e.what());
    }
    return {spec, src};
  }
};

/// Terms 1..count, reporting the first n that fails.
std::vector<BigInt> generate_terms(const TransformSpec& spec, const Sources& src, std::uint64_t count,
                                   std::uint64_t& failed_at) {
  std::vector<BigInt> out;
  out.reserve(count);
  for (std::uint64_t n = 1; n <= count; ++n) {
    failed_at = n;
    out.push_back(term(spec, src, n));
  }
  failed_at = 0;
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pairing functions and the integer-sequence transforms built on them"};
  app.require_subcommand(1);

  SchemeFlags enc_scheme;
  std::uint64_t cell_i = 1;
  std::uint64_t cell_j = 1;
  auto* enc = app.add_subcommand("encode", "print the position of cell (i, j)");
  enc_scheme.add_to(enc);
  enc->add_option("--i", cell_i, "row (>= 1; >= 0 for cantor0)")->required();
  enc->add_option("--j", cell_j, "column (>= 1; >= 0 for cantor0)")->required();

  SchemeFlags dec_scheme;
  std::uint64_t position = 1;
  auto* dec = app.add_subcommand("decode", "print the cell 'i j' at position n");
  dec_scheme.add_to(dec);
  dec->add_option("--n", position, "position (>= 1; >= 0 for cantor0)")->required();

  FamilyFlags gen_flags;
  std::string format = "plain";
  auto* gen = app.add_subcommand("generate", "print the first terms of a transformed sequence");
  gen_flags.add_to(gen);
  gen->add_option("--format", format, "plain or json")->check(CLI::IsMember({"plain", "json"}))->capture_default_str();

  SchemeFlags ver_scheme;
  std::uint64_t n_max = 10000;
  auto* ver = app.add_subcommand("verify", "check a scheme's closed form against its grid walk");
  ver_scheme.add_to(ver);
  ver->add_option("--n-max", n_max, "positions to check")->capture_default_str()->check(CLI::PositiveNumber);

  FamilyFlags chk_flags;
  std::string anum;
  std::string offset = "auto";
  bool online = false;
  std::string cache_dir;
  std::string fixture_dir;
  std::string base_url = "https://oeis.org";
  auto* chk = app.add_subcommand("oeis-check", "compare a generated prefix with an OEIS b-file");
  chk_flags.add_to(chk);
  chk->add_option("--anum", anum, "A-number, e.g. A002260")->required();
  chk->add_option("--offset", offset, "b-file index of term 1: auto, 0 or 1")->capture_default_str();
  chk->add_flag("--online", online, "download missing b-files (cached)");
  chk->add_option("--cache-dir", cache_dir, "b-file cache (default $PAIRSEQ_OEIS_CACHE)");
  chk->add_option("--fixture-dir", fixture_dir, "offline fixtures (default $PAIRSEQ_FIXTURE_DIR or shipped data)");
  chk->add_option("--base-url", base_url, "OEIS server")->capture_default_str();

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*enc) {
      const auto scheme = enc_scheme.resolve();
      const GridIndex cell{cell_i, cell_j};
      if (!is_zero_based(scheme) && (cell_i == 0 || cell_j == 0)) {
        throw UsageError("--i/--j: cells are 1-based");
      }
      out << encode(scheme, cell) << "\n";
      return kOk;
    }

    if (*dec) {
      const auto scheme = dec_scheme.resolve();
      if (!is_zero_based(scheme) && position == 0) throw UsageError("--n: positions are 1-based");
      const GridIndex cell = decode(scheme, position);
      out << cell.i << " " << cell.j << "\n";
      return kOk;
    }

    if (*gen) {
      const auto [spec, src] = gen_flags.resolve();
      std::uint64_t failed_at = 0;
      std::vector<BigInt> terms;
      try {
        terms = generate_terms(spec, src, gen_flags.count, failed_at);
      } catch (const Error& e) {
        err << "error at n=" << failed_at << ": " << e.what() << "\n";
        return kTermFailure;
      }
      if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& v : terms) arr.push_back(v.str());
        out << arr.dump() << "\n";
      } else {
        for (const auto& v : terms) out << v.str() << "\n";
      }
      return kOk;
    }

    if (*ver) {
      const auto scheme = ver_scheme.resolve();
      const auto report = oracle::verify_scheme(scheme, n_max);
      if (report.passed()) {
        out << "pass: " << report.scheme << ", " << report.checked << " positions\n";
        return kOk;
      }
      const auto& m = *report.mismatch;
      out << "FAIL: " << report.scheme << ": walk position " << m.expected << " is cell " << m.cell
          << " but the closed form gives " << m.actual << "\n";
      return kMismatch;
    }

    if (*chk) {
      if (!oeis::is_anum(anum)) throw UsageError("--anum: expected A followed by six digits, got '" + anum + "'");
      oeis::Alignment alignment;
      if (offset == "0" || offset == "1") {
        alignment = oeis::Alignment::fixed(offset == "0" ? 0 : 1);
      } else if (offset != "auto") {
        throw UsageError("--offset: expected auto, 0 or 1");
      }
      const auto [spec, src] = chk_flags.resolve();

      oeis::FetchOptions options;
      options.online = online;
      options.base_url = base_url;
      if (!cache_dir.empty()) options.cache_dir = cache_dir;
      if (!fixture_dir.empty()) options.fixture_dir = fixture_dir;

      std::string text;
      try {
        text = oeis::fetch_bfile(anum, options);
      } catch (const oeis::NetworkError& e) {
        err << "error: " << e.what() << "\n";
        return kNetwork;
      } catch (const oeis::NotFoundError& e) {
        err << "error: " << e.what() << "\n";
        return kNoData;
      }
      const auto records = oeis::parse_bfile(text);

      std::uint64_t failed_at = 0;
      std::vector<BigInt> terms;
      try {
        terms = generate_terms(spec, src, chk_flags.count, failed_at);
      } catch (const Error& e) {
        err << "error at n=" << failed_at << ": " << e.what() << "\n";
        return kTermFailure;
      }
      const auto report = oeis::compare_prefix(terms, records, chk_flags.count, alignment, anum);
      out << report.describe() << "\n";
      switch (report.status) {
        case oeis::ComparisonReport::Status::Match: return kOk;
        case oeis::ComparisonReport::Status::Mismatch: return kMismatch;
        case oeis::ComparisonReport::Status::InsufficientData: return kNoData;
      }
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const oeis::CacheWriteError& e) {
    err << "error: " << e.what() << "\n";
    return kTermFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kTermFailure;
  }
  return kUsage;
}

}  // namespace pairseq::cli
