// Copyright 2026 The extremal-primes Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "extremal/cli.hpp"

#include <CLI11.hpp>

#include <cerrno>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "extremal/analysis.hpp"
#include "extremal/checkpoint.hpp"
#include "extremal/errors.hpp"
#include "extremal/export.hpp"
#include "extremal/lens_bounds.hpp"
#include "extremal/m_variant.hpp"

namespace extremal {

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::uint64_t parse_digits(const std::string& s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
    throw std::invalid_argument("not a natural number: '" + s + "'");
  }
  errno = 0;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(s.c_str(), &end, 10);
  if (errno == ERANGE) throw RangeError("value out of range: " + s);
  return v;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw RangeError("value out of range");
  return r;
}

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Writes to `path`, or to `out` when the path is empty.
void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw UsageError("cannot write " + path);
  f << text;
  if (!f) throw std::runtime_error("write failed for " + path);
}

std::vector<lens::Real> parse_grid(const std::string& text) {
  std::vector<lens::Real> xs;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    long double v = 0;
    try {
      v = std::stold(item, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (item.empty() || pos != item.size() || !std::isfinite(v)) {
      throw UsageError("bad grid value '" + item + "'");
    }
    xs.push_back(v);
  }
  if (xs.empty()) throw UsageError("empty --x-grid");
  return xs;
}

struct ComputeOptions {
  std::string limit;
  std::uint64_t segment_size = 0;
  unsigned workers = 0;
  std::string checkpoint;
  double checkpoint_interval = 60.0;
  bool resume = false;
  std::string out;
  std::string format = "csv";
  bool include_provisional = false;
};

int run_compute(const ComputeOptions& o, std::ostream& out, std::ostream& err) {
  const std::uint64_t limit = parse_limit(o.limit);
  if (limit > kMaxLimit) throw RangeError("limit " + o.limit + " exceeds 10^12");
  if (limit < 2) throw UsageError("--limit must be at least 2");
  if (o.resume && o.checkpoint.empty()) throw UsageError("--resume requires --checkpoint");

  SieveConfig cfg;
  HullState state;
  if (o.resume) {
    const Checkpoint cp = load_checkpoint(o.checkpoint);
    state = cp.state;
    cfg = cp.config;
    if (limit < state.last_processed) {
      throw UsageError("--limit is below the checkpoint's processed limit " +
                       std::to_string(state.last_processed));
    }
  }
  cfg.limit = limit;
  if (o.segment_size) cfg.segment_size = o.segment_size;
  if (o.workers) cfg.workers = o.workers;

  using Clock = std::chrono::steady_clock;
  auto last_save = Clock::now();
  std::function<void(const HullState&)> on_segment;
  if (!o.checkpoint.empty()) {
    on_segment = [&](const HullState& s) {
      const auto now = Clock::now();
      if (std::chrono::duration<double>(now - last_save).count() >= o.checkpoint_interval) {
        save_checkpoint(make_checkpoint(s, cfg), o.checkpoint);
        last_save = now;
      }
    };
  }
  extend_hull(state, limit, cfg, on_segment);
  if (!o.checkpoint.empty()) save_checkpoint(make_checkpoint(state, cfg), o.checkpoint);

  const auto records = records_from_state(state, o.include_provisional);
  std::ostringstream text;
  export_records(records, o.format == "json" ? ExportFormat::json : ExportFormat::csv, limit,
                 o.include_provisional, text);
  emit(o.out, text.str(), out);
  err << "processed " << state.last_processed << " (pi = " << state.pi_at_last << "), "
      << state.confirmed_prefix_len << " confirmed, "
      << state.stack.size() - state.confirmed_prefix_len << " provisional\n";
  return kExitOk;
}

struct AnalyzeOptions {
  std::string in;
  bool sums = false;
  bool twins = false;
  bool ties = false;
  std::string envelope_limit;
};

int run_analyze(const AnalyzeOptions& o, std::ostream& out) {
  const auto records = parse_records(slurp(o.in));
  const bool all = !o.sums && !o.twins && !o.ties && o.envelope_limit.empty();
  std::size_t confirmed = 0;
  for (const auto& r : records) confirmed += r.status == VertexStatus::confirmed;
  out << "records " << records.size() << " confirmed " << confirmed << '\n';
  if (all || o.sums) {
    const auto s = conjecture_sums(records);
    out << "sum_inv " << format_real(s.sum_inv.value()) << '\n'
        << "sum_invlog " << format_real(s.sum_invlog.value()) << '\n'
        << "terms " << s.count << '\n';
    if (!records.empty() && records.back().status == VertexStatus::confirmed) {
      const auto& last = records.back();
      out << "exponent_estimate " << format_real(std::log(static_cast<double>(last.k)) /
                                                 std::log(static_cast<double>(last.e)))
          << '\n';
    }
  }
  if (all || o.twins) {
    const auto tw = find_twins(records);
    out << "twins " << tw.size() << '\n';
    for (const auto& t : tw) out << "  k=" << t.k << ' ' << t.e << ' ' << t.e_next << '\n';
  }
  if (all || o.ties) {
    const auto tr = tie_report(records);
    out << "ties " << tr.size() << '\n';
    for (const auto& t : tr) {
      out << "  k=" << t.k << ' ' << t.e << ':';
      for (auto p : t.ties) out << ' ' << p;
      out << '\n';
    }
  }
  if (!o.envelope_limit.empty()) {
    const std::uint64_t lim = parse_limit(o.envelope_limit);
    if (lim > 1'000'000'000ULL) throw RangeError("--envelope-limit exceeds 10^9");
    const auto env = verify_envelope(lim);
    out << "envelope_limit " << env.limit << '\n'
        << "envelope_primes " << env.primes_checked << '\n'
        << "envelope_max_ratio " << format_real(env.max_ratio) << " at " << env.argmax << '\n'
        << "envelope_violations " << env.violations.size() << '\n';
    for (const auto& b : env.boundary) {
      out << "  below floor: p=" << b.p << " ratio " << format_real(b.ratio) << '\n';
    }
  }
  return kExitOk;
}

int run_lensbounds(const std::string& grid, double alpha, const std::string& path, std::ostream& out) {
  if (!(alpha > 0 && alpha <= 1)) throw UsageError("--alpha must lie in (0, 1]");
  std::vector<lens::LensProfile> rows;
  const lens::Real threshold = lens::concavity_threshold();
  for (const auto x : parse_grid(grid)) {
    if (!(x > threshold)) {
      throw RangeError("x = " + format_real(static_cast<double>(x)) +
                       " is not above the concavity threshold " +
                       format_real(static_cast<double>(threshold)));
    }
    rows.push_back(lens::lens_profile(x, alpha));
  }
  emit(path, lens_profiles_to_csv(rows, alpha), out);
  return kExitOk;
}

int run_mvariant(const std::string& limit_text, const std::string& path, std::ostream& out,
                 std::ostream& err) {
  const std::uint64_t limit = parse_limit(limit_text);
  if (limit > kMaxMLimit) throw RangeError("mvariant limit " + limit_text + " exceeds 10^9");
  if (limit < 2) throw UsageError("--limit must be at least 2");
  const auto recs = compute_m_extremal(limit);
  emit(path, m_records_to_csv(recs), out);
  std::size_t confirmed = 0;
  for (const auto& r : recs) confirmed += r.status == VertexStatus::confirmed;
  err << "m-hull to " << limit << ": " << confirmed << " confirmed, " << recs.size() - confirmed
      << " provisional\n";
  return kExitOk;
}

}  // namespace

std::uint64_t parse_limit(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (c != '_' && c != '\'') s += c;
  }
  if (const auto caret = s.find('^'); caret != std::string::npos) {
    return checked_pow(parse_digits(s.substr(0, caret)), parse_digits(s.substr(caret + 1)));
  }
  if (const auto e = s.find_first_of("eE"); e != std::string::npos) {
    std::string mant = s.substr(0, e);
    std::uint64_t exp = parse_digits(s.substr(e + 1));
    std::string frac;
    if (const auto dot = mant.find('.'); dot != std::string::npos) {
      frac = mant.substr(dot + 1);
      mant = mant.substr(0, dot);
    }
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    if (frac.size() > exp) throw std::invalid_argument("not an integer: '" + text + "'");
    const std::uint64_t digits = parse_digits(mant + frac);
    return checked_mul(digits, checked_pow(10, exp - frac.size()));
  }
  return parse_digits(s);
}

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Extremal primes: upper convex hull of the prime counting function"};
  app.require_subcommand(1);

  ComputeOptions co;
  auto* compute = app.add_subcommand("compute", "Hull vertices of pi(x) up to a limit");
  compute->add_option("--limit", co.limit, "Upper limit, e.g. 1000000, 10^8 or 3e9")->required();
  compute->add_option("--segment-size", co.segment_size, "Odd integers per sieve segment")
      ->check(CLI::Range(kMinSegmentSize, std::uint64_t{1} << 32));
  compute->add_option("--workers", co.workers, "Segments sieved concurrently")->check(CLI::Range(1, 256));
  compute->add_option("--checkpoint", co.checkpoint, "Checkpoint file");
  compute->add_option("--checkpoint-interval", co.checkpoint_interval,
                      "Seconds between periodic checkpoint saves")
      ->check(CLI::NonNegativeNumber);
  compute->add_flag("--resume", co.resume, "Continue from --checkpoint");
  compute->add_option("--out", co.out, "Output file (default stdout)");
  compute->add_option("--format", co.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  compute->add_flag("--include-provisional", co.include_provisional,
                    "Also emit unconfirmed tail vertices, with a status column");

  AnalyzeOptions ao;
  auto* analyze = app.add_subcommand("analyze", "Statistics over an exported record file");
  analyze->add_option("--in", ao.in, "CSV or JSON produced by compute")->required();
  analyze->add_flag("--sums", ao.sums, "Partial sums of 1/e_k and 1/ln e_k");
  analyze->add_flag("--twins", ao.twins, "Consecutive extremal primes that are consecutive primes");
  analyze->add_flag("--ties", ao.ties, "Primes lying exactly on hull edges");
  analyze->add_option("--envelope-limit", ao.envelope_limit,
                      "Check |pi(p) - li(p)| < sqrt(p) ln p for primes up to N");

  std::string grid;
  double alpha = 1.0;
  std::string lens_out;
  auto* lensb = app.add_subcommand("lensbounds", "Analytic lens-length bounds");
  lensb->add_option("--x-grid", grid, "Comma separated x values, e.g. 1e10,1e11,1e12")->required();
  lensb->add_option("--alpha", alpha, "Root window for the cubic, in (0, 1]");
  lensb->add_option("--out", lens_out, "Output file (default stdout)");

  std::string m_limit;
  std::string m_out;
  auto* mvar = app.add_subcommand("mvariant", "Hull vertices of x / pi(x) at primes");
  mvar->add_option("--limit", m_limit, "Upper limit, at most 10^9")->required();
  mvar->add_option("--out", m_out, "Output file (default stdout)");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*compute) return run_compute(co, out, err);
    if (*analyze) return run_analyze(ao, out);
    if (*lensb) return run_lensbounds(grid, alpha, lens_out, out);
    if (*mvar) return run_mvariant(m_limit, m_out, out, err);
  } catch (const CorruptCheckpoint& e) {
    err << "error: " << e.what() << '\n';
    return kExitCorrupt;
  } catch (const VersionMismatch& e) {
    err << "error: checkpoint version mismatch: " << e.what() << '\n';
    return kExitCorrupt;
  } catch (const RangeError& e) {
    err << "error: range rejected: " << e.what() << '\n';
    return kExitRange;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return kExitUsage;
}

}  // namespace extremal
