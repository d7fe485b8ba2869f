#pragma once

// Batch driver: every odd prime in [q_min, q_max] through the per-prime
// pipeline on a worker pool, with rows written in ascending q by a single
// writer, periodic checkpoints and resume.
//
// Output directory layout:
//   Mq.csv, mq.csv    one "q,value" row per prime, value to 19 significant digits
//   failures.txt      "q reason" for every prime whose numbers are not trusted
//   checkpoint.txt    last flushed prime, config hash and the byte lengths of the above
//   summary.txt       extremes and flag tallies, rebuilt from the CSVs

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <condition_variable>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "littlewood/bounds.hpp"
#include "littlewood/character_engine.hpp"
#include "littlewood/number_theory.hpp"
#include "littlewood/zeta_table.hpp"

namespace littlewood {

namespace fs = std::filesystem;

enum class RunMode { fft, direct, both };

inline std::string_view to_string(RunMode m) {
  switch (m) {
    case RunMode::fft: return "fft";
    case RunMode::direct: return "direct";
    case RunMode::both: return "both";
  }
  return "?";
}

inline RunMode parse_run_mode(std::string_view s) {
  if (s == "fft") return RunMode::fft;
  if (s == "direct") return RunMode::direct;
  if (s == "both") return RunMode::both;
  throw std::invalid_argument("unknown mode: " + std::string(s));
}

// Thrown for configuration problems: bad ranges, resume refusals.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::uint64_t q_min = 3;
  std::uint64_t q_max = 1000;
  int n_bits = 50;
  RunMode mode = RunMode::fft;
  bool extended = false;  // long double pipeline instead of double
  int workers = 1;
  fs::path out_dir = "out";
  std::uint64_t checkpoint_every = 1000;
  bool resume = false;
  double guard_band = kDefaultGuardBand;
  std::uint32_t direct_cap = kDirectOracleCap;
  // Relative tolerance between the FFT and direct routes in mode=both.
  double route_tolerance = 1e-9;
  // Stop (after a checkpoint) once this prime has been written; 0 = never.
  std::uint64_t stop_after = 0;
};

inline int default_bits(bool extended) {
  return extended ? std::min(62, std::numeric_limits<long double>::digits - 2)
                  : std::numeric_limits<double>::digits - 3;
}

inline void validate(const RunConfig& c) {
  if (c.q_min < 3) throw ConfigError("--min must be at least 3");
  if (c.q_max < c.q_min) throw ConfigError("--max must not be below --min");
  if (c.q_max >= (1ull << 31)) throw ConfigError("--max must be below 2^31");
  const int digits = c.extended ? std::numeric_limits<long double>::digits : std::numeric_limits<double>::digits;
  if (c.n_bits < 2 || c.n_bits > std::min(digits, kMaxTableBits))
    throw ConfigError("--bits must lie in [2, " + std::to_string(std::min(digits, kMaxTableBits)) + "]");
  if (c.workers < 1) throw ConfigError("--workers must be at least 1");
  if (c.checkpoint_every < 1) throw ConfigError("--checkpoint-every must be at least 1");
  if (c.mode != RunMode::fft && c.q_max > c.direct_cap)
    throw ConfigError("mode " + std::string(to_string(c.mode)) + " needs --max <= " + std::to_string(c.direct_cap));
}

// FNV-1a over the fields that determine the CSV contents.
inline std::uint64_t config_hash(const RunConfig& c) {
  std::ostringstream key;
  key << "min=" << c.q_min << ";max=" << c.q_max << ";bits=" << c.n_bits << ";mode=" << to_string(c.mode)
      << ";extended=" << c.extended << ";tol=" << c.route_tolerance;
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : key.str()) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

struct Checkpoint {
  std::uint64_t last_completed_prime = 0;
  std::uint64_t config_hash = 0;
  std::uint64_t records = 0;
  std::uint64_t max_bytes = 0;  // length of Mq.csv
  std::uint64_t min_bytes = 0;  // length of mq.csv
  std::uint64_t failure_bytes = 0;  // length of failures.txt
};

inline void write_checkpoint(const fs::path& path, const Checkpoint& cp) {
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    char hash[32];
    std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(cp.config_hash));
    out << "last_completed_prime " << cp.last_completed_prime << '\n'
        << "config_hash " << hash << '\n'
        << "records " << cp.records << '\n'
        << "Mq_bytes " << cp.max_bytes << '\n'
        << "mq_bytes " << cp.min_bytes << '\n'
        << "failures_bytes " << cp.failure_bytes << '\n';
    if (!out.flush()) throw std::runtime_error("cannot write " + tmp.string());
  }
  fs::rename(tmp, path);
}

inline std::optional<Checkpoint> read_checkpoint(const fs::path& path) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  Checkpoint cp;
  std::string key, value;
  int seen = 0;
  while (in >> key >> value) {
    if (key == "last_completed_prime") cp.last_completed_prime = std::stoull(value), ++seen;
    else if (key == "config_hash") cp.config_hash = std::stoull(value, nullptr, 16), ++seen;
    else if (key == "records") cp.records = std::stoull(value), ++seen;
    else if (key == "Mq_bytes") cp.max_bytes = std::stoull(value), ++seen;
    else if (key == "mq_bytes") cp.min_bytes = std::stoull(value), ++seen;
    else if (key == "failures_bytes") cp.failure_bytes = std::stoull(value), ++seen;
  }
  if (seen != 6) throw std::runtime_error("malformed checkpoint " + path.string());
  return cp;
}

// One prime's result as written to the CSVs.
struct PrimeOutcome {
  std::uint32_t q = 0;
  std::string max_text;  // formatted M_q, or "nan"
  std::string min_text;
  std::string failure;   // empty when the numbers are usable
};

namespace detail {

template <std::floating_point Real>
std::string format_value(Real v) {
  if (!std::isfinite(v)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.19Lg", static_cast<long double>(v));
  return buf;
}

template <std::floating_point Real>
bool spectrum_finite(const LValueSpectrum<Real>& s) {
  for (Real v : s.even_values)
    if (!std::isfinite(v) || !(v > 0)) return false;
  for (Real v : s.odd_values)
    if (!std::isfinite(v) || !(v > 0)) return false;
  return true;
}

template <std::floating_point Real>
Real max_relative_difference(const LValueSpectrum<Real>& a, const LValueSpectrum<Real>& b) {
  Real worst = 0;
  auto scan = [&](const std::vector<Real>& x, const std::vector<Real>& y) {
    for (std::size_t i = 0; i < x.size(); ++i) worst = std::max(worst, std::fabs(x[i] - y[i]) / std::fabs(y[i]));
  };
  scan(a.even_values, b.even_values);
  scan(a.odd_values, b.odd_values);
  return worst;
}

template <std::floating_point Real>
std::pair<Real, Real> spectrum_extremes(const LValueSpectrum<Real>& s) {
  Real hi = -std::numeric_limits<Real>::infinity();
  Real lo = std::numeric_limits<Real>::infinity();
  for (Real v : s.even_values) hi = std::max(hi, v), lo = std::min(lo, v);
  for (Real v : s.odd_values) hi = std::max(hi, v), lo = std::min(lo, v);
  return {hi, lo};
}

template <std::floating_point Real>
PrimeOutcome compute_prime(std::uint32_t q, const RunConfig& config, const ZetaTable& table) {
  PrimeOutcome out;
  out.q = q;
  const PrecisionBudget budget{config.n_bits};
  LValueSpectrum<Real> chosen;
  try {
    if (config.mode == RunMode::direct) {
      chosen = l_values_direct<Real>(q, budget, table, config.direct_cap);
    } else {
      chosen = l_values<Real>(q, budget, table);
    }
    if (config.mode == RunMode::both && spectrum_finite(chosen)) {
      const auto routes = l_values_direct_routes<Real>(q, budget, table, config.direct_cap);
      const Real gap = max_relative_difference(chosen, routes.gamma_bernoulli);
      const Real route_gap = std::max(routes.max_relative_gap, max_relative_difference(chosen, routes.digamma));
      if (!(gap <= config.route_tolerance) || !(route_gap <= config.route_tolerance)) {
        char msg[128];
        std::snprintf(msg, sizeof msg, "fft/direct disagreement %.3Lg (routes %.3Lg)",
                      static_cast<long double>(gap), static_cast<long double>(route_gap));
        out.failure = msg;
      }
    }
  } catch (const std::exception& e) {
    out.failure = e.what();
    out.max_text = out.min_text = "nan";
    return out;
  }
  if (!spectrum_finite(chosen)) {
    out.failure = "non-finite or non-positive entry in spectrum";
    out.max_text = out.min_text = "nan";
    return out;
  }
  const auto [hi, lo] = spectrum_extremes(chosen);
  out.max_text = format_value(hi);
  out.min_text = format_value(lo);
  return out;
}

inline std::uint64_t file_size_or_zero(const fs::path& p) {
  std::error_code ec;
  const auto n = fs::file_size(p, ec);
  return ec ? 0 : n;
}

}  // namespace detail

struct Extreme {
  double value = std::numeric_limits<double>::quiet_NaN();
  std::uint32_t q = 0;
};

struct SummaryLine {
  std::string_view name;
  Extreme min;
  Extreme max;
};

struct FlagTally {
  std::uint64_t pass = 0, fail = 0, not_applicable = 0, marginal = 0;
  std::vector<std::uint32_t> failing_primes;
};

struct RunSummary {
  std::uint64_t records = 0;
  std::uint64_t last_prime = 0;
  bool complete = false;
  // M_q, m_q, M'_q = M_q / f(q), m'_q = m_q g(q), M''_q = M_q / log log q, m''_q = m_q log log q
  std::array<SummaryLine, 6> lines{};
  std::array<FlagTally, static_cast<std::size_t>(Inequality::count)> flags{};
  FlagTally lls_upper, lls_lower;
  std::vector<std::uint32_t> numerical_failures;

  bool theorem_failure() const {
    for (const auto& f : flags)
      if (f.fail) return true;
    return false;
  }
};

struct RunResult {
  RunSummary summary;
  int exit_code = 0;  // 0 clean, 2 theorem flag failure, 3 numerical failure
};

// Reads one "q,value" CSV. Rows whose value is not a number are kept as NaN.
inline std::vector<std::pair<std::uint32_t, double>> read_value_csv(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::vector<std::pair<std::uint32_t, double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw std::runtime_error("malformed row in " + path.string() + ": " + line);
    const auto q = static_cast<std::uint32_t>(std::stoul(line.substr(0, comma)));
    const std::string text = line.substr(comma + 1);
    char* end = nullptr;
    double v = std::strtod(text.c_str(), &end);
    if (end == text.c_str()) v = std::numeric_limits<double>::quiet_NaN();
    rows.emplace_back(q, v);
  }
  return rows;
}

inline RunSummary summarize(const fs::path& out_dir, double guard = kDefaultGuardBand) {
  const auto maxima = read_value_csv(out_dir / "Mq.csv");
  std::vector<std::uint32_t> flagged;
  if (std::ifstream failures(out_dir / "failures.txt"); failures) {
    std::string line;
    while (std::getline(failures, line))
      if (!line.empty()) flagged.push_back(static_cast<std::uint32_t>(std::stoul(line)));
  }
  const auto minima = read_value_csv(out_dir / "mq.csv");
  if (maxima.size() != minima.size()) throw std::runtime_error("Mq.csv and mq.csv differ in length");
  RunSummary s;
  constexpr std::array<std::string_view, 6> names = {"M_q", "m_q", "M'_q = M_q/f(q)", "m'_q = m_q g(q)",
                                                     "M''_q = M_q/log log q", "m''_q = m_q log log q"};
  for (std::size_t i = 0; i < names.size(); ++i) s.lines[i].name = names[i];
  auto track = [](SummaryLine& line, double v, std::uint32_t q) {
    if (std::isnan(line.min.value) || v < line.min.value) line.min = {v, q};
    if (std::isnan(line.max.value) || v > line.max.value) line.max = {v, q};
  };
  auto tally = [](FlagTally& t, const InequalityFlag& f, std::uint32_t q) {
    switch (f.state) {
      case FlagState::pass: ++t.pass; break;
      case FlagState::fail: ++t.fail; t.failing_primes.push_back(q); break;
      case FlagState::not_applicable: ++t.not_applicable; break;
    }
    if (f.marginal && f.state != FlagState::not_applicable) ++t.marginal;
  };
  for (std::size_t i = 0; i < maxima.size(); ++i) {
    const auto [q, hi] = maxima[i];
    const auto [q2, lo] = minima[i];
    if (q != q2) throw std::runtime_error("Mq.csv and mq.csv rows out of step");
    ++s.records;
    s.last_prime = q;
    const bool listed = std::find(flagged.begin(), flagged.end(), q) != flagged.end();
    if (listed || !std::isfinite(hi) || !std::isfinite(lo) || !(lo > 0) || hi < lo) s.numerical_failures.push_back(q);
    if (!std::isfinite(hi) || !std::isfinite(lo) || !(lo > 0) || hi < lo) continue;
    const BoundRecord r = make_record(q, hi, lo, guard);
    track(s.lines[0], r.max_value, q);
    track(s.lines[1], r.min_value, q);
    track(s.lines[2], r.max_over_f(), q);
    track(s.lines[3], r.min_times_g(), q);
    track(s.lines[4], r.max_over_loglog(), q);
    track(s.lines[5], r.min_times_loglog(), q);
    for (std::size_t k = 0; k < r.flags.size(); ++k) tally(s.flags[k], r.flags[k], q);
    tally(s.lls_upper, r.lls.upper, q);
    tally(s.lls_lower, r.lls.lower, q);
  }
  return s;
}

inline void print_summary(std::ostream& out, const RunSummary& s) {
  char buf[256];
  out << "primes processed: " << s.records << (s.complete ? "" : " (incomplete)") << '\n';
  for (const auto& line : s.lines) {
    if (line.min.q == 0) continue;
    std::snprintf(buf, sizeof buf, "%-24s min %.12f at q=%u   max %.12f at q=%u\n", std::string(line.name).c_str(),
                  line.min.value, line.min.q, line.max.value, line.max.q);
    out << buf;
  }
  out << "inequality        pass     fail      n/a  marginal\n";
  auto row = [&](std::string_view name, const FlagTally& t) {
    std::snprintf(buf, sizeof buf, "%-12s %9llu %8llu %8llu %9llu\n", std::string(name).c_str(),
                  static_cast<unsigned long long>(t.pass), static_cast<unsigned long long>(t.fail),
                  static_cast<unsigned long long>(t.not_applicable), static_cast<unsigned long long>(t.marginal));
    out << buf;
    if (!t.failing_primes.empty()) {
      out << "  failing q:";
      for (std::size_t i = 0; i < t.failing_primes.size() && i < 20; ++i) out << ' ' << t.failing_primes[i];
      if (t.failing_primes.size() > 20) out << " ...";
      out << '\n';
    }
  };
  for (std::size_t k = 0; k < s.flags.size(); ++k) row(kInequalityNames[k], s.flags[k]);
  row("LLS_upper*", s.lls_upper);
  row("LLS_lower*", s.lls_lower);
  out << "(* informational, not asserted)\n";
  if (!s.numerical_failures.empty()) {
    out << "numerical failures:";
    for (auto q : s.numerical_failures) out << ' ' << q;
    out << '\n';
  }
}

namespace detail {

template <std::floating_point Real>
bool run_primes(const RunConfig& config, const std::vector<std::uint32_t>& primes, Checkpoint cp,
                std::ostream* log) {
  const ZetaTable table = build_zeta_table(config.n_bits);
  const fs::path max_path = config.out_dir / "Mq.csv";
  const fs::path min_path = config.out_dir / "mq.csv";
  const fs::path cp_path = config.out_dir / "checkpoint.txt";

  std::ofstream max_csv(max_path, std::ios::app | std::ios::binary);
  std::ofstream min_csv(min_path, std::ios::app | std::ios::binary);
  std::ofstream failures(config.out_dir / "failures.txt", std::ios::app | std::ios::binary);
  if (!max_csv || !min_csv || !failures) throw std::runtime_error("cannot open CSV files in " + config.out_dir.string());

  std::vector<std::optional<PrimeOutcome>> results(primes.size());
  std::mutex mutex;
  std::condition_variable ready;
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};

  auto worker = [&] {
    for (;;) {
      if (stop.load()) return;
      const std::size_t i = next.fetch_add(1);
      if (i >= primes.size()) return;
      PrimeOutcome outcome = compute_prime<Real>(primes[i], config, table);
      {
        std::lock_guard lock(mutex);
        results[i] = std::move(outcome);
      }
      ready.notify_all();
    }
  };
  std::vector<std::jthread> pool;
  const int n_workers = static_cast<int>(std::min<std::size_t>(config.workers, std::max<std::size_t>(1, primes.size())));
  for (int w = 0; w < n_workers; ++w) pool.emplace_back(worker);

  auto flush_checkpoint = [&] {
    max_csv.flush();
    min_csv.flush();
    failures.flush();
    if (!max_csv || !min_csv || !failures) throw std::runtime_error("write failure in " + config.out_dir.string());
    cp.max_bytes = static_cast<std::uint64_t>(max_csv.tellp());
    cp.min_bytes = static_cast<std::uint64_t>(min_csv.tellp());
    cp.failure_bytes = static_cast<std::uint64_t>(failures.tellp());
    write_checkpoint(cp_path, cp);
  };

  bool stopped = false;
  std::uint64_t since_checkpoint = 0;
  try {
    for (std::size_t i = 0; i < primes.size(); ++i) {
      PrimeOutcome outcome;
      {
        std::unique_lock lock(mutex);
        ready.wait(lock, [&] { return results[i].has_value(); });
        outcome = std::move(*results[i]);
        results[i].reset();
      }
      max_csv << outcome.q << ',' << outcome.max_text << '\n';
      min_csv << outcome.q << ',' << outcome.min_text << '\n';
      if (!outcome.failure.empty()) {
        failures << outcome.q << ' ' << outcome.failure << '\n';
        if (log) *log << "q=" << outcome.q << ": " << outcome.failure << '\n';
      }
      cp.last_completed_prime = outcome.q;
      ++cp.records;
      if (++since_checkpoint >= config.checkpoint_every) {
        flush_checkpoint();
        since_checkpoint = 0;
      }
      if (config.stop_after && outcome.q >= config.stop_after && i + 1 < primes.size()) {
        stopped = true;
        break;
      }
    }
    flush_checkpoint();
  } catch (...) {
    stop = true;
    throw;
  }
  stop = true;
  return !stopped;
}

}  // namespace detail

// Runs (or resumes) a range. Throws ConfigError for invalid configurations
// and refused resumes; I/O failures propagate with the last checkpoint intact.
inline RunResult run_range(const RunConfig& config, std::ostream* log = nullptr) {
  validate(config);
  const auto primes = enumerate_primes(config.q_min, config.q_max);
  const std::uint64_t hash = config_hash(config);
  const fs::path cp_path = config.out_dir / "checkpoint.txt";
  const fs::path max_path = config.out_dir / "Mq.csv";
  const fs::path min_path = config.out_dir / "mq.csv";
  const fs::path failure_path = config.out_dir / "failures.txt";

  Checkpoint cp;
  std::vector<std::uint32_t> todo;
  if (config.resume) {
    const auto existing = read_checkpoint(cp_path);
    if (!existing) throw ConfigError("nothing to resume: no checkpoint in " + config.out_dir.string());
    if (existing->config_hash != hash)
      throw ConfigError("checkpoint in " + config.out_dir.string() + " was written with a different configuration");
    cp = *existing;
    if (detail::file_size_or_zero(max_path) < cp.max_bytes || detail::file_size_or_zero(min_path) < cp.min_bytes ||
        detail::file_size_or_zero(failure_path) < cp.failure_bytes)
      throw std::runtime_error("output files are shorter than the checkpoint records");
    fs::resize_file(max_path, cp.max_bytes);
    fs::resize_file(min_path, cp.min_bytes);
    fs::resize_file(failure_path, cp.failure_bytes);
    for (auto q : primes)
      if (q > cp.last_completed_prime) todo.push_back(q);
  } else {
    fs::create_directories(config.out_dir);
    std::ofstream(max_path, std::ios::trunc);
    std::ofstream(min_path, std::ios::trunc);
    std::ofstream(failure_path, std::ios::trunc);
    cp.config_hash = hash;
    write_checkpoint(cp_path, cp);
    todo = primes;
  }

  bool complete = true;
  if (!todo.empty()) {
    complete = config.extended ? detail::run_primes<long double>(config, todo, cp, log)
                               : detail::run_primes<double>(config, todo, cp, log);
  }

  RunResult result;
  result.summary = summarize(config.out_dir, config.guard_band);
  result.summary.complete = complete;
  {
    std::ofstream out(config.out_dir / "summary.txt", std::ios::trunc);
    print_summary(out, result.summary);
  }
  if (!result.summary.numerical_failures.empty()) result.exit_code = 3;
  else if (result.summary.theorem_failure()) result.exit_code = 2;
  return result;
}

enum class PlotKind { Mq, mq, Mq_normalized, mq_normalized, ULI, LLI };

inline PlotKind parse_plot_kind(std::string_view s) {
  if (s == "Mq") return PlotKind::Mq;
  if (s == "mq") return PlotKind::mq;
  if (s == "Mq_normalized") return PlotKind::Mq_normalized;
  if (s == "mq_normalized") return PlotKind::mq_normalized;
  if (s == "ULI") return PlotKind::ULI;
  if (s == "LLI") return PlotKind::LLI;
  throw std::invalid_argument("unknown plot kind: " + std::string(s));
}

inline std::string_view to_string(PlotKind k) {
  switch (k) {
    case PlotKind::Mq: return "Mq";
    case PlotKind::mq: return "mq";
    case PlotKind::Mq_normalized: return "Mq_normalized";
    case PlotKind::mq_normalized: return "mq_normalized";
    case PlotKind::ULI: return "ULI";
    case PlotKind::LLI: return "LLI";
  }
  return "?";
}

// CSV a plot kind reads from.
inline std::string_view plot_source(PlotKind k) {
  switch (k) {
    case PlotKind::Mq:
    case PlotKind::Mq_normalized:
    case PlotKind::ULI: return "Mq.csv";
    default: return "mq.csv";
  }
}

// Writes a gnuplot script drawing the CSV as a scatter plot together with the
// guide lines of the corresponding inequality. The script refers to the CSV
// by file name, so it is meant to be run from the directory holding both.
inline void emit_plot_script(const fs::path& csv_path, PlotKind kind, const fs::path& script_path) {
  if (!fs::exists(csv_path)) throw std::runtime_error("emit_plot_script: missing CSV " + csv_path.string());
  const auto rows = read_value_csv(csv_path);

  struct Guide {
    const char* expr;
    const char* color;
    const char* title;
  };
  const char* using_expr = "1:2";
  const char* ylabel = "";
  std::vector<Guide> guides;
  switch (kind) {
    case PlotKind::Mq:
      ylabel = "M_q";
      guides = {{"0.62*L2*f(x)", "blue", "0.62 L_2 f(q)"},
                {"0.325*L2*f(x)", "red", "0.325 L_2 f(q)"},
                {"0.66*L2*log(log(x))", "dark-green", "0.66 L_2 log log q"},
                {"0.4*L2*log(log(x))", "orange", "0.4 L_2 log log q"}};
      break;
    case PlotKind::Mq_normalized:
      ylabel = "M_q / f(q)";
      using_expr = "1:($2/f($1))";
      guides = {{"0.62*L2", "blue", "0.62 L_2"}, {"0.325*L2", "red", "0.325 L_2"}};
      break;
    case PlotKind::ULI:
      ylabel = "M_q / log log q";
      using_expr = "1:($2/log(log($1)))";
      guides = {{"0.66*L2", "dark-green", "0.66 L_2"}, {"0.4*L2", "orange", "0.4 L_2"}};
      break;
    case PlotKind::mq:
      ylabel = "m_q";
      guides = {{"5*L1/g(x)", "blue", "5 L_1 / g(q)"},
                {"2.35*L1/g(x)", "red", "2.35 L_1 / g(q)"},
                {"2*L1/log(log(x))", "dark-green", "2 L_1 / log log q"},
                {"1.13*L1/log(log(x))", "orange", "1.13 L_1 / log log q"}};
      break;
    case PlotKind::mq_normalized:
      ylabel = "m_q g(q)";
      using_expr = "1:($2*g($1))";
      guides = {{"5*L1", "blue", "5 L_1"}, {"2.35*L1", "red", "2.35 L_1"}};
      break;
    case PlotKind::LLI:
      ylabel = "m_q log log q";
      using_expr = "1:($2*log(log($1)))";
      guides = {{"2*L1", "dark-green", "2 L_1"}, {"1.13*L1", "orange", "1.13 L_1"}};
      break;
  }

  std::uint32_t lo = 3, hi = 1000;
  if (!rows.empty()) {
    lo = rows.front().first;
    hi = std::max(rows.back().first, lo + 1);
  }

  std::ofstream out(script_path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + script_path.string());
  const std::string name(to_string(kind));
  out << "# " << name << " scatter plot; run with: gnuplot " << script_path.filename().string() << '\n'
      << "set terminal pngcairo size 1200,800\n"
      << "set output 'plot_" << name << ".png'\n"
      << "set datafile separator ','\n"
      << "set key outside right top\n"
      << "set xlabel 'q'\n"
      << "set ylabel '" << ylabel << "'\n"
      << "set xrange [" << lo << ":" << hi << "]\n"
      << "set samples 2000\n"
      << "L2 = 2*exp(0.57721566490153286061)\n"
      << "L1 = pi**2/(12*exp(0.57721566490153286061))\n"
      << "f(x) = log(log(x)) - log(2) + 0.5 + 1/log(log(x))\n"
      << "g(x) = f(x) + 14*log(log(x))/log(x)\n"
      << "plot ";
  bool first = true;
  if (!rows.empty()) {
    out << "'" << csv_path.filename().string() << "' using " << using_expr
        << " with points pt 7 ps 0.4 lc rgb 'black' title '" << ylabel << "'";
    first = false;
  }
  for (const auto& g : guides) {
    if (!first) out << ", \\\n     ";
    out << g.expr << " with lines lw 2 lc rgb '" << g.color << "' title '" << g.title << "'";
    first = false;
  }
  out << '\n';
}

}  // namespace littlewood
