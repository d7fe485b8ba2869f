#pragma once

// Extremes of |L(1, chi)| per prime and the Littlewood-type inequality
// battery evaluated on them.

#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <string_view>

#include "littlewood/character_engine.hpp"
#include "littlewood/constants.hpp"

namespace littlewood {

enum class Parity { even, odd };

inline constexpr std::string_view to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

struct Extrema {
  double max_value = 0;
  double min_value = 0;
  Parity max_parity = Parity::odd;
  Parity min_parity = Parity::odd;
  std::uint32_t max_bin = 0;
  std::uint32_t min_bin = 0;
};

// Ties go to the smallest bin, even characters before odd ones. Bins are DFT
// bins: t for chi_1^(2t) and chi_1^(2t+1).
template <std::floating_point Real>
Extrema extrema(const LValueSpectrum<Real>& spectrum) {
  if (spectrum.size() == 0) throw std::invalid_argument("extrema: empty spectrum");
  Extrema e;
  bool seeded = false;
  auto visit = [&](Real value, Parity parity, std::uint32_t bin) {
    const double v = static_cast<double>(value);
    auto earlier = [&](Parity p, std::uint32_t b) {
      return bin < b || (bin == b && parity == Parity::even && p == Parity::odd);
    };
    if (!seeded) {
      e = {v, v, parity, parity, bin, bin};
      seeded = true;
      return;
    }
    if (v > e.max_value || (v == e.max_value && earlier(e.max_parity, e.max_bin))) {
      e.max_value = v;
      e.max_parity = parity;
      e.max_bin = bin;
    }
    if (v < e.min_value || (v == e.min_value && earlier(e.min_parity, e.min_bin))) {
      e.min_value = v;
      e.min_parity = parity;
      e.min_bin = bin;
    }
  };
  for (std::size_t i = 0; i < spectrum.even_values.size(); ++i)
    visit(spectrum.even_values[i], Parity::even, static_cast<std::uint32_t>(i + 1));
  for (std::size_t i = 0; i < spectrum.odd_values.size(); ++i)
    visit(spectrum.odd_values[i], Parity::odd, static_cast<std::uint32_t>(i));
  return e;
}

struct Normalizers {
  double f;
  double g;
};

// f(q) = log log q - log 2 + 1/2 + 1/log log q,  g(q) = f(q) + 14 log log q / log q.
inline Normalizers normalizers(double q) {
  if (!(q >= 3)) throw std::invalid_argument("normalizers: q must be at least 3");
  const double log_q = std::log(q);
  const double loglog = std::log(log_q);
  const double f = loglog - Constants<double>::log2 + 0.5 + 1 / loglog;
  return {f, f + 14 * loglog / log_q};
}

struct LittlewoodIndices {
  double uli_max;  // M_q / (2 e^gamma log log q)
  double lli_min;  // m_q (12 e^gamma / pi^2) log log q
};

inline LittlewoodIndices littlewood_indices(double q, double max_value, double min_value) {
  if (!(q >= 3)) throw std::invalid_argument("littlewood_indices: q must be at least 3");
  const double loglog = std::log(std::log(q));
  return {max_value / (Constants<double>::L2 * loglog), min_value * loglog / Constants<double>::L1};
}

enum class FlagState { pass, fail, not_applicable };

inline constexpr std::string_view to_string(FlagState s) {
  switch (s) {
    case FlagState::pass: return "pass";
    case FlagState::fail: return "fail";
    case FlagState::not_applicable: return "n/a";
  }
  return "?";
}

// One inequality lhs < rhs (or lhs <= rhs for the informational checks).
// slack = rhs - lhs; marginal when |slack| is inside the guard band.
struct InequalityFlag {
  FlagState state = FlagState::not_applicable;
  double slack = 0;
  bool marginal = false;
};

enum class Inequality : std::size_t {
  max_upper,  // M_q < 0.62 L2 f(q)
  max_lower,  // M_q > 0.325 L2 f(q),           q >= 79
  uli_lower,  // max ULI > 0.4
  uli_upper,  // max ULI < 0.66,                q >= 5
  min_lower,  // m_q > 2.35 L1 / g(q)
  min_upper,  // m_q < 5 L1 / g(q),             q >= 953
  lli_upper,  // min LLI < 2
  lli_lower,  // min LLI > 1.13,                q >= 373
  count
};

inline constexpr std::array<std::string_view, static_cast<std::size_t>(Inequality::count)> kInequalityNames = {
    "M_upper", "M_lower", "ULI_lower", "ULI_upper", "m_lower", "m_upper", "LLI_upper", "LLI_lower"};

using TheoremFlags = std::array<InequalityFlag, static_cast<std::size_t>(Inequality::count)>;

struct LlsFlags {
  InequalityFlag upper;  // M_q <= 2 e^gamma f(q)
  InequalityFlag lower;  // 1 / m_q <= (12 e^gamma / pi^2) g(q)
};

inline constexpr double kDefaultGuardBand = 1e-9;

struct BoundRecord {
  std::uint32_t q = 0;
  double max_value = 0;  // M_q
  double min_value = 0;  // m_q
  Parity max_parity = Parity::odd;
  Parity min_parity = Parity::odd;
  std::uint32_t max_bin = 0;
  std::uint32_t min_bin = 0;
  double f_q = 0;
  double g_q = 0;
  double uli_max = 0;
  double lli_min = 0;
  TheoremFlags flags{};
  LlsFlags lls{};

  double max_over_f() const { return max_value / f_q; }                    // M'_q
  double min_times_g() const { return min_value * g_q; }                  // m'_q
  double max_over_loglog() const { return max_value / std::log(std::log(double(q))); }  // M''_q
  double min_times_loglog() const { return min_value * std::log(std::log(double(q))); }  // m''_q

  const InequalityFlag& flag(Inequality which) const { return flags[static_cast<std::size_t>(which)]; }
};

namespace detail {

inline InequalityFlag less_than(double lhs, double rhs, bool applicable, double guard, bool inclusive = false) {
  InequalityFlag flag;
  flag.slack = rhs - lhs;
  flag.marginal = std::fabs(flag.slack) <= guard;
  if (!applicable) {
    flag.state = FlagState::not_applicable;
    return flag;
  }
  const bool holds = inclusive ? lhs <= rhs : lhs < rhs;
  flag.state = holds ? FlagState::pass : FlagState::fail;
  return flag;
}

}  // namespace detail

inline TheoremFlags check_theorems(const BoundRecord& r, double guard = kDefaultGuardBand) {
  using C = Constants<double>;
  using detail::less_than;
  TheoremFlags out;
  auto set = [&](Inequality which, InequalityFlag flag) { out[static_cast<std::size_t>(which)] = flag; };
  set(Inequality::max_upper, less_than(r.max_value, 0.62 * C::L2 * r.f_q, true, guard));
  set(Inequality::max_lower, less_than(0.325 * C::L2 * r.f_q, r.max_value, r.q >= 79, guard));
  set(Inequality::uli_lower, less_than(0.4, r.uli_max, true, guard));
  set(Inequality::uli_upper, less_than(r.uli_max, 0.66, r.q >= 5, guard));
  set(Inequality::min_lower, less_than(C::L1 * 2.35 / r.g_q, r.min_value, true, guard));
  set(Inequality::min_upper, less_than(r.min_value, C::L1 * 5 / r.g_q, r.q >= 953, guard));
  set(Inequality::lli_upper, less_than(r.lli_min, 2.0, true, guard));
  set(Inequality::lli_lower, less_than(1.13, r.lli_min, r.q >= 373, guard));
  return out;
}

// Informational only: the effective bounds are theorems for q >= 10^10 under GRH.
inline LlsFlags check_lls(const BoundRecord& r, double guard = kDefaultGuardBand) {
  using C = Constants<double>;
  return {detail::less_than(r.max_value, C::L2 * r.f_q, true, guard, true),
          detail::less_than(1 / r.min_value, r.g_q / C::L1, true, guard, true)};
}

// Builds a record from M_q and m_q alone (locations left at their defaults).
inline BoundRecord make_record(std::uint32_t q, double max_value, double min_value,
                               double guard = kDefaultGuardBand) {
  if (!(min_value > 0) || !(max_value >= min_value))
    throw std::invalid_argument("make_record: need 0 < m_q <= M_q");
  BoundRecord r;
  r.q = q;
  r.max_value = max_value;
  r.min_value = min_value;
  const auto [f, g] = normalizers(q);
  r.f_q = f;
  r.g_q = g;
  const auto idx = littlewood_indices(q, max_value, min_value);
  r.uli_max = idx.uli_max;
  r.lli_min = idx.lli_min;
  r.flags = check_theorems(r, guard);
  r.lls = check_lls(r, guard);
  return r;
}

template <std::floating_point Real>
BoundRecord make_record(const LValueSpectrum<Real>& spectrum, double guard = kDefaultGuardBand) {
  const Extrema e = extrema(spectrum);
  BoundRecord r = make_record(spectrum.q, e.max_value, e.min_value, guard);
  r.max_parity = e.max_parity;
  r.min_parity = e.min_parity;
  r.max_bin = e.max_bin;
  r.min_bin = e.min_bin;
  return r;
}

// q,M_q,m_q,M_parity,M_bin,m_parity,m_bin,f_q,g_q,uli_max,lli_min then one
// pass/fail/n/a column per inequality.
inline std::string csv_header() {
  std::string h = "q,M_q,m_q,M_parity,M_bin,m_parity,m_bin,f_q,g_q,uli_max,lli_min";
  for (auto name : kInequalityNames) h += ',' + std::string(name);
  return h;
}

inline std::string to_csv_row(const BoundRecord& r) {
  char buf[320];
  std::snprintf(buf, sizeof buf, "%u,%.19g,%.19g,%s,%u,%s,%u,%.19g,%.19g,%.19g,%.19g", r.q, r.max_value, r.min_value,
                std::string(to_string(r.max_parity)).c_str(), r.max_bin, std::string(to_string(r.min_parity)).c_str(),
                r.min_bin, r.f_q, r.g_q, r.uli_max, r.lli_min);
  std::string row = buf;
  for (const auto& f : r.flags) row += ',' + std::string(to_string(f.state));
  return row;
}

inline bool any_failure(const TheoremFlags& flags) {
  for (const auto& f : flags)
    if (f.state == FlagState::fail) return true;
  return false;
}

}  // namespace littlewood
