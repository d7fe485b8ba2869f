#pragma once

// log Gamma and digamma on (0, 1) from truncated zeta-value power series.
//
// Arguments are always moved into the fast window: for x in (1/2, 1) the
// series runs in powers of 1 - x, for x in (0, 1/2) it runs in powers of x
// after shifting to 1 + x. The truncation indices below keep the discarded
// tail under 2^-(n+1), so every result carries a truncation error of at most
// 2^-n before rounding.

#include <array>
#include <cmath>
#include <concepts>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>

#include "littlewood/compensated_sum.hpp"
#include "littlewood/constants.hpp"
#include "littlewood/zeta_table.hpp"

namespace littlewood {

// Target precision in binary digits.
struct PrecisionBudget {
  int n;
};

template <std::floating_point Real>
struct SeriesEvalReport {
  Real value;
  int terms_used;   // number of zeta-weighted summands actually added
  int bound_index;  // truncation index r for the series
};

template <std::floating_point Real>
struct ConstantFromZeta {
  Real value;
  int terms_used;
};

namespace detail {

template <std::floating_point Real>
void check_budget(PrecisionBudget budget) {
  if (budget.n < 2 || budget.n > std::numeric_limits<Real>::digits)
    throw std::invalid_argument("precision budget n=" + std::to_string(budget.n) +
                                " outside [2, " + std::to_string(std::numeric_limits<Real>::digits) + "]");
}

template <std::floating_point Real>
void check_unit(Real x, const char* who) {
  if (!(x > 0 && x < 1)) throw std::invalid_argument(std::string(who) + ": argument outside (0, 1)");
}

template <std::floating_point Real>
void check_not_half(Real x, const char* who) {
  check_unit(x, who);
  if (x == Real(0.5))
    throw std::domain_error(std::string(who) + ": x = 1/2 has a closed form, not a truncation index");
}

// ceil((bits log 2 + |log(1 - u)|) / |log u|) for the expansion variable u.
template <std::floating_point Real>
int ceil_ratio(Real u, int bits) {
  const long double uu = static_cast<long double>(u);
  const long double num = bits * std::log(2.0L) + std::fabs(std::log1p(-uu));
  return static_cast<int>(std::ceil(num / std::fabs(std::log(uu))));
}

// Scratch space for one series evaluation; n <= 64 keeps every index < 80.
template <std::floating_point Real>
using TermBuffer = std::array<Real, 128>;

}  // namespace detail

// r_Gamma(x, n) for x in (1/2, 1) and r'_Gamma(x, n) for x in (0, 1/2): the
// largest k kept in the log Gamma series. At most n + 1.
template <std::floating_point Real>
int truncation_index_gamma(Real x, int n) {
  detail::check_not_half(x, "truncation_index_gamma");
  if (n < 2) throw std::invalid_argument("truncation_index_gamma: n must be at least 2");
  const Real u = x > Real(0.5) ? Real(1) - x : x;
  return detail::ceil_ratio(u, n + 1) - 1;
}

// r_psi(x, n) and r'_psi(x, n) for the digamma series. At most n + 3.
template <std::floating_point Real>
int truncation_index_psi(Real x, int n) {
  detail::check_not_half(x, "truncation_index_psi");
  if (n < 2) throw std::invalid_argument("truncation_index_psi: n must be at least 2");
  const Real u = x > Real(0.5) ? Real(1) - x : x;
  return detail::ceil_ratio(u, n + 2);
}

template <std::floating_point Real>
SeriesEvalReport<Real> log_gamma_unit_report(Real x, PrecisionBudget budget, const ZetaTable& table) {
  detail::check_budget<Real>(budget);
  detail::check_unit(x, "log_gamma_unit");
  using C = Constants<Real>;
  if (x == Real(0.5)) return {C::log_pi / 2, 0, 0};

  const int r = truncation_index_gamma(x, budget.n);
  detail::TermBuffer<Real> buf;
  std::size_t len = 0;
  if (x > Real(0.5)) {
    // gamma (1-x) + sum_{k>=2} zeta(k) (1-x)^k / k
    const Real u = Real(1) - x;
    buf[len++] = C::euler_gamma * u;
    Real power = u;
    for (int k = 2; k <= r; ++k) {
      power *= u;
      buf[len++] = table.value_as<Real>(k) * power / Real(k);
    }
  } else {
    // -log x - gamma x + sum_{k>=2} (-1)^k zeta(k) x^k / k
    buf[len++] = -std::log(x);
    buf[len++] = -C::euler_gamma * x;
    Real power = x;
    for (int k = 2; k <= r; ++k) {
      power *= x;
      const Real term = table.value_as<Real>(k) * power / Real(k);
      buf[len++] = (k % 2 == 0) ? term : -term;
    }
  }
  const int terms = r >= 2 ? r - 1 : 0;
  return {compensated_sum<Real>(std::span<const Real>(buf.data(), len)), terms, r};
}

template <std::floating_point Real>
Real log_gamma_unit(Real x, PrecisionBudget budget, const ZetaTable& table) {
  return log_gamma_unit_report(x, budget, table).value;
}

// log Gamma on the positive axis via the recurrence log Gamma(1+x) =
// log Gamma(x) + log x. No asymptotic fast path: cost grows with floor(x).
template <std::floating_point Real>
Real log_gamma_positive(Real x, PrecisionBudget budget, const ZetaTable& table) {
  if (!(x > 0) || !std::isfinite(x)) throw std::invalid_argument("log_gamma_positive: x must be positive");
  if (x < 1) return log_gamma_unit(x, budget, table);
  const Real whole = std::floor(x);
  const Real frac = x - whole;
  std::vector<Real> terms;
  if (frac == 0) {
    for (Real k = 2; k < whole; k += 1) terms.push_back(std::log(k));
    return compensated_sum<Real>(terms);
  }
  terms.push_back(log_gamma_unit(frac, budget, table));
  for (Real k = 0; k < whole; k += 1) terms.push_back(std::log(frac + k));
  return compensated_sum<Real>(terms);
}

template <std::floating_point Real>
SeriesEvalReport<Real> psi_unit_report(Real x, PrecisionBudget budget, const ZetaTable& table) {
  detail::check_budget<Real>(budget);
  detail::check_unit(x, "psi_unit");
  using C = Constants<Real>;
  if (x == Real(0.5)) return {-2 * C::log2 - C::euler_gamma, 0, 0};

  const int r = truncation_index_psi(x, budget.n);
  detail::TermBuffer<Real> buf;
  std::size_t len = 0;
  if (x > Real(0.5)) {
    // -gamma - sum_{k>=2} zeta(k) (1-x)^(k-1)
    const Real u = Real(1) - x;
    buf[len++] = -C::euler_gamma;
    Real power = 1;
    for (int k = 2; k <= r; ++k) {
      power *= u;
      buf[len++] = -table.value_as<Real>(k) * power;
    }
  } else {
    // -1/x - gamma - sum_{k>=2} (-1)^(k-1) zeta(k) x^(k-1)
    buf[len++] = -1 / x;
    buf[len++] = -C::euler_gamma;
    Real power = 1;
    for (int k = 2; k <= r; ++k) {
      power *= x;
      const Real term = table.value_as<Real>(k) * power;
      buf[len++] = (k % 2 == 0) ? term : -term;
    }
  }
  const int terms = r >= 2 ? r - 1 : 0;
  return {compensated_sum<Real>(std::span<const Real>(buf.data(), len)), terms, r};
}

template <std::floating_point Real>
Real psi_unit(Real x, PrecisionBudget budget, const ZetaTable& table) {
  return psi_unit_report(x, budget, table).value;
}

template <std::floating_point Real>
Real psi_positive(Real x, PrecisionBudget budget, const ZetaTable& table) {
  if (!(x > 0) || !std::isfinite(x)) throw std::invalid_argument("psi_positive: x must be positive");
  if (x < 1) return psi_unit(x, budget, table);
  const Real whole = std::floor(x);
  const Real frac = x - whole;
  std::vector<Real> terms;
  if (frac == 0) {
    terms.push_back(-Constants<Real>::euler_gamma);
    for (Real k = 1; k < whole; k += 1) terms.push_back(1 / k);
    return compensated_sum<Real>(terms);
  }
  terms.push_back(psi_unit(frac, budget, table));
  for (Real k = 0; k < whole; k += 1) terms.push_back(1 / (frac + k));
  return compensated_sum<Real>(terms);
}

namespace detail {

// Number of even (or odd) zeta terms in the reflection series: the full
// series keeps k <= r, so ceil(r / 2) summands of one parity.
inline int half_count(int r) { return r > 0 ? (r + 1) / 2 : 0; }

// sum_{l=1}^{count} zeta(2l + shift) u^(2l + power_offset) * weight(l); the
// leading terms are placed ahead of the series in the compensated sum.
template <std::floating_point Real, class Weight>
Real reflection_series(Real u, int count, int shift, int power_offset, std::span<const Real> leading,
                       const ZetaTable& table, Weight weight) {
  TermBuffer<Real> buf;
  std::size_t len = 0;
  for (Real t : leading) buf[len++] = t;
  const Real u2 = u * u;
  // u^(2l + power_offset) starting at l = 1
  Real power = power_offset >= 0 ? u2 : u;
  for (int i = 0; i < power_offset; ++i) power *= u;
  for (int l = 1; l <= count; ++l) {
    buf[len++] = weight(l) * table.value_as<Real>(2 * l + shift) * power;
    power *= u2;
  }
  return compensated_sum<Real>(std::span<const Real>(buf.data(), len));
}

// log Gamma(x) - log Gamma(1 - x) for x = u <= 1/2, with `count` odd zeta
// terms. Used without the x = 1/2 dispatch to expose the series limit there.
template <std::floating_point Real>
Real log_gamma_reflection_diff_series(Real u, int count, const ZetaTable& table) {
  const std::array<Real, 2> lead = {-std::log(u), -2 * Constants<Real>::euler_gamma * u};
  return reflection_series<Real>(u, count, 1, 1, lead, table,
                                 [](int l) { return Real(-2) / Real(2 * l + 1); });
}

}  // namespace detail

// log Gamma(x) + log Gamma(1 - x) from the even zeta values only.
template <std::floating_point Real>
SeriesEvalReport<Real> log_gamma_reflection_sum_report(Real x, PrecisionBudget budget, const ZetaTable& table) {
  detail::check_budget<Real>(budget);
  detail::check_not_half(x, "log_gamma_reflection_sum");
  const int r = detail::half_count(truncation_index_gamma(x, budget.n));
  const Real u = x > Real(0.5) ? Real(1) - x : x;
  const std::array<Real, 1> lead = {-std::log(u)};
  const Real v = detail::reflection_series<Real>(u, r, 0, 0, lead, table, [](int l) { return Real(1) / Real(l); });
  return {v, r, r};
}

template <std::floating_point Real>
Real log_gamma_reflection_sum(Real x, PrecisionBudget budget, const ZetaTable& table) {
  return log_gamma_reflection_sum_report(x, budget, table).value;
}

// log Gamma(x) - log Gamma(1 - x) from the odd zeta values only; 0 at x = 1/2.
template <std::floating_point Real>
SeriesEvalReport<Real> log_gamma_reflection_diff_report(Real x, PrecisionBudget budget, const ZetaTable& table) {
  detail::check_budget<Real>(budget);
  detail::check_unit(x, "log_gamma_reflection_diff");
  if (x == Real(0.5)) return {Real(0), 0, 0};
  const int r = detail::half_count(truncation_index_gamma(x, budget.n));
  if (x < Real(0.5)) return {detail::log_gamma_reflection_diff_series(x, r, table), r, r};
  return {-detail::log_gamma_reflection_diff_series(Real(1) - x, r, table), r, r};
}

template <std::floating_point Real>
Real log_gamma_reflection_diff(Real x, PrecisionBudget budget, const ZetaTable& table) {
  return log_gamma_reflection_diff_report(x, budget, table).value;
}

// psi(x) - psi(1 - x) = -pi cot(pi x), from the even zeta values only.
template <std::floating_point Real>
SeriesEvalReport<Real> psi_reflection_diff_report(Real x, PrecisionBudget budget, const ZetaTable& table) {
  detail::check_budget<Real>(budget);
  detail::check_unit(x, "psi_reflection_diff");
  if (x == Real(0.5)) return {Real(0), 0, 0};
  const int r = detail::half_count(truncation_index_psi(x, budget.n));
  const Real u = x > Real(0.5) ? Real(1) - x : x;
  // -1/u + 2 sum zeta(2l) u^(2l-1)
  const std::array<Real, 1> lead = {-1 / u};
  const Real v = detail::reflection_series<Real>(u, r, 0, -1, lead, table, [](int) { return Real(2); });
  return {x < Real(0.5) ? v : -v, r, r};
}

template <std::floating_point Real>
Real psi_reflection_diff(Real x, PrecisionBudget budget, const ZetaTable& table) {
  return psi_reflection_diff_report(x, budget, table).value;
}

// psi(x) + psi(1 - x), from the odd zeta values only.
template <std::floating_point Real>
SeriesEvalReport<Real> psi_reflection_sum_report(Real x, PrecisionBudget budget, const ZetaTable& table) {
  detail::check_budget<Real>(budget);
  detail::check_unit(x, "psi_reflection_sum");
  using C = Constants<Real>;
  if (x == Real(0.5)) return {2 * (-2 * C::log2 - C::euler_gamma), 0, 0};
  const int r = detail::half_count(truncation_index_psi(x, budget.n));
  const Real u = x > Real(0.5) ? Real(1) - x : x;
  // -2 gamma - 1/u - 2 sum zeta(2l+1) u^(2l)
  const std::array<Real, 2> lead = {-1 / u, -2 * C::euler_gamma};
  const Real v = detail::reflection_series<Real>(u, r, 1, 0, lead, table, [](int) { return Real(-2); });
  return {v, r, r};
}

template <std::floating_point Real>
Real psi_reflection_sum(Real x, PrecisionBudget budget, const ZetaTable& table) {
  return psi_reflection_sum_report(x, budget, table).value;
}

// log sin(pi x) = log pi - (log Gamma(x) + log Gamma(1 - x)).
template <std::floating_point Real>
Real log_sin_pi(Real x, PrecisionBudget budget, const ZetaTable& table) {
  detail::check_unit(x, "log_sin_pi");
  if (x == Real(0.5)) return Real(0);
  return Constants<Real>::log_pi - log_gamma_reflection_sum(x, budget, table);
}

// pi from log pi = log 2 + sum_{l>=1} zeta(2l) / (l 4^l).
template <std::floating_point Real>
ConstantFromZeta<Real> pi_from_zeta(PrecisionBudget budget, const ZetaTable& table) {
  detail::check_budget<Real>(budget);
  const Real cutoff = std::ldexp(Real(1), -budget.n - 2);
  std::vector<Real> terms{Constants<Real>::log2};
  Real quarter_power = 1;
  int used = 0;
  for (int l = 1;; ++l) {
    quarter_power /= 4;
    const Real term = table.value_as<Real>(2 * l) * quarter_power / Real(l);
    if (term < cutoff) break;
    terms.push_back(term);
    ++used;
  }
  return {std::exp(compensated_sum<Real>(terms)), used};
}

// Stieltjes: gamma = log 2 - sum_{l>=1} zeta(2l+1) / ((2l+1) 4^l).
template <std::floating_point Real>
ConstantFromZeta<Real> gamma_from_zeta(PrecisionBudget budget, const ZetaTable& table) {
  detail::check_budget<Real>(budget);
  const Real cutoff = std::ldexp(Real(1), -budget.n - 2);
  std::vector<Real> terms{Constants<Real>::log2};
  Real quarter_power = 1;
  int used = 0;
  for (int l = 1;; ++l) {
    quarter_power /= 4;
    const Real term = table.value_as<Real>(2 * l + 1) * quarter_power / Real(2 * l + 1);
    if (term < cutoff) break;
    terms.push_back(-term);
    ++used;
  }
  return {compensated_sum<Real>(terms), used};
}

}  // namespace littlewood
