#pragma once

// |L(1, chi)| for every nontrivial character mod an odd prime q.
//
// With g a primitive root and a_k = g^k mod q, the character chi_1^j takes
// the value e(jk / (q-1)) at a_k, so every character sum is a length q-1 DFT
// over k. Splitting the output bins by parity of j = 2t + l halves the
// transform length:
//   even j (l = 0): b_k = f(a_k/q) + f(a_{k+m}/q)                 bins t of DFT_m(b)
//   odd  j (l = 1): c_k = e(-k/(q-1)) (f(a_k/q) - f(a_{k+m}/q))   bins t of DFT_m(c)
// Even characters use f = log Gamma, whose pairs collapse to
// log pi - log sin(pi a_k / q); odd characters use f(x) = x, giving
// c_k = e(-k/(q-1)) (2 a_k / q - 1).

#include <algorithm>
#include <cmath>
#include <complex>
#include <concepts>
#include <numbers>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "littlewood/constants.hpp"
#include "littlewood/dft.hpp"
#include "littlewood/number_theory.hpp"
#include "littlewood/special_functions.hpp"
#include "littlewood/zeta_table.hpp"

namespace littlewood {

enum class LogSinMethod { zeta_series, native };

// Largest modulus the O(q^2) direct routes accept by default.
inline constexpr std::uint32_t kDirectOracleCap = 5000;

// even_values[t - 1] = |L(1, chi_1^(2t))| for t in [1, m);
// odd_values[t]      = |L(1, chi_1^(2t+1))| for t in [0, m).
template <std::floating_point Real>
struct LValueSpectrum {
  std::uint32_t q = 0;
  std::vector<Real> even_values;
  std::vector<Real> odd_values;

  std::uint32_t m() const { return (q - 1) / 2; }
  Real even_at(std::uint32_t t) const { return even_values.at(t - 1); }
  Real odd_at(std::uint32_t t) const { return odd_values.at(t); }
  std::size_t size() const { return even_values.size() + odd_values.size(); }
};

// b_k = -log sin(pi a_k / q); the log pi constant is dropped because it only
// reaches bin t = 0. Evaluated at min(a_k, q - a_k) / q, where sin is
// symmetric and the argument carries no cancellation.
template <std::floating_point Real>
ComplexVector<Real> decimate_even(const CharacterModulus& mod, PrecisionBudget budget, const ZetaTable& table,
                                  LogSinMethod method = LogSinMethod::zeta_series) {
  ComplexVector<Real> b(mod.m);
  const Real q = static_cast<Real>(mod.q);
  for (std::uint32_t k = 0; k < mod.m; ++k) {
    const std::uint32_t a = mod.powers[k];
    const Real u = static_cast<Real>(std::min(a, mod.q - a)) / q;
    const Real v = method == LogSinMethod::zeta_series
                       ? log_sin_pi(u, budget, table)
                       : std::log(std::sin(Constants<Real>::pi * u));
    b[k] = {-v, Real(0)};
  }
  return b;
}

// c_k = e(-k / (q-1)) (2 a_k / q - 1).
template <std::floating_point Real>
ComplexVector<Real> decimate_odd(const CharacterModulus& mod) {
  ComplexVector<Real> c(mod.m);
  const Real q = static_cast<Real>(mod.q);
  for (std::uint32_t k = 0; k < mod.m; ++k) {
    const Real scale = static_cast<Real>(2 * static_cast<std::int64_t>(mod.powers[k]) - mod.q) / q;
    c[k] = detail::unit_root<Real>(k, mod.q - 1) * scale;
  }
  return c;
}

template <std::floating_point Real>
LValueSpectrum<Real> l_values(const CharacterModulus& mod, PrecisionBudget budget, const ZetaTable& table,
                              LogSinMethod method = LogSinMethod::zeta_series) {
  LValueSpectrum<Real> out;
  out.q = mod.q;
  const Real root_q = std::sqrt(static_cast<Real>(mod.q));

  if (mod.m > 1) {
    const auto spectrum = dft_forward<Real>(decimate_even<Real>(mod, budget, table, method));
    out.even_values.resize(mod.m - 1);
    for (std::uint32_t t = 1; t < mod.m; ++t) out.even_values[t - 1] = 2 * std::abs(spectrum[t]) / root_q;
  }
  const auto spectrum = dft_forward<Real>(decimate_odd<Real>(mod));
  out.odd_values.resize(mod.m);
  for (std::uint32_t t = 0; t < mod.m; ++t)
    out.odd_values[t] = Constants<Real>::pi * std::abs(spectrum[t]) / root_q;
  return out;
}

template <std::floating_point Real>
LValueSpectrum<Real> l_values(std::uint64_t q, PrecisionBudget budget, const ZetaTable& table,
                              LogSinMethod method = LogSinMethod::zeta_series) {
  return l_values<Real>(build_modulus(q), budget, table, method);
}

// The trivially summed spectrum, once through log Gamma (even) and the
// a * conj(chi)(a) sum (odd), and once through digamma for every character.
template <std::floating_point Real>
struct DirectRoutes {
  LValueSpectrum<Real> gamma_bernoulli;
  LValueSpectrum<Real> digamma;
  Real max_relative_gap = 0;
};

template <std::floating_point Real>
DirectRoutes<Real> l_values_direct_routes(std::uint64_t q, PrecisionBudget budget, const ZetaTable& table,
                                          std::uint32_t cap = kDirectOracleCap) {
  require_odd_prime(q, "l_values_direct");
  if (q > cap)
    throw std::invalid_argument("l_values_direct: q = " + std::to_string(q) + " exceeds the oracle cap " +
                                std::to_string(cap));
  const CharacterModulus mod = build_modulus(q);
  const std::uint32_t n = mod.q - 1;
  const std::uint32_t m = mod.m;
  const long double qq = mod.q;

  // roots[i] = e(-i / (q-1))
  std::vector<std::complex<long double>> roots(n);
  for (std::uint32_t i = 0; i < n; ++i) roots[i] = detail::unit_root<long double>(i, n);
  std::vector<long double> log_gamma(n), digamma(n);
  for (std::uint32_t k = 0; k < n; ++k) {
    const Real x = static_cast<Real>(mod.powers[k]) / static_cast<Real>(mod.q);
    log_gamma[k] = log_gamma_unit(x, budget, table);
    digamma[k] = psi_unit(x, budget, table);
  }

  DirectRoutes<Real> out;
  out.gamma_bernoulli.q = out.digamma.q = mod.q;
  out.gamma_bernoulli.even_values.resize(m - 1);
  out.digamma.even_values.resize(m - 1);
  out.gamma_bernoulli.odd_values.resize(m);
  out.digamma.odd_values.resize(m);

  const long double root_q = std::sqrt(qq);
  for (std::uint32_t j = 1; j < n; ++j) {
    std::complex<long double> by_parity = 0;
    std::complex<long double> by_digamma = 0;
    const bool even = j % 2 == 0;
    std::uint64_t idx = 0;
    for (std::uint32_t k = 0; k < n; ++k) {
      const auto w = roots[idx];  // conj(chi)(a_k)
      by_parity += w * (even ? log_gamma[k] : static_cast<long double>(mod.powers[k]));
      by_digamma += std::conj(w) * digamma[k];  // chi(a_k)
      idx += j;
      if (idx >= n) idx -= n;
    }
    const long double via_parity = even ? 2 * std::abs(by_parity) / root_q
                                        : std::numbers::pi_v<long double> * std::abs(by_parity) / (qq * root_q);
    const long double via_digamma = std::abs(by_digamma) / qq;
    const std::uint32_t t = j / 2;
    if (even) {
      out.gamma_bernoulli.even_values[t - 1] = static_cast<Real>(via_parity);
      out.digamma.even_values[t - 1] = static_cast<Real>(via_digamma);
    } else {
      out.gamma_bernoulli.odd_values[t] = static_cast<Real>(via_parity);
      out.digamma.odd_values[t] = static_cast<Real>(via_digamma);
    }
    const Real gap = static_cast<Real>(std::fabs(via_parity - via_digamma) / via_parity);
    if (gap > out.max_relative_gap) out.max_relative_gap = gap;
  }
  return out;
}

template <std::floating_point Real>
LValueSpectrum<Real> l_values_direct(std::uint64_t q, PrecisionBudget budget, const ZetaTable& table,
                                     std::uint32_t cap = kDirectOracleCap) {
  return l_values_direct_routes<Real>(q, budget, table, cap).gamma_bernoulli;
}

}  // namespace littlewood
