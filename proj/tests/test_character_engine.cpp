#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <vector>

#include "littlewood/character_engine.hpp"
#include "littlewood/number_theory.hpp"

using namespace littlewood;

namespace {

const PrecisionBudget kBudget{50};

const ZetaTable& table() {
  static const ZetaTable t = build_zeta_table(50);
  return t;
}

std::vector<double> sorted_values(const LValueSpectrum<double>& s) {
  std::vector<double> all(s.even_values.begin(), s.even_values.end());
  all.insert(all.end(), s.odd_values.begin(), s.odd_values.end());
  std::sort(all.begin(), all.end());
  return all;
}

double relative_gap(const std::vector<double>& a, const std::vector<double>& b) {
  double gap = 0;
  for (std::size_t i = 0; i < a.size(); ++i) gap = std::max(gap, std::fabs(a[i] - b[i]) / std::fabs(b[i]));
  return gap;
}

}  // namespace

TEST(NumberTheory, PrimitiveRoots) {
  EXPECT_EQ(find_primitive_root(3), 2u);
  EXPECT_EQ(find_primitive_root(7), 3u);
  EXPECT_EQ(find_primitive_root(41), 6u);
  EXPECT_EQ(find_primitive_root(5), 2u);
  EXPECT_EQ(find_primitive_root(4305479), find_primitive_root(4305479));
  EXPECT_THROW(find_primitive_root(9), std::invalid_argument);
  EXPECT_THROW(find_primitive_root(2), std::invalid_argument);
  EXPECT_THROW(find_primitive_root(1), std::invalid_argument);
  EXPECT_THROW(find_primitive_root(1ull << 31), std::invalid_argument);
}

TEST(NumberTheory, PrimitiveRootIsSmallestGenerator) {
  for (std::uint32_t q : enumerate_primes(3, 400)) {
    const std::uint32_t g = find_primitive_root(q);
    auto order = [&](std::uint32_t a) {
      std::uint32_t x = a, k = 1;
      while (x != 1) x = mul_mod(x, a, q), ++k;
      return k;
    };
    EXPECT_EQ(order(g), q - 1) << q;
    for (std::uint32_t a = 2; a < g; ++a) EXPECT_LT(order(a), q - 1) << q;
  }
}

TEST(NumberTheory, PrimalityAgainstTrialDivision) {
  auto slow = [](std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  };
  for (std::uint64_t n = 0; n < 20000; ++n) EXPECT_EQ(is_prime(n), slow(n)) << n;
  for (std::uint64_t n : {2147483647ull, 3215031751ull, 4294967291ull, 4305479ull, 991027ull})
    EXPECT_EQ(is_prime(n), slow(n)) << n;
}

TEST(CharacterModulus, PowersOfFive) {
  const auto mod = build_modulus(5);
  EXPECT_EQ(mod.g, 2u);
  EXPECT_EQ(mod.m, 2u);
  EXPECT_EQ(mod.powers, (std::vector<std::uint32_t>{1, 2, 4, 3}));
}

TEST(CharacterModulus, PermutationAndNegation) {
  for (std::uint32_t q : enumerate_primes(3, 3000)) {
    const auto mod = build_modulus(q);
    ASSERT_EQ(mod.powers.size(), q - 1);
    EXPECT_EQ(mod.powers[0], 1u);
    auto sorted = mod.powers;
    std::sort(sorted.begin(), sorted.end());
    for (std::uint32_t i = 0; i < q - 1; ++i) ASSERT_EQ(sorted[i], i + 1) << q;
    for (std::uint32_t k = 0; k < mod.m; ++k) ASSERT_EQ(mod.powers[k + mod.m], q - mod.powers[k]) << q;
  }
  const auto seven = build_modulus(7);
  for (int k = 0; k < 3; ++k) EXPECT_EQ(seven.powers[k + 3], 7 - seven.powers[k]);
}

TEST(Decimation, EvenSequence) {
  const auto b = decimate_even<double>(build_modulus(5), kBudget, table());
  ASSERT_EQ(b.size(), 2u);
  EXPECT_NEAR(b[0].real(), -std::log(std::sin(std::numbers::pi / 5)), 1e-15);
  EXPECT_NEAR(b[1].real(), -std::log(std::sin(2 * std::numbers::pi / 5)), 1e-15);
  EXPECT_EQ(b[0].imag(), 0.0);

  for (std::uint32_t q : enumerate_primes(3, 2000)) {
    for (const auto& z : decimate_even<double>(build_modulus(q), kBudget, table())) ASSERT_GT(z.real(), 0) << q;
  }
}

TEST(Decimation, EvenBinZeroBookkeeping) {
  for (std::uint32_t q : {5u, 13u, 101u, 997u}) {
    const auto mod = build_modulus(q);
    const auto spectrum = dft_forward<double>(decimate_even<double>(mod, kBudget, table()));
    long double direct = 0;
    for (std::uint32_t k = 0; k < mod.m; ++k) {
      direct += log_gamma_unit(static_cast<double>(mod.powers[k]) / q, kBudget, table());
      direct += log_gamma_unit(static_cast<double>(mod.powers[k + mod.m]) / q, kBudget, table());
    }
    const double reconstructed = spectrum[0].real() + mod.m * Constants<double>::log_pi;
    EXPECT_NEAR(reconstructed, static_cast<double>(direct), 1e-12 * mod.m) << q;
  }
}

TEST(Decimation, OddSequence) {
  const auto c3 = decimate_odd<double>(build_modulus(3));
  ASSERT_EQ(c3.size(), 1u);
  EXPECT_NEAR(c3[0].real(), -1.0 / 3, 1e-16);
  EXPECT_EQ(c3[0].imag(), 0.0);

  const auto c5 = decimate_odd<double>(build_modulus(5));
  // e(-1/4) (2 * 2/5 - 1) = (-i)(-1/5)
  EXPECT_NEAR(c5[1].real(), 0.0, 1e-16);
  EXPECT_NEAR(c5[1].imag(), 0.2, 1e-16);

  for (std::uint32_t q : enumerate_primes(3, 2000))
    for (const auto& z : decimate_odd<double>(build_modulus(q))) ASSERT_LT(std::abs(z), 1.0) << q;
}

TEST(LValues, SmallPrimes) {
  const auto s3 = l_values<double>(3, kBudget, table());
  EXPECT_TRUE(s3.even_values.empty());
  ASSERT_EQ(s3.odd_values.size(), 1u);
  EXPECT_NEAR(s3.odd_values[0], std::numbers::pi / (3 * std::sqrt(3.0)), 1e-15);
  EXPECT_NEAR(s3.odd_values[0], 0.6045997880780725, 1e-15);

  const auto v5 = sorted_values(l_values<double>(5, kBudget, table()));
  EXPECT_NEAR(v5.back(), 0.8885765876316732, 1e-14);
  EXPECT_NEAR(v5.front(), 0.4304089409640040, 1e-14);

  const auto v7 = sorted_values(l_values<double>(7, kBudget, table()));
  EXPECT_NEAR(v7.back(), 1.1874104117237256, 1e-14);
}

TEST(LValues, SizesAndAccessors) {
  const auto s = l_values<double>(13, kBudget, table());
  EXPECT_EQ(s.m(), 6u);
  EXPECT_EQ(s.even_values.size(), 5u);
  EXPECT_EQ(s.odd_values.size(), 6u);
  EXPECT_EQ(s.size(), 11u);
  EXPECT_EQ(s.even_at(1), s.even_values[0]);
  EXPECT_EQ(s.odd_at(0), s.odd_values[0]);
  EXPECT_THROW(s.even_at(6), std::out_of_range);
}

TEST(LValues, RejectsNonPrimes) {
  EXPECT_THROW(l_values<double>(9, kBudget, table()), std::invalid_argument);
  EXPECT_THROW(l_values<double>(2, kBudget, table()), std::invalid_argument);
  EXPECT_THROW(l_values<double>(1, kBudget, table()), std::invalid_argument);
  EXPECT_THROW(l_values_direct<double>(15, kBudget, table()), std::invalid_argument);
  EXPECT_THROW(l_values_direct<double>(5003, kBudget, table()), std::invalid_argument);
  EXPECT_NO_THROW(l_values_direct<double>(13, kBudget, table(), 13));
  EXPECT_THROW(l_values_direct<double>(17, kBudget, table(), 13), std::invalid_argument);
}

TEST(LValues, DirectRoutes) {
  const auto d3 = l_values_direct_routes<double>(3, kBudget, table());
  EXPECT_NEAR(d3.gamma_bernoulli.odd_values[0], 0.6045997880780725, 1e-15);
  EXPECT_NEAR(d3.digamma.odd_values[0], 0.6045997880780725, 1e-15);

  const auto v11 = sorted_values(l_values_direct<double>(11, kBudget, table()));
  EXPECT_NEAR(v11.front(), 0.6183519348, 1e-10);
}

TEST(LValues, FftMatchesDirectBelowOneThousand) {
  for (std::uint32_t q : enumerate_primes(3, 997)) {
    const auto fft = l_values<double>(q, kBudget, table());
    const auto routes = l_values_direct_routes<double>(q, kBudget, table());
    EXPECT_LE(relative_gap(fft.even_values, routes.gamma_bernoulli.even_values), 1e-10) << q;
    EXPECT_LE(relative_gap(fft.odd_values, routes.gamma_bernoulli.odd_values), 1e-10) << q;
    EXPECT_LE(relative_gap(fft.even_values, routes.digamma.even_values), 1e-10) << q;
    EXPECT_LE(relative_gap(fft.odd_values, routes.digamma.odd_values), 1e-10) << q;
    EXPECT_LE(routes.max_relative_gap, 1e-10) << q;
  }
}

TEST(LValues, ConjugationSymmetryAndEnvelope) {
  for (std::uint32_t q : enumerate_primes(3, 10000)) {
    const auto s = l_values<double>(q, kBudget, table());
    const std::uint32_t m = s.m();
    for (std::uint32_t t = 1; t < m; ++t) {
      const double a = s.even_at(t), b = s.even_at(m - t);
      ASSERT_LE(std::fabs(a - b) / b, 1e-10) << q << " even t=" << t;
    }
    for (std::uint32_t t = 0; t < m; ++t) {
      const double a = s.odd_at(t), b = s.odd_at(m - 1 - t);
      ASSERT_LE(std::fabs(a - b) / b, 1e-10) << q << " odd t=" << t;
    }
    for (double v : sorted_values(s)) {
      ASSERT_GT(v, 0.05) << q;
      ASSERT_LT(v, 10.0) << q;
    }
  }
}

TEST(LValues, NativeLogSinAgrees) {
  for (std::uint32_t q : {101u, 1009u, 7919u}) {
    const auto series = l_values<double>(q, kBudget, table());
    const auto native = l_values<double>(q, kBudget, table(), LogSinMethod::native);
    EXPECT_LE(relative_gap(series.even_values, native.even_values), 1e-12) << q;
    EXPECT_EQ(series.odd_values, native.odd_values);
  }
}

// The spectrum as a set does not depend on which primitive root indexes it.
TEST(LValues, IndependentOfPrimitiveRoot) {
  for (std::uint32_t q : {13u, 101u, 211u}) {
    CharacterModulus mod = build_modulus(q);
    const auto reference = sorted_values(l_values<double>(mod, kBudget, table()));
    // g^5 is again a generator when gcd(5, q - 1) = 1
    std::uint32_t k = 5;
    while (std::gcd(k, q - 1) != 1) ++k;
    mod.g = pow_mod(mod.g, k, q);
    std::uint32_t a = 1;
    for (auto& slot : mod.powers) slot = a, a = mul_mod(a, mod.g, q);
    EXPECT_LE(relative_gap(sorted_values(l_values<double>(mod, kBudget, table())), reference), 1e-13) << q;
  }
}

TEST(LValues, ExtendedPrecisionAgrees) {
  const ZetaTable t62 = build_zeta_table(62);
  for (std::uint32_t q : {3u, 97u, 997u}) {
    const auto ext = l_values<long double>(q, PrecisionBudget{62}, t62);
    const auto dbl = l_values<double>(q, kBudget, table());
    for (std::size_t i = 0; i < dbl.odd_values.size(); ++i)
      EXPECT_NEAR(static_cast<double>(ext.odd_values[i]), dbl.odd_values[i], 1e-13);
    for (std::size_t i = 0; i < dbl.even_values.size(); ++i)
      EXPECT_NEAR(static_cast<double>(ext.even_values[i]), dbl.even_values[i], 1e-13);
  }
}
