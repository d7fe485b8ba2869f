#pragma once

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <limits>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace littlewood {

// Largest precision a table can be built for: the generator runs in long
// double and keeps two guard bits.
inline constexpr int kMaxTableBits = std::numeric_limits<long double>::digits - 2;

namespace detail {

// zeta(s) for integer s >= 2 through the alternating eta series, accelerated
// with the Cohen-Villegas-Zagier weights. The truncation error is at most
// 3 / (3 + sqrt 8)^terms / (1 - 2^(1-s)).
inline long double zeta_eta_accelerated(int s, int terms) {
  const int n = terms;
  // d_k = n * sum_{i<=k} (n+i-1)! 4^i / ((n-i)! (2i)!), built incrementally.
  std::vector<long double> d(static_cast<std::size_t>(n) + 1);
  long double t = 1.0L / n;
  long double acc = t;
  d[0] = n * acc;
  for (int i = 1; i <= n; ++i) {
    t *= 4.0L * (n + i - 1) * (n - i + 1) / ((2.0L * i) * (2.0L * i - 1));
    acc += t;
    d[static_cast<std::size_t>(i)] = n * acc;
  }
  const long double dn = d[static_cast<std::size_t>(n)];
  // Weights (d_n - d_k)/d_n lie in [0, 1]; add the smallest terms first.
  long double sum = 0;
  for (int k = n - 1; k >= 0; --k) {
    const long double w = (dn - d[static_cast<std::size_t>(k)]) / dn;
    const long double term = w * std::pow(static_cast<long double>(k + 1), -s);
    sum += (k % 2 == 0) ? term : -term;
  }
  return sum / (1.0L - std::ldexp(1.0L, 1 - s));
}

inline int eta_terms_for(int n_bits) {
  // 3 / (3 + sqrt 8)^N * 2 < 2^-(n_bits + 8)
  const long double rate = std::log(3.0L + std::sqrt(8.0L));
  return static_cast<int>(std::ceil(((n_bits + 8) * std::log(2.0L) + std::log(6.0L)) / rate)) + 1;
}

// Euler-Maclaurin evaluation of zeta(s), s >= 2, with cutoff N = 16 and ten
// Bernoulli correction terms. Independent of the eta route.
inline long double zeta_euler_maclaurin(int s) {
  static constexpr long double kB2j[] = {
      1.0L / 6,          -1.0L / 30,        1.0L / 42,        -1.0L / 30,
      5.0L / 66,         -691.0L / 2730,    7.0L / 6,         -3617.0L / 510,
      43867.0L / 798,    -174611.0L / 330};
  constexpr int cutoff = 16;
  long double sum = 0;
  for (int n = cutoff - 1; n >= 1; --n) sum += std::pow(static_cast<long double>(n), -s);
  const long double big = cutoff;
  sum += std::pow(big, 1 - s) / (s - 1) + std::pow(big, -s) / 2;
  // rising = s (s+1) ... (s+2j-2) / (2j)!
  long double rising = s;
  long double factorial = 2;
  for (int j = 1; j <= 10; ++j) {
    if (j > 1) {
      rising *= static_cast<long double>(s + 2 * j - 3) * (s + 2 * j - 2);
      factorial *= static_cast<long double>(2 * j - 1) * (2 * j);
    }
    sum += kB2j[j - 1] * rising / factorial * std::pow(big, -s - 2 * j + 1);
  }
  return sum;
}

// zeta(s) - 1 summed directly, for s large enough that the tail carries the
// information lost in zeta(s) itself.
inline long double zeta_minus_one_direct(int s) {
  constexpr int cutoff = 1024;
  long double sum = 0;
  for (int n = cutoff - 1; n >= 2; --n) sum += std::pow(static_cast<long double>(n), -s);
  const long double big = cutoff;
  return sum + std::pow(big, 1 - s) / (s - 1) + std::pow(big, -s) / 2 +
         s * std::pow(big, -s - 1) / 12;
}

inline long double zeta_minus_one(int s, long double zeta_value) {
  return s < 8 ? zeta_value - 1.0L : zeta_minus_one_direct(s);
}

}  // namespace detail

// Riemann zeta at the integers 2..k_max, stored in long double. tail(k)
// holds zeta(k) - 1 separately since for k beyond the significand width
// zeta(k) itself rounds to 1.
class ZetaTable {
 public:
  ZetaTable(int k_max, int n_bits) : k_max_(k_max), n_bits_(n_bits) {
    if (k_max < 3) throw std::invalid_argument("zeta table: k_max must be at least 3");
    if (n_bits < 2 || n_bits > kMaxTableBits)
      throw std::invalid_argument("zeta table: n_bits out of range");
    values_.assign(static_cast<std::size_t>(k_max) + 1, std::numeric_limits<long double>::quiet_NaN());
    tails_ = values_;
    const int terms = detail::eta_terms_for(n_bits);
    for (int k = 2; k <= k_max; ++k) {
      values_[static_cast<std::size_t>(k)] = detail::zeta_eta_accelerated(k, terms);
      tails_[static_cast<std::size_t>(k)] = detail::zeta_minus_one(k, values_[static_cast<std::size_t>(k)]);
    }
    for (int k = 2; k <= 4 && k <= k_max; ++k) {
      const long double em = detail::zeta_euler_maclaurin(k);
      if (std::fabs(em - values_[static_cast<std::size_t>(k)]) > std::ldexp(1.0L, 1 - n_bits))
        throw std::logic_error("zeta table: eta and Euler-Maclaurin routes disagree");
    }
  }

  int k_max() const noexcept { return k_max_; }
  int n_bits() const noexcept { return n_bits_; }

  // zeta(k); pure lookup.
  long double value(int k) const {
    check(k);
    return values_[static_cast<std::size_t>(k)];
  }

  long double tail(int k) const {
    check(k);
    return tails_[static_cast<std::size_t>(k)];
  }

  template <class Real>
  Real value_as(int k) const {
    return static_cast<Real>(value(k));
  }

  // Indexed by k; entries 0 and 1 are NaN.
  std::span<const long double> values() const noexcept { return values_; }

  // One line per k: "k value", value as a hex float.
  void dump(std::ostream& out) const {
    out << "# zeta n_bits " << n_bits_ << '\n';
    char buf[64];
    for (int k = 2; k <= k_max_; ++k) {
      std::snprintf(buf, sizeof buf, "%d %La\n", k, values_[static_cast<std::size_t>(k)]);
      out << buf;
    }
  }

  static ZetaTable load(std::istream& in) {
    std::string line;
    int n_bits = -1;
    std::vector<long double> values(2, std::numeric_limits<long double>::quiet_NaN());
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      if (line[0] == '#') {
        std::istringstream header(line.substr(1));
        std::string tag;
        header >> tag >> tag >> n_bits;
        continue;
      }
      std::istringstream row(line);
      int k = 0;
      std::string text;
      if (!(row >> k >> text)) throw std::runtime_error("zeta table: malformed line: " + line);
      if (k != static_cast<int>(values.size())) throw std::runtime_error("zeta table: indices not consecutive");
      char* end = nullptr;
      values.push_back(std::strtold(text.c_str(), &end));
      if (end == text.c_str()) throw std::runtime_error("zeta table: bad value: " + text);
    }
    if (n_bits < 0) throw std::runtime_error("zeta table: missing precision header");
    return ZetaTable(std::move(values), n_bits);
  }

 private:
  ZetaTable(std::vector<long double> values, int n_bits)
      : k_max_(static_cast<int>(values.size()) - 1), n_bits_(n_bits), values_(std::move(values)) {
    if (k_max_ < 3) throw std::invalid_argument("zeta table: k_max must be at least 3");
    tails_ = values_;
    for (int k = 2; k <= k_max_; ++k)
      tails_[static_cast<std::size_t>(k)] = detail::zeta_minus_one(k, values_[static_cast<std::size_t>(k)]);
  }

  void check(int k) const {
    if (k < 2 || k > k_max_)
      throw std::out_of_range("zeta table: index " + std::to_string(k) + " outside [2, " +
                              std::to_string(k_max_) + "]");
  }

  int k_max_;
  int n_bits_;
  std::vector<long double> values_;
  std::vector<long double> tails_;
};

inline ZetaTable build_zeta_table(int k_max, int n_bits) { return ZetaTable(k_max, n_bits); }

// Default size: n_bits + 8 covers every truncation index the series use.
inline ZetaTable build_zeta_table(int n_bits) { return ZetaTable(n_bits + 8, n_bits); }

inline long double zeta(const ZetaTable& table, int k) { return table.value(k); }

}  // namespace littlewood
