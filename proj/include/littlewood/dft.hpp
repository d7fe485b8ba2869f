#pragma once

// Forward DFT of arbitrary length with the exp(-2 pi i t k / m) kernel and
// no normalization. Powers of two go through an iterative radix-2
// Cooley-Tukey; every other length is mapped onto a power-of-two cyclic
// convolution with Bluestein's chirp.

#include <array>
#include <bit>
#include <cmath>
#include <complex>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <list>
#include <memory>
#include <mutex>
#include <numbers>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace littlewood {

template <std::floating_point Real>
using ComplexVector = std::vector<std::complex<Real>>;

namespace detail {

// exp(-2 pi i num / den) with the angle reduced exactly in integers.
template <std::floating_point Real>
std::complex<Real> unit_root(std::uint64_t num, std::uint64_t den) {
  num %= den;
  // Fold into [0, den/2] so the argument handed to sin/cos stays small.
  const bool neg = 2 * num > den;
  const std::uint64_t r = neg ? den - num : num;
  const long double angle = 2.0L * std::numbers::pi_v<long double> * static_cast<long double>(r) /
                            static_cast<long double>(den);
  const Real c = static_cast<Real>(std::cos(angle));
  const Real s = static_cast<Real>(std::sin(angle));
  return {c, neg ? s : -s};
}

template <std::floating_point Real>
inline std::complex<Real> cmul(std::complex<Real> a, std::complex<Real> b) {
  return {a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real()};
}

// Radix-2 plan: twiddles exp(-2 pi i j / size) for j < size / 2.
template <std::floating_point Real>
struct Radix2Plan {
  std::size_t size;
  ComplexVector<Real> twiddle;

  explicit Radix2Plan(std::size_t n) : size(n), twiddle(n / 2) {
    for (std::size_t j = 0; j < n / 2; ++j) twiddle[j] = unit_root<Real>(j, n);
  }

  // In place; inverse uses the conjugate kernel (still unnormalized).
  void run(std::span<std::complex<Real>> a, bool inverse) const {
    const std::size_t n = size;
    if (n <= 1) return;
    for (std::size_t i = 1, j = 0; i < n; ++i) {
      std::size_t bit = n >> 1;
      for (; j & bit; bit >>= 1) j ^= bit;
      j ^= bit;
      if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
      const std::size_t half = len / 2;
      const std::size_t stride = n / len;
      for (std::size_t start = 0; start < n; start += len) {
        for (std::size_t k = 0; k < half; ++k) {
          std::complex<Real> w = twiddle[k * stride];
          if (inverse) w = std::conj(w);
          const std::complex<Real> u = a[start + k];
          const std::complex<Real> v = cmul(a[start + k + half], w);
          a[start + k] = u + v;
          a[start + k + half] = u - v;
        }
      }
    }
  }
};

// Radix-2 plans are shared by every Bluestein plan on the same grid; one
// slot per power of two, kept for the life of the process.
template <std::floating_point Real>
std::shared_ptr<const Radix2Plan<Real>> radix2_plan(std::size_t n) {
  static std::mutex mutex;
  static std::array<std::shared_ptr<const Radix2Plan<Real>>, 64> slots;
  const int slot = std::countr_zero(n);
  std::lock_guard lock(mutex);
  auto& entry = slots[static_cast<std::size_t>(slot)];
  if (!entry) entry = std::make_shared<const Radix2Plan<Real>>(n);
  return entry;
}

// Bluestein plan for length m: chirp w_k = exp(-pi i k^2 / m) and the
// transformed conjugate chirp on a power-of-two grid >= 2m - 1.
template <std::floating_point Real>
struct BluesteinPlan {
  std::size_t length;
  std::shared_ptr<const Radix2Plan<Real>> grid;
  ComplexVector<Real> chirp;
  ComplexVector<Real> kernel_spectrum;

  explicit BluesteinPlan(std::size_t m)
      : length(m), grid(radix2_plan<Real>(std::bit_ceil(2 * m - 1))), chirp(m), kernel_spectrum(grid->size) {
    const std::uint64_t two_m = 2 * static_cast<std::uint64_t>(m);
    for (std::size_t k = 0; k < m; ++k) {
      const std::uint64_t kk = static_cast<std::uint64_t>(k) * k % two_m;
      chirp[k] = unit_root<Real>(kk, two_m);
    }
    const std::size_t n = grid->size;
    kernel_spectrum[0] = std::conj(chirp[0]);
    for (std::size_t k = 1; k < m; ++k) {
      kernel_spectrum[k] = std::conj(chirp[k]);
      kernel_spectrum[n - k] = std::conj(chirp[k]);
    }
    grid->run(kernel_spectrum, false);
  }

  void run(std::span<const std::complex<Real>> in, std::span<std::complex<Real>> out,
           ComplexVector<Real>& scratch) const {
    const std::size_t n = grid->size;
    scratch.assign(n, std::complex<Real>(0, 0));
    for (std::size_t k = 0; k < length; ++k) scratch[k] = cmul(in[k], chirp[k]);
    grid->run(scratch, false);
    for (std::size_t i = 0; i < n; ++i) scratch[i] = cmul(scratch[i], kernel_spectrum[i]);
    grid->run(scratch, true);
    const Real scale = Real(1) / static_cast<Real>(n);
    for (std::size_t t = 0; t < length; ++t) out[t] = cmul(scratch[t], chirp[t]) * scale;
  }
};

template <std::floating_point Real>
struct DftPlan {
  std::size_t length;
  std::shared_ptr<const Radix2Plan<Real>> radix2;
  std::unique_ptr<BluesteinPlan<Real>> bluestein;

  explicit DftPlan(std::size_t m) : length(m) {
    if (std::has_single_bit(m))
      radix2 = radix2_plan<Real>(m);
    else
      bluestein = std::make_unique<BluesteinPlan<Real>>(m);
  }
};

// Plans keyed by length, least recently used evicted past kCapacity entries.
// Lookups are serialized; plans are immutable and shared.
template <std::floating_point Real>
class PlanCache {
 public:
  static constexpr std::size_t kCapacity = 8;

  static PlanCache& instance() {
    static PlanCache cache;
    return cache;
  }

  std::shared_ptr<const DftPlan<Real>> get(std::size_t m) {
    {
      std::lock_guard lock(mutex_);
      for (auto it = entries_.begin(); it != entries_.end(); ++it) {
        if (it->first == m) {
          entries_.splice(entries_.begin(), entries_, it);
          return entries_.front().second;
        }
      }
    }
    // Built outside the lock; a concurrent duplicate build is harmless.
    auto plan = std::make_shared<const DftPlan<Real>>(m);
    std::lock_guard lock(mutex_);
    for (auto& [len, existing] : entries_)
      if (len == m) return existing;
    entries_.emplace_front(m, plan);
    if (entries_.size() > kCapacity) entries_.pop_back();
    return plan;
  }

  std::size_t size() {
    std::lock_guard lock(mutex_);
    return entries_.size();
  }

  void clear() {
    std::lock_guard lock(mutex_);
    entries_.clear();
  }

 private:
  std::mutex mutex_;
  std::list<std::pair<std::size_t, std::shared_ptr<const DftPlan<Real>>>> entries_;
};

template <std::floating_point Real>
void check_input(std::span<const std::complex<Real>> v) {
  if (v.empty()) throw std::invalid_argument("dft: empty input");
  for (const auto& z : v)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw std::invalid_argument("dft: non-finite input entry");
}

}  // namespace detail

template <std::floating_point Real>
ComplexVector<Real> dft_forward(std::span<const std::complex<Real>> v) {
  detail::check_input(v);
  const std::size_t m = v.size();
  ComplexVector<Real> out(v.begin(), v.end());
  if (m == 1) return out;
  auto plan = detail::PlanCache<Real>::instance().get(m);
  if (plan->radix2) {
    plan->radix2->run(out, false);
  } else {
    ComplexVector<Real> scratch;
    plan->bluestein->run(v, out, scratch);
  }
  return out;
}

template <std::floating_point Real>
ComplexVector<Real> dft_forward(const ComplexVector<Real>& v) {
  return dft_forward<Real>(std::span<const std::complex<Real>>(v));
}

// O(m^2) reference transform with the same kernel.
template <std::floating_point Real>
ComplexVector<Real> dft_naive(std::span<const std::complex<Real>> v) {
  detail::check_input(v);
  const std::size_t m = v.size();
  ComplexVector<Real> roots(m);
  for (std::size_t j = 0; j < m; ++j) roots[j] = detail::unit_root<Real>(j, m);
  ComplexVector<Real> out(m);
  for (std::size_t t = 0; t < m; ++t) {
    std::complex<long double> acc = 0;
    std::size_t idx = 0;
    for (std::size_t k = 0; k < m; ++k) {
      const auto w = roots[idx];
      acc += std::complex<long double>(w.real(), w.imag()) *
             std::complex<long double>(v[k].real(), v[k].imag());
      idx += t;
      if (idx >= m) idx -= m;
    }
    out[t] = {static_cast<Real>(acc.real()), static_cast<Real>(acc.imag())};
  }
  return out;
}

template <std::floating_point Real>
ComplexVector<Real> dft_naive(const ComplexVector<Real>& v) {
  return dft_naive<Real>(std::span<const std::complex<Real>>(v));
}

}  // namespace littlewood
