#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace littlewood {

// Residues mod q < 2^31; products are formed in 64 bits.
inline std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t q) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % q);
}

inline std::uint32_t pow_mod(std::uint32_t base, std::uint64_t exp, std::uint32_t q) {
  std::uint32_t result = 1 % q;
  base %= q;
  while (exp) {
    if (exp & 1) result = mul_mod(result, base, q);
    base = mul_mod(base, base, q);
    exp >>= 1;
  }
  return result;
}

// Deterministic Miller-Rabin; bases 2, 7, 61 are exact below 4.7e9.
inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2u, 3u, 5u, 7u}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  if (n >= (1ull << 32)) throw std::invalid_argument("is_prime: argument above 2^32");
  const auto q = static_cast<std::uint32_t>(n);
  std::uint32_t d = q - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint32_t a : {2u, 7u, 61u}) {
    if (a % q == 0) continue;
    std::uint32_t x = pow_mod(a, d, q);
    if (x == 1 || x == q - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, q);
      if (x == q - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

inline std::vector<std::uint32_t> distinct_prime_factors(std::uint32_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t p = 2; static_cast<std::uint64_t>(p) * p <= n; ++p) {
    if (n % p) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

inline void require_odd_prime(std::uint64_t q, const char* who) {
  if (q < 3 || q % 2 == 0 || q >= (1ull << 31) || !is_prime(q))
    throw std::invalid_argument(std::string(who) + ": " + std::to_string(q) + " is not an odd prime below 2^31");
}

// Smallest g >= 2 whose order mod q is q - 1.
inline std::uint32_t find_primitive_root(std::uint64_t q) {
  require_odd_prime(q, "find_primitive_root");
  const auto p = static_cast<std::uint32_t>(q);
  const auto factors = distinct_prime_factors(p - 1);
  for (std::uint32_t g = 2; g < p; ++g) {
    bool generator = true;
    for (std::uint32_t f : factors) {
      if (pow_mod(g, (p - 1) / f, p) == 1) {
        generator = false;
        break;
      }
    }
    if (generator) return g;
  }
  throw std::logic_error("find_primitive_root: no generator found");
}

// q, its smallest primitive root g, m = (q - 1) / 2 and a_k = g^k mod q for
// k = 0..q-2. Since g^m = -1, a_{k+m} = q - a_k.
struct CharacterModulus {
  std::uint32_t q;
  std::uint32_t g;
  std::uint32_t m;
  std::vector<std::uint32_t> powers;
};

inline CharacterModulus build_modulus(std::uint64_t q) {
  CharacterModulus mod;
  mod.g = find_primitive_root(q);
  mod.q = static_cast<std::uint32_t>(q);
  mod.m = (mod.q - 1) / 2;
  mod.powers.resize(mod.q - 1);
  std::uint32_t a = 1;
  for (auto& slot : mod.powers) {
    slot = a;
    a = mul_mod(a, mod.g, mod.q);
  }
  return mod;
}

// Ascending odd primes in [lo, hi] by a segmented sieve of Eratosthenes.
inline std::vector<std::uint32_t> enumerate_primes(std::uint64_t lo, std::uint64_t hi) {
  if (lo < 3 || lo > hi || hi >= (1ull << 32))
    throw std::invalid_argument("enumerate_primes: need 3 <= lo <= hi < 2^32");
  std::vector<std::uint32_t> out;

  const auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(hi))) + 1;
  std::vector<char> small(root + 1, 1);
  std::vector<std::uint64_t> base;
  for (std::uint64_t i = 2; i <= root; ++i) {
    if (!small[i]) continue;
    base.push_back(i);
    for (std::uint64_t j = i * i; j <= root; j += i) small[j] = 0;
  }

  constexpr std::uint64_t kSegment = 1 << 18;
  std::vector<char> seg(kSegment);
  for (std::uint64_t start = lo; start <= hi; start += kSegment) {
    const std::uint64_t end = std::min(hi, start + kSegment - 1);
    std::fill(seg.begin(), seg.begin() + static_cast<std::ptrdiff_t>(end - start + 1), 1);
    for (std::uint64_t p : base) {
      if (p * p > end) break;
      std::uint64_t first = std::max(p * p, (start + p - 1) / p * p);
      for (std::uint64_t j = first; j <= end; j += p) seg[j - start] = 0;
    }
    for (std::uint64_t n = start; n <= end; ++n)
      if (seg[n - start] && n % 2 == 1) out.push_back(static_cast<std::uint32_t>(n));
  }
  return out;
}

}  // namespace littlewood
