#pragma once

#include <concepts>
#include <cstddef>
#include <span>

namespace littlewood {

// Leaf size of the pairwise reduction; leaves are summed with Kahan's method.
inline constexpr std::size_t kPairwiseLeaf = 32;

template <std::floating_point Real>
Real kahan_sum(std::span<const Real> terms) {
  Real sum = 0;
  Real carry = 0;
  for (Real t : terms) {
    const Real y = t - carry;
    const Real next = sum + y;
    carry = (next - sum) - y;
    sum = next;
  }
  return sum;
}

// Pairwise summation with Kahan-compensated leaves. Error is bounded by
// O(log N) ulp times the sum of |terms|. The empty sum is 0.
template <std::floating_point Real>
Real compensated_sum(std::span<const Real> terms) {
  if (terms.size() <= kPairwiseLeaf) return kahan_sum(terms);
  // Split on a leaf boundary so the reduction tree does not depend on
  // anything but the length.
  std::size_t half = terms.size() / 2;
  half = ((half + kPairwiseLeaf - 1) / kPairwiseLeaf) * kPairwiseLeaf;
  if (half >= terms.size()) half = terms.size() / 2;
  return compensated_sum(terms.first(half)) + compensated_sum(terms.subspan(half));
}

}  // namespace littlewood
