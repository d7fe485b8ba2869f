#pragma once

#include <concepts>
#include <numbers>

namespace littlewood {

// Fundamental constants at the full width of Real. log(pi) is not in
// <numbers>, so it is spelled out to more digits than any native format holds.
template <std::floating_point Real>
struct Constants {
  static constexpr Real euler_gamma = std::numbers::egamma_v<Real>;
  static constexpr Real log2 = std::numbers::ln2_v<Real>;
  static constexpr Real log_pi =
      static_cast<Real>(1.14472988584940017414342735135305871164729481291531L);
  static constexpr Real pi = std::numbers::pi_v<Real>;

  // 2 e^gamma and pi^2 / (12 e^gamma), the normalizers of the Littlewood bounds.
  static constexpr Real L2 =
      static_cast<Real>(3.56214483598039597047300820621435909833929043L);
  static constexpr Real L1 =
      static_cast<Real>(0.46178191583709069116175497699385195842346598L);
};

}  // namespace littlewood
