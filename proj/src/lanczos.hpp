#pragma once

// Lanczos coefficients shared by the real and complex Gamma implementations.
// Godfrey's set: g = 607/128, 15 terms, ~1e-15 relative accuracy for Re z >= 0.5.

#include <array>

namespace frl::lanczos {

inline constexpr double kG = 607.0 / 128.0;

inline constexpr std::array<double, 15> kCoeffs = {
    0.99999999999999709182,     57.156235665862923517,     -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,   .33994649984811888699e-4,
    .46523628927048575665e-4,   -.98374475304879564677e-4, .15808870322491248884e-3,
    -.21026444172410488319e-3,  .21743961811521264320e-3,  -.16431810653676389022e-3,
    .84418223983852743293e-4,   -.26190838401581408670e-4, .36899182659531622704e-5,
};

/// A(z) = c0 + sum_k c_k / (z + k); Gamma(z+1) = sqrt(2pi) t^(z+1/2) e^-t A(z), t = z + g + 1/2.
template <typename T>
T series(T z) {
  T sum = T(kCoeffs[0]);
  for (std::size_t k = 1; k < kCoeffs.size(); ++k) {
    sum += T(kCoeffs[k]) / (z + T(static_cast<double>(k)));
  }
  return sum;
}

}  // namespace frl::lanczos
