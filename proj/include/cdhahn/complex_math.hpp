#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <string>

#include "cdhahn/errors.hpp"

namespace cdhahn::complex_math {

using Complex = std::complex<double>;

// Arguments closer than this to a non-positive integer count as a pole.
inline constexpr double kPoleTolerance = 1e-12;

namespace detail {

inline bool near_nonpositive_integer(const Complex& z, double* which = nullptr) {
  double r = std::round(z.real());
  if (r > 0.5) return false;
  if (std::hypot(z.real() - r, z.imag()) > kPoleTolerance) return false;
  if (which) *which = r;
  return true;
}

// Lanczos approximation, g = 7, 9 coefficients.  Valid for Re z >= 0.5;
// relative accuracy ~1e-13 over the working domain |z| <= 50.
inline Complex lanczos_gamma_positive(Complex z) {
  static constexpr double kLanczos[9] = {
      0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
      771.32342877765313,      -176.61502916214059,   12.507343278686905,
      -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};
  z -= 1.0;
  Complex x = kLanczos[0];
  for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + static_cast<double>(i));
  Complex t = z + 7.5;
  return std::sqrt(2.0 * M_PI) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

// Stirling series for log Gamma, accurate for Re z >= 10.
inline Complex stirling_log_gamma(const Complex& z) {
  // B_{2j} / (2j(2j-1)), j = 1..8
  static constexpr double kStirling[8] = {
      1.0 / 12.0,      -1.0 / 360.0,      1.0 / 1260.0, -1.0 / 1680.0,
      1.0 / 1188.0,    -691.0 / 360360.0, 1.0 / 156.0,  -3617.0 / 122400.0};
  const Complex w = 1.0 / (z * z);
  Complex series = kStirling[7];
  for (int j = 6; j >= 0; --j) series = series * w + kStirling[j];
  series /= z;
  const double half_log_two_pi = 0.91893853320467274178;
  return (z - 0.5) * std::log(z) - z + half_log_two_pi + series;
}

}  // namespace detail

/// Gamma function for complex argument.  Lanczos approximation on
/// Re z >= 0.5, reflection formula Gamma(z) = pi / (sin(pi z) Gamma(1-z))
/// otherwise.  Satisfies Gamma(conj z) = conj(Gamma(z)) exactly.
inline Complex gamma(const Complex& z) {
  double pole;
  if (detail::near_nonpositive_integer(z, &pole)) {
    throw PoleError("gamma: argument within tolerance of pole at " +
                    std::to_string(static_cast<long long>(pole)));
  }
  if (z.imag() < 0.0) return std::conj(gamma(std::conj(z)));
  Complex result;
  if (z.real() < 0.5) {
    result = M_PI / (std::sin(M_PI * z) * gamma(1.0 - z));
  } else {
    result = detail::lanczos_gamma_positive(z);
  }
  if (!std::isfinite(result.real()) || !std::isfinite(result.imag())) {
    throw OverflowError("gamma: result exceeds double range");
  }
  return result;
}

/// log Gamma on the branch that is real on the positive real axis and
/// continuous everywhere off the cut (-inf, 0].  The imaginary part is the
/// continuously tracked arg Gamma, not the principal value of log applied
/// to gamma(z).  Computed by shifting z upward through the recurrence
/// log Gamma(z) = log Gamma(z+m) - sum_j log(z+j) (each factor's principal
/// log is exact on the cut plane) and a Stirling series at Re z >= 10.
/// Real z < 0 is treated as the limit from the upper half-plane.
inline Complex log_gamma(Complex z) {
  double pole;
  if (detail::near_nonpositive_integer(z, &pole)) {
    throw PoleError("log_gamma: argument within tolerance of pole at " +
                    std::to_string(static_cast<long long>(pole)));
  }
  if (z.imag() < 0.0) return std::conj(log_gamma(std::conj(z)));
  Complex shifted_logs = 0.0;
  while (z.real() < 10.0) {
    shifted_logs += std::log(z);
    z += 1.0;
  }
  return detail::stirling_log_gamma(z) - shifted_logs;
}

/// |Gamma(z)| = exp(Re log Gamma(z)).
inline double gamma_abs(const Complex& z) {
  double r = std::exp(log_gamma(z).real());
  if (!std::isfinite(r)) throw OverflowError("gamma_abs: result exceeds double range");
  return r;
}

/// Continuous-branch arg Gamma(z); zero on the positive real axis.
inline double gamma_arg(const Complex& z) { return log_gamma(z).imag(); }

/// Rising factorial (z)_n = z(z+1)...(z+n-1) = Gamma(z+n)/Gamma(z).
/// Direct product for n <= 64 (or near an exact zero of the product);
/// gamma ratio via log_gamma differences for larger n.
inline Complex pochhammer(const Complex& z, long long n) {
  if (n < 0) throw DomainError("pochhammer: n must be nonnegative");
  if (n == 0) return 1.0;
  if (n <= 64 || detail::near_nonpositive_integer(z)) {
    Complex p = z;
    for (long long k = 1; k < n; ++k) p *= z + static_cast<double>(k);
    if (!std::isfinite(p.real()) || !std::isfinite(p.imag())) {
      throw OverflowError("pochhammer: product exceeds double range");
    }
    return p;
  }
  const Complex d = log_gamma(z + static_cast<double>(n)) - log_gamma(z);
  if (d.real() > 709.0) throw OverflowError("pochhammer: result exceeds double range");
  return std::exp(d);
}

}  // namespace cdhahn::complex_math
