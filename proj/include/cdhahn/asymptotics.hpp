#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <vector>

#include "cdhahn/cdh.hpp"
#include "cdhahn/complex_math.hpp"
#include "cdhahn/errors.hpp"

namespace cdhahn::asymptotics {

using cdh::CdhParams;
using complex_math::Complex;

/// Which parameter's negativity produced a bound state.
enum class Channel { mu, a, b };

inline const char* channel_name(Channel c) {
  switch (c) {
    case Channel::mu: return "mu";
    case Channel::a: return "a";
    default: return "b";
  }
}

/// Large-n scattering description at one energy: energy = y^2, the positive
/// envelope A at degree n, and the phase shift gamma.
struct ScatteringData {
  double energy = 0.0;
  double amplitude = 0.0;
  double phase = 0.0;
  long long n = 0;
};

struct SpectrumEntry {
  Channel channel = Channel::mu;
  long long level = 0;
  double energy = 0.0;
};

struct ConvergenceEntry {
  long long n = 0;
  double exact = 0.0;
  double asymptotic = 0.0;
  double amplitude = 0.0;
  double phase = 0.0;  // full cosine argument: y ln n + gamma
  double env_error = 0.0;
};

struct ConvergenceReport {
  std::vector<ConvergenceEntry> entries;
  // Least-squares slope of log(env_error) against log(n); NaN when fewer
  // than two usable points.
  double fitted_exponent = std::numeric_limits<double>::quiet_NaN();
};

namespace detail {

inline void require_positive_y(double y, const char* who) {
  if (!(y > 0.0)) throw DomainError(std::string(who) + ": requires y > 0");
}

}  // namespace detail

/// Phase shift gamma = arg Gamma(2iy) - arg Gamma(mu+iy) - arg Gamma(a+iy)
/// - arg Gamma(b+iy), each term on the continuous branch, so the result has
/// no 2-pi jumps as y varies.
inline double phase_gamma(const CdhParams& p, double y) {
  cdh::detail::require_strict(p, "phase_gamma");
  detail::require_positive_y(y, "phase_gamma");
  using complex_math::gamma_arg;
  return gamma_arg(Complex(0.0, 2.0 * y)) - gamma_arg(Complex(p.mu(), y)) -
         gamma_arg(Complex(p.a(), y)) - gamma_arg(Complex(p.b(), y));
}

/// Envelope A = 2 Gamma(a+b) |Gamma(2iy)| n^{mu-1}
///              / |Gamma(mu+iy) Gamma(a+iy) Gamma(b+iy)|,
/// assembled in log space so no single gamma factor can overflow.
inline double amplitude(const CdhParams& p, double y, long long n) {
  cdh::detail::require_strict(p, "amplitude");
  detail::require_positive_y(y, "amplitude");
  if (n < 1) throw DomainError("amplitude: requires n >= 1");
  using complex_math::log_gamma;
  const double mu = p.mu(), a = p.a(), b = p.b();
  const double log_amp = std::log(2.0) + log_gamma(Complex(a + b, 0.0)).real() +
                         log_gamma(Complex(0.0, 2.0 * y)).real() +
                         (mu - 1.0) * std::log(static_cast<double>(n)) -
                         log_gamma(Complex(mu, y)).real() - log_gamma(Complex(a, y)).real() -
                         log_gamma(Complex(b, y)).real();
  const double r = std::exp(log_amp);
  if (!std::isfinite(r)) throw OverflowError("amplitude: result exceeds double range");
  return r;
}

/// Leading large-n value A(y, n) * cos(y ln n + gamma).
inline double asymptotic_value(const CdhParams& p, long long n, double y) {
  return amplitude(p, y, n) *
         std::cos(y * std::log(static_cast<double>(n)) + phase_gamma(p, y));
}

inline ScatteringData scattering_data(const CdhParams& p, double y, long long n) {
  return {y * y, amplitude(p, y, n), phase_gamma(p, y), n};
}

/// Two-term comparison function matching the generating function's
/// singularity at t = 1:
///   (1-t)^{-mu-iy} K + (1-t)^{-mu+iy} conj(K),
///   K = Gamma(a+b) Gamma(2iy) / (Gamma(a+iy) Gamma(b+iy)).
/// The conjugate pairing makes the value real for real t.
inline Complex comparison_function(const CdhParams& p, double y, const Complex& t) {
  detail::require_positive_y(y, "comparison_function");
  if (!(std::abs(t) < 1.0)) throw DomainError("comparison_function: requires |t| < 1");
  using complex_math::gamma;
  const double mu = p.mu(), a = p.a(), b = p.b();
  const Complex k = gamma(Complex(a + b, 0.0)) * gamma(Complex(0.0, 2.0 * y)) /
                    (gamma(Complex(a, y)) * gamma(Complex(b, y)));
  const Complex log_one_minus_t = std::log(1.0 - t);
  return std::exp(Complex(-mu, -y) * log_one_minus_t) * k +
         std::exp(Complex(-mu, y) * log_one_minus_t) * std::conj(k);
}

/// Discrete spectrum from the amplitude's zeros: for each channel parameter
/// p < 0, levels n >= 0 with n + p < 0 and energy -(n+p)^2.  Sorted by
/// ascending energy; entries from coinciding channels are all kept.
inline std::vector<SpectrumEntry> bound_state_spectrum(const CdhParams& p) {
  std::vector<SpectrumEntry> out;
  const std::pair<Channel, double> channels[] = {
      {Channel::mu, p.mu()}, {Channel::a, p.a()}, {Channel::b, p.b()}};
  for (const auto& [channel, param] : channels) {
    if (!(param < 0.0)) continue;
    for (long long n = 0; static_cast<double>(n) + param < 0.0; ++n) {
      const double shifted = static_cast<double>(n) + param;
      out.push_back({channel, n, -(shifted * shifted)});
    }
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const SpectrumEntry& x, const SpectrumEntry& y) {
                     return x.energy < y.energy;
                   });
  return out;
}

/// Per-degree comparison of the exact value (forward recurrence) with the
/// asymptotic formula.  env_error is |exact - asym| / amplitude: the cosine
/// passes through zero, so errors are measured against the envelope.  Each
/// row satisfies asymptotic = amplitude * cos(phase).
inline ConvergenceReport convergence_report(const CdhParams& p, double y,
                                            const std::vector<long long>& n_list) {
  detail::require_positive_y(y, "convergence_report");
  if (n_list.empty()) throw DomainError("convergence_report: empty degree list");
  for (std::size_t i = 0; i < n_list.size(); ++i) {
    if (n_list[i] < 1 || (i > 0 && n_list[i] <= n_list[i - 1])) {
      throw DomainError("convergence_report: degrees must be positive and ascending");
    }
  }
  const std::vector<double> exact = cdh::evaluate_recurrence(p, n_list.back(), y);
  const double gamma_shift = phase_gamma(p, y);
  ConvergenceReport report;
  report.entries.reserve(n_list.size());
  for (long long n : n_list) {
    ConvergenceEntry e;
    e.n = n;
    e.exact = exact[static_cast<std::size_t>(n)];
    e.amplitude = amplitude(p, y, n);
    e.phase = y * std::log(static_cast<double>(n)) + gamma_shift;
    e.asymptotic = e.amplitude * std::cos(e.phase);
    e.env_error = std::abs(e.exact - e.asymptotic) / e.amplitude;
    report.entries.push_back(e);
  }
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  long long m = 0;
  for (const ConvergenceEntry& e : report.entries) {
    if (!(e.env_error > 0.0) || !std::isfinite(e.env_error)) continue;
    const double lx = std::log(static_cast<double>(e.n));
    const double ly = std::log(e.env_error);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++m;
  }
  if (m >= 2) {
    const double denom = static_cast<double>(m) * sxx - sx * sx;
    if (denom != 0.0) {
      report.fitted_exponent = (static_cast<double>(m) * sxy - sx * sy) / denom;
    }
  }
  return report;
}

}  // namespace cdhahn::asymptotics
