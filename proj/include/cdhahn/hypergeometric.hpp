#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <optional>

#include "cdhahn/complex_math.hpp"
#include "cdhahn/errors.hpp"

namespace cdhahn::hypergeometric {

using complex_math::Complex;

struct Hyp2F1Args {
  Complex a;
  Complex b;
  Complex c;
  Complex t;
};

// Knobs for the raw Gauss series.  Defaults give the library contract:
// |t| <= 0.95, 1e6-term budget, stop at two consecutive terms below
// 1e-15 * |partial sum|.  Tests and the generating-function evaluator pass
// larger budgets to probe the series closer to t = 1; with
// partial_on_budget the truncated sum is returned instead of throwing.
struct SeriesOptions {
  std::size_t max_terms = 1000000;
  double rel_tol = 1e-15;
  double t_cutoff = 0.95;
  bool partial_on_budget = false;
};

namespace detail {

// Index m such that v is within pole tolerance of -m, m >= 0.
inline std::optional<long long> terminating_index(const Complex& v) {
  double r = std::round(v.real());
  if (r > 0.5) return std::nullopt;
  if (std::hypot(v.real() - r, v.imag()) > complex_math::kPoleTolerance) return std::nullopt;
  return static_cast<long long>(-r);
}

}  // namespace detail

/// Gauss series 2F1(a, b; c; t) summed by the term ratio
/// t_{k+1} = t_k (a+k)(b+k) / ((c+k)(k+1)) t.  Terminates exactly when a or
/// b is a non-positive integer; otherwise stops once two consecutive terms
/// fall below rel_tol * |partial sum|.
inline Complex hyp2f1_series(const Hyp2F1Args& args, const SeriesOptions& opt = {}) {
  const double t_mag = std::abs(args.t);
  if (t_mag > opt.t_cutoff) {
    throw DomainError("hyp2f1_series: |t| beyond series cutoff");
  }
  std::optional<long long> stop;
  if (auto ma = detail::terminating_index(args.a)) stop = *ma;
  if (auto mb = detail::terminating_index(args.b)) {
    if (!stop || *mb < *stop) stop = *mb;
  }
  if (auto q = detail::terminating_index(args.c)) {
    // A zero denominator is reached at term q+1 unless the numerator
    // terminates the series first.
    if (!stop || *q < *stop) {
      throw DomainError("hyp2f1_series: c is a non-positive integer");
    }
  }
  Complex term = 1.0;
  Complex sum = 1.0;
  if (stop && *stop == 0) return sum;
  std::size_t small_streak = 0;
  for (std::size_t k = 0; k < opt.max_terms; ++k) {
    const double kd = static_cast<double>(k);
    term *= (args.a + kd) * (args.b + kd) / ((args.c + kd) * (kd + 1.0)) * args.t;
    sum += term;
    if (stop && static_cast<long long>(k) + 1 == *stop) return sum;
    if (!stop) {
      if (std::abs(term) <= opt.rel_tol * std::abs(sum)) {
        if (++small_streak >= 2) return sum;
      } else {
        small_streak = 0;
      }
    }
  }
  if (opt.partial_on_budget) return sum;
  throw NoConvergence("hyp2f1_series: term budget exhausted");
}

/// Terminating 3F2(-n, p1, p2; q1, q2; 1): exact sum of n+1 terms via the
/// term ratio t_{k+1} = t_k (k-n)(p1+k)(p2+k) / ((q1+k)(q2+k)(k+1)).
inline Complex hyp3f2_terminating(long long n, const Complex& p1, const Complex& p2,
                                  const Complex& q1, const Complex& q2) {
  if (n < 0) throw DomainError("hyp3f2_terminating: n must be nonnegative");
  for (const Complex& q : {q1, q2}) {
    if (auto j = detail::terminating_index(q); j && *j <= n - 1) {
      throw DomainError("hyp3f2_terminating: zero denominator inside the sum");
    }
  }
  Complex term = 1.0;
  Complex sum = 1.0;
  for (long long k = 0; k < n; ++k) {
    const double kd = static_cast<double>(k);
    term *= (kd - static_cast<double>(n)) * (p1 + kd) * (p2 + kd) /
            ((q1 + kd) * (q2 + kd) * (kd + 1.0));
    sum += term;
  }
  return sum;
}

/// Closed form of 2F1 at unit argument, valid for Re(c-a-b) > 0:
/// Gamma(c) Gamma(c-a-b) / (Gamma(c-a) Gamma(c-b)), via log_gamma differences.
inline Complex gauss_sum(const Complex& a, const Complex& b, const Complex& c) {
  if ((c - a - b).real() <= 0.0) {
    throw DomainError("gauss_sum: requires Re(c-a-b) > 0");
  }
  using complex_math::log_gamma;
  const Complex d = log_gamma(c) + log_gamma(c - a - b) - log_gamma(c - a) - log_gamma(c - b);
  if (d.real() > 709.0) throw OverflowError("gauss_sum: result exceeds double range");
  return std::exp(d);
}

}  // namespace cdhahn::hypergeometric
