#pragma once

#include <array>
#include <cmath>
#include <utility>
#include <vector>

#include "cdhahn/cdh.hpp"
#include "cdhahn/errors.hpp"

namespace cdhahn::quadrature {

struct IntegrationResult {
  double value = 0.0;
  double error_estimate = 0.0;
  long long evaluations = 0;
};

struct QuadratureOptions {
  // Gauss nodes are strictly interior, so y = 0 itself is never evaluated
  // even with lower = 0; integrands with removable 0/0 forms at the origin
  // (the weight behaves like y^2 there) are safe.  Raise this to shave off
  // a genuinely singular left endpoint if one ever appears.
  double lower = 0.0;
  double initial_upper = 30.0;
  long long max_evaluations = 100000;
};

namespace detail {

// Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration on P_q.
template <int Q>
const std::array<std::pair<double, double>, Q>& gauss_legendre() {
  static const std::array<std::pair<double, double>, Q> rule = [] {
    std::array<std::pair<double, double>, Q> r{};
    for (int i = 0; i < Q; ++i) {
      double x = std::cos(M_PI * (static_cast<double>(i) + 0.75) /
                          (static_cast<double>(Q) + 0.5));
      double dp = 0.0;
      for (int iter = 0; iter < 100; ++iter) {
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= Q; ++k) {
          const double kd = static_cast<double>(k);
          const double p2 = ((2.0 * kd - 1.0) * x * p1 - (kd - 1.0) * p0) / kd;
          p0 = p1;
          p1 = p2;
        }
        dp = static_cast<double>(Q) * (x * p1 - p0) / (x * x - 1.0);
        const double dx = p1 / dp;
        x -= dx;
        if (std::abs(dx) < 1e-15) break;
      }
      r[static_cast<std::size_t>(i)] = {x, 2.0 / ((1.0 - x * x) * dp * dp)};
    }
    return r;
  }();
  return rule;
}

template <int Q, typename F>
double panel_estimate(F& f, double lo, double hi) {
  // lo + 0.5*(hi - lo) instead of 0.5*(lo + hi): the sum can overflow for
  // huge tail panels, which would silently place every node at infinity.
  const double h = 0.5 * (hi - lo), c = lo + h;
  double acc = 0.0;
  for (const auto& [node, w] : gauss_legendre<Q>()) acc += w * f(c + h * node);
  return h * acc;
}

struct Panel {
  double lo, hi, alloc;
};

}  // namespace detail

/// Adaptive integration of f over (0, inf) for integrands with eventual
/// exponential decay.  Each panel is estimated with Gauss-Legendre rules of
/// order 30 and 15 and bisected while they disagree beyond the panel's
/// share of the absolute tolerance; the finite upper limit starts at
/// options.initial_upper and doubles until an extension contributes less
/// than half the tolerance.  error_estimate sums the per-panel rule
/// disagreements plus the last extension as a tail bound.
template <typename F>
IntegrationResult integrate_semi_infinite(F&& f, double tol,
                                          const QuadratureOptions& options = {}) {
  if (!(tol >= 1e-12 && tol <= 1e-4)) {
    throw DomainError("integrate_semi_infinite: tol must be in [1e-12, 1e-4]");
  }
  IntegrationResult result;
  auto counted = [&](double y) {
    ++result.evaluations;
    return f(y);
  };

  auto integrate_range = [&](double lo, double hi, double alloc) {
    std::vector<detail::Panel> stack{{lo, hi, alloc}};
    double value = 0.0;
    while (!stack.empty()) {
      const detail::Panel panel = stack.back();
      stack.pop_back();
      if (result.evaluations + 45 > options.max_evaluations) {
        throw NoConvergence("integrate_semi_infinite: evaluation budget exhausted");
      }
      const double coarse = detail::panel_estimate<15>(counted, panel.lo, panel.hi);
      const double fine = detail::panel_estimate<30>(counted, panel.lo, panel.hi);
      const double disagreement = std::abs(fine - coarse);
      if (disagreement <= panel.alloc) {
        value += fine;
        result.error_estimate += disagreement;
      } else {
        const double mid = panel.lo + 0.5 * (panel.hi - panel.lo);
        stack.push_back({mid, panel.hi, 0.5 * panel.alloc});
        stack.push_back({panel.lo, mid, 0.5 * panel.alloc});
      }
    }
    return value;
  };

  double upper = options.initial_upper;
  result.value = integrate_range(options.lower, upper, 0.5 * tol);
  while (true) {
    const double chunk = integrate_range(upper, 2.0 * upper, 0.5 * tol);
    result.value += chunk;
    upper *= 2.0;
    if (std::abs(chunk) < 0.5 * tol) {
      // Exponential decay makes the remaining tail smaller than the last
      // doubling; fold it into the reported error.
      result.error_estimate += std::abs(chunk);
      break;
    }
  }
  return result;
}

/// Inner product integral of degrees m and n against the weight:
/// returns the quadrature value of int_0^inf S_m S_n rho dy.  Off-diagonal
/// entries should vanish; the diagonal gives the squared norm h_n.
inline double orthogonality_check(const cdh::CdhParams& params, long long m, long long n,
                                  double tol = 1e-10) {
  cdh::detail::require_strict(params, "orthogonality_check");
  if (m < 0 || n < 0 || m > 20 || n > 20) {
    throw DomainError("orthogonality_check: degrees must be in [0, 20]");
  }
  const long long top = std::max(m, n);
  auto integrand = [&](double y) {
    const std::vector<double> s = cdh::evaluate_recurrence(params, top, y);
    return s[static_cast<std::size_t>(m)] * s[static_cast<std::size_t>(n)] *
           cdh::weight(params, y);
  };
  QuadratureOptions options;
  // The polynomial factor grows with degree; push the truncation point out
  // linearly (weight decay is exponential in y, so this is generous).
  options.initial_upper = std::max(30.0, 10.0 + 3.0 * static_cast<double>(m + n));
  return integrate_semi_infinite(integrand, tol, options).value;
}

}  // namespace cdhahn::quadrature
