#pragma once

#include <cmath>

namespace cdhahn::detail {

// Minimal double-double arithmetic (Dekker/Knuth error-free transforms).
// Used where an alternating sum cancels far below the largest term, e.g.
// the terminating 3F2 at unit argument whose terms grow like binom(n, n/2)
// while the sum stays O(1).  Roughly 32 significant digits.
struct DoubleDouble {
  double hi = 0.0;
  double lo = 0.0;

  constexpr DoubleDouble() = default;
  constexpr DoubleDouble(double h) : hi(h), lo(0.0) {}
  constexpr DoubleDouble(double h, double l) : hi(h), lo(l) {}

  double value() const { return hi + lo; }
};

inline DoubleDouble two_sum(double x, double y) {
  double s = x + y;
  double bb = s - x;
  double err = (x - (s - bb)) + (y - bb);
  return {s, err};
}

inline DoubleDouble quick_two_sum(double x, double y) {
  double s = x + y;
  return {s, y - (s - x)};
}

inline DoubleDouble two_prod(double x, double y) {
  double p = x * y;
  return {p, std::fma(x, y, -p)};
}

inline DoubleDouble dd_add(const DoubleDouble& x, const DoubleDouble& y) {
  DoubleDouble s = two_sum(x.hi, y.hi);
  s.lo += x.lo + y.lo;
  return quick_two_sum(s.hi, s.lo);
}

inline DoubleDouble dd_add(const DoubleDouble& x, double y) {
  DoubleDouble s = two_sum(x.hi, y);
  s.lo += x.lo;
  return quick_two_sum(s.hi, s.lo);
}

inline DoubleDouble dd_mul(const DoubleDouble& x, const DoubleDouble& y) {
  DoubleDouble p = two_prod(x.hi, y.hi);
  p.lo += x.hi * y.lo + x.lo * y.hi;
  return quick_two_sum(p.hi, p.lo);
}

inline DoubleDouble dd_mul(const DoubleDouble& x, double y) {
  DoubleDouble p = two_prod(x.hi, y);
  p.lo += x.lo * y;
  return quick_two_sum(p.hi, p.lo);
}

inline DoubleDouble dd_div(const DoubleDouble& x, const DoubleDouble& y) {
  double q1 = x.hi / y.hi;
  DoubleDouble r = dd_add(x, dd_mul(y, -q1));
  double q2 = r.hi / y.hi;
  r = dd_add(r, dd_mul(y, -q2));
  double q3 = r.hi / y.hi;
  DoubleDouble q = quick_two_sum(q1, q2);
  return dd_add(q, q3);
}

inline DoubleDouble dd_neg(const DoubleDouble& x) { return {-x.hi, -x.lo}; }

}  // namespace cdhahn::detail
