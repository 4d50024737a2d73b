#ifndef BUMPFORGE_DOUBLE_DOUBLE_HPP
#define BUMPFORGE_DOUBLE_DOUBLE_HPP

#include <cmath>
#include <limits>

namespace bumpforge {

// Unevaluated sum of two doubles, hi + lo with |lo| <= ulp(hi)/2.
// Gives ~32 significant digits, enough for the generalized Vandermonde
// solves and minimax residuals that double precision cannot carry past
// n ~ 10.
struct DD {
  double hi = 0.0;
  double lo = 0.0;

  constexpr DD() = default;
  constexpr DD(double h) : hi(h), lo(0.0) {}
  constexpr DD(double h, double l) : hi(h), lo(l) {}

  explicit operator double() const { return hi + lo; }
};

namespace dd_detail {

inline DD two_sum(double a, double b) {
  double s = a + b;
  double bb = s - a;
  double err = (a - (s - bb)) + (b - bb);
  return {s, err};
}

inline DD quick_two_sum(double a, double b) {
  double s = a + b;
  return {s, b - (s - a)};
}

inline DD two_prod(double a, double b) {
  double p = a * b;
  return {p, std::fma(a, b, -p)};
}

}  // namespace dd_detail

inline DD operator+(DD a, DD b) {
  DD s = dd_detail::two_sum(a.hi, b.hi);
  s.lo += a.lo + b.lo;
  return dd_detail::quick_two_sum(s.hi, s.lo);
}

inline DD operator-(DD a) { return {-a.hi, -a.lo}; }
inline DD operator-(DD a, DD b) { return a + (-b); }

inline DD operator*(DD a, DD b) {
  DD p = dd_detail::two_prod(a.hi, b.hi);
  p.lo += a.hi * b.lo + a.lo * b.hi;
  return dd_detail::quick_two_sum(p.hi, p.lo);
}

inline DD operator/(DD a, DD b) {
  double q1 = a.hi / b.hi;
  DD r = a - b * DD(q1);
  double q2 = r.hi / b.hi;
  r = r - b * DD(q2);
  double q3 = r.hi / b.hi;
  return dd_detail::quick_two_sum(q1, q2) + DD(q3);
}

inline DD& operator+=(DD& a, DD b) { return a = a + b; }
inline DD& operator-=(DD& a, DD b) { return a = a - b; }
inline DD& operator*=(DD& a, DD b) { return a = a * b; }
inline DD& operator/=(DD& a, DD b) { return a = a / b; }

inline bool operator<(DD a, DD b) {
  return a.hi < b.hi || (a.hi == b.hi && a.lo < b.lo);
}
inline bool operator>(DD a, DD b) { return b < a; }
inline bool operator<=(DD a, DD b) { return !(b < a); }
inline bool operator>=(DD a, DD b) { return !(a < b); }
inline bool operator==(DD a, DD b) { return a.hi == b.hi && a.lo == b.lo; }

inline DD abs(DD a) { return a.hi < 0.0 || (a.hi == 0.0 && a.lo < 0.0) ? -a : a; }

// sqrt(a) via one dd-precision Newton correction of the double result.
inline DD sqrt(DD a) {
  if (a.hi == 0.0) return DD(0.0);
  double y = std::sqrt(a.hi + a.lo);
  DD ydd(y);
  DD r = a - ydd * ydd;
  return ydd + DD(r.hi / (2.0 * y));
}

inline double to_double(DD a) { return a.hi + a.lo; }
inline double to_double(double a) { return a; }

}  // namespace bumpforge

#endif
