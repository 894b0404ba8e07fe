#pragma once

#include <vector>

#include "twistlib/kummer.hpp"

namespace twist {

/// n * v through doubling; works for any ring element with +, -, unary -.
template <typename F>
F nmul(long n, const F& v) {
  if (n == 0) return v - v;
  if (n < 0) return -nmul(-n, v);
  F acc = v - v;
  F pow = v;
  while (n > 0) {
    if (n & 1) acc = acc + pow;
    pow = pow + pow;
    n >>= 1;
  }
  return acc;
}

template <typename F>
struct CurvePoint {
  bool infinity = true;
  F x{};
  F y{};

  CurvePoint() = default;
  CurvePoint(F x_, F y_) : infinity(false), x(std::move(x_)), y(std::move(y_)) {}

  static CurvePoint at_infinity() { return CurvePoint(); }

  friend bool operator==(const CurvePoint& p, const CurvePoint& q) {
    if (p.infinity || q.infinity) return p.infinity == q.infinity;
    return p.x == q.x && p.y == q.y;
  }
  friend bool operator!=(const CurvePoint& p, const CurvePoint& q) { return !(p == q); }
};

/// y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6 over a field-like type F.
template <typename F>
struct WeierstrassCurve {
  F a1{}, a2{}, a3{}, a4{}, a6{};

  F discriminant() const {
    F b2 = a1 * a1 + nmul(4, a2);
    F b4 = a1 * a3 + nmul(2, a4);
    F b6 = a3 * a3 + nmul(4, a6);
    F b8 = a1 * a1 * a6 + nmul(4, a2 * a6) - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    return -(b2 * b2 * b8) - nmul(8, b4 * b4 * b4) - nmul(27, b6 * b6) + nmul(9, b2 * b4 * b6);
  }

  bool is_singular() const { return discriminant().is_zero(); }

  bool contains(const CurvePoint<F>& p) const {
    if (p.infinity) return true;
    F lhs = p.y * p.y + a1 * p.x * p.y + a3 * p.y;
    F rhs = p.x * p.x * p.x + a2 * p.x * p.x + a4 * p.x + a6;
    return (lhs - rhs).is_zero();
  }

  CurvePoint<F> neg(const CurvePoint<F>& p) const {
    if (p.infinity) return p;
    return CurvePoint<F>(p.x, -p.y - a1 * p.x - a3);
  }

  CurvePoint<F> add(const CurvePoint<F>& p, const CurvePoint<F>& q) const {
    if (p.infinity) return q;
    if (q.infinity) return p;
    F lam_num{}, lam_den{};
    if (p.x == q.x) {
      if (q == neg(p)) return CurvePoint<F>::at_infinity();
      lam_num = nmul(3, p.x * p.x) + nmul(2, a2 * p.x) + a4 - a1 * p.y;
      lam_den = nmul(2, p.y) + a1 * p.x + a3;
    } else {
      lam_num = q.y - p.y;
      lam_den = q.x - p.x;
    }
    F lam = lam_num / lam_den;
    F nu = p.y - lam * p.x;
    F x3 = lam * lam + a1 * lam - a2 - p.x - q.x;
    F y3 = -(lam + a1) * x3 - nu - a3;
    return CurvePoint<F>(x3, y3);
  }

  CurvePoint<F> sub(const CurvePoint<F>& p, const CurvePoint<F>& q) const {
    return add(p, neg(q));
  }

  CurvePoint<F> mul(long n, const CurvePoint<F>& p) const {
    if (n < 0) return mul(-n, neg(p));
    CurvePoint<F> acc = CurvePoint<F>::at_infinity();
    CurvePoint<F> pow = p;
    while (n > 0) {
      if (n & 1) acc = add(acc, pow);
      pow = add(pow, pow);
      n >>= 1;
    }
    return acc;
  }

  /// Apply a coefficient map, e.g. embedding into a larger field.
  template <typename G, typename Fn>
  WeierstrassCurve<G> map(Fn&& f) const {
    return WeierstrassCurve<G>{f(a1), f(a2), f(a3), f(a4), f(a6)};
  }
};

// ---------------------------------------------------------------------------
// The one-parameter family with a rational 3-isogeny structure:
//   y^2 + ((2+z3)a + 1-z3) xy + ((1+z3)a^2 - z3 a) y = x^3
// with marked points S = (0,0) and T = (-a, a), both of order 3.

/// Coefficients with the parameter left symbolic.
WeierstrassCurve<ParamFrac> family_curve_symbolic();
/// Coefficients at a concrete parameter value; throws SingularCurveError
/// when the discriminant vanishes (rational a: exactly a = 0 and a = 1).
WeierstrassCurve<Cyc> family_curve(const Rat& a);

CurvePoint<ParamFrac> family_point_S_symbolic();
CurvePoint<ParamFrac> family_point_T_symbolic();
CurvePoint<Cyc> family_point_S(const Rat& a);
CurvePoint<Cyc> family_point_T(const Rat& a);

/// Rational primes q such that some prime of Q(zeta3) above q divides the
/// discriminant of the integral model at an integer parameter a.
std::vector<Int> family_bad_primes(const Int& a);

}  // namespace twist
