#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "twistlib/curve.hpp"

namespace twist {

/// Dense univariate polynomial in x over the symbolic Kummer layer.
class XPoly {
 public:
  XPoly() = default;
  XPoly(Kummer c);
  XPoly(long n) : XPoly(Kummer(n)) {}
  explicit XPoly(std::vector<Kummer> coeffs);

  static XPoly var();

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Kummer coeff(std::size_t i) const;
  const Kummer& lead() const;
  const std::vector<Kummer>& coeffs() const { return coeffs_; }

  Kummer eval(const Kummer& x) const;
  XPoly galois(int k) const;
  XPoly scaled(const Kummer& c) const;
  XPoly monic() const;

  friend XPoly operator+(const XPoly& p, const XPoly& q);
  friend XPoly operator-(const XPoly& p, const XPoly& q);
  friend XPoly operator-(const XPoly& p);
  friend XPoly operator*(const XPoly& p, const XPoly& q);
  friend bool operator==(const XPoly& p, const XPoly& q) { return p.coeffs_ == q.coeffs_; }
  friend bool operator!=(const XPoly& p, const XPoly& q) { return !(p == q); }

  static std::pair<XPoly, XPoly> divmod(const XPoly& p, const XPoly& q);
  static XPoly gcd(XPoly p, XPoly q);

  std::string str() const;

 private:
  void trim();
  std::vector<Kummer> coeffs_;  // coeffs_[i] multiplies x^i
};

class CurveFunction;

/// A rational self-map of the curve, e.g. translation by a point.
struct PointMap {
  std::shared_ptr<CurveFunction> x;
  std::shared_ptr<CurveFunction> y;
};

/// Element (U + V*y)/D of the function field of a Weierstrass curve over the
/// Kummer layer, with U, V, D in x only, D monic and gcd(U, V, D) = 1.
class CurveFunction {
 public:
  using Curve = WeierstrassCurve<Kummer>;
  using CurvePtr = std::shared_ptr<const Curve>;

  CurveFunction(CurvePtr curve, XPoly u, XPoly v, XPoly d);

  static CurveFunction x(CurvePtr curve);
  static CurveFunction y(CurvePtr curve);
  static CurveFunction scalar(CurvePtr curve, Kummer c);

  const CurvePtr& curve() const { return curve_; }
  const XPoly& u() const { return u_; }
  const XPoly& v() const { return v_; }
  const XPoly& den() const { return d_; }

  bool is_zero() const { return u_.is_zero() && v_.is_zero(); }
  bool is_scalar() const;
  Kummer scalar_value() const;

  /// Coefficient Galois action t -> zeta3^k t.
  CurveFunction galois(int k) const;
  CurveFunction inv() const;
  /// f(m) for a rational self-map m, i.e. the pullback of f along m.
  CurveFunction compose(const PointMap& m) const;
  /// Value at a point with coordinates in the Kummer layer.
  Kummer eval(const CurvePoint<Kummer>& p) const;

  friend CurveFunction operator+(const CurveFunction& f, const CurveFunction& g);
  friend CurveFunction operator-(const CurveFunction& f, const CurveFunction& g);
  friend CurveFunction operator-(const CurveFunction& f);
  friend CurveFunction operator*(const CurveFunction& f, const CurveFunction& g);
  friend CurveFunction operator/(const CurveFunction& f, const CurveFunction& g);
  friend bool operator==(const CurveFunction& f, const CurveFunction& g);
  friend bool operator!=(const CurveFunction& f, const CurveFunction& g) { return !(f == g); }

  std::string str() const;

 private:
  void reduce();
  static void require_same_curve(const CurveFunction& f, const CurveFunction& g);

  CurvePtr curve_;
  XPoly u_, v_, d_;
};

/// Identity self-map (x, y).
PointMap identity_map(const CurveFunction::CurvePtr& curve);
/// Translation tau_P(Q) = Q + P for an affine point P with Kummer scalar
/// coordinates, computed through the generic group law.
PointMap translation_map(const CurveFunction::CurvePtr& curve, const CurvePoint<Kummer>& p);
/// Composition m2 after m1.
PointMap compose_maps(const PointMap& m2, const PointMap& m1);

/// The scalar c with f(tau(P)) = c * f(P); throws NotEigenfunctionError when
/// the quotient is not a scalar of Q(zeta3).
Cyc translation_eigenvalue(const CurveFunction& f, const PointMap& tau);

}  // namespace twist
