#include "twistlib/curve.hpp"

namespace twist {

namespace {

Cyc coeff_a1(const Cyc& a) { return Cyc(Rat(2), Rat(1)) * a + Cyc(Rat(1), Rat(-1)); }
Cyc coeff_a3(const Cyc& a) { return Cyc(Rat(1), Rat(1)) * a * a - Cyc::zeta() * a; }

}  // namespace

WeierstrassCurve<ParamFrac> family_curve_symbolic() {
  ParamPoly a = ParamPoly::var_a();
  ParamPoly a1 = a.scaled(Cyc(Rat(2), Rat(1))) + ParamPoly(Cyc(Rat(1), Rat(-1)));
  ParamPoly a3 = (a * a).scaled(Cyc(Rat(1), Rat(1))) - a.scaled(Cyc::zeta());
  return WeierstrassCurve<ParamFrac>{ParamFrac(a1), ParamFrac(0), ParamFrac(a3), ParamFrac(0),
                                     ParamFrac(0)};
}

WeierstrassCurve<Cyc> family_curve(const Rat& a) {
  Cyc av{a};
  WeierstrassCurve<Cyc> e{coeff_a1(av), Cyc(0), coeff_a3(av), Cyc(0), Cyc(0)};
  if (e.is_singular())
    throw SingularCurveError("family curve is singular at a = " + rat_str(a));
  return e;
}

CurvePoint<ParamFrac> family_point_S_symbolic() {
  return CurvePoint<ParamFrac>(ParamFrac(0), ParamFrac(0));
}

CurvePoint<ParamFrac> family_point_T_symbolic() {
  ParamFrac a{ParamPoly::var_a()};
  return CurvePoint<ParamFrac>(-a, a);
}

CurvePoint<Cyc> family_point_S(const Rat&) { return CurvePoint<Cyc>(Cyc(0), Cyc(0)); }

CurvePoint<Cyc> family_point_T(const Rat& a) { return CurvePoint<Cyc>(-Cyc(a), Cyc(a)); }

std::vector<Int> family_bad_primes(const Int& a) {
  if (a == 0 || a == 1)
    throw SingularCurveError("family curve is singular at a = " + a.get_str());
  WeierstrassCurve<Cyc> e = family_curve(Rat(a));
  Rat n = e.discriminant().norm();
  // Integral model and integral parameter: the norm is a nonzero integer.
  Int num = n.get_num();
  std::vector<Int> out;
  for (auto& [p, ignored] : factor_int(num)) out.push_back(p);
  return out;
}

}  // namespace twist
