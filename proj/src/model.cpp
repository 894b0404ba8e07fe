#include "twistlib/model.hpp"

#include <algorithm>
#include <initializer_list>
#include <sstream>
#include <vector>

#include "twistlib/curve.hpp"

namespace twist {

namespace {

// Coefficients are (r, s) meaning r + s*zeta3, listed from the highest power
// of a down to the constant term.
ParamPoly poly_in_a(std::initializer_list<std::pair<long, long>> coeffs) {
  ParamPoly p;
  const ParamPoly a = ParamPoly::var_a();
  for (const auto& [r, s] : coeffs) {
    p = p * a + ParamPoly(Cyc(Rat(r), Rat(s)));
  }
  return p;
}

ParamPoly z1_poly() { return poly_in_a({{1, 1}, {-1, -2}, {0, 1}}); }
ParamPoly z2_poly() { return poly_in_a({{1, 1}, {-1, -3}, {-1, 2}, {1, 0}, {0, 0}}); }
ParamPoly z3_poly() { return poly_in_a({{1, 1}, {0, -2}, {-2, 0}, {1, 1}}); }
ParamPoly w1_poly() { return -z1_poly(); }
ParamPoly w2_poly() { return poly_in_a({{1, 0}, {-3, -2}, {2, 3}, {0, -1}, {0, 0}}); }
ParamPoly w3_poly() { return poly_in_a({{0, -1}, {-2, 0}, {2, 2}, {0, -1}}); }

ParamPoly num_poly() { return poly_in_a({{2, 1}, {-4, -5}, {1, 5}, {1, -1}, {0, 0}}); }
ParamPoly c_poly() { return poly_in_a({{-1, 0}, {2, 2}, {0, -2}, {-1, 0}}); }
ParamPoly b_poly() { return poly_in_a({{-1, -1}, {0, 2}, {2, 0}, {-1, -1}}); }
ParamPoly d_poly() { return -z2_poly(); }

Cyc eval_in_a(std::initializer_list<std::pair<long, long>> coeffs, const Cyc& a) {
  Cyc p;
  for (const auto& [r, s] : coeffs) {
    p = p * a + Cyc(Rat(r), Rat(s));
  }
  return p;
}

CurveFunction scalar_frac(const CurveFunction::CurvePtr& e, const ParamPoly& p) {
  return CurveFunction::scalar(e, Kummer(ParamFrac(p)));
}

// Signed join starting from the second term; the first term carries its own
// sign. A unit coefficient drops the "1*" prefix except for constants.
void append_term(std::ostringstream& out, bool first, const Rat& c, const std::string& var) {
  Rat mag = c < 0 ? Rat(-c) : c;
  if (first) {
    if (c < 0) out << "-";
  } else {
    out << (c < 0 ? " - " : " + ");
  }
  if (var.empty()) {
    out << rat_str(mag);
  } else if (mag == 1) {
    out << var;
  } else {
    out << rat_str(mag) << "*" << var;
  }
}

}  // namespace

std::string QuarticModel::equation() const {
  std::ostringstream out;
  append_term(out, true, Rat(d), "y^2");
  out << " = ";
  append_term(out, true, A, "x^4");
  if (B != 0) append_term(out, false, B, "x^2");
  append_term(out, false, C, "");
  return out.str();
}

QuarticModel quadratic_model(const Rat& a, const Rat& b, const Int& d) {
  if (d == 0 || !is_power_free(d, 2)) {
    throw NotPowerFreeError("twist parameter d must be a square-free nonzero integer");
  }
  Rat disc = a * a - 4 * b;
  if (b == 0 || disc == 0) {
    throw SingularCurveError("curve y^2 = x^3 + a*x^2 + b*x is singular");
  }
  QuarticModel m;
  m.a = a;
  m.b = b;
  m.d = d;
  m.A = disc;
  m.B = Rat(-2) * a * Rat(d);
  m.C = Rat(d) * Rat(d);
  return m;
}

ParamPoly cubic_alpha_poly() { return poly_in_a({{1, 0}, {-2, -2}, {0, 2}, {1, 0}}); }

ParamPoly cubic_beta_poly() {
  return poly_in_a({{-1, 0},
                    {9, 3},
                    {-33, -21},
                    {64, 63},
                    {-69, -105},
                    {36, 105},
                    {1, -63},
                    {-12, 21},
                    {6, -3},
                    {-1, 0}});
}

Cyc cubic_alpha(const Cyc& a) { return eval_in_a({{1, 0}, {-2, -2}, {0, 2}, {1, 0}}, a); }

Cyc cubic_beta(const Cyc& a) {
  return eval_in_a({{-1, 0},
                    {9, 3},
                    {-33, -21},
                    {64, 63},
                    {-69, -105},
                    {36, 105},
                    {1, -63},
                    {-12, 21},
                    {6, -3},
                    {-1, 0}},
                   a);
}

Cyc CubicModel::model_discriminant() const {
  Cyc dd{Rat(d)};
  return Cyc(Rat(27)) * dd * dd * dd * beta * (alpha * alpha * alpha - beta);
}

std::string CubicModel::equation() const {
  std::ostringstream out;
  append_term(out, true, Rat(d), "z^3");
  Cyc zw = Cyc(Rat(3) * Rat(d)) * alpha;
  if (!zw.is_zero()) {
    if (zw.is_rational()) {
      append_term(out, false, zw.r, "z*w");
    } else {
      out << " + (" << cyc_str(zw) << ")*z*w";
    }
  }
  append_term(out, false, Rat(d) * Rat(d), "w^3");
  out << " + (" << cyc_str(beta) << ") = 0";
  return out.str();
}

CubicModel cubic_model(const Rat& a, const Int& d) {
  if (d == 0 || !is_power_free(d, 3)) {
    throw NotPowerFreeError("twist parameter d must be a cube-free nonzero integer");
  }
  CubicModel m;
  m.a = a;
  m.d = d;
  m.alpha = cubic_alpha(Cyc(a));
  m.beta = cubic_beta(Cyc(a));
  if (m.model_discriminant().is_zero()) {
    throw SingularCurveError("cubic model is singular");
  }
  return m;
}

ZWPair build_zw() {
  auto curve = std::make_shared<const WeierstrassCurve<Kummer>>(family_curve_symbolic().map<Kummer>(
      [](const ParamFrac& c) { return Kummer(c); }));
  const CurveFunction x = CurveFunction::x(curve);
  const CurveFunction y = CurveFunction::y(curve);
  // t^{-1} = t^2/d and t^{-2} = t/d.
  const Kummer t = Kummer::t();
  const ParamFrac dinv = ParamFrac(ParamPoly::var_d()).inv();
  const CurveFunction tinv1 = CurveFunction::scalar(curve, t * t * Kummer(dinv));
  const CurveFunction tinv2 = CurveFunction::scalar(curve, t * Kummer(dinv));

  auto part = [&](const ParamPoly& p1, const ParamPoly& p2, const ParamPoly& p3) {
    return (scalar_frac(curve, p1) * y + scalar_frac(curve, p2)) / x + scalar_frac(curve, p3);
  };

  ZWPair zw{curve,
            tinv1 * part(z1_poly(), z2_poly(), z3_poly()),
            tinv2 * part(w1_poly(), w2_poly(), w3_poly())};
  return zw;
}

bool verify_cubic_relation(const ZWPair& zw, const ParamPoly& alpha, const ParamPoly& beta) {
  const auto& e = zw.curve;
  const CurveFunction d = scalar_frac(e, ParamPoly::var_d());
  const CurveFunction rel = d * zw.z * zw.z * zw.z +
                            scalar_frac(e, ParamPoly(Cyc(Rat(3))) * ParamPoly::var_d() * alpha) *
                                zw.z * zw.w +
                            d * d * zw.w * zw.w * zw.w + scalar_frac(e, beta);
  return rel.is_zero();
}

std::pair<Kummer, Kummer> inverse_map(const Kummer& z0, const Kummer& w0) {
  const Kummer t = Kummer::t();
  const Kummer num{ParamFrac(num_poly())};
  const Kummer cc{ParamFrac(c_poly())};
  const Kummer bb{ParamFrac(b_poly())};
  const Kummer dd{ParamFrac(d_poly())};
  const Kummer z1{ParamFrac(z1_poly())};
  const Kummer tz = t * z0;
  const Kummer den = tz + t * t * w0 + cc;
  if (den.is_zero()) {
    throw DivisionByZeroError("inverse map denominator vanishes at this point");
  }
  Kummer x0 = num * den.inv();
  Kummer y0 = num * z1.inv() * (tz + bb) * den.inv() + dd * z1.inv();
  return {x0, y0};
}

namespace {

CurvePoint<Kummer> point_S_over_kummer() {
  CurvePoint<ParamFrac> s = family_point_S_symbolic();
  return CurvePoint<Kummer>(Kummer(s.x), Kummer(s.y));
}

PointMap inverse_with_twist(const CurveFunction::CurvePtr& e, const CurveFunction& z,
                            const CurveFunction& w, int k) {
  const Cyc zk = Cyc::zeta_pow(k);
  const Cyc zk2 = Cyc::zeta_pow(2 * k);
  const Kummer t = Kummer::t();
  const CurveFunction tz = CurveFunction::scalar(e, t * Kummer(zk)) * z;
  const CurveFunction t2w = CurveFunction::scalar(e, t * t * Kummer(zk2)) * w;
  const CurveFunction num = scalar_frac(e, num_poly());
  const CurveFunction den = tz + t2w + scalar_frac(e, c_poly());
  const CurveFunction z1inv = CurveFunction::scalar(e, Kummer(ParamFrac(z1_poly()).inv()));
  CurveFunction xm = num / den;
  CurveFunction ym = num * z1inv * (tz + scalar_frac(e, b_poly())) / den +
                     scalar_frac(e, d_poly()) * z1inv;
  return {std::make_shared<CurveFunction>(std::move(xm)),
          std::make_shared<CurveFunction>(std::move(ym))};
}

}  // namespace

PointMap inverse_map_composed(const CurveFunction& z, const CurveFunction& w) {
  return inverse_with_twist(z.curve(), z, w, 0);
}

PointMap cocycle_composite(const ZWPair& zw, int k) {
  return inverse_with_twist(zw.curve, zw.z, zw.w, k);
}

bool verify_cocycle(const ZWPair& zw, int k) {
  PointMap m = cocycle_composite(zw, k);
  CurvePoint<Kummer> kS = zw.curve->mul(((k % 3) + 3) % 3, point_S_over_kummer());
  PointMap tau = translation_map(zw.curve, kS);
  return *m.x == *tau.x && *m.y == *tau.y;
}

CurveFunction twisted_sigma(const ZWPair& zw, const CurveFunction& f, int k) {
  CurvePoint<Kummer> kS = zw.curve->mul(((k % 3) + 3) % 3, point_S_over_kummer());
  PointMap tau = translation_map(zw.curve, kS);
  return f.galois(k).compose(tau);
}

std::array<ParamFrac, 4> fit_relation(const CurveFunction& z, const CurveFunction& w) {
  const auto& e = z.curve();
  const CurveFunction one = CurveFunction::scalar(e, Kummer(ParamFrac(ParamPoly(Cyc(Rat(1))))));
  std::array<CurveFunction, 4> mono{z * z * z, z * w, w * w * w, one};

  // Duplicate monomials make the nullspace a degeneracy artifact rather than
  // a relation among distinct functions.
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (mono[i] == mono[j]) {
        throw NullspaceDimensionError("duplicate monomials give a degenerate nullspace");
      }
    }
  }

  // Common denominator: the product of the four canonical denominators.
  XPoly common = XPoly(1);
  for (const auto& m : mono) common = common * m.den();

  // Rows are indexed by the x-power, the y-part, and the power of t; entries
  // live in Q(zeta3)(a, d).
  std::vector<std::array<ParamFrac, 4>> rows;
  size_t max_len = 0;
  std::array<XPoly, 4> us, vs;
  for (int i = 0; i < 4; ++i) {
    auto [q, r] = XPoly::divmod(common, mono[i].den());
    if (!r.is_zero()) throw Error("denominators do not divide the common multiple");
    us[i] = mono[i].u() * q;
    vs[i] = mono[i].v() * q;
    max_len = std::max(max_len, std::max(us[i].coeffs().size(), vs[i].coeffs().size()));
  }
  for (size_t j = 0; j < max_len; ++j) {
    for (int part = 0; part < 2; ++part) {
      for (int tpow = 0; tpow < 3; ++tpow) {
        std::array<ParamFrac, 4> row;
        bool nonzero = false;
        for (int i = 0; i < 4; ++i) {
          Kummer c = (part == 0 ? us[i] : vs[i]).coeff(j);
          row[i] = tpow == 0 ? c.c0() : tpow == 1 ? c.c1() : c.c2();
          if (!row[i].is_zero()) nonzero = true;
        }
        if (nonzero) rows.push_back(row);
      }
    }
  }

  // Exact Gaussian elimination to reduced row echelon form.
  size_t lead = 0;
  std::vector<int> pivot_col;
  for (size_t r = 0; r < rows.size() && lead < 4; ++r) {
    size_t pr = r;
    while (pr < rows.size() && rows[pr][lead].is_zero()) ++pr;
    if (pr == rows.size()) {
      --r;
      ++lead;
      continue;
    }
    std::swap(rows[r], rows[pr]);
    ParamFrac inv = rows[r][lead].inv();
    for (size_t c = lead; c < 4; ++c) rows[r][c] = rows[r][c] * inv;
    for (size_t rr = 0; rr < rows.size(); ++rr) {
      if (rr == r || rows[rr][lead].is_zero()) continue;
      ParamFrac f = rows[rr][lead];
      for (size_t c = lead; c < 4; ++c) rows[rr][c] = rows[rr][c] - f * rows[r][c];
    }
    pivot_col.push_back(static_cast<int>(lead));
    ++lead;
  }

  size_t rank = pivot_col.size();
  if (rank != 3) {
    throw NullspaceDimensionError("relation nullspace has dimension " + std::to_string(4 - rank) +
                                  ", expected 1");
  }

  // Back-substitute the single free column, then normalize the z^3
  // coefficient to d.
  int free_col = -1;
  for (int c = 0; c < 4; ++c) {
    if (std::find(pivot_col.begin(), pivot_col.end(), c) == pivot_col.end()) free_col = c;
  }
  std::array<ParamFrac, 4> sol;
  sol[free_col] = ParamFrac(ParamPoly(Cyc(Rat(1))));
  for (size_t r = 0; r < rank; ++r) {
    sol[pivot_col[r]] = ParamFrac() - rows[r][free_col];
  }
  if (sol[0].is_zero()) {
    throw NullspaceDimensionError("relation nullspace is degenerate in the z^3 coordinate");
  }
  ParamFrac scale = ParamFrac(ParamPoly::var_d()) / sol[0];
  for (auto& s : sol) s = s * scale;
  return sol;
}

}  // namespace twist
