#include "twistlib/funcfield.hpp"

namespace twist {

XPoly::XPoly(Kummer c) {
  if (!c.is_zero()) coeffs_.push_back(std::move(c));
}

XPoly::XPoly(std::vector<Kummer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

XPoly XPoly::var() { return XPoly(std::vector<Kummer>{Kummer(0), Kummer(1)}); }

void XPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Kummer XPoly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Kummer(0);
}

const Kummer& XPoly::lead() const {
  if (is_zero()) throw InvalidArgumentError("leading coefficient of zero polynomial");
  return coeffs_.back();
}

Kummer XPoly::eval(const Kummer& x) const {
  Kummer out(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) out = out * x + *it;
  return out;
}

XPoly XPoly::galois(int k) const {
  std::vector<Kummer> out;
  out.reserve(coeffs_.size());
  for (auto& c : coeffs_) out.push_back(c.galois(k));
  return XPoly(std::move(out));
}

XPoly XPoly::scaled(const Kummer& c) const {
  std::vector<Kummer> out;
  out.reserve(coeffs_.size());
  for (auto& v : coeffs_) out.push_back(v * c);
  return XPoly(std::move(out));
}

XPoly XPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(lead().inv());
}

XPoly operator+(const XPoly& p, const XPoly& q) {
  std::vector<Kummer> out(std::max(p.coeffs_.size(), q.coeffs_.size()), Kummer(0));
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) out[i] = out[i] + p.coeffs_[i];
  for (std::size_t i = 0; i < q.coeffs_.size(); ++i) out[i] = out[i] + q.coeffs_[i];
  return XPoly(std::move(out));
}

XPoly operator-(const XPoly& p, const XPoly& q) {
  std::vector<Kummer> out(std::max(p.coeffs_.size(), q.coeffs_.size()), Kummer(0));
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) out[i] = out[i] + p.coeffs_[i];
  for (std::size_t i = 0; i < q.coeffs_.size(); ++i) out[i] = out[i] - q.coeffs_[i];
  return XPoly(std::move(out));
}

XPoly operator-(const XPoly& p) {
  std::vector<Kummer> out;
  out.reserve(p.coeffs_.size());
  for (auto& c : p.coeffs_) out.push_back(-c);
  return XPoly(std::move(out));
}

XPoly operator*(const XPoly& p, const XPoly& q) {
  if (p.is_zero() || q.is_zero()) return XPoly();
  std::vector<Kummer> out(p.coeffs_.size() + q.coeffs_.size() - 1, Kummer(0));
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < q.coeffs_.size(); ++j)
      out[i + j] = out[i + j] + p.coeffs_[i] * q.coeffs_[j];
  return XPoly(std::move(out));
}

std::pair<XPoly, XPoly> XPoly::divmod(const XPoly& p, const XPoly& q) {
  if (q.is_zero()) throw DivisionByZeroError("polynomial division by zero in x");
  XPoly rem = p;
  std::vector<Kummer> quot(
      p.coeffs_.size() >= q.coeffs_.size() ? p.coeffs_.size() - q.coeffs_.size() + 1 : 1,
      Kummer(0));
  Kummer lead_inv = q.lead().inv();
  while (!rem.is_zero() && rem.coeffs_.size() >= q.coeffs_.size()) {
    std::size_t shift = rem.coeffs_.size() - q.coeffs_.size();
    Kummer c = rem.coeffs_.back() * lead_inv;
    quot[shift] = quot[shift] + c;
    for (std::size_t i = 0; i < q.coeffs_.size(); ++i)
      rem.coeffs_[shift + i] = rem.coeffs_[shift + i] - c * q.coeffs_[i];
    rem.trim();
  }
  return {XPoly(std::move(quot)), rem};
}

XPoly XPoly::gcd(XPoly p, XPoly q) {
  while (!q.is_zero()) {
    XPoly r = divmod(p, q).second;
    p = std::move(q);
    q = std::move(r);
  }
  return p.monic();
}

std::string XPoly::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t idx = coeffs_.size(); idx-- > 0;) {
    if (coeffs_[idx].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + coeffs_[idx].str() + ")";
    if (idx == 1) out += "*x";
    if (idx > 1) out += "*x^" + std::to_string(idx);
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

XPoly cubic_rhs(const WeierstrassCurve<Kummer>& e) {
  return XPoly(std::vector<Kummer>{e.a6, e.a4, e.a2, Kummer(1)});
}

XPoly y_coeff_line(const WeierstrassCurve<Kummer>& e) {
  return XPoly(std::vector<Kummer>{e.a3, e.a1});
}

bool same_curve(const WeierstrassCurve<Kummer>& a, const WeierstrassCurve<Kummer>& b) {
  return a.a1 == b.a1 && a.a2 == b.a2 && a.a3 == b.a3 && a.a4 == b.a4 && a.a6 == b.a6;
}

}  // namespace

CurveFunction::CurveFunction(CurvePtr curve, XPoly u, XPoly v, XPoly d)
    : curve_(std::move(curve)), u_(std::move(u)), v_(std::move(v)), d_(std::move(d)) {
  if (!curve_) throw InvalidArgumentError("curve function without a curve");
  reduce();
}

void CurveFunction::reduce() {
  if (d_.is_zero()) throw DivisionByZeroError("zero denominator in the function field");
  if (is_zero()) {
    u_ = XPoly();
    v_ = XPoly();
    d_ = XPoly(Kummer(1));
    return;
  }
  XPoly g = XPoly::gcd(XPoly::gcd(u_, v_), d_);
  if (g.degree() > 0) {
    u_ = XPoly::divmod(u_, g).first;
    v_ = XPoly::divmod(v_, g).first;
    d_ = XPoly::divmod(d_, g).first;
  }
  Kummer lead = d_.lead();
  if (!(lead - Kummer(1)).is_zero()) {
    Kummer li = lead.inv();
    u_ = u_.scaled(li);
    v_ = v_.scaled(li);
    d_ = d_.scaled(li);
  }
}

void CurveFunction::require_same_curve(const CurveFunction& f, const CurveFunction& g) {
  if (f.curve_ == g.curve_ || same_curve(*f.curve_, *g.curve_)) return;
  throw InvalidArgumentError("function field arithmetic across different curves");
}

CurveFunction CurveFunction::x(CurvePtr curve) {
  return CurveFunction(std::move(curve), XPoly::var(), XPoly(), XPoly(Kummer(1)));
}

CurveFunction CurveFunction::y(CurvePtr curve) {
  return CurveFunction(std::move(curve), XPoly(), XPoly(Kummer(1)), XPoly(Kummer(1)));
}

CurveFunction CurveFunction::scalar(CurvePtr curve, Kummer c) {
  return CurveFunction(std::move(curve), XPoly(std::move(c)), XPoly(), XPoly(Kummer(1)));
}

bool CurveFunction::is_scalar() const { return v_.is_zero() && d_.degree() == 0 && u_.degree() <= 0; }

Kummer CurveFunction::scalar_value() const {
  if (!is_scalar()) throw InvalidArgumentError("scalar_value of a non-scalar function");
  return u_.coeff(0);  // the denominator is monic of degree 0, hence 1
}

CurveFunction CurveFunction::galois(int k) const {
  return CurveFunction(curve_, u_.galois(k), v_.galois(k), d_.galois(k));
}

CurveFunction CurveFunction::inv() const {
  if (is_zero()) throw DivisionByZeroError("inverse of the zero function");
  // 1/(U+Vy) = (U - V(a1x+a3) - Vy) / ((U+Vy)(U+V*ybar)), the denominator
  // being the norm to the x-line.
  XPoly line = y_coeff_line(*curve_);
  XPoly norm = u_ * u_ - u_ * v_ * line - v_ * v_ * cubic_rhs(*curve_);
  return CurveFunction(curve_, d_ * (u_ - v_ * line), -(d_ * v_), norm);
}

CurveFunction operator+(const CurveFunction& f, const CurveFunction& g) {
  CurveFunction::require_same_curve(f, g);
  return CurveFunction(f.curve_, f.u_ * g.d_ + g.u_ * f.d_, f.v_ * g.d_ + g.v_ * f.d_,
                       f.d_ * g.d_);
}

CurveFunction operator-(const CurveFunction& f, const CurveFunction& g) {
  CurveFunction::require_same_curve(f, g);
  return CurveFunction(f.curve_, f.u_ * g.d_ - g.u_ * f.d_, f.v_ * g.d_ - g.v_ * f.d_,
                       f.d_ * g.d_);
}

CurveFunction operator-(const CurveFunction& f) {
  return CurveFunction(f.curve_, -f.u_, -f.v_, f.d_);
}

CurveFunction operator*(const CurveFunction& f, const CurveFunction& g) {
  CurveFunction::require_same_curve(f, g);
  // (U1+V1y)(U2+V2y) with y^2 = cubic - (a1x+a3)y.
  XPoly uu = f.u_ * g.u_, vv = f.v_ * g.v_, cross = f.u_ * g.v_ + f.v_ * g.u_;
  XPoly u = uu + vv * cubic_rhs(*f.curve_);
  XPoly v = cross - vv * y_coeff_line(*f.curve_);
  return CurveFunction(f.curve_, u, v, f.d_ * g.d_);
}

CurveFunction operator/(const CurveFunction& f, const CurveFunction& g) { return f * g.inv(); }

bool operator==(const CurveFunction& f, const CurveFunction& g) {
  CurveFunction::require_same_curve(f, g);
  return f.u_ == g.u_ && f.v_ == g.v_ && f.d_ == g.d_;
}

CurveFunction CurveFunction::compose(const PointMap& m) const {
  const CurveFunction& mx = *m.x;
  const CurveFunction& my = *m.y;
  auto horner = [&](const XPoly& p) {
    CurveFunction acc = scalar(mx.curve(), Kummer(0));
    for (std::size_t idx = p.coeffs().size(); idx-- > 0;)
      acc = acc * mx + scalar(mx.curve(), p.coeff(idx));
    return acc;
  };
  CurveFunction num = horner(u_) + horner(v_) * my;
  return num / horner(d_);
}

Kummer CurveFunction::eval(const CurvePoint<Kummer>& p) const {
  if (p.infinity) throw PoleAtPointError("evaluation at the point at infinity");
  Kummer dv = d_.eval(p.x);
  if (dv.is_zero()) throw PoleAtPointError("pole: denominator vanishes at the point");
  return (u_.eval(p.x) + v_.eval(p.x) * p.y) / dv;
}

std::string CurveFunction::str() const {
  std::string out = "(" + u_.str();
  if (!v_.is_zero()) out += " + (" + v_.str() + ")*y";
  out += ")";
  if (d_.degree() > 0) out += " / (" + d_.str() + ")";
  return out;
}

// ---------------------------------------------------------------------------

PointMap identity_map(const CurveFunction::CurvePtr& curve) {
  return PointMap{std::make_shared<CurveFunction>(CurveFunction::x(curve)),
                  std::make_shared<CurveFunction>(CurveFunction::y(curve))};
}

PointMap translation_map(const CurveFunction::CurvePtr& curve, const CurvePoint<Kummer>& p) {
  if (p.infinity) return identity_map(curve);
  CurveFunction X = CurveFunction::x(curve), Y = CurveFunction::y(curve);
  CurveFunction xp = CurveFunction::scalar(curve, p.x), yp = CurveFunction::scalar(curve, p.y);
  // Adding the generic point to the constant point p; x - x(p) is a unit in
  // the function field, so the chord slope is defined.
  CurveFunction lam = (Y - yp) / (X - xp);
  CurveFunction nu = Y - lam * X;
  const auto& e = *curve;
  CurveFunction a1 = CurveFunction::scalar(curve, e.a1), a2 = CurveFunction::scalar(curve, e.a2),
                a3 = CurveFunction::scalar(curve, e.a3);
  CurveFunction x3 = lam * lam + a1 * lam - a2 - X - xp;
  CurveFunction y3 = -(lam + a1) * x3 - nu - a3;
  return PointMap{std::make_shared<CurveFunction>(std::move(x3)),
                  std::make_shared<CurveFunction>(std::move(y3))};
}

PointMap compose_maps(const PointMap& m2, const PointMap& m1) {
  return PointMap{std::make_shared<CurveFunction>(m2.x->compose(m1)),
                  std::make_shared<CurveFunction>(m2.y->compose(m1))};
}

Cyc translation_eigenvalue(const CurveFunction& f, const PointMap& tau) {
  if (f.is_zero()) throw NotEigenfunctionError("zero function has no eigenvalue");
  CurveFunction q = f.compose(tau) / f;
  if (!q.is_scalar()) throw NotEigenfunctionError("translate is not a scalar multiple");
  Kummer s = q.scalar_value();
  if (!s.is_scalar() || !s.c0().is_constant())
    throw NotEigenfunctionError("eigenvalue is not in Q(zeta3)");
  return s.c0().constant_value();
}

}  // namespace twist
