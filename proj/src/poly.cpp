#include "twistlib/poly.hpp"

#include <algorithm>
#include <vector>

namespace twist {

namespace {

Cyc cyc_pow(const Cyc& x, unsigned e) {
  Cyc out(1);
  for (unsigned i = 0; i < e; ++i) out = out * x;
  return out;
}

}  // namespace

ParamPoly::ParamPoly(const Cyc& c) {
  if (!c.is_zero()) terms_[{0, 0}] = c;
}

ParamPoly ParamPoly::var_a() { return monomial(Cyc(1), 1, 0); }
ParamPoly ParamPoly::var_d() { return monomial(Cyc(1), 0, 1); }

ParamPoly ParamPoly::monomial(const Cyc& c, unsigned ea, unsigned ed) {
  ParamPoly p;
  if (!c.is_zero()) p.terms_[{ea, ed}] = c;
  return p;
}

bool ParamPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Mono{0, 0});
}

Cyc ParamPoly::constant_value() const {
  if (is_zero()) return Cyc(0);
  if (!is_constant()) throw InvalidArgumentError("constant_value of non-constant polynomial");
  return terms_.begin()->second;
}

int ParamPoly::degree_a() const {
  int d = -1;
  for (auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.ea));
  return d;
}

int ParamPoly::degree_d() const {
  int d = -1;
  for (auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.ed));
  return d;
}

Cyc ParamPoly::coeff(unsigned ea, unsigned ed) const {
  auto it = terms_.find({ea, ed});
  return it == terms_.end() ? Cyc(0) : it->second;
}

Cyc ParamPoly::lead_coeff() const {
  if (is_zero()) return Cyc(0);
  return terms_.rbegin()->second;
}

void ParamPoly::insert(const Mono& m, const Cyc& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void ParamPoly::check_size() const {
  if (terms_.size() > monomial_limit())
    throw ResourceError("monomial count " + std::to_string(terms_.size()) +
                        " exceeds limit " + std::to_string(monomial_limit()));
}

Cyc ParamPoly::eval(const Cyc& a, const Cyc& d) const {
  Cyc out(0);
  for (auto& [m, c] : terms_) out = out + c * cyc_pow(a, m.ea) * cyc_pow(d, m.ed);
  return out;
}

ParamPoly ParamPoly::subst_a(const Cyc& a) const {
  ParamPoly out;
  for (auto& [m, c] : terms_) out.insert({0, m.ed}, c * cyc_pow(a, m.ea));
  return out;
}

ParamPoly ParamPoly::subst_d(const Cyc& d) const {
  ParamPoly out;
  for (auto& [m, c] : terms_) out.insert({m.ea, 0}, c * cyc_pow(d, m.ed));
  return out;
}

ParamPoly ParamPoly::conj() const {
  ParamPoly out;
  for (auto& [m, c] : terms_) out.terms_[m] = c.conj();
  return out;
}

ParamPoly operator+(const ParamPoly& x, const ParamPoly& y) {
  ParamPoly out = x;
  for (auto& [m, c] : y.terms_) out.insert(m, c);
  out.check_size();
  return out;
}

ParamPoly operator-(const ParamPoly& x, const ParamPoly& y) {
  ParamPoly out = x;
  for (auto& [m, c] : y.terms_) out.insert(m, -c);
  out.check_size();
  return out;
}

ParamPoly operator-(const ParamPoly& x) {
  ParamPoly out;
  for (auto& [m, c] : x.terms_) out.terms_[m] = -c;
  return out;
}

ParamPoly operator*(const ParamPoly& x, const ParamPoly& y) {
  ParamPoly out;
  for (auto& [mx, cx] : x.terms_)
    for (auto& [my, cy] : y.terms_)
      out.insert({mx.ea + my.ea, mx.ed + my.ed}, cx * cy);
  out.check_size();
  return out;
}

ParamPoly ParamPoly::scaled(const Cyc& c) const {
  ParamPoly out;
  if (c.is_zero()) return out;
  for (auto& [m, v] : terms_) out.terms_[m] = v * c;
  return out;
}

ParamPoly ParamPoly::div_exact(const ParamPoly& x, const ParamPoly& y) {
  if (y.is_zero()) throw DivisionByZeroError("polynomial division by zero");
  ParamPoly rem = x, quot;
  // Exact quotients keep the leading term divisible at every step.
  while (!rem.is_zero()) {
    auto lead_r = *rem.terms_.rbegin();
    auto lead_y = *y.terms_.rbegin();
    if (lead_r.first.ea < lead_y.first.ea || lead_r.first.ed < lead_y.first.ed)
      throw InvalidArgumentError("div_exact: inexact polynomial division");
    Mono m{lead_r.first.ea - lead_y.first.ea, lead_r.first.ed - lead_y.first.ed};
    Cyc c = lead_r.second / lead_y.second;
    quot.insert(m, c);
    rem = rem - y * monomial(c, m.ea, m.ed);
  }
  return quot;
}

// ---------------------------------------------------------------------------
// Bivariate gcd through a primitive polynomial remainder sequence over
// (Q(zeta3)[d])[a].

namespace {

// Dense univariate polynomial in d over Q(zeta3).
using DPoly = std::vector<Cyc>;

void dtrim(DPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

bool dzero(const DPoly& p) { return p.empty(); }

DPoly dadd(const DPoly& x, const DPoly& y) {
  DPoly out(std::max(x.size(), y.size()), Cyc(0));
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = out[i] + x[i];
  for (std::size_t i = 0; i < y.size(); ++i) out[i] = out[i] + y[i];
  dtrim(out);
  return out;
}

DPoly dsub(const DPoly& x, const DPoly& y) {
  DPoly out(std::max(x.size(), y.size()), Cyc(0));
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = out[i] + x[i];
  for (std::size_t i = 0; i < y.size(); ++i) out[i] = out[i] - y[i];
  dtrim(out);
  return out;
}

DPoly dmul(const DPoly& x, const DPoly& y) {
  if (dzero(x) || dzero(y)) return {};
  DPoly out(x.size() + y.size() - 1, Cyc(0));
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) out[i + j] = out[i + j] + x[i] * y[j];
  dtrim(out);
  return out;
}

DPoly dscale(const DPoly& x, const Cyc& c) {
  DPoly out;
  out.reserve(x.size());
  for (auto& v : x) out.push_back(v * c);
  dtrim(out);
  return out;
}

// Quotient and remainder over the field Q(zeta3).
std::pair<DPoly, DPoly> ddivmod(const DPoly& x, const DPoly& y) {
  DPoly rem = x, quot(x.size() > y.size() ? x.size() - y.size() + 1 : 1, Cyc(0));
  Cyc lead_inv = y.back().inv();
  while (rem.size() >= y.size()) {
    std::size_t shift = rem.size() - y.size();
    Cyc c = rem.back() * lead_inv;
    quot[shift] = quot[shift] + c;
    for (std::size_t i = 0; i < y.size(); ++i) rem[shift + i] = rem[shift + i] - c * y[i];
    dtrim(rem);
    if (dzero(rem)) break;
  }
  dtrim(quot);
  return {quot, rem};
}

DPoly ddiv_exact(const DPoly& x, const DPoly& y) {
  auto [q, r] = ddivmod(x, y);
  if (!dzero(r)) throw InvalidArgumentError("inexact division in Q(zeta3)[d]");
  return q;
}

DPoly dmonic(const DPoly& x) {
  if (dzero(x)) return x;
  return dscale(x, x.back().inv());
}

// Rational content removal: scale so all entries are integers with overall
// integer content 1. Keeps coefficient bit growth polynomial in remainder
// sequences, which Euclid over Q does not.
struct ZContent {
  Int num_gcd{0};
  Int den_lcm{1};
  void feed(const Rat& q) {
    if (q == 0) return;
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), q.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den_mpz_t());
  }
  void feed(const Cyc& c) {
    feed(c.r);
    feed(c.s);
  }
  bool trivial() const { return num_gcd == 0 || (num_gcd == 1 && den_lcm == 1); }
  Rat scale() const {
    Rat s(den_lcm, num_gcd);
    s.canonicalize();
    return s;
  }
};

void znorm(DPoly& p) {
  ZContent z;
  for (auto& c : p) z.feed(c);
  if (z.trivial()) return;
  Rat s = z.scale();
  for (auto& c : p) {
    c.r *= s;
    c.s *= s;
  }
}

DPoly dgcd(DPoly x, DPoly y) {
  while (!dzero(y)) {
    DPoly r = ddivmod(x, y).second;
    znorm(r);
    x = std::move(y);
    y = std::move(r);
  }
  return dmonic(x);
}

// Recursive form: coefficients of powers of a.
using APoly = std::vector<DPoly>;

void atrim(APoly& p) {
  while (!p.empty() && dzero(p.back())) p.pop_back();
}

APoly to_rec(const ParamPoly& p) {
  APoly out(static_cast<std::size_t>(std::max(p.degree_a(), 0)) + 1);
  for (auto& [m, c] : p.terms()) {
    DPoly& row = out[m.ea];
    if (row.size() <= m.ed) row.resize(m.ed + 1, Cyc(0));
    row[m.ed] = c;
  }
  for (auto& row : out) dtrim(row);
  atrim(out);
  return out;
}

ParamPoly from_rec(const APoly& p) {
  ParamPoly out;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p[i].size(); ++j)
      out = out + ParamPoly::monomial(p[i][j], static_cast<unsigned>(i), static_cast<unsigned>(j));
  return out;
}

DPoly acontent(const APoly& p) {
  DPoly g;
  for (auto& row : p)
    if (!dzero(row)) g = dgcd(g, row);
  return g;
}

void znorm(APoly& p) {
  ZContent z;
  for (auto& row : p)
    for (auto& c : row) z.feed(c);
  if (z.trivial()) return;
  Rat s = z.scale();
  for (auto& row : p)
    for (auto& c : row) {
      c.r *= s;
      c.s *= s;
    }
}

APoly adiv_content(const APoly& p, const DPoly& c) {
  APoly out;
  out.reserve(p.size());
  for (auto& row : p) out.push_back(dzero(row) ? DPoly{} : ddiv_exact(row, c));
  return out;
}

// Pseudo-remainder of x by y in (Q(zeta3)[d])[a]; content is stripped by the
// caller, so trailing lead-coefficient powers are not restored.
APoly aprem(APoly x, const APoly& y) {
  const DPoly& lead = y.back();
  while (x.size() >= y.size()) {
    std::size_t shift = x.size() - y.size();
    DPoly top = x.back();
    APoly next(x.size() - 1);
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
      next[i] = dmul(x[i], lead);
      if (i >= shift) next[i] = dsub(next[i], dmul(y[i - shift], top));
    }
    atrim(next);
    x = std::move(next);
    if (x.empty()) break;
  }
  return x;
}

}  // namespace

ParamPoly ParamPoly::gcd(const ParamPoly& x, const ParamPoly& y) {
  auto normalize = [](const ParamPoly& p) {
    return p.is_zero() ? p : p.scaled(p.lead_coeff().inv());
  };
  if (x.is_zero()) return normalize(y);
  if (y.is_zero()) return normalize(x);

  APoly A = to_rec(x), B = to_rec(y);
  DPoly ca = acontent(A), cb = acontent(B);
  DPoly c = dgcd(ca, cb);
  A = adiv_content(A, ca);
  B = adiv_content(B, cb);
  znorm(A);
  znorm(B);
  if (A.size() < B.size()) std::swap(A, B);

  while (B.size() > 1) {
    APoly r = aprem(A, B);
    if (r.empty()) {
      A = B;
      B.clear();
      break;
    }
    DPoly cr = acontent(r);
    r = adiv_content(r, cr);
    znorm(r);
    A = std::move(B);
    B = std::move(r);
  }
  APoly g;
  if (!B.empty())
    g = {DPoly{Cyc(1)}};  // gcd of the primitive parts is a unit
  else
    g = std::move(A);

  APoly scaled;
  scaled.reserve(g.size());
  for (auto& row : g) scaled.push_back(dmul(row, c));
  ParamPoly out = from_rec(scaled);
  return normalize(out);
}

std::string ParamPoly::str() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Mono& m = it->first;
    const Cyc& c = it->second;
    std::string term;
    bool constant = (m.ea == 0 && m.ed == 0);
    if (!c.is_rational()) {
      term = "(" + cyc_str(c) + ")";
    } else if (constant) {
      term = rat_str(c.r);
    } else if (c.r == 1) {
      term = "";
    } else if (c.r == -1) {
      term = "-";
    } else {
      term = rat_str(c.r);
    }
    auto append = [&term](const std::string& piece) {
      if (!term.empty() && term != "-") term += "*";
      term += piece;
    };
    if (m.ea == 1) append("a");
    if (m.ea > 1) append("a^" + std::to_string(m.ea));
    if (m.ed == 1) append("d");
    if (m.ed > 1) append("d^" + std::to_string(m.ed));
    if (first) {
      out = term;
      first = false;
    } else if (!term.empty() && term[0] == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

ParamFrac::ParamFrac(ParamPoly num, ParamPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZeroError("zero denominator in Q(zeta3)(a,d)");
  if (num_.is_zero()) {
    den_ = ParamPoly(Cyc(1));
    return;
  }
  // Constants are units, so only the monic normalization is needed.
  if (!num_.is_constant() && !den_.is_constant()) {
    ParamPoly g = ParamPoly::gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = ParamPoly::div_exact(num_, g);
      den_ = ParamPoly::div_exact(den_, g);
    }
  }
  Cyc lead = den_.lead_coeff();
  if (!lead.is_one()) {
    Cyc li = lead.inv();
    num_ = num_.scaled(li);
    den_ = den_.scaled(li);
  }
}

ParamFrac::ParamFrac(reduced_tag, ParamPoly num, ParamPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (num_.is_zero()) {
    den_ = ParamPoly(Cyc(1));
    return;
  }
  Cyc lead = den_.lead_coeff();
  if (!lead.is_one()) {
    Cyc li = lead.inv();
    num_ = num_.scaled(li);
    den_ = den_.scaled(li);
  }
}

ParamFrac ParamFrac::inv() const {
  if (is_zero()) throw DivisionByZeroError("inverse of zero in Q(zeta3)(a,d)");
  return ParamFrac(reduced_tag{}, den_, num_);
}

Cyc ParamFrac::eval(const Cyc& a, const Cyc& d) const {
  Cyc dv = den_.eval(a, d);
  if (dv.is_zero())
    throw DivisionByZeroError("denominator " + den_.str() + " vanishes at evaluation point");
  return num_.eval(a, d) / dv;
}

ParamFrac ParamFrac::subst_a(const Cyc& a) const {
  return ParamFrac(num_.subst_a(a), den_.subst_a(a));
}

namespace {

bool is_unit_poly(const ParamPoly& p) { return p.is_constant() && !p.is_zero(); }

// Strip a common factor from two canonical-form polynomials.
void cross_cancel(ParamPoly& n, ParamPoly& d) {
  if (is_unit_poly(n) || is_unit_poly(d)) return;
  ParamPoly g = ParamPoly::gcd(n, d);
  if (!g.is_constant()) {
    n = ParamPoly::div_exact(n, g);
    d = ParamPoly::div_exact(d, g);
  }
}

}  // namespace

ParamFrac operator+(const ParamFrac& x, const ParamFrac& y) {
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  ParamPoly g = (is_unit_poly(x.den_) || is_unit_poly(y.den_))
                    ? ParamPoly(1)
                    : ParamPoly::gcd(x.den_, y.den_);
  if (g.is_constant()) {
    // Coprime denominators: the sum is already in lowest terms.
    return ParamFrac(ParamFrac::reduced_tag{}, x.num_ * y.den_ + y.num_ * x.den_,
                     x.den_ * y.den_);
  }
  ParamPoly d1r = ParamPoly::div_exact(x.den_, g), d2r = ParamPoly::div_exact(y.den_, g);
  return ParamFrac(x.num_ * d2r + y.num_ * d1r, x.den_ * d2r);
}

ParamFrac operator-(const ParamFrac& x, const ParamFrac& y) { return x + (-y); }

ParamFrac operator-(const ParamFrac& x) {
  ParamFrac out = x;
  out.num_ = -out.num_;
  return out;
}

ParamFrac operator*(const ParamFrac& x, const ParamFrac& y) {
  if (x.is_zero() || y.is_zero()) return ParamFrac(0);
  // After cross-cancellation the product is already in lowest terms.
  ParamPoly n1 = x.num_, d1 = x.den_, n2 = y.num_, d2 = y.den_;
  cross_cancel(n1, d2);
  cross_cancel(n2, d1);
  return ParamFrac(ParamFrac::reduced_tag{}, n1 * n2, d1 * d2);
}

ParamFrac operator/(const ParamFrac& x, const ParamFrac& y) {
  if (y.is_zero()) throw DivisionByZeroError("division by zero in Q(zeta3)(a,d)");
  return x * y.inv();
}

std::string ParamFrac::str() const {
  if (is_polynomial() && den_.constant_value().is_one()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace twist
