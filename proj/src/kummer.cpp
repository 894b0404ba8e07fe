#include "twistlib/kummer.hpp"

#include <cctype>

namespace twist {

Kummer Kummer::t() { return Kummer(ParamFrac(0), ParamFrac(Cyc(1)), ParamFrac(0)); }

Kummer Kummer::galois(int k) const {
  Cyc z1 = Cyc::zeta_pow(k), z2 = Cyc::zeta_pow(2 * k);
  return Kummer(c0_, c1_ * ParamFrac(z1), c2_ * ParamFrac(z2));
}

ParamFrac Kummer::norm() const {
  ParamFrac d{ParamPoly::var_d()};
  return c0_ * c0_ * c0_ + c1_ * c1_ * c1_ * d + c2_ * c2_ * c2_ * d * d -
         ParamFrac(Cyc(3)) * c0_ * c1_ * c2_ * d;
}

Kummer Kummer::inv() const {
  if (is_zero()) throw DivisionByZeroError("inverse of zero in the Kummer layer");
  if (is_scalar()) return Kummer(c0_.inv());
  ParamFrac d{ParamPoly::var_d()};
  ParamFrac n = norm();
  return Kummer((c0_ * c0_ - c1_ * c2_ * d) / n, (c2_ * c2_ * d - c0_ * c1_) / n,
                (c1_ * c1_ - c0_ * c2_) / n);
}

Kummer operator+(const Kummer& x, const Kummer& y) {
  return Kummer(x.c0_ + y.c0_, x.c1_ + y.c1_, x.c2_ + y.c2_);
}

Kummer operator-(const Kummer& x, const Kummer& y) {
  return Kummer(x.c0_ - y.c0_, x.c1_ - y.c1_, x.c2_ - y.c2_);
}

Kummer operator-(const Kummer& x) { return Kummer(-x.c0_, -x.c1_, -x.c2_); }

Kummer operator*(const Kummer& x, const Kummer& y) {
  if (x.is_scalar()) {
    if (x.c0_.is_zero()) return Kummer();
    return Kummer(x.c0_ * y.c0_, x.c0_ * y.c1_, x.c0_ * y.c2_);
  }
  if (y.is_scalar()) {
    if (y.c0_.is_zero()) return Kummer();
    return Kummer(x.c0_ * y.c0_, x.c1_ * y.c0_, x.c2_ * y.c0_);
  }
  ParamFrac d{ParamPoly::var_d()};
  return Kummer(x.c0_ * y.c0_ + (x.c1_ * y.c2_ + x.c2_ * y.c1_) * d,
                x.c0_ * y.c1_ + x.c1_ * y.c0_ + x.c2_ * y.c2_ * d,
                x.c0_ * y.c2_ + x.c1_ * y.c1_ + x.c2_ * y.c0_);
}

Kummer operator/(const Kummer& x, const Kummer& y) { return x * y.inv(); }

namespace {

std::string kum_str(const std::string& s0, const std::string& s1, const std::string& s2,
                    bool z0, bool z1, bool z2) {
  auto term = [](const std::string& c, const char* mono) {
    std::string out;
    if (c == "1")
      out = mono;
    else if (c == "-1")
      out = std::string("-") + mono;
    else
      out = c + "*" + mono;
    return out;
  };
  std::string out;
  auto push = [&out](const std::string& t) {
    if (out.empty()) {
      out = t;
    } else if (t[0] == '-') {
      out += " - " + t.substr(1);
    } else {
      out += " + " + t;
    }
  };
  if (!z0) push(s0);
  if (!z1) push(term(s1, "t"));
  if (!z2) push(term(s2, "t^2"));
  return out.empty() ? "0" : out;
}

std::string coef_text(const Cyc& c) {
  if (c.is_rational()) return rat_str(c.r);
  return "(" + cyc_str(c) + ")";
}

std::string coef_text(const ParamFrac& c) {
  if (c.is_constant()) return coef_text(c.constant_value());
  return "(" + c.str() + ")";
}

}  // namespace

std::string Kummer::str() const {
  return kum_str(coef_text(c0_), coef_text(c1_), coef_text(c2_), c0_.is_zero(), c1_.is_zero(),
                 c2_.is_zero());
}

// ---------------------------------------------------------------------------

CycKummer CycKummer::galois(int k) const {
  return CycKummer(d_, c0_, c1_ * Cyc::zeta_pow(k), c2_ * Cyc::zeta_pow(2 * k));
}

Cyc CycKummer::norm() const {
  Cyc d{Rat(d_)};
  return c0_ * c0_ * c0_ + c1_ * c1_ * c1_ * d + c2_ * c2_ * c2_ * d * d -
         Cyc(3) * c0_ * c1_ * c2_ * d;
}

CycKummer CycKummer::inv() const {
  Cyc n = norm();
  if (n.is_zero()) throw DivisionByZeroError("inverse of zero in the Kummer layer");
  Cyc d{Rat(d_)};
  return CycKummer(d_, (c0_ * c0_ - c1_ * c2_ * d) / n, (c2_ * c2_ * d - c0_ * c1_) / n,
                   (c1_ * c1_ - c0_ * c2_) / n);
}

namespace {

void require_same_d(const CycKummer& x, const CycKummer& y) {
  if (x.d() != y.d())
    throw InvalidArgumentError("Kummer arithmetic across different twist integers");
}

}  // namespace

CycKummer operator+(const CycKummer& x, const CycKummer& y) {
  require_same_d(x, y);
  return CycKummer(x.d_, x.c0_ + y.c0_, x.c1_ + y.c1_, x.c2_ + y.c2_);
}

CycKummer operator-(const CycKummer& x, const CycKummer& y) {
  require_same_d(x, y);
  return CycKummer(x.d_, x.c0_ - y.c0_, x.c1_ - y.c1_, x.c2_ - y.c2_);
}

CycKummer operator-(const CycKummer& x) { return CycKummer(x.d_, -x.c0_, -x.c1_, -x.c2_); }

CycKummer operator*(const CycKummer& x, const CycKummer& y) {
  require_same_d(x, y);
  Cyc d{Rat(x.d_)};
  return CycKummer(x.d_, x.c0_ * y.c0_ + (x.c1_ * y.c2_ + x.c2_ * y.c1_) * d,
                   x.c0_ * y.c1_ + x.c1_ * y.c0_ + x.c2_ * y.c2_ * d,
                   x.c0_ * y.c2_ + x.c1_ * y.c1_ + x.c2_ * y.c0_);
}

CycKummer operator/(const CycKummer& x, const CycKummer& y) {
  require_same_d(x, y);
  return x * y.inv();
}

std::string CycKummer::str() const {
  return kum_str(coef_text(c0_), coef_text(c1_), coef_text(c2_), c0_.is_zero(), c1_.is_zero(),
                 c2_.is_zero());
}

CycKummer parse_cyckummer(const Rat& d, const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw ParseError("empty Kummer element");
  Cyc parts[3];
  std::size_t i = 0;
  while (i < t.size()) {
    int sign = 1;
    if (t[i] == '+' || t[i] == '-') {
      sign = (t[i] == '-') ? -1 : 1;
      ++i;
    }
    if (i >= t.size()) throw ParseError("bad Kummer element: " + text);
    Cyc coef(1);
    bool have_coef = false;
    if (t[i] == '(') {
      std::size_t close = t.find(')', i);
      if (close == std::string::npos) throw ParseError("bad Kummer element: " + text);
      coef = parse_cyc(t.substr(i + 1, close - i - 1));
      have_coef = true;
      i = close + 1;
    } else {
      std::size_t j = i;
      while (j < t.size() && (std::isdigit(static_cast<unsigned char>(t[j])) || t[j] == '/')) ++j;
      if (j > i) {
        coef = parse_cyc(t.substr(i, j - i));
        have_coef = true;
        i = j;
      }
    }
    if (sign < 0) coef = -coef;
    if (i < t.size() && t[i] == '*') ++i;
    int power = 0;
    if (i < t.size() && t[i] == 't') {
      ++i;
      power = 1;
      if (i + 1 < t.size() && t[i] == '^' && t[i + 1] == '2') {
        power = 2;
        i += 2;
      }
    } else if (!have_coef) {
      throw ParseError("bad Kummer element: " + text);
    }
    parts[power] = parts[power] + coef;
  }
  return CycKummer(d, parts[0], parts[1], parts[2]);
}

}  // namespace twist
