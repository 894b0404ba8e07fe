#pragma once

#include <map>
#include <string>

#include "twistlib/field.hpp"

namespace twist {

/// Exponent pair for a^ea * d^ed.
struct Mono {
  unsigned ea = 0;
  unsigned ed = 0;
  friend bool operator<(const Mono& x, const Mono& y) {
    return x.ea != y.ea ? x.ea < y.ea : x.ed < y.ed;
  }
  friend bool operator==(const Mono& x, const Mono& y) { return x.ea == y.ea && x.ed == y.ed; }
};

/// Element of Q(zeta3)[a, d], sparse and always in canonical form
/// (sorted monomials, no zero coefficients).
class ParamPoly {
 public:
  ParamPoly() = default;
  ParamPoly(const Cyc& c);
  ParamPoly(long n) : ParamPoly(Cyc(n)) {}

  static ParamPoly var_a();
  static ParamPoly var_d();
  static ParamPoly monomial(const Cyc& c, unsigned ea, unsigned ed);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term; the whole polynomial must be constant.
  Cyc constant_value() const;
  int degree_a() const;
  int degree_d() const;
  std::size_t num_terms() const { return terms_.size(); }
  const std::map<Mono, Cyc>& terms() const { return terms_; }

  /// Coefficient of a^ea*d^ed (zero when absent).
  Cyc coeff(unsigned ea, unsigned ed) const;
  /// Leading coefficient under the (ea, ed) lexicographic order.
  Cyc lead_coeff() const;

  Cyc eval(const Cyc& a, const Cyc& d) const;
  /// Substitute a concrete value for a; the result lives in Q(zeta3)[d].
  ParamPoly subst_a(const Cyc& a) const;
  ParamPoly subst_d(const Cyc& d) const;
  /// Apply zeta3 -> zeta3^2 to every coefficient.
  ParamPoly conj() const;

  friend ParamPoly operator+(const ParamPoly& x, const ParamPoly& y);
  friend ParamPoly operator-(const ParamPoly& x, const ParamPoly& y);
  friend ParamPoly operator-(const ParamPoly& x);
  friend ParamPoly operator*(const ParamPoly& x, const ParamPoly& y);
  ParamPoly scaled(const Cyc& c) const;
  friend bool operator==(const ParamPoly& x, const ParamPoly& y) { return x.terms_ == y.terms_; }
  friend bool operator!=(const ParamPoly& x, const ParamPoly& y) { return !(x == y); }

  /// Exact quotient; throws when y does not divide x.
  static ParamPoly div_exact(const ParamPoly& x, const ParamPoly& y);
  /// Monic gcd (leading coefficient 1), or zero when both inputs are zero.
  static ParamPoly gcd(const ParamPoly& x, const ParamPoly& y);

  std::string str() const;

 private:
  void insert(const Mono& m, const Cyc& c);
  void check_size() const;

  std::map<Mono, Cyc> terms_;
};

/// Element of Q(zeta3)(a, d) in lowest terms with monic denominator.
class ParamFrac {
 public:
  ParamFrac() : num_(), den_(Cyc(1)) {}
  ParamFrac(ParamPoly num) : num_(std::move(num)), den_(Cyc(1)) {}
  ParamFrac(const Cyc& c) : num_(c), den_(Cyc(1)) {}
  ParamFrac(long n) : num_(Cyc(n)), den_(Cyc(1)) {}
  ParamFrac(ParamPoly num, ParamPoly den);

  const ParamPoly& num() const { return num_; }
  const ParamPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  Cyc constant_value() const { return num_.constant_value() / den_.constant_value(); }

  ParamFrac inv() const;
  Cyc eval(const Cyc& a, const Cyc& d) const;
  ParamFrac subst_a(const Cyc& a) const;

  friend ParamFrac operator+(const ParamFrac& x, const ParamFrac& y);
  friend ParamFrac operator-(const ParamFrac& x, const ParamFrac& y);
  friend ParamFrac operator-(const ParamFrac& x);
  friend ParamFrac operator*(const ParamFrac& x, const ParamFrac& y);
  friend ParamFrac operator/(const ParamFrac& x, const ParamFrac& y);
  friend bool operator==(const ParamFrac& x, const ParamFrac& y) {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }
  friend bool operator!=(const ParamFrac& x, const ParamFrac& y) { return !(x == y); }

  std::string str() const;

 private:
  struct reduced_tag {};
  /// Caller guarantees num and den are coprime and den is nonzero.
  ParamFrac(reduced_tag, ParamPoly num, ParamPoly den);

  ParamPoly num_;
  ParamPoly den_;
};

}  // namespace twist
