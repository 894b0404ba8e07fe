#pragma once

#include <string>

#include "twistlib/poly.hpp"

namespace twist {

/// Element c0 + c1*t + c2*t^2 of Q(zeta3)(a,d)[t]/(t^3 - d) with d symbolic.
class Kummer {
 public:
  Kummer() = default;
  Kummer(ParamFrac c0) : c0_(std::move(c0)) {}
  Kummer(const Cyc& c) : c0_(c) {}
  Kummer(long n) : c0_(Cyc(n)) {}
  Kummer(ParamFrac c0, ParamFrac c1, ParamFrac c2)
      : c0_(std::move(c0)), c1_(std::move(c1)), c2_(std::move(c2)) {}

  static Kummer t();

  const ParamFrac& c0() const { return c0_; }
  const ParamFrac& c1() const { return c1_; }
  const ParamFrac& c2() const { return c2_; }

  bool is_zero() const { return c0_.is_zero() && c1_.is_zero() && c2_.is_zero(); }
  bool is_scalar() const { return c1_.is_zero() && c2_.is_zero(); }

  /// Galois action t -> zeta3^k * t, coefficients fixed.
  Kummer galois(int k) const;
  /// c0^3 + c1^3 d + c2^3 d^2 - 3 c0 c1 c2 d; zero only for the zero element.
  ParamFrac norm() const;
  Kummer inv() const;

  friend Kummer operator+(const Kummer& x, const Kummer& y);
  friend Kummer operator-(const Kummer& x, const Kummer& y);
  friend Kummer operator-(const Kummer& x);
  friend Kummer operator*(const Kummer& x, const Kummer& y);
  friend Kummer operator/(const Kummer& x, const Kummer& y);
  friend bool operator==(const Kummer& x, const Kummer& y) {
    return x.c0_ == y.c0_ && x.c1_ == y.c1_ && x.c2_ == y.c2_;
  }
  friend bool operator!=(const Kummer& x, const Kummer& y) { return !(x == y); }

  std::string str() const;

 private:
  ParamFrac c0_, c1_, c2_;
};

/// Element c0 + c1*t + c2*t^2 of Q(zeta3)[t]/(t^3 - d) for a concrete
/// rational d that is not a cube.
class CycKummer {
 public:
  CycKummer() : d_(0) {}
  explicit CycKummer(Rat d) : d_(std::move(d)) {}
  CycKummer(Rat d, Cyc c0, Cyc c1, Cyc c2)
      : c0_(std::move(c0)), c1_(std::move(c1)), c2_(std::move(c2)), d_(std::move(d)) {}

  static CycKummer t(const Rat& d) { return CycKummer(d, Cyc(0), Cyc(1), Cyc(0)); }
  static CycKummer scalar(const Rat& d, const Cyc& c) { return CycKummer(d, c, Cyc(0), Cyc(0)); }

  const Cyc& c0() const { return c0_; }
  const Cyc& c1() const { return c1_; }
  const Cyc& c2() const { return c2_; }
  const Rat& d() const { return d_; }

  bool is_zero() const { return c0_.is_zero() && c1_.is_zero() && c2_.is_zero(); }
  bool is_scalar() const { return c1_.is_zero() && c2_.is_zero(); }

  CycKummer galois(int k) const;
  Cyc norm() const;
  CycKummer inv() const;

  friend CycKummer operator+(const CycKummer& x, const CycKummer& y);
  friend CycKummer operator-(const CycKummer& x, const CycKummer& y);
  friend CycKummer operator-(const CycKummer& x);
  friend CycKummer operator*(const CycKummer& x, const CycKummer& y);
  friend CycKummer operator/(const CycKummer& x, const CycKummer& y);
  friend bool operator==(const CycKummer& x, const CycKummer& y) {
    return x.d_ == y.d_ && x.c0_ == y.c0_ && x.c1_ == y.c1_ && x.c2_ == y.c2_;
  }
  friend bool operator!=(const CycKummer& x, const CycKummer& y) { return !(x == y); }

  std::string str() const;

 private:
  Cyc c0_, c1_, c2_;
  Rat d_;
};

CycKummer parse_cyckummer(const Rat& d, const std::string& text);

}  // namespace twist
