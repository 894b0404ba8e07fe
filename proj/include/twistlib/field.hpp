#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace twist {

using Int = mpz_class;
using Rat = mpq_class;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Monomial-count guard tripped (see set_monomial_limit).
struct ResourceError : Error {
  using Error::Error;
};
/// Division by a zero denominator; the message names the vanishing expression.
struct DivisionByZeroError : Error {
  using Error::Error;
};
struct SingularCurveError : Error {
  using Error::Error;
};
struct NotPowerFreeError : Error {
  using Error::Error;
};
struct PoleAtPointError : Error {
  using Error::Error;
};
struct NotEigenfunctionError : Error {
  using Error::Error;
};
struct NullspaceDimensionError : Error {
  using Error::Error;
};
struct HenselCriterionError : Error {
  using Error::Error;
};
struct ZeroBoundError : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};
struct InvalidArgumentError : Error {
  using Error::Error;
};

Rat make_rat(const Int& num, const Int& den);
Rat parse_rat(const std::string& text);
std::string rat_str(const Rat& x);

// ---------------------------------------------------------------------------
// Q(zeta3): elements r + s*z3 with z3^2 + z3 + 1 = 0.

struct Cyc {
  Rat r;
  Rat s;

  Cyc() : r(0), s(0) {}
  Cyc(Rat r_) : r(std::move(r_)), s(0) {}
  Cyc(Rat r_, Rat s_) : r(std::move(r_)), s(std::move(s_)) {}
  Cyc(long n) : r(n), s(0) {}

  static Cyc zeta() { return Cyc(Rat(0), Rat(1)); }
  /// zeta3^k for any integer k.
  static Cyc zeta_pow(long k);

  bool is_zero() const { return r == 0 && s == 0; }
  bool is_one() const { return r == 1 && s == 0; }
  bool is_rational() const { return s == 0; }

  /// Galois conjugate z3 -> z3^2.
  Cyc conj() const;
  /// r^2 - r*s + s^2 = x * conj(x).
  Rat norm() const;
  Cyc inv() const;

  friend Cyc operator+(const Cyc& x, const Cyc& y) { return Cyc(x.r + y.r, x.s + y.s); }
  friend Cyc operator-(const Cyc& x, const Cyc& y) { return Cyc(x.r - y.r, x.s - y.s); }
  friend Cyc operator-(const Cyc& x) { return Cyc(-x.r, -x.s); }
  friend Cyc operator*(const Cyc& x, const Cyc& y);
  friend Cyc operator/(const Cyc& x, const Cyc& y);
  friend bool operator==(const Cyc& x, const Cyc& y) { return x.r == y.r && x.s == y.s; }
  friend bool operator!=(const Cyc& x, const Cyc& y) { return !(x == y); }
};

Cyc cyc_mul(const Cyc& x, const Cyc& y);
Rat cyc_norm(const Cyc& x);

std::string cyc_str(const Cyc& x);
Cyc parse_cyc(const std::string& text);

// ---------------------------------------------------------------------------
// Rational prime decomposition in Q(zeta3).

enum class SplitType { Split, Inert, Ramified };

/// Split iff q = 1 mod 3, Inert iff q = 2 mod 3, Ramified iff q = 3.
/// Rejects non-prime q.
SplitType split_type(const Int& q);

const char* split_type_name(SplitType t);

// ---------------------------------------------------------------------------
// Integer utilities (exact, big-int).

bool is_probable_prime(const Int& n);
/// Prime factorization of |n|, n != 0, sorted by prime.
std::vector<std::pair<Int, int>> factor_int(const Int& n);
/// True when no prime appears in n to the p-th power (n != 0).
bool is_power_free(const Int& n, int p);
/// v_q(n) for n != 0.
int int_valuation(const Int& n, const Int& q);

// ---------------------------------------------------------------------------
// Monomial explosion guard for the polynomial layer.

/// Current bound on the number of monomials a single ParamPoly may hold.
/// Initialized from the TWIST_MONOMIAL_LIMIT environment variable when set.
std::size_t monomial_limit();
void set_monomial_limit(std::size_t limit);

}  // namespace twist
