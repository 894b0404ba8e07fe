#include "twistlib/localsolve.hpp"

#include <algorithm>
#include <array>
#include <climits>
#include <optional>
#include <set>
#include <sstream>

namespace twist {

namespace {

Int pow_int(const Int& q, long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

Int mod_canonical(const Int& x, const Int& m) {
  Int r = x % m;
  if (r < 0) r += m;
  return r;
}

Int inv_mod(const Int& x, const Int& m) {
  Int r;
  if (mpz_invert(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t()) == 0) {
    throw DivisionByZeroError("element is not invertible modulo q^P");
  }
  return r;
}

/// Valuation of x with zero (or q^cap-divisible) inputs reported as cap.
long capped_val(const Int& x, const Int& q, long cap) {
  if (x == 0) return cap;
  Int t = x;
  long v = 0;
  while (v < cap && mpz_divisible_p(t.get_mpz_t(), q.get_mpz_t())) {
    t /= q;
    ++v;
  }
  return v;
}

bool unit_is_square_mod(const Int& u, const Int& q) {
  Int r = mod_canonical(u, q);
  return mpz_legendre(r.get_mpz_t(), q.get_mpz_t()) == 1;
}

/// Square root mod an odd prime by Tonelli-Shanks; input must be a residue.
Int sqrt_mod_prime(const Int& a0, const Int& q) {
  Int a = mod_canonical(a0, q);
  if (a == 0) return 0;
  auto powm = [&](Int b, Int e) {
    Int r;
    mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), q.get_mpz_t());
    return r;
  };
  if (mod_canonical(q, Int(4)) == 3) return powm(a, (q + 1) / 4);
  Int s = q - 1;
  long e = 0;
  while (mpz_even_p(s.get_mpz_t())) {
    s /= 2;
    ++e;
  }
  Int n = 2;
  while (mpz_legendre(n.get_mpz_t(), q.get_mpz_t()) != -1) ++n;
  Int x = powm(a, (s + 1) / 2);
  Int b = powm(a, s);
  Int g = powm(n, s);
  long r = e;
  while (true) {
    Int t = b;
    long m = 0;
    while (t != 1 && m < r) {
      t = t * t % q;
      ++m;
    }
    if (m == 0) return x;
    Int gs = powm(g, pow_int(Int(2), r - m - 1));
    x = x * gs % q;
    g = gs * gs % q;
    b = b * g % q;
    r = m;
  }
}

/// Square root of a unit mod q^P (odd q), canonicalized to the smaller root.
Int sqrt_mod_odd_power(const Int& u, const Int& q, long P) {
  Int m = pow_int(q, P);
  Int y = sqrt_mod_prime(u, q);
  Int cur = q;
  while (cur < m) {
    cur = cur * cur;
    if (cur > m) cur = m;
    Int inv2y = inv_mod(2 * y, cur);
    y = mod_canonical(y - (y * y - u) * inv2y, cur);
  }
  y = mod_canonical(y, m);
  if (m - y < y) y = m - y;
  return y;
}

/// Square root of u = 1 mod 8 in Z_2 to P binary digits.
Int sqrt_mod_two_power(const Int& u, long P) {
  Int m = pow_int(Int(2), P);
  Int y = 1;
  for (long j = 3; j < P; ++j) {
    Int diff = mod_canonical(y * y - u, pow_int(Int(2), j + 1));
    if (diff != 0) y += pow_int(Int(2), j - 1);
  }
  y = mod_canonical(y, m);
  if (m - y < y) y = m - y;
  return y;
}

std::string padic_str(const Int& unit, const Int& q, long val) {
  std::ostringstream out;
  out << unit.get_str();
  if (val != 0) out << "*" << q.get_str() << "^" << val;
  return out.str();
}

long exact_val(const Int& x, const Int& q) { return int_valuation(x, q); }

/// Integer resultant of two polynomials (ascending coefficients) through
/// fraction-free Gaussian elimination of the Sylvester matrix.
Int resultant_int(const std::vector<Int>& f, const std::vector<Int>& g) {
  int n = static_cast<int>(f.size()) - 1;
  int m = static_cast<int>(g.size()) - 1;
  if (n < 0 || m < 0) return 0;
  int dim = n + m;
  if (dim == 0) return 1;
  std::vector<std::vector<Int>> a(dim, std::vector<Int>(dim, Int(0)));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j <= n; ++j) a[i][i + j] = f[n - j];
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= m; ++j) a[m + i][i + j] = g[m - j];
  }
  // Bareiss with row-swap sign tracking.
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < dim - 1; ++k) {
    if (a[k][k] == 0) {
      int piv = -1;
      for (int i = k + 1; i < dim; ++i) {
        if (a[i][k] != 0) {
          piv = i;
          break;
        }
      }
      if (piv < 0) return 0;
      std::swap(a[k], a[piv]);
      sign = -sign;
    }
    for (int i = k + 1; i < dim; ++i) {
      for (int j = k + 1; j < dim; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign > 0 ? a[dim - 1][dim - 1] : -a[dim - 1][dim - 1];
}

std::vector<Int> poly_derivative(const std::vector<Int>& f) {
  std::vector<Int> d;
  for (size_t i = 1; i < f.size(); ++i) d.push_back(Int(static_cast<long>(i)) * f[i]);
  if (d.empty()) d.push_back(Int(0));
  return d;
}

Int poly_eval(const std::vector<Int>& f, const Int& x) {
  Int r = 0;
  for (size_t i = f.size(); i-- > 0;) r = r * x + f[i];
  return r;
}

/// Coefficients of f(c + X).
std::vector<Int> taylor_shift(const std::vector<Int>& f, const Int& c) {
  std::vector<Int> g = f;
  int n = static_cast<int>(f.size());
  for (int i = 0; i < n; ++i) {
    for (int j = n - 2; j >= i; --j) g[j] += c * g[j + 1];
  }
  return g;
}

// -------------------------------------------------------------------------
// Quartic side: existence of x in Z_q with F(x) a square, by residue
// refinement. Decisions happen only where the valuation pattern is stable;
// the shared leaf criteria keep the procedure aligned with a flat
// enumeration at the same depth.

struct QuarticSearch {
  Int q;
  bool two;       // q = 2 variant: units are squares mod 8
  long D;         // depth cap
  long P;         // working precision exponent for witnesses
  Int qP;         // q^P
  std::vector<Int> F;
  long nodes = 0;
  long budget = 1000000;
  long maxd = 0;
  bool unresolved = false;
  std::optional<std::array<Int, 2>> wit;  // (x, ylift) with ylift^2 = F(x) mod q^P
  long wit_val = -1;                      // v(F') for Hensel witnesses

  bool found_root(const Int& x) {
    // Exact or lifted root of F: the point (x, 0).
    wit = {mod_canonical(x, qP), Int(0)};
    return true;
  }

  bool found_square(const Int& x, const Int& fx, long v) {
    Int u = fx / pow_int(q, v);
    Int y;
    long rel = P;  // digits available for the unit
    if (two) {
      y = sqrt_mod_two_power(mod_canonical(u, qP), rel);
    } else {
      y = sqrt_mod_odd_power(mod_canonical(u, qP), q, rel);
    }
    Int ylift = mod_canonical(y * pow_int(q, v / 2), qP);
    wit = {mod_canonical(x, qP), ylift};
    return true;
  }

  bool hensel_root(const Int& x0, long vp) {
    // Newton iteration toward the F-root near x0.
    Int x = mod_canonical(x0, qP);
    Int qvp = pow_int(q, vp);
    for (int iter = 0; iter < 200; ++iter) {
      Int fx = mod_canonical(poly_eval(F, x), qP);
      if (fx == 0) break;
      Int fpx = poly_eval(poly_derivative(F), x);
      Int step = (fx / qvp) * inv_mod(mod_canonical(fpx / qvp, qP), qP);
      x = mod_canonical(x - step, qP);
    }
    if (mod_canonical(poly_eval(F, x), qP) != 0) {
      throw Error("Hensel iteration failed to converge");
    }
    wit_val = vp;
    return found_root(x);
  }

  bool leaf(const Int& c) {
    ++nodes;
    Int fx = poly_eval(F, c);
    if (fx == 0) return found_root(c);
    long v = exact_val(fx, q);
    Int fpx = poly_eval(poly_derivative(F), c);
    long vp = fpx == 0 ? LONG_MAX / 4 : exact_val(fpx, q);
    if (v > 2 * vp) return hensel_root(c, vp);
    long stable = std::min(D + vp, 2 * D);
    long need = two ? 3 : 1;
    if (v + need <= stable) {
      bool square = v % 2 == 0 &&
                    (two ? mod_canonical(fx / pow_int(q, v), Int(8)) == 1
                         : unit_is_square_mod(fx / pow_int(q, v), q));
      if (square) return found_square(c, fx, v);
      return false;  // stable non-square values: the ball is empty
    }
    unresolved = true;
    return false;
  }

  bool node(const Int& c, long k) {
    if (k >= D) return leaf(c);
    if (nodes > budget) {
      unresolved = true;
      return false;
    }
    ++nodes;
    maxd = std::max(maxd, k + 1);
    std::vector<Int> g = taylor_shift(F, c);
    Int qk = pow_int(q, k);
    Int scale = 1;
    long m = LONG_MAX;
    for (size_t j = 0; j < g.size(); ++j) {
      g[j] *= scale;
      scale *= qk;
      if (g[j] != 0) m = std::min(m, exact_val(g[j], q));
    }
    if (m == LONG_MAX) throw Error("shifted quartic vanished identically");
    for (Int s = 0; s < q; ++s) {
      Int x = c + qk * s;
      Int val_here = poly_eval(g, s);
      if (val_here == 0) return found_root(x);
      long v = exact_val(val_here, q);
      // Decide on the child ball only while a flat depth-D pass with the
      // leaf rules would also decide there; otherwise refine toward leaves.
      if (v == m && !two && m + 1 <= D) {
        if (m % 2 == 1) continue;
        if (unit_is_square_mod(val_here / pow_int(q, m), q)) {
          return found_square(x, val_here, m);
        }
        continue;
      }
      if (v == m && two) {
        if (m % 2 == 1 && m + 1 <= D) continue;
        if (m % 2 == 0 && m + 3 <= D) {
          // The unit is known mod 8 once the tail of the child shift sits
          // above m+3.
          std::vector<Int> ts = taylor_shift(F, x);
          long tail = LONG_MAX;
          for (size_t j = 1; j < ts.size(); ++j) {
            if (ts[j] == 0) continue;
            tail = std::min(tail, exact_val(ts[j], q) + static_cast<long>(j) * (k + 1));
          }
          if (tail >= m + 3) {
            if (mod_canonical(val_here / pow_int(q, m), Int(8)) == 1) {
              return found_square(x, val_here, m);
            }
            continue;
          }
        }
      }
      // Residual vanishing or unsettled valuation: try Hensel at this
      // center, then refine.
      Int fpx = poly_eval(poly_derivative(F), x);
      long vp = fpx == 0 ? LONG_MAX / 4 : exact_val(fpx, q);
      if (v > 2 * vp && vp < D) return hensel_root(x, vp);
      if (node(x, k + 1)) return true;
    }
    return false;
  }
};

struct ChartOutcome {
  LocalStatus status = LocalStatus::Undetermined;
  std::optional<std::array<Int, 2>> wit;
  long depth = 0;
  long nodes = 0;
  long hensel = -1;
  long P = 0;
};

ChartOutcome solve_square_chart(const std::vector<Int>& F, const Int& q, int N) {
  bool two = q == 2;
  Int res = resultant_int(F, poly_derivative(F));
  if (res == 0) throw InvalidArgumentError("quartic has a repeated root");
  long vres = exact_val(res, q);
  long D = std::max<long>(N, 2 * vres + 3) + (two ? 3 : 0);
  QuarticSearch s;
  s.q = q;
  s.two = two;
  s.D = D;
  s.P = 2 * D + 6;
  s.qP = pow_int(q, s.P);
  s.F = F;
  bool solvable = s.node(Int(0), 0);
  ChartOutcome out;
  out.depth = std::max(s.maxd, solvable || s.unresolved ? s.maxd : D);
  out.nodes = s.nodes;
  out.P = s.P;
  if (solvable) {
    out.status = LocalStatus::Solvable;
    out.wit = s.wit;
    out.hensel = s.wit_val;
  } else if (s.unresolved) {
    out.status = LocalStatus::Undetermined;
  } else {
    out.status = LocalStatus::Empty;
    out.depth = D;
  }
  return out;
}

struct IntegralQuartic {
  std::vector<Int> F1, F2;  // (M d y)^2 = F1(x); chart at infinity reversed
  Int M;                    // denominator clearing
};

IntegralQuartic integralize(const QuarticModel& m) {
  Int M = 1;
  for (const Rat* c : {&m.A, &m.B, &m.C}) {
    Int den = c->get_den();
    Int g;
    mpz_gcd(g.get_mpz_t(), M.get_mpz_t(), den.get_mpz_t());
    M = M / g * den;
  }
  auto lift = [&](const Rat& c) {
    Rat v = c * Rat(M) * Rat(M) * Rat(m.d);
    return Int(v.get_num());
  };
  IntegralQuartic iq;
  iq.M = M;
  iq.F1 = {lift(m.C), Int(0), lift(m.B), Int(0), lift(m.A)};
  iq.F2 = {lift(m.A), Int(0), lift(m.B), Int(0), lift(m.C)};
  return iq;
}

std::vector<std::string> quartic_witness(const ChartOutcome& out, bool infinity_chart,
                                         const Int& q, const Int& Md, long window) {
  // Chart 1 carries (x, ylift = M d y); chart 2 carries (u, vlift = M d u^2 y)
  // with x = 1/u. Units are displayed mod q^window.
  const Int& c0 = (*out.wit)[0];
  const Int& c1 = (*out.wit)[1];
  Int qP = pow_int(q, out.P);
  Int qW = pow_int(q, std::min(window, out.P));
  long vMd = exact_val(Md, q);
  Int uMd = Md / pow_int(q, vMd);
  auto render_quot = [&](const Int& num, long extra_val, const Int& extra_unit) {
    // num / (Md * extra): exact p-adic division to the working window.
    if (num == 0) return std::string("0");
    long vn = capped_val(num, q, out.P);
    Int un = mod_canonical(num / pow_int(q, vn), qP);
    Int den_unit = mod_canonical(uMd * extra_unit, qP);
    Int u = mod_canonical(un * inv_mod(den_unit, qP), qW);
    return padic_str(u, q, vn - vMd - extra_val);
  };
  if (!infinity_chart) {
    std::string xs = mod_canonical(c0, qW).get_str();
    std::string ys = render_quot(c1, 0, Int(1));
    return {xs, ys};
  }
  if (c0 == 0) {
    // u = 0: the point at infinity; report the limit of y/x^2.
    return {"infinity", render_quot(c1, 0, Int(1))};
  }
  long vu = capped_val(c0, q, out.P);
  Int uu = mod_canonical(c0 / pow_int(q, vu), qP);
  Int xinv = mod_canonical(inv_mod(uu, qP), qW);
  std::string xs = padic_str(xinv, q, -vu);
  std::string ys = render_quot(c1, 2 * vu, mod_canonical(uu * uu, qP));
  return {xs, ys};
}

// -------------------------------------------------------------------------
// Cubic side over the completion at a place of K = Q(zeta3).

struct ZqRing {
  Int q;
  long P;
  Int qP;
  Int zeta;  // image of zeta3

  using Elt = Int;

  Elt from_pair(const Int& x, const Int& y) const { return mod_canonical(x + y * zeta, qP); }
  Elt add(const Elt& a, const Elt& b) const { return mod_canonical(a + b, qP); }
  Elt sub(const Elt& a, const Elt& b) const { return mod_canonical(a - b, qP); }
  Elt mul(const Elt& a, const Elt& b) const { return mod_canonical(a * b, qP); }
  Elt scale(long n, const Elt& a) const { return mod_canonical(Int(n) * a, qP); }
  bool is_zero(const Elt& a) const { return a == 0; }
  long val(const Elt& a) const { return capped_val(a, q, P); }
  Elt unit_part(const Elt& a, long v) const { return mod_canonical(a / pow_int(q, v), qP); }
  Elt shift_up(const Elt& a, long k) const { return mod_canonical(a * pow_int(q, k), qP); }
  Elt inv_unit(const Elt& a) const { return inv_mod(a, qP); }
  long residue_count() const {
    if (!q.fits_slong_p()) throw ResourceError("residue field too large to enumerate");
    return q.get_si();
  }
  Elt residue(long i) const { return Int(i); }
  std::string str(const Elt& a, long window) const {
    return mod_canonical(a, pow_int(q, std::min(window, P))).get_str();
  }
};

struct Fq2Ring {
  Int q;
  long P;
  Int qP;

  struct Elt {
    Int a, b;  // a + b*s with s^2 + s + 1 = 0
  };

  Elt from_pair(const Int& x, const Int& y) const {
    return {mod_canonical(x, qP), mod_canonical(y, qP)};
  }
  Elt add(const Elt& x, const Elt& y) const {
    return {mod_canonical(x.a + y.a, qP), mod_canonical(x.b + y.b, qP)};
  }
  Elt sub(const Elt& x, const Elt& y) const {
    return {mod_canonical(x.a - y.a, qP), mod_canonical(x.b - y.b, qP)};
  }
  Elt mul(const Elt& x, const Elt& y) const {
    Int cross = x.a * y.b + x.b * y.a - x.b * y.b;
    return {mod_canonical(x.a * y.a - x.b * y.b, qP), mod_canonical(cross, qP)};
  }
  Elt scale(long n, const Elt& x) const {
    return {mod_canonical(Int(n) * x.a, qP), mod_canonical(Int(n) * x.b, qP)};
  }
  bool is_zero(const Elt& x) const { return x.a == 0 && x.b == 0; }
  long val(const Elt& x) const {
    return std::min(capped_val(x.a, q, P), capped_val(x.b, q, P));
  }
  Elt unit_part(const Elt& x, long v) const {
    Int s = pow_int(q, v);
    return {mod_canonical(x.a / s, qP), mod_canonical(x.b / s, qP)};
  }
  Elt shift_up(const Elt& x, long k) const {
    Int s = pow_int(q, k);
    return {mod_canonical(x.a * s, qP), mod_canonical(x.b * s, qP)};
  }
  Elt inv_unit(const Elt& x) const {
    // conj(a + b s) = (a - b) - b s; norm = a^2 - a b + b^2.
    Int norm = mod_canonical(x.a * x.a - x.a * x.b + x.b * x.b, qP);
    Int ninv = inv_mod(norm, qP);
    return {mod_canonical((x.a - x.b) * ninv, qP), mod_canonical(-x.b * ninv, qP)};
  }
  long residue_count() const {
    if (!q.fits_slong_p() || q.get_si() > 46340) {
      throw ResourceError("residue field too large to enumerate");
    }
    return q.get_si() * q.get_si();
  }
  Elt residue(long i) const {
    long qs = q.get_si();
    return {Int(i % qs), Int(i / qs)};
  }
  std::string str(const Elt& x, long window) const {
    Int qW = pow_int(q, std::min(window, P));
    Int a = mod_canonical(x.a, qW);
    Int b = mod_canonical(x.b, qW);
    if (b == 0) return a.get_str();
    std::ostringstream out;
    out << a.get_str() << "+" << b.get_str() << "*s";
    return out.str();
  }
};

// Monomial order for a 2-variable cubic form restricted to a chart:
// (i, j) with i + j <= 3.
constexpr int kMon[10][2] = {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1},
                             {0, 2}, {3, 0}, {2, 1}, {1, 2}, {0, 3}};

template <typename Ring>
using Poly2 = std::array<typename Ring::Elt, 10>;

template <typename Ring>
typename Ring::Elt eval2(const Ring& R, const Poly2<Ring>& f, const typename Ring::Elt& u,
                         const typename Ring::Elt& v) {
  std::array<typename Ring::Elt, 4> pu, pv;
  pu[0] = R.from_pair(Int(1), Int(0));
  pv[0] = pu[0];
  for (int i = 1; i < 4; ++i) {
    pu[i] = R.mul(pu[i - 1], u);
    pv[i] = R.mul(pv[i - 1], v);
  }
  typename Ring::Elt acc = R.from_pair(Int(0), Int(0));
  for (int t = 0; t < 10; ++t) {
    acc = R.add(acc, R.mul(f[t], R.mul(pu[kMon[t][0]], pv[kMon[t][1]])));
  }
  return acc;
}

/// f(s1 + q u, s2 + q v) as a polynomial in (u, v).
template <typename Ring>
Poly2<Ring> shift2(const Ring& R, const Poly2<Ring>& f, const typename Ring::Elt& s1,
                   const typename Ring::Elt& s2) {
  static const long binom[4][4] = {{1, 0, 0, 0}, {1, 1, 0, 0}, {1, 2, 1, 0}, {1, 3, 3, 1}};
  auto zero = R.from_pair(Int(0), Int(0));
  Poly2<Ring> g;
  g.fill(zero);
  std::array<typename Ring::Elt, 4> p1, p2;
  p1[0] = R.from_pair(Int(1), Int(0));
  p2[0] = p1[0];
  for (int i = 1; i < 4; ++i) {
    p1[i] = R.mul(p1[i - 1], s1);
    p2[i] = R.mul(p2[i - 1], s2);
  }
  auto index_of = [](int i, int j) {
    for (int t = 0; t < 10; ++t) {
      if (kMon[t][0] == i && kMon[t][1] == j) return t;
    }
    return -1;
  };
  for (int t = 0; t < 10; ++t) {
    int i = kMon[t][0], j = kMon[t][1];
    for (int i2 = 0; i2 <= i; ++i2) {
      for (int j2 = 0; j2 <= j; ++j2) {
        // Coefficient of u^{i2} v^{j2}: C(i,i2) C(j,j2) s1^{i-i2} s2^{j-j2} q^{i2+j2}.
        typename Ring::Elt c =
            R.mul(f[t], R.mul(p1[i - i2], p2[j - j2]));
        c = R.scale(binom[i][i2] * binom[j][j2], c);
        c = R.shift_up(c, i2 + j2);
        int idx = index_of(i2, j2);
        g[idx] = R.add(g[idx], c);
      }
    }
  }
  return g;
}

template <typename Ring>
struct CubicSearch {
  const Ring& R;
  long D;
  long budget = 500000;
  long nodes = 0;
  long maxd = 0;
  bool unresolved = false;
  std::optional<std::array<typename Ring::Elt, 2>> wit;  // chart coordinates
  long wit_val = -1;

  explicit CubicSearch(const Ring& r) : R(r) {}

  long content(const Poly2<Ring>& f) const {
    long m = R.P;
    for (const auto& c : f) m = std::min(m, R.val(c));
    return m;
  }

  /// Newton along the coordinate with the smaller partial valuation.
  bool newton(const Poly2<Ring>& f, typename Ring::Elt u, typename Ring::Elt v, long k) {
    // f here is the node polynomial at depth k; coordinates relative to it.
    // Work directly with the chart polynomial instead: callers pass the
    // top-level one, so k = 0 and (u, v) are absolute chart coordinates.
    (void)k;
    for (int iter = 0; iter < 200; ++iter) {
      auto val_f = R.val(eval2(R, f, u, v));
      if (val_f >= R.P) break;
      auto fu = eval2(R, partial(f, 0), u, v);
      auto fv = eval2(R, partial(f, 1), u, v);
      long vu = R.val(fu), vv = R.val(fv);
      bool use_u = vu <= vv;
      long vp = use_u ? vu : vv;
      if (val_f <= 2 * vp) return false;
      auto fval = eval2(R, f, u, v);
      auto num = R.unit_part(fval, vp);
      auto den = R.unit_part(use_u ? fu : fv, vp);
      auto step = R.mul(num, R.inv_unit(den));
      if (use_u) {
        u = R.sub(u, step);
      } else {
        v = R.sub(v, step);
      }
      wit_val = vp;
    }
    if (R.val(eval2(R, f, u, v)) < R.P) return false;
    wit = {u, v};
    return true;
  }

  Poly2<Ring> partial(const Poly2<Ring>& f, int which) const {
    auto zero = R.from_pair(Int(0), Int(0));
    Poly2<Ring> g;
    g.fill(zero);
    auto index_of = [](int i, int j) {
      for (int t = 0; t < 10; ++t) {
        if (kMon[t][0] == i && kMon[t][1] == j) return t;
      }
      return -1;
    };
    for (int t = 0; t < 10; ++t) {
      int i = kMon[t][0], j = kMon[t][1];
      if (which == 0 && i > 0) {
        g[index_of(i - 1, j)] = R.add(g[index_of(i - 1, j)], R.scale(i, f[t]));
      }
      if (which == 1 && j > 0) {
        g[index_of(i, j - 1)] = R.add(g[index_of(i, j - 1)], R.scale(j, f[t]));
      }
    }
    return g;
  }

  /// Hensel attempt at absolute chart point (u, v); top is the chart
  /// polynomial, fnode the node polynomial with (u,v) = c + q^k (s1,s2).
  bool try_hensel(const Poly2<Ring>& top, const typename Ring::Elt& u,
                  const typename Ring::Elt& v) {
    auto fval = eval2(R, top, u, v);
    long vf = R.val(fval);
    long vp = std::min(R.val(eval2(R, partial(top, 0), u, v)),
                       R.val(eval2(R, partial(top, 1), u, v)));
    if (vf > 2 * vp && vp < D) {
      if (newton(top, u, v, 0)) return true;
      throw Error("Hensel iteration failed to converge");
    }
    return false;
  }

  bool leaf(const Poly2<Ring>& top, const typename Ring::Elt& cu, const typename Ring::Elt& cv) {
    ++nodes;
    auto fval = eval2(R, top, cu, cv);
    long vf = R.val(fval);
    long vp = std::min(R.val(eval2(R, partial(top, 0), cu, cv)),
                       R.val(eval2(R, partial(top, 1), cu, cv)));
    if (vf > 2 * vp && vp < R.P / 2 - 1) {
      if (newton(top, cu, cv, 0)) return true;
      throw Error("Hensel iteration failed to converge");
    }
    long stable = std::min(D + vp, 2 * D);
    if (vf < R.P && vf + 1 <= stable) return false;  // stable nonzero value
    unresolved = true;
    return false;
  }

  /// restrict1/restrict2: residues forced to zero at the top level (chart
  /// covering conditions).
  bool node(const Poly2<Ring>& top, const Poly2<Ring>& f, const typename Ring::Elt& cu,
            const typename Ring::Elt& cv, long k, bool restrict1, bool restrict2) {
    if (nodes > budget) {
      unresolved = true;
      return false;
    }
    ++nodes;
    maxd = std::max(maxd, k + 1);
    long m = content(f);
    if (m >= R.P) {
      unresolved = true;
      return false;
    }
    long count = R.residue_count();
    long qpow_k = k;  // depth of this node's coordinates
    (void)qpow_k;
    for (long i1 = 0; i1 < (restrict1 ? 1 : count); ++i1) {
      for (long i2 = 0; i2 < (restrict2 ? 1 : count); ++i2) {
        auto s1 = R.residue(i1);
        auto s2 = R.residue(i2);
        auto value = eval2(R, f, s1, s2);
        long v = R.val(value);
        // Absolute chart coordinates of this child's center.
        auto u = R.add(cu, R.shift_up(s1, k));
        auto v2 = R.add(cv, R.shift_up(s2, k));
        if (v == m && m + 1 <= D) continue;  // stable nonzero valuation
        if (try_hensel(top, u, v2)) return true;
        if (k + 1 >= D) {
          if (leaf(top, u, v2)) return true;
        } else {
          Poly2<Ring> child = shift2(R, f, s1, s2);
          if (node(top, child, u, v2, k + 1, false, false)) return true;
        }
      }
    }
    return false;
  }
};

struct CubicChartOutcome {
  LocalStatus status = LocalStatus::Undetermined;
  std::optional<std::array<std::string, 3>> wit;
  long depth = 0;
  long nodes = 0;
  long hensel = -1;
};

/// chart: 0 sets Z = 1, 1 sets W = 1 (Z = 0 mod q), 2 sets V = 1
/// (Z = W = 0 mod q).
template <typename Ring>
CubicChartOutcome solve_cubic_chart(const Ring& R, const std::array<typename Ring::Elt, 4>& coef,
                                    int chart, long D, long window) {
  auto zero = R.from_pair(Int(0), Int(0));
  auto one = R.from_pair(Int(1), Int(0));
  Poly2<Ring> f;
  f.fill(zero);
  auto index_of = [](int i, int j) {
    for (int t = 0; t < 10; ++t) {
      if (kMon[t][0] == i && kMon[t][1] == j) return t;
    }
    return -1;
  };
  // F = c0 Z^3 + c1 Z W V + c2 W^3 + c3 V^3 restricted to the chart with
  // free coordinates (u, v).
  if (chart == 0) {
    f[index_of(0, 0)] = coef[0];            // Z^3 -> 1
    f[index_of(1, 1)] = coef[1];            // ZWV -> u v
    f[index_of(3, 0)] = coef[2];            // W^3 -> u^3
    f[index_of(0, 3)] = coef[3];            // V^3 -> v^3
  } else if (chart == 1) {
    f[index_of(3, 0)] = coef[0];            // Z^3 -> u^3
    f[index_of(1, 1)] = coef[1];            // ZWV -> u v
    f[index_of(0, 0)] = coef[2];            // W^3 -> 1
    f[index_of(0, 3)] = coef[3];            // V^3 -> v^3
  } else {
    f[index_of(3, 0)] = coef[0];            // Z^3 -> u^3
    f[index_of(1, 1)] = coef[1];            // ZWV -> u v
    f[index_of(0, 3)] = coef[2];            // W^3 -> v^3
    f[index_of(0, 0)] = coef[3];            // V^3 -> 1
  }
  CubicSearch<Ring> s(R);
  s.D = D;
  bool solvable = s.node(f, f, zero, zero, 0, chart >= 1, chart >= 2);
  CubicChartOutcome out;
  out.depth = s.maxd;
  out.nodes = s.nodes;
  if (solvable) {
    out.status = LocalStatus::Solvable;
    out.hensel = s.wit_val;
    auto [u, v] = *s.wit;
    std::array<std::string, 3> w;
    if (chart == 0) {
      w = {R.str(one, window), R.str(u, window), R.str(v, window)};
    } else if (chart == 1) {
      w = {R.str(u, window), R.str(one, window), R.str(v, window)};
    } else {
      w = {R.str(u, window), R.str(v, window), R.str(one, window)};
    }
    out.wit = w;
  } else if (s.unresolved) {
    out.status = LocalStatus::Undetermined;
  } else {
    out.status = LocalStatus::Empty;
    out.depth = D;
  }
  return out;
}

struct ClearedCyc {
  Int x, y;  // M * value = x + y * zeta3
};

/// Clears denominators across the model coefficients; returns M and the
/// integer pairs for (M d, 3 M d alpha, M d^2, M beta).
std::pair<Int, std::array<ClearedCyc, 4>> cleared_cubic_coefficients(const CubicModel& m) {
  auto lcm_in = [](Int& M, const Rat& r) {
    Int den = r.get_den();
    Int g;
    mpz_gcd(g.get_mpz_t(), M.get_mpz_t(), den.get_mpz_t());
    M = M / g * den;
  };
  Cyc three_d_alpha = Cyc(Rat(3) * Rat(m.d)) * m.alpha;
  Int M = 1;
  for (const Cyc* c : {&m.alpha, &m.beta}) {
    lcm_in(M, c->r);
    lcm_in(M, c->s);
  }
  auto clear = [&](const Cyc& c) {
    Rat x = c.r * Rat(M);
    Rat y = c.s * Rat(M);
    return ClearedCyc{Int(x.get_num()), Int(y.get_num())};
  };
  std::array<ClearedCyc, 4> out{
      ClearedCyc{M * m.d, Int(0)},
      clear(three_d_alpha),
      ClearedCyc{M * m.d * m.d, Int(0)},
      clear(m.beta),
  };
  return {M, out};
}

/// Exact valuation of a nonzero Cyc at the place (split embedding index or
/// inert); used for the depth bound.
long cyc_place_val(const Cyc& c, const LocalPlace& place, long probe) {
  Int den = 1;
  auto lcm_in = [&](const Rat& r) {
    Int d0 = r.get_den();
    Int g;
    mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), d0.get_mpz_t());
    den = den / g * d0;
  };
  lcm_in(c.r);
  lcm_in(c.s);
  Int x = Int(Rat(c.r * Rat(den)).get_num());
  Int y = Int(Rat(c.s * Rat(den)).get_num());
  long vden = den == 1 ? 0 : exact_val(den, place.q);
  if (place.kind == PlaceKind::SplitOverK) {
    Int r = split_embedding_root(place.q, probe, place.embedding);
    Int qP = pow_int(place.q, probe);
    Int img = mod_canonical(x + y * r, qP);
    long v = capped_val(img, place.q, probe);
    if (v >= probe) throw ResourceError("valuation probe exhausted");
    return v - vden;
  }
  long vx = x == 0 ? LONG_MAX / 4 : exact_val(x, place.q);
  long vy = y == 0 ? LONG_MAX / 4 : exact_val(y, place.q);
  return std::min(vx, vy) - vden;
}

// -------------------------------------------------------------------------

std::string rat_term(const Rat& c) { return rat_str(c); }

}  // namespace

// ---------------------------------------------------------------------------
// PadicApprox

PadicApprox PadicApprox::exact_zero(const Int& q, int precision) {
  if (precision <= 0) throw InvalidArgumentError("precision must be positive");
  PadicApprox a;
  a.q = q;
  a.precision = precision;
  a.zero = true;
  a.valuation = 0;
  a.unit = 0;
  return a;
}

PadicApprox PadicApprox::from_int(const Int& q, const Int& value, int precision) {
  if (precision <= 0) throw InvalidArgumentError("precision must be positive");
  if (value == 0) return exact_zero(q, precision);
  PadicApprox a;
  a.q = q;
  a.precision = precision;
  a.zero = false;
  a.valuation = exact_val(value, q);
  a.unit = mod_canonical(value / pow_int(q, a.valuation), pow_int(q, precision));
  return a;
}

PadicApprox PadicApprox::from_rat(const Int& q, const Rat& value, int precision) {
  if (value == 0) return exact_zero(q, precision);
  Int num = value.get_num();
  Int den = value.get_den();
  long vn = exact_val(num, q);
  long vd = den == 1 ? 0 : exact_val(den, q);
  PadicApprox a;
  a.q = q;
  a.precision = precision;
  a.zero = false;
  a.valuation = vn - vd;
  Int qP = pow_int(q, precision);
  Int un = mod_canonical(num / pow_int(q, vn), qP);
  Int ud = mod_canonical(den / pow_int(q, vd), qP);
  a.unit = mod_canonical(un * inv_mod(ud, qP), qP);
  return a;
}

Rat PadicApprox::to_rat() const {
  if (zero) return Rat(0);
  Rat r{unit};
  if (valuation >= 0) return r * Rat(pow_int(q, valuation));
  return r / Rat(pow_int(q, -valuation));
}

std::string PadicApprox::str() const {
  if (zero) return "0";
  return padic_str(unit, q, valuation);
}

PadicApprox operator+(const PadicApprox& x, const PadicApprox& y) {
  if (x.q != y.q) throw InvalidArgumentError("mixed residue characteristics");
  if (x.zero) {
    PadicApprox r = y;
    r.precision = std::min(x.precision, y.precision);
    if (!r.zero) r.unit = mod_canonical(r.unit, pow_int(r.q, r.precision));
    return r;
  }
  if (y.zero) return y + x;
  long a1 = x.valuation + x.precision;
  long a2 = y.valuation + y.precision;
  long abs_prec = std::min(a1, a2);
  long v0 = std::min(x.valuation, y.valuation);
  Int scale_x = pow_int(x.q, x.valuation - v0);
  Int scale_y = pow_int(x.q, y.valuation - v0);
  Int window = pow_int(x.q, abs_prec - v0);
  Int sum = mod_canonical(x.unit * scale_x + y.unit * scale_y, window);
  PadicApprox r;
  r.q = x.q;
  if (sum == 0) {
    r.precision = static_cast<int>(abs_prec - v0);
    r.zero = true;
    r.valuation = abs_prec;
    r.unit = 0;
    return r;
  }
  long w = exact_val(sum, x.q);
  r.zero = false;
  r.valuation = v0 + w;
  r.precision = static_cast<int>(abs_prec - r.valuation);
  r.unit = mod_canonical(sum / pow_int(x.q, w), pow_int(x.q, r.precision));
  return r;
}

PadicApprox operator-(const PadicApprox& x) {
  PadicApprox r = x;
  if (!r.zero) r.unit = mod_canonical(-r.unit, pow_int(r.q, r.precision));
  return r;
}

PadicApprox operator-(const PadicApprox& x, const PadicApprox& y) { return x + (-y); }

PadicApprox operator*(const PadicApprox& x, const PadicApprox& y) {
  if (x.q != y.q) throw InvalidArgumentError("mixed residue characteristics");
  PadicApprox r;
  r.q = x.q;
  r.precision = std::min(x.precision, y.precision);
  if (x.zero || y.zero) {
    r.zero = true;
    r.valuation = x.valuation + y.valuation;
    r.unit = 0;
    return r;
  }
  r.zero = false;
  r.valuation = x.valuation + y.valuation;
  r.unit = mod_canonical(x.unit * y.unit, pow_int(x.q, r.precision));
  return r;
}

PadicApprox hensel_lift(const std::vector<Int>& f, const PadicApprox& x0) {
  if (x0.valuation < 0) throw InvalidArgumentError("Hensel center must be integral");
  Int x = x0.zero ? Int(0) : mod_canonical(x0.unit * pow_int(x0.q, x0.valuation),
                                           pow_int(x0.q, x0.precision + x0.valuation));
  const Int& q = x0.q;
  Int fx = poly_eval(f, x);
  std::vector<Int> fp = poly_derivative(f);
  Int fpx = poly_eval(fp, x);
  if (fx == 0) {
    PadicApprox r = PadicApprox::from_int(q, x, x0.precision);
    return r;
  }
  long vf = exact_val(fx, q);
  long vp = fpx == 0 ? LONG_MAX / 4 : exact_val(fpx, q);
  if (vf <= 2 * vp) {
    throw HenselCriterionError("v(f(x0)) <= 2 v(f'(x0)): Hensel criterion fails");
  }
  long W = x0.precision + 2 * vp + 2;
  Int qW = pow_int(q, W);
  Int qvp = pow_int(q, vp);
  for (int iter = 0; iter < 200; ++iter) {
    fx = mod_canonical(poly_eval(f, x), qW);
    if (fx == 0) break;
    fpx = poly_eval(fp, x);
    Int step = (fx / qvp) * inv_mod(mod_canonical(fpx / qvp, qW), qW);
    x = mod_canonical(x - step, qW);
  }
  if (mod_canonical(poly_eval(f, x), pow_int(q, x0.precision + vp)) != 0) {
    throw Error("Hensel iteration failed to converge");
  }
  return PadicApprox::from_int(q, mod_canonical(x, pow_int(q, x0.precision)), x0.precision);
}

// ---------------------------------------------------------------------------
// Places

const char* place_kind_name(PlaceKind k) {
  switch (k) {
    case PlaceKind::Rational: return "Rational";
    case PlaceKind::SplitOverK: return "SplitOverK";
    case PlaceKind::InertOverK: return "InertOverK";
    case PlaceKind::RamifiedOverK: return "RamifiedOverK";
    case PlaceKind::RealPlace: return "RealPlace";
    case PlaceKind::ComplexPlace: return "ComplexPlace";
  }
  return "?";
}

std::string LocalPlace::str() const {
  std::ostringstream out;
  out << place_kind_name(kind);
  if (kind == PlaceKind::SplitOverK) {
    out << "(" << q.get_str() << ", zeta3->" << (embedding == 0 ? "r" : "r^2") << ")";
  } else if (kind == PlaceKind::InertOverK || kind == PlaceKind::RamifiedOverK ||
             kind == PlaceKind::Rational) {
    out << "(" << q.get_str() << ")";
  }
  return out.str();
}

std::vector<LocalPlace> places_over_K(const Int& q) {
  switch (split_type(q)) {
    case SplitType::Split:
      return {LocalPlace{PlaceKind::SplitOverK, q, 0}, LocalPlace{PlaceKind::SplitOverK, q, 1}};
    case SplitType::Inert:
      return {LocalPlace{PlaceKind::InertOverK, q, 0}};
    case SplitType::Ramified:
      return {LocalPlace{PlaceKind::RamifiedOverK, q, 0}};
  }
  throw InvalidArgumentError("unreachable");
}

Int split_embedding_root(const Int& q, int precision, int embedding) {
  if (split_type(q) != SplitType::Split) {
    throw InvalidArgumentError("prime does not split in Q(zeta3)");
  }
  Int r0 = 0;
  for (Int s = 1; s < q; ++s) {
    if (mod_canonical(s * s + s + 1, q) == 0) {
      r0 = s;
      break;
    }
  }
  PadicApprox start = PadicApprox::from_int(q, r0, precision);
  PadicApprox lifted = hensel_lift({Int(1), Int(1), Int(1)}, start);
  Int r = mod_canonical(lifted.unit * pow_int(q, lifted.valuation), pow_int(q, precision));
  if (embedding == 0) return r;
  return mod_canonical(-1 - r, pow_int(q, precision));
}

const char* status_name(LocalStatus s) {
  switch (s) {
    case LocalStatus::Solvable: return "Solvable";
    case LocalStatus::Empty: return "Empty";
    case LocalStatus::Undetermined: return "Undetermined";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Quartic solvers

LocalVerdict quartic_local(const QuarticModel& m, const Int& q, int N) {
  if (!is_probable_prime(q)) throw InvalidArgumentError("q must be prime");
  if (N <= 0) throw InvalidArgumentError("precision must be positive");
  IntegralQuartic iq = integralize(m);
  Int Md = iq.M * m.d;

  long window = N + 6;
  ChartOutcome affine = solve_square_chart(iq.F1, q, N);
  LocalVerdict v;
  if (affine.status == LocalStatus::Solvable) {
    v.status = LocalStatus::Solvable;
    v.witness = quartic_witness(affine, false, q, Md, window);
    v.depth = static_cast<int>(affine.depth);
    v.nodes = affine.nodes;
    v.hensel_valuation = static_cast<int>(affine.hensel);
    return v;
  }
  ChartOutcome inf = solve_square_chart(iq.F2, q, N);
  v.depth = static_cast<int>(std::max(affine.depth, inf.depth));
  v.nodes = affine.nodes + inf.nodes;
  if (inf.status == LocalStatus::Solvable) {
    v.status = LocalStatus::Solvable;
    v.witness = quartic_witness(inf, true, q, Md, window);
    v.hensel_valuation = static_cast<int>(inf.hensel);
    return v;
  }
  if (affine.status == LocalStatus::Empty && inf.status == LocalStatus::Empty) {
    v.status = LocalStatus::Empty;
    return v;
  }
  v.status = LocalStatus::Undetermined;
  v.reason = "precision exhausted before the refinement tree closed";
  return v;
}

LocalVerdict quartic_real(const QuarticModel& m) {
  LocalVerdict v;
  v.status = LocalStatus::Empty;
  const Rat d{m.d};
  if (m.C / d >= 0) {
    v.status = LocalStatus::Solvable;
    v.witness = {"x=0"};
    return v;
  }
  if (m.A / d > 0) {
    v.status = LocalStatus::Solvable;
    v.witness = {"x=infinity"};
    return v;
  }
  // A/d < 0 and C/d < 0: positive values require the vertex of the
  // quadratic in s = x^2 to lie at s > 0 with nonnegative value.
  Rat disc = m.B * m.B - 4 * m.A * m.C;
  if (m.B != 0 && Rat(m.B) / m.A < 0 && disc >= 0) {
    v.status = LocalStatus::Solvable;
    Rat s = -m.B / (2 * m.A);
    v.witness = {"x^2=" + rat_term(s)};
    return v;
  }
  return v;
}

// ---------------------------------------------------------------------------
// Cubic solver

namespace {

template <typename Ring>
LocalVerdict run_cubic_charts(const Ring& R, const std::array<typename Ring::Elt, 4>& coef,
                              long D, long window) {
  LocalVerdict v;
  long depth = 0, nodes = 0;
  bool undetermined = false;
  for (int chart = 0; chart < 3; ++chart) {
    CubicChartOutcome out = solve_cubic_chart(R, coef, chart, D, window);
    depth = std::max(depth, out.depth);
    nodes += out.nodes;
    if (out.status == LocalStatus::Solvable) {
      v.status = LocalStatus::Solvable;
      v.witness = {(*out.wit)[0], (*out.wit)[1], (*out.wit)[2]};
      v.depth = static_cast<int>(std::max(depth, out.depth));
      v.nodes = nodes;
      v.hensel_valuation = static_cast<int>(out.hensel);
      return v;
    }
    if (out.status == LocalStatus::Undetermined) undetermined = true;
  }
  v.depth = static_cast<int>(depth);
  v.nodes = nodes;
  if (undetermined) {
    v.status = LocalStatus::Undetermined;
    v.reason = "precision exhausted before the refinement tree closed";
  } else {
    v.status = LocalStatus::Empty;
  }
  return v;
}

}  // namespace

LocalVerdict cubic_local(const CubicModel& m, const LocalPlace& place, int N) {
  if (N <= 0) throw InvalidArgumentError("precision must be positive");
  LocalVerdict v;
  if (m.d == 1) {
    // (Z : W : V) = (-1 : 1 : 0) satisfies d Z^3 + d^2 W^3 = 0 exactly.
    v.status = LocalStatus::Solvable;
    v.witness = {"-1", "1", "0"};
    v.depth = 0;
    return v;
  }
  switch (place.kind) {
    case PlaceKind::ComplexPlace:
      v.status = LocalStatus::Solvable;
      v.reason = "";
      return v;
    case PlaceKind::RamifiedOverK:
      v.status = LocalStatus::Undetermined;
      v.reason = "ramified place out of scope";
      return v;
    case PlaceKind::Rational:
    case PlaceKind::RealPlace:
      throw InvalidArgumentError("cubic model places live over Q(zeta3)");
    case PlaceKind::SplitOverK:
    case PlaceKind::InertOverK:
      break;
  }
  auto [M, cleared] = cleared_cubic_coefficients(m);
  long vdisc = std::max<long>(cyc_place_val(m.model_discriminant(), place, 64), 0);
  long D = std::max<long>(N, 2 * vdisc + 3);
  long P = 2 * D + 8;
  long window = N + 6;

  if (place.kind == PlaceKind::SplitOverK) {
    ZqRing R;
    R.q = place.q;
    R.P = P;
    R.qP = pow_int(place.q, P);
    R.zeta = split_embedding_root(place.q, static_cast<int>(P), place.embedding);
    std::array<ZqRing::Elt, 4> coef;
    for (int i = 0; i < 4; ++i) coef[i] = R.from_pair(cleared[i].x, cleared[i].y);
    return run_cubic_charts(R, coef, D, window);
  }
  Fq2Ring R;
  R.q = place.q;
  R.P = P;
  R.qP = pow_int(place.q, P);
  std::array<Fq2Ring::Elt, 4> coef;
  for (int i = 0; i < 4; ++i) coef[i] = R.from_pair(cleared[i].x, cleared[i].y);
  return run_cubic_charts(R, coef, D, window);
}

// ---------------------------------------------------------------------------
// Candidates and the scan

std::vector<Int> els_candidates_quartic(const Rat& a, const Rat& b) {
  Rat bound = Rat(2) * a * (a * a - 4 * b);
  if (bound == 0) {
    throw ZeroBoundError("2a(a^2-4b) = 0: candidate set is not finite");
  }
  std::set<Int> primes;
  for (const Int& part : {Int(bound.get_num()), Int(bound.get_den())}) {
    Int n = part < 0 ? Int(-part) : part;
    for (const auto& [p, e] : factor_int(n)) primes.insert(p);
  }
  std::vector<Int> ds{Int(1)};
  for (const Int& p : primes) {
    std::vector<Int> next = ds;
    for (const Int& d : ds) next.push_back(d * p);
    ds = std::move(next);
  }
  std::vector<Int> out;
  for (const Int& d : ds) {
    out.push_back(d);
    out.push_back(-d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Int> cube_free_products(std::vector<Int> primes) {
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  std::vector<Int> ds{Int(1)};
  for (const Int& p : primes) {
    std::vector<Int> next;
    for (const Int& d : ds) {
      next.push_back(d);
      next.push_back(d * p);
      next.push_back(d * p * p);
    }
    ds = std::move(next);
  }
  std::sort(ds.begin(), ds.end());
  ds.erase(ds.begin());  // drop d = 1
  return ds;
}

std::vector<Int> els_candidates_cubic(const Int& a) {
  std::vector<Int> primes = family_bad_primes(a);
  primes.push_back(Int(3));
  return cube_free_products(std::move(primes));
}

std::string quartic_curve_str(const Rat& a, const Rat& b) {
  std::ostringstream out;
  out << "y^2 = x^3";
  if (a != 0) {
    out << (a < 0 ? " - " : " + ");
    Rat m = a < 0 ? Rat(-a) : a;
    if (m != 1) out << rat_term(m) << "*";
    out << "x^2";
  }
  if (b != 0) {
    out << (b < 0 ? " - " : " + ");
    Rat m = b < 0 ? Rat(-b) : b;
    if (m != 1) out << rat_term(m) << "*";
    out << "x";
  }
  return out.str();
}

std::string cubic_curve_str(const Int& a) {
  WeierstrassCurve<Cyc> e = family_curve(Rat(a));
  std::ostringstream out;
  out << "y^2 + (" << cyc_str(e.a1) << ")*x*y + (" << cyc_str(e.a3) << ")*y = x^3";
  return out.str();
}

namespace {

std::vector<Int> sorted_prime_union(std::vector<Int> primes) {
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  return primes;
}

void add_factor_primes(std::vector<Int>& primes, const Int& n) {
  if (n == 0) return;
  Int m = n < 0 ? Int(-n) : n;
  for (const auto& [p, e] : factor_int(m)) primes.push_back(p);
}

std::string combine_rows(const std::vector<PlaceRow>& rows) {
  bool any_empty = false, any_open = false;
  for (const auto& r : rows) {
    if (r.verdict.status == LocalStatus::Empty) any_empty = true;
    if (r.verdict.status == LocalStatus::Undetermined) any_open = true;
  }
  if (any_empty) return "NotELS";
  if (any_open) return "Inconclusive";
  return "ELS";
}

}  // namespace

ScanReport els_scan_quartic(const Rat& a, const Rat& b, const ScanOptions& opt) {
  ScanReport rep;
  rep.curve = quartic_curve_str(a, b);
  rep.p = 2;
  std::vector<Int> cand = els_candidates_quartic(a, b);
  Rat curve_disc = Rat(16) * b * b * (a * a - 4 * b);
  for (const Int& d : cand) {
    QuarticModel model = quadratic_model(a, b, d);
    std::vector<Int> primes;
    if (opt.restrict_places.empty()) {
      add_factor_primes(primes, curve_disc.get_num());
      add_factor_primes(primes, curve_disc.get_den());
      add_factor_primes(primes, d);
      primes.push_back(Int(2));
      if (opt.verify_good_below > 1) {
        for (Int p = 2; p < opt.verify_good_below; ++p) {
          if (is_probable_prime(p)) primes.push_back(p);
        }
      }
    } else {
      primes = opt.restrict_places;
    }
    primes = sorted_prime_union(std::move(primes));
    CandidateReport cr;
    cr.d = d;
    for (const Int& q : primes) {
      PlaceRow row;
      row.place = LocalPlace{PlaceKind::Rational, q, 0};
      row.verdict = quartic_local(model, q, opt.precision);
      cr.rows.push_back(std::move(row));
    }
    PlaceRow real_row;
    real_row.place = LocalPlace{PlaceKind::RealPlace, Int(0), 0};
    real_row.verdict = quartic_real(model);
    cr.rows.push_back(std::move(real_row));
    cr.verdict = combine_rows(cr.rows);
    rep.candidates.push_back(std::move(cr));
  }
  return rep;
}

ScanReport els_scan_cubic(const Int& a, const ScanOptions& opt) {
  ScanReport rep;
  rep.curve = cubic_curve_str(a);
  rep.p = 3;
  std::vector<Int> cand{Int(1)};
  for (const Int& d : els_candidates_cubic(a)) cand.push_back(d);
  std::vector<Int> base_primes = family_bad_primes(a);
  base_primes.push_back(Int(3));
  for (const Int& d : cand) {
    CubicModel model = cubic_model(Rat(a), d);
    std::vector<Int> primes;
    if (opt.restrict_places.empty()) {
      primes = base_primes;
      add_factor_primes(primes, d);
      if (opt.verify_good_below > 1) {
        for (Int p = 2; p < opt.verify_good_below; ++p) {
          if (is_probable_prime(p)) primes.push_back(p);
        }
      }
    } else {
      primes = opt.restrict_places;
    }
    primes = sorted_prime_union(std::move(primes));
    CandidateReport cr;
    cr.d = d;
    for (const Int& q : primes) {
      for (const LocalPlace& place : places_over_K(q)) {
        PlaceRow row;
        row.place = place;
        row.verdict = cubic_local(model, place, opt.precision);
        cr.rows.push_back(std::move(row));
      }
    }
    PlaceRow cplx;
    cplx.place = LocalPlace{PlaceKind::ComplexPlace, Int(0), 0};
    cplx.verdict = cubic_local(model, cplx.place, opt.precision);
    cr.rows.push_back(std::move(cplx));
    cr.verdict = combine_rows(cr.rows);
    rep.candidates.push_back(std::move(cr));
  }
  return rep;
}

}  // namespace twist
