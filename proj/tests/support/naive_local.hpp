#pragma once

// Flat residue enumeration at a fixed depth, applying the same per-center
// decision rules as the refinement solvers. Independent implementation used
// as an oracle: machine-word modular arithmetic, no tree, no pruning.

#include <cstdint>
#include <optional>
#include <vector>

#include "twistlib/localsolve.hpp"

namespace twist::support {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

struct NaiveOutcome {
  LocalStatus status = LocalStatus::Undetermined;
  long depth = 0;  // enumeration depth actually used
};

namespace detail {

inline u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

inline u64 powmod(u64 b, u64 e, u64 m) {
  u64 r = 1 % m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

inline long val_capped(u64 x, u64 q, long cap) {
  if (x == 0) return cap;
  long v = 0;
  while (v < cap && x % q == 0) {
    x /= q;
    ++v;
  }
  return v;
}

inline u64 int_to_word(const Int& x, const Int& m) {
  Int r = x % m;
  if (r < 0) r += m;
  return r.get_ui();
}

inline Int pow_int(const Int& q, long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

inline bool unit_square_odd(u64 u, u64 q) { return powmod(u % q, (q - 1) / 2, q) == 1; }

/// Per-center rule shared with the solvers: exact-looking root, Hensel
/// slope, or stable valuation; anything else is unresolved.
/// Returns +1 solvable, 0 empty at this center, -1 unresolved.
inline int decide_center(long vf, long vp, long D, long P, bool two, u64 unit_mod, u64 q) {
  if (vf > 2 * vp && 2 * vp < P) return 1;
  long need = two ? 3 : 1;
  if (vf < P && vf + need <= std::min(D + vp, 2 * D)) {
    if (vf % 2 != 0) return 0;
    bool square = two ? unit_mod % 8 == 1 : unit_square_odd(unit_mod, q);
    return square ? 1 : 0;
  }
  return -1;
}

/// Resultant of f (degree n) and g (degree m), ascending coefficients, by
/// rational Gaussian elimination of the Sylvester matrix.
inline Rat sylvester_resultant(const std::vector<Rat>& f, const std::vector<Rat>& g) {
  int n = static_cast<int>(f.size()) - 1;
  int m = static_cast<int>(g.size()) - 1;
  int dim = n + m;
  std::vector<std::vector<Rat>> a(dim, std::vector<Rat>(dim, Rat(0)));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j <= n; ++j) a[i][i + j] = f[n - j];
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= m; ++j) a[m + i][i + j] = g[m - j];
  }
  Rat det(1);
  for (int k = 0; k < dim; ++k) {
    int piv = -1;
    for (int i = k; i < dim; ++i) {
      if (a[i][k] != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) return Rat(0);
    if (piv != k) {
      std::swap(a[piv], a[k]);
      det = -det;
    }
    det *= a[k][k];
    for (int i = k + 1; i < dim; ++i) {
      Rat factor = a[i][k] / a[k][k];
      for (int j = k; j < dim; ++j) a[i][j] -= factor * a[k][j];
    }
  }
  return det;
}

inline long rat_val(const Rat& x, const Int& q) {
  if (x == 0) return 0;
  long v = 0;
  Int num = x.get_num();
  while (mpz_divisible_p(num.get_mpz_t(), q.get_mpz_t())) {
    num /= q;
    ++v;
  }
  Int den = x.get_den();
  while (mpz_divisible_p(den.get_mpz_t(), q.get_mpz_t())) {
    den /= q;
    --v;
  }
  return v;
}

}  // namespace detail

/// Existence of x with F(x) a square across both charts, decided by scanning
/// every residue mod q^D. Returns nullopt when the enumeration exceeds the
/// budget.
inline std::optional<NaiveOutcome> naive_quartic(const QuarticModel& mod, const Int& q, int N,
                                                 u64 budget = 2000000) {
  using namespace detail;
  bool two = q == 2;
  // Denominator clearing identical in effect to the solver's.
  Int M = 1;
  for (const Rat* c : {&mod.A, &mod.B, &mod.C}) {
    Int den = c->get_den();
    Int g;
    mpz_gcd(g.get_mpz_t(), M.get_mpz_t(), den.get_mpz_t());
    M = M / g * den;
  }
  auto lift = [&](const Rat& c) { return Rat(c * Rat(M) * Rat(M) * Rat(mod.d)); };
  std::vector<Rat> F1{lift(mod.C), Rat(0), lift(mod.B), Rat(0), lift(mod.A)};
  std::vector<Rat> F2{lift(mod.A), Rat(0), lift(mod.B), Rat(0), lift(mod.C)};
  auto deriv = [](const std::vector<Rat>& f) {
    std::vector<Rat> d;
    for (size_t i = 1; i < f.size(); ++i) d.push_back(Rat(static_cast<long>(i)) * f[i]);
    return d;
  };
  Rat res = sylvester_resultant(F1, deriv(F1));
  long vres = rat_val(res, q);
  long D = std::max<long>(N, 2 * vres + 3) + (two ? 3 : 0);
  // Cost check.
  u64 total = 1;
  u64 qw = q.get_ui();
  for (long i = 0; i < D; ++i) {
    if (total > budget / qw) return std::nullopt;
    total *= qw;
  }
  long P = 2 * D + 1;
  Int mP_int = pow_int(q, P);
  if (!mP_int.fits_ulong_p()) return std::nullopt;
  u64 mP = mP_int.get_ui();

  bool any_unresolved = false;
  for (const std::vector<Rat>& F : {F1, F2}) {
    u64 c4 = int_to_word(Int(F[4].get_num()), mP_int);
    u64 c2 = int_to_word(Int(F[2].get_num()), mP_int);
    u64 c0 = int_to_word(Int(F[0].get_num()), mP_int);
    for (u64 c = 0; c < total; ++c) {
      u64 x2 = mulmod(c, c, mP);
      u64 fv = (mulmod(mulmod(c4, x2, mP) + c2, x2, mP) + c0) % mP;
      u64 fp = mulmod((mulmod(4 * c4 % mP, x2, mP) + 2 * c2) % mP, c, mP);
      long vf = val_capped(fv, qw, P);
      long vp = val_capped(fp, qw, P);
      u64 unit = 0;
      if (vf < P) {
        u64 qpow = 1;
        for (long i = 0; i < vf; ++i) qpow *= qw;
        unit = (fv / qpow) % (two ? 8 : qw);
      }
      int verdict = decide_center(vf, vp, D, P, two, unit, qw);
      if (verdict == 1) return NaiveOutcome{LocalStatus::Solvable, D};
      if (verdict == -1) any_unresolved = true;
    }
  }
  if (any_unresolved) return NaiveOutcome{LocalStatus::Undetermined, D};
  return NaiveOutcome{LocalStatus::Empty, D};
}

/// Projective points over O/q^D across the three standard charts, flat scan.
/// Split places use Z/q^P words; inert places use pairs (a + b*s). Depth is
/// reduced below the solver's cap when the full scan would exceed budget;
/// returns nullopt when even depth 1 does not fit.
inline std::optional<NaiveOutcome> naive_cubic(const CubicModel& mod, const LocalPlace& place,
                                               int N, u64 budget = 20000000) {
  using namespace detail;
  if (place.kind != PlaceKind::SplitOverK && place.kind != PlaceKind::InertOverK) {
    return std::nullopt;
  }
  u64 qw = place.q.get_ui();
  // Denominator clearing.
  Cyc three_d_alpha = Cyc(Rat(3) * Rat(mod.d)) * mod.alpha;
  Int M = 1;
  for (const Rat* r : {&mod.alpha.r, &mod.alpha.s, &mod.beta.r, &mod.beta.s}) {
    Int den = r->get_den();
    Int g;
    mpz_gcd(g.get_mpz_t(), M.get_mpz_t(), den.get_mpz_t());
    M = M / g * den;
  }
  auto cleared = [&](const Cyc& c) {
    return std::pair<Int, Int>(Int(Rat(c.r * Rat(M)).get_num()), Int(Rat(c.s * Rat(M)).get_num()));
  };
  std::pair<Int, Int> co[4] = {{M * mod.d, Int(0)},
                               cleared(three_d_alpha),
                               {M * mod.d * mod.d, Int(0)},
                               cleared(mod.beta)};
  // Depth target from the discriminant valuation at this place, computed
  // from the cleared component pair.
  Cyc disc = mod.model_discriminant();
  long vdisc = 0;
  {
    Int Md = 1;
    for (const Rat* r : {&disc.r, &disc.s}) {
      Int den = r->get_den();
      Int g;
      mpz_gcd(g.get_mpz_t(), Md.get_mpz_t(), den.get_mpz_t());
      Md = Md / g * den;
    }
    Int x = Int(Rat(disc.r * Rat(Md)).get_num());
    Int y = Int(Rat(disc.s * Rat(Md)).get_num());
    long vden = int_valuation(Md == 0 ? Int(1) : Md, place.q);
    if (Md == 1) vden = 0;
    if (place.kind == PlaceKind::SplitOverK) {
      Int r = split_embedding_root(place.q, 64, place.embedding);
      Int img = (x + y * r) % pow_int(place.q, 64);
      if (img < 0) img += pow_int(place.q, 64);
      long v = 0;
      Int t = img;
      while (v < 64 && t != 0 && mpz_divisible_p(t.get_mpz_t(), place.q.get_mpz_t())) {
        t /= place.q;
        ++v;
      }
      vdisc = v - vden;
    } else {
      long vx = x == 0 ? 1 << 20 : int_valuation(x, place.q);
      long vy = y == 0 ? 1 << 20 : int_valuation(y, place.q);
      vdisc = std::min(vx, vy) - vden;
    }
    vdisc = std::max<long>(vdisc, 0);
  }
  long Dtarget = std::max<long>(N, 2 * vdisc + 3);
  int comps = place.kind == PlaceKind::SplitOverK ? 2 : 4;  // free residue axes
  long D = 0;
  {
    u64 cost = 1;
    while (D < Dtarget) {
      bool fits = true;
      for (int i = 0; i < comps && fits; ++i) {
        if (cost > budget / qw) {
          fits = false;
        } else {
          cost *= qw;
        }
      }
      if (!fits) break;
      ++D;
    }
    if (D < 1) return std::nullopt;
  }
  long P = 2 * D + 1;
  Int mP_int = pow_int(place.q, P);
  if (!mP_int.fits_ulong_p()) return std::nullopt;
  u64 mP = mP_int.get_ui();
  u64 sizeD = 1;
  for (long i = 0; i < D; ++i) sizeD *= qw;

  // Ring element: one word (split) or a pair (inert) with s^2 = -1 - s.
  struct Elt {
    u64 a = 0, b = 0;
  };
  bool split = place.kind == PlaceKind::SplitOverK;
  u64 root = 0;
  if (split) root = int_to_word(split_embedding_root(place.q, static_cast<int>(P), place.embedding), mP_int);
  auto embed = [&](const std::pair<Int, Int>& c) {
    if (split) return Elt{(int_to_word(c.first, mP_int) + mulmod(int_to_word(c.second, mP_int), root, mP)) % mP, 0};
    return Elt{int_to_word(c.first, mP_int), int_to_word(c.second, mP_int)};
  };
  auto add = [&](Elt x, Elt y) { return Elt{(x.a + y.a) % mP, (x.b + y.b) % mP}; };
  auto mul = [&](Elt x, Elt y) {
    if (split) return Elt{mulmod(x.a, y.a, mP), 0};
    u64 bb = mulmod(x.b, y.b, mP);
    u64 aa = mulmod(x.a, y.a, mP);
    u64 cross = (mulmod(x.a, y.b, mP) + mulmod(x.b, y.a, mP) + mP - bb) % mP;
    return Elt{(aa + mP - bb) % mP, cross};
  };
  auto scl = [&](u64 n, Elt x) { return Elt{mulmod(n % mP, x.a, mP), mulmod(n % mP, x.b, mP)}; };
  auto val_of = [&](Elt x) {
    if (split) return val_capped(x.a, qw, P);
    return std::min(val_capped(x.a, qw, P), val_capped(x.b, qw, P));
  };
  Elt C0 = embed(co[0]), C1 = embed(co[1]), C2 = embed(co[2]), C3 = embed(co[3]);

  u64 pair_count = split ? sizeD : sizeD * sizeD;
  auto decode = [&](u64 i) {
    if (split) return Elt{i, 0};
    return Elt{i % sizeD, i / sizeD};
  };
  bool any_unresolved = false;
  // Charts: (1, w, v) free; (z, 1, v) with z = 0 mod q; (z, w, 1) with both
  // z, w = 0 mod q.
  for (int chart = 0; chart < 3; ++chart) {
    for (u64 iu = 0; iu < pair_count; ++iu) {
      Elt u = decode(iu);
      if (chart >= 1 && (u.a % qw != 0 || u.b % qw != 0)) continue;
      for (u64 iv = 0; iv < pair_count; ++iv) {
        Elt v = decode(iv);
        if (chart >= 2 && (v.a % qw != 0 || v.b % qw != 0)) continue;
        // Coordinates (Z, W, V) by chart.
        Elt Z, W, V;
        Elt one{1, 0};
        if (chart == 0) {
          Z = one, W = u, V = v;
        } else if (chart == 1) {
          Z = u, W = one, V = v;
        } else {
          Z = u, W = v, V = one;
        }
        Elt Z2 = mul(Z, Z), W2 = mul(W, W), V2 = mul(V, V);
        Elt f = add(add(mul(C0, mul(Z2, Z)), mul(C1, mul(Z, mul(W, V)))),
                    add(mul(C2, mul(W2, W)), mul(C3, mul(V2, V))));
        // Partials with respect to the two free coordinates.
        Elt g1, g2;
        if (chart == 0) {
          g1 = add(mul(C1, V), scl(3, mul(C2, W2)));        // d/dW
          g2 = add(mul(C1, W), scl(3, mul(C3, V2)));        // d/dV
        } else if (chart == 1) {
          g1 = add(scl(3, mul(C0, Z2)), mul(C1, V));        // d/dZ
          g2 = add(mul(C1, Z), scl(3, mul(C3, V2)));        // d/dV
        } else {
          g1 = add(scl(3, mul(C0, Z2)), mul(C1, W));        // d/dZ
          g2 = add(mul(C1, Z), scl(3, mul(C2, W2)));        // d/dW
        }
        long vf = val_of(f);
        long vp = std::min(val_of(g1), val_of(g2));
        if (vf > 2 * vp && 2 * vp < P) return NaiveOutcome{LocalStatus::Solvable, D};
        if (vf < P && vf + 1 <= std::min(D + vp, 2 * D)) continue;
        any_unresolved = true;
      }
    }
  }
  if (any_unresolved) return NaiveOutcome{LocalStatus::Undetermined, D};
  return NaiveOutcome{LocalStatus::Empty, D};
}

}  // namespace twist::support
