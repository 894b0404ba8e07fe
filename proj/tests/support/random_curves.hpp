#pragma once

#include <array>
#include <optional>
#include <random>

#include "twistlib/curve.hpp"

namespace twist::testsupport {

inline Cyc rand_small_cyc(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> v(-6, 6);
  return Cyc(Rat(v(rng)), Rat(v(rng)));
}

/// Solve M * u = b over Q(zeta3) by Gaussian elimination.
inline std::optional<std::array<Cyc, 3>> solve3(std::array<std::array<Cyc, 3>, 3> m,
                                                std::array<Cyc, 3> b) {
  for (int col = 0; col < 3; ++col) {
    int piv = -1;
    for (int r = col; r < 3; ++r)
      if (!m[r][col].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) return std::nullopt;
    std::swap(m[col], m[piv]);
    std::swap(b[col], b[piv]);
    Cyc inv = m[col][col].inv();
    for (int c = col; c < 3; ++c) m[col][c] = m[col][c] * inv;
    b[col] = b[col] * inv;
    for (int r = 0; r < 3; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      Cyc f = m[r][col];
      for (int c = col; c < 3; ++c) m[r][c] = m[r][c] - f * m[col][c];
      b[r] = b[r] - f * b[col];
    }
  }
  return std::array<Cyc, 3>{b[0], b[1], b[2]};
}

struct FittedCurve {
  WeierstrassCurve<Cyc> curve;
  std::array<CurvePoint<Cyc>, 3> pts;
};

/// A curve through three random affine points: a2, a4 are drawn freely and
/// a1, a3, a6 solve the three point equations.
inline std::optional<FittedCurve> fit_curve_through_random_points(std::mt19937_64& rng) {
  std::array<CurvePoint<Cyc>, 3> pts;
  std::array<std::array<Cyc, 3>, 3> m;
  std::array<Cyc, 3> rhs;
  Cyc a2 = rand_small_cyc(rng), a4 = rand_small_cyc(rng);
  for (int i = 0; i < 3; ++i) {
    Cyc x = rand_small_cyc(rng), y = rand_small_cyc(rng);
    pts[i] = CurvePoint<Cyc>(x, y);
    m[i] = {x * y, y, Cyc(-1)};
    rhs[i] = x * x * x + a2 * x * x + a4 * x - y * y;
  }
  auto sol = solve3(m, rhs);
  if (!sol) return std::nullopt;
  WeierstrassCurve<Cyc> e{(*sol)[0], a2, (*sol)[1], a4, (*sol)[2]};
  for (auto& p : pts)
    if (!e.contains(p)) return std::nullopt;
  return FittedCurve{e, pts};
}

}  // namespace twist::testsupport
