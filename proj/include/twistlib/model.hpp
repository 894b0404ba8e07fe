#pragma once

#include <array>
#include <string>
#include <utility>

#include "twistlib/funcfield.hpp"

namespace twist {

/// d*y^2 = A*x^4 + B*x^2 + C, the 2-torsion twist model of
/// y^2 = x^3 + a*x^2 + b*x.
struct QuarticModel {
  Rat a, b;
  Int d;
  Rat A, B, C;

  std::string equation() const;
};

/// Validates d square-free nonzero and b(a^2-4b) != 0.
QuarticModel quadratic_model(const Rat& a, const Rat& b, const Int& d);

/// d*z^3 + 3*d*alpha*z*w + d^2*w^3 + beta = 0, the 3-torsion twist model
/// of the family curve at parameter a.
struct CubicModel {
  Rat a;
  Int d;
  Cyc alpha, beta;

  /// 27 d^3 beta (alpha^3 - beta); nonzero for every rational a.
  Cyc model_discriminant() const;
  std::string equation() const;
};

/// Validates d cube-free and nonzero.
CubicModel cubic_model(const Rat& a, const Int& d);

ParamPoly cubic_alpha_poly();
ParamPoly cubic_beta_poly();
Cyc cubic_alpha(const Cyc& a);
Cyc cubic_beta(const Cyc& a);

/// The pair (z, w) on the family curve over the Kummer layer, with symbolic
/// a and d; z carries a 1/t scaling and w a 1/t^2 scaling.
struct ZWPair {
  CurveFunction::CurvePtr curve;
  CurveFunction z;
  CurveFunction w;
};

ZWPair build_zw();

/// True iff d z^3 + 3 d alpha z w + d^2 w^3 + beta is the zero function.
bool verify_cubic_relation(const ZWPair& zw, const ParamPoly& alpha, const ParamPoly& beta);

/// The inverse isomorphism applied to concrete Kummer-layer values;
/// throws DivisionByZeroError when the displayed denominator vanishes.
std::pair<Kummer, Kummer> inverse_map(const Kummer& z0, const Kummer& w0);

/// The inverse isomorphism with CurveFunction arguments, e.g. the forward
/// pair itself; used for exact symbolic composition.
PointMap inverse_map_composed(const CurveFunction& z, const CurveFunction& w);

/// (phi^{-1})^sigma composed with phi, as a rational self-map of the curve;
/// sigma acts through t -> zeta3^k t. Equals translation by kS.
PointMap cocycle_composite(const ZWPair& zw, int k);
bool verify_cocycle(const ZWPair& zw, int k);

/// f^sigma composed with translation by kS; the twisted Galois action fixes
/// z and w.
CurveFunction twisted_sigma(const ZWPair& zw, const CurveFunction& f, int k);

/// Least-squares-free exact fit: the 1-dimensional nullspace of the linear
/// relation on (z^3, z*w, w^3, 1), normalized so the z^3 coefficient is d.
/// Throws NullspaceDimensionError when the nullspace dimension is not 1.
std::array<ParamFrac, 4> fit_relation(const CurveFunction& z, const CurveFunction& w);

}  // namespace twist
