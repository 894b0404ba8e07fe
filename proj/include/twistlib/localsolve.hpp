#pragma once

#include <string>
#include <vector>

#include "twistlib/model.hpp"

namespace twist {

/// Value unit * q^valuation with the unit tracked mod q^precision. The zero
/// flag means no nonzero digit inside the tracked window; exact zeros carry
/// it too.
struct PadicApprox {
  Int q;
  int precision = 0;
  bool zero = true;
  long valuation = 0;
  Int unit;

  static PadicApprox exact_zero(const Int& q, int precision);
  static PadicApprox from_int(const Int& q, const Int& value, int precision);
  static PadicApprox from_rat(const Int& q, const Rat& value, int precision);

  bool is_zero() const { return zero; }
  /// unit * q^valuation as an exact rational; zero when flagged zero.
  Rat to_rat() const;
  std::string str() const;

  friend PadicApprox operator+(const PadicApprox& x, const PadicApprox& y);
  friend PadicApprox operator-(const PadicApprox& x, const PadicApprox& y);
  friend PadicApprox operator-(const PadicApprox& x);
  friend PadicApprox operator*(const PadicApprox& x, const PadicApprox& y);
};

/// Root of f near x0 to the precision of x0, under v(f(x0)) > 2 v(f'(x0)).
/// Coefficients ascending; throws HenselCriterionError when the slope
/// condition fails.
PadicApprox hensel_lift(const std::vector<Int>& f, const PadicApprox& x0);

enum class PlaceKind { Rational, SplitOverK, InertOverK, RamifiedOverK, RealPlace, ComplexPlace };

const char* place_kind_name(PlaceKind k);

struct LocalPlace {
  PlaceKind kind = PlaceKind::Rational;
  Int q;             // residue characteristic; 0 at archimedean places
  int embedding = 0;  // split places: 0 sends zeta3 to r, 1 to r^2 = -1-r

  std::string str() const;
};

/// Places of Q(zeta3) above a rational prime: two split places for
/// q = 1 mod 3, one inert place for q = 2 mod 3, the ramified place at 3.
std::vector<LocalPlace> places_over_K(const Int& q);

/// The Hensel-lifted r with r^2 + r + 1 = 0 mod q^precision; embedding 1
/// selects the conjugate root.
Int split_embedding_root(const Int& q, int precision, int embedding);

enum class LocalStatus { Solvable, Empty, Undetermined };

const char* status_name(LocalStatus s);

struct LocalVerdict {
  LocalStatus status = LocalStatus::Undetermined;
  std::vector<std::string> witness;  // model coordinates; empty unless Solvable
  int depth = 0;                     // deepest refinement level certified
  long nodes = 0;                    // refinement tree size
  int hensel_valuation = -1;         // v(f') at the lifted witness; -1 if unused
  std::string reason;                // explanation for Undetermined
};

/// Existence of (x, y) in Q_q^2 with d y^2 = A x^4 + B x^2 + C, including
/// the points at infinity of the smooth model.
LocalVerdict quartic_local(const QuarticModel& m, const Int& q, int N);

/// Archimedean analogue, decided by exact sign analysis.
LocalVerdict quartic_real(const QuarticModel& m);

/// Existence of a projective point on d Z^3 + 3 d alpha ZWV + d^2 W^3
/// + beta V^3 = 0 over the completion at the place.
LocalVerdict cubic_local(const CubicModel& m, const LocalPlace& place, int N);

/// Square-free d of both signs whose prime factors divide 2a(a^2 - 4b);
/// throws ZeroBoundError when that bound vanishes.
/// Weierstrass equation strings used as report headers.
std::string quartic_curve_str(const Rat& a, const Rat& b);
std::string cubic_curve_str(const Int& a);

std::vector<Int> els_candidates_quartic(const Rat& a, const Rat& b);

/// Cube-free d > 1 composed of primes under bad places of the family curve
/// at a, together with 3.
std::vector<Int> els_candidates_cubic(const Int& a);

/// Ascending cube-free products of the given primes, excluding 1.
std::vector<Int> cube_free_products(std::vector<Int> primes);

struct PlaceRow {
  LocalPlace place;
  LocalVerdict verdict;
};

struct CandidateReport {
  Int d;
  std::vector<PlaceRow> rows;
  std::string verdict;  // ELS | NotELS | Inconclusive
};

struct ScanReport {
  std::string curve;
  int p = 0;
  std::vector<CandidateReport> candidates;
};

struct ScanOptions {
  int precision = 6;
  Int verify_good_below = 0;      // also run good primes q < bound
  std::vector<Int> restrict_places;  // keep only rows at these q when nonempty
};

ScanReport els_scan_quartic(const Rat& a, const Rat& b, const ScanOptions& opt);
ScanReport els_scan_cubic(const Int& a, const ScanOptions& opt);

}  // namespace twist
