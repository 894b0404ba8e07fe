#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "naive_local.hpp"
#include "twistlib/localsolve.hpp"
#include "twistlib/model.hpp"
#include "twistlib/report.hpp"

using namespace twist;

namespace {

Int ipow(Int base, int e) {
  Int r{1};
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

/// Parses a witness component "u*q^k", "u", or "0" back to a rational.
Rat parse_witness(const std::string& s, const Int& q) {
  if (s == "0") return Rat(0);
  auto star = s.find('*');
  Int unit;
  int k = 0;
  if (star == std::string::npos) {
    unit = Int(s);
  } else {
    unit = Int(s.substr(0, star));
    auto caret = s.find('^', star);
    REQUIRE(caret != std::string::npos);
    REQUIRE(Int(s.substr(star + 1, caret - star - 1)) == q);
    k = std::stoi(s.substr(caret + 1));
  }
  Rat r{unit};
  if (k >= 0) return r * Rat(ipow(q, k));
  return r / Rat(ipow(q, -k));
}

/// v_q of a rational, for witness soundness checks.
int rat_val(const Rat& r, const Int& q) {
  if (r == 0) return 1 << 20;
  return int_valuation(r.get_num(), q) - int_valuation(r.get_den(), q);
}

}  // namespace

TEST_CASE("p-adic approximations carry valuation and precision") {
  PadicApprox a = PadicApprox::from_int(Int(5), Int(50), 6);
  CHECK(a.valuation == 2);
  CHECK(a.unit == 2);
  CHECK(a.str() == "2*5^2");

  PadicApprox b = PadicApprox::from_int(Int(5), Int(3), 6);
  CHECK(b.valuation == 0);
  CHECK(b.str() == "3");

  PadicApprox z = PadicApprox::exact_zero(Int(5), 6);
  CHECK(z.zero);
  CHECK(z.str() == "0");
}

TEST_CASE("p-adic ring operations track precision") {
  Int q{5};
  PadicApprox a = PadicApprox::from_rat(q, Rat(7, 25), 8);
  CHECK(a.valuation == -2);
  CHECK(a.to_rat().get_den() == 25);

  PadicApprox b = PadicApprox::from_int(q, Int(10), 8);
  PadicApprox s = a + b;
  CHECK(s.valuation == -2);

  PadicApprox p = a * b;
  CHECK(p.valuation == -1);
  CHECK(p.precision == 8);

  // Cancellation: (1) + (-1) is zero to the full window.
  PadicApprox one = PadicApprox::from_int(q, Int(1), 8);
  PadicApprox neg = PadicApprox::from_int(q, Int(-1), 8);
  PadicApprox c = one + neg;
  CHECK(c.zero);
}

TEST_CASE("hensel lifting meets the quadratic criterion") {
  // x^2 - 2 over Q_7 from x0 = 3.
  std::vector<Int> f{Int(-2), Int(0), Int(1)};
  PadicApprox r = hensel_lift(f, PadicApprox::from_int(Int(7), Int(3), 8));
  Rat x = r.to_rat();
  CHECK(rat_val(x * x - 2, Int(7)) >= 8);

  // v(f(1)) = 0 fails the criterion at x0 = 1.
  CHECK_THROWS_AS(hensel_lift(f, PadicApprox::from_int(Int(7), Int(1), 8)), HenselCriterionError);

  // Linear polynomials lift to the exact root.
  std::vector<Int> g{Int(-4), Int(2)};
  PadicApprox s = hensel_lift(g, PadicApprox::from_int(Int(5), Int(2), 6));
  CHECK(s.to_rat() == 2);
}

TEST_CASE("places over the cyclotomic field follow splitting") {
  auto split = places_over_K(Int(7));
  REQUIRE(split.size() == 2);
  CHECK(split[0].kind == PlaceKind::SplitOverK);
  CHECK(split[0].embedding == 0);
  CHECK(split[1].embedding == 1);

  auto inert = places_over_K(Int(5));
  REQUIRE(inert.size() == 1);
  CHECK(inert[0].kind == PlaceKind::InertOverK);

  auto ram = places_over_K(Int(3));
  REQUIRE(ram.size() == 1);
  CHECK(ram[0].kind == PlaceKind::RamifiedOverK);
}

TEST_CASE("split embedding roots satisfy the cyclotomic minimal polynomial") {
  for (long q : {7, 13, 31}) {
    for (int emb : {0, 1}) {
      Int r = split_embedding_root(Int(q), 6, emb);
      Int m = ipow(Int(q), 6);
      Int v = ((r * r + r + 1) % m + m) % m;
      CHECK(v == 0);
    }
    Int r0 = split_embedding_root(Int(q), 6, 0);
    Int r1 = split_embedding_root(Int(q), 6, 1);
    Int m = ipow(Int(q), 6);
    CHECK(((r0 + r1 + 1) % m + m) % m == 0);
  }
}

TEST_CASE("quartic local obstruction closes for divisible twists") {
  QuarticModel m5 = quadratic_model(Rat(1), Rat(1), Int(5));
  LocalVerdict v5 = quartic_local(m5, Int(5), 6);
  CHECK(v5.status == LocalStatus::Empty);
  CHECK(v5.nodes > 0);

  QuarticModel m7 = quadratic_model(Rat(1), Rat(1), Int(7));
  CHECK(quartic_local(m7, Int(7), 6).status == LocalStatus::Empty);

  QuarticModel m55 = quadratic_model(Rat(1), Rat(1), Int(55));
  CHECK(quartic_local(m55, Int(11), 6).status == LocalStatus::Empty);
}

TEST_CASE("trivial quartic twist is solvable with the unit witness") {
  QuarticModel m = quadratic_model(Rat(1), Rat(1), Int(1));
  LocalVerdict v = quartic_local(m, Int(11), 6);
  REQUIRE(v.status == LocalStatus::Solvable);
  REQUIRE(v.witness.size() == 2);
  CHECK(v.witness[0] == "0");
  CHECK(v.witness[1] == "1");
}

TEST_CASE("quartic witnesses satisfy the model congruence") {
  struct Case {
    long a, b, d, q;
  };
  for (Case c : {Case{1, 1, 1, 11}, Case{0, -1, 1, 3}, Case{1, 1, -6, 3}, Case{3, 2, 5, 7},
                 Case{1, 1, 3, 13}}) {
    QuarticModel m = quadratic_model(Rat(c.a), Rat(c.b), Int(c.d));
    int N = 6;
    LocalVerdict v = quartic_local(m, Int(c.q), N);
    REQUIRE(v.status == LocalStatus::Solvable);
    REQUIRE(v.witness.size() == 2);
    if (v.witness[0] == "infinity") continue;
    Rat x = parse_witness(v.witness[0], Int(c.q));
    Rat y = parse_witness(v.witness[1], Int(c.q));
    Rat lhs = Rat(c.d) * y * y;
    Rat rhs = m.A * x * x * x * x + m.B * x * x + m.C;
    CHECK(rat_val(lhs - rhs, Int(c.q)) >= N);
  }
}

TEST_CASE("quartic witness at infinity uses the second chart") {
  // d = A makes x = infinity a visible solution: y^2/x^4 -> A/d = 1.
  QuarticModel m = quadratic_model(Rat(1), Rat(-1), Int(5));
  LocalVerdict v = quartic_local(m, Int(7), 6);
  CHECK(v.status == LocalStatus::Solvable);
}

TEST_CASE("dyadic quartic decisions agree with the hand argument") {
  // d = 2: v_2 of the two sides of d y^2 = A x^4 + B x^2 + C can never
  // match for (a,b) = (1,1), so the place at 2 is empty.
  QuarticModel m = quadratic_model(Rat(1), Rat(1), Int(2));
  CHECK(quartic_local(m, Int(2), 6).status == LocalStatus::Empty);

  QuarticModel m1 = quadratic_model(Rat(1), Rat(1), Int(1));
  CHECK(quartic_local(m1, Int(2), 6).status == LocalStatus::Solvable);
}

TEST_CASE("raising precision never flips a definite quartic verdict") {
  for (long d : {1, 2, 3, 5, -1, -6}) {
    QuarticModel m = quadratic_model(Rat(1), Rat(1), Int(d));
    for (long q : {2, 3, 5, 7}) {
      LocalStatus low = quartic_local(m, Int(q), 4).status;
      LocalStatus high = quartic_local(m, Int(q), 8).status;
      if (low != LocalStatus::Undetermined) CHECK(low == high);
    }
  }
}

TEST_CASE("real place of the quartic model") {
  // C/d > 0: x = 0 works.
  LocalVerdict v1 = quartic_real(quadratic_model(Rat(1), Rat(1), Int(1)));
  CHECK(v1.status == LocalStatus::Solvable);
  CHECK(v1.witness[0] == "x=0");

  // d < 0 with A, B, C > 0: no real point.
  LocalVerdict v2 = quartic_real(quadratic_model(Rat(1), Rat(-1), Int(-1)));
  CHECK(v2.status == LocalStatus::Empty);

  // d < 0, A < 0: large x works on the second chart.
  LocalVerdict v3 = quartic_real(quadratic_model(Rat(1), Rat(1), Int(-1)));
  CHECK(v3.status == LocalStatus::Solvable);
  CHECK(v3.witness[0] == "x=infinity");
}

TEST_CASE("cubic local trivial twist returns the torsion witness") {
  CubicModel m = cubic_model(Rat(2), Int(1));
  for (const LocalPlace& pl : places_over_K(Int(7))) {
    LocalVerdict v = cubic_local(m, pl, 4);
    REQUIRE(v.status == LocalStatus::Solvable);
    CHECK(v.witness == std::vector<std::string>{"-1", "1", "0"});
  }
}

TEST_CASE("cubic obstruction closes at split places dividing the twist") {
  struct Case {
    long a, q;
  };
  for (Case c : {Case{2, 7}, Case{3, 13}, Case{4, 7}}) {
    CubicModel m = cubic_model(Rat(c.a), Int(c.q));
    auto places = places_over_K(Int(c.q));
    REQUIRE(places.size() == 2);
    for (const LocalPlace& pl : places) {
      LocalVerdict v = cubic_local(m, pl, 4);
      CHECK(v.status == LocalStatus::Empty);
    }
  }
}

TEST_CASE("cubic witnesses satisfy the model congruence at split places") {
  struct Case {
    long a, d, q;
  };
  for (Case c : {Case{2, 2, 7}, Case{3, 5, 13}, Case{5, 3, 7}}) {
    CubicModel m = cubic_model(Rat(c.a), Int(c.d));
    int N = 4;
    for (const LocalPlace& pl : places_over_K(Int(c.q))) {
      LocalVerdict v = cubic_local(m, pl, N);
      if (v.status != LocalStatus::Solvable) continue;
      REQUIRE(v.witness.size() == 3);
      Int q{c.q};
      Rat z = parse_witness(v.witness[0], q);
      Rat w = parse_witness(v.witness[1], q);
      Rat vv = parse_witness(v.witness[2], q);
      // Embed alpha, beta through the split root at high precision.
      Int r = split_embedding_root(q, N + 10, pl.embedding);
      auto emb = [&](const Cyc& cv) -> Rat { return cv.r + cv.s * Rat(r); };
      Rat lhs = Rat(c.d) * z * z * z + Rat(3 * c.d) * emb(m.alpha) * z * w * vv +
                Rat(c.d) * Rat(c.d) * w * w * w + emb(m.beta) * vv * vv * vv;
      CHECK(rat_val(lhs, q) >= N);
    }
  }
}

TEST_CASE("cubic local handles the degenerate place kinds") {
  CubicModel m = cubic_model(Rat(2), Int(5));
  LocalPlace complex{PlaceKind::ComplexPlace, Int(0), 0};
  CHECK(cubic_local(m, complex, 4).status == LocalStatus::Solvable);

  LocalPlace ram = places_over_K(Int(3))[0];
  LocalVerdict v = cubic_local(m, ram, 4);
  CHECK(v.status == LocalStatus::Undetermined);

  LocalPlace rational{PlaceKind::Rational, Int(5), 0};
  CHECK_THROWS_AS(cubic_local(m, rational, 4), InvalidArgumentError);
  LocalPlace real{PlaceKind::RealPlace, Int(0), 0};
  CHECK_THROWS_AS(cubic_local(m, real, 4), InvalidArgumentError);
}

TEST_CASE("quartic candidate twists are the square-free bound divisors") {
  auto c = els_candidates_quartic(Rat(1), Rat(1));
  CHECK(c == std::vector<Int>{-6, -3, -2, -1, 1, 2, 3, 6});

  auto c2 = els_candidates_quartic(Rat(3), Rat(2));
  // 2a(a^2-4b) = 6: candidates are the square-free divisors of 6.
  CHECK(c2 == std::vector<Int>{-6, -3, -2, -1, 1, 2, 3, 6});

  CHECK_THROWS_AS(els_candidates_quartic(Rat(0), Rat(-1)), ZeroBoundError);
}

TEST_CASE("cube-free products enumerate exponent patterns") {
  auto v = cube_free_products({Int(3), Int(7)});
  CHECK(v == std::vector<Int>{3, 7, 9, 21, 49, 63, 147, 441});
}

TEST_CASE("cubic candidate twists are positive cube-free bad-prime products") {
  auto c = els_candidates_cubic(Int(2));
  // Bad primes {2, 3}: cube-free products of {2, 3} except 1.
  CHECK(c == std::vector<Int>{2, 3, 4, 6, 9, 12, 18, 36});
}

TEST_CASE("quartic scan over the candidate set settles every row") {
  ScanOptions opt;
  ScanReport rep = els_scan_quartic(Rat(1), Rat(1), opt);
  REQUIRE(rep.candidates.size() == 8);
  std::vector<Int> ds;
  int els = 0;
  for (const CandidateReport& c : rep.candidates) {
    ds.push_back(c.d);
    CHECK(c.verdict != "Inconclusive");
    if (c.verdict == "ELS") ++els;
    if (c.d == 1) CHECK(c.verdict == "ELS");
  }
  std::sort(ds.begin(), ds.end());
  CHECK(ds == std::vector<Int>{-6, -3, -2, -1, 1, 2, 3, 6});
  CHECK(els > 0);
}

TEST_CASE("scan rows can be restricted to chosen places") {
  ScanOptions opt;
  opt.restrict_places = {Int(5)};
  ScanReport rep = els_scan_quartic(Rat(1), Rat(1), opt);
  for (const CandidateReport& c : rep.candidates) {
    for (const PlaceRow& row : c.rows) {
      bool real = row.place.kind == PlaceKind::RealPlace;
      CHECK((real || row.place.q == 5));
    }
  }
}

TEST_CASE("cubic scan marks ramified-only uncertainty as inconclusive") {
  ScanOptions opt;
  opt.precision = 4;
  ScanReport rep = els_scan_cubic(Int(2), opt);
  REQUIRE(!rep.candidates.empty());
  CHECK(rep.candidates[0].d == 1);
  CHECK(rep.candidates[0].verdict == "ELS");
  bool saw_not_els = false, saw_inconclusive = false;
  for (const CandidateReport& c : rep.candidates) {
    if (c.verdict == "NotELS") saw_not_els = true;
    if (c.verdict == "Inconclusive") saw_inconclusive = true;
  }
  CHECK(saw_not_els);
  CHECK(saw_inconclusive);
}

TEST_CASE("scan reports serialize deterministically") {
  ScanOptions opt;
  ScanReport rep1 = els_scan_quartic(Rat(1), Rat(1), opt);
  ScanReport rep2 = els_scan_quartic(Rat(1), Rat(1), opt);
  std::string j1 = scan_report_json(rep1);
  std::string j2 = scan_report_json(rep2);
  CHECK(j1 == j2);
  CHECK(j1.find("\"curve\"") != std::string::npos);
  CHECK(j1.find("\"candidates\"") != std::string::npos);
  CHECK(j1.find("\"verdict\"") != std::string::npos);
  std::string t = scan_report_text(rep1);
  CHECK(t.find("d = 1") != std::string::npos);
}

TEST_CASE("tree verdicts match naive enumeration on a spot-check grid") {
  int compared = 0;
  for (long a : {-2, 0, 1, 3}) {
    for (long b : {-3, -1, 1, 2}) {
      if (b == 0 || a * a == 4 * b) continue;
      for (long d : {1, -2, 3, 5, -6}) {
        QuarticModel m = quadratic_model(Rat(a), Rat(b), Int(d));
        for (long q : {2, 3, 5, 7}) {
          LocalVerdict tree = quartic_local(m, Int(q), 4);
          auto naive = support::naive_quartic(m, Int(q), 4);
          if (!naive || naive->status == LocalStatus::Undetermined) continue;
          ++compared;
          CHECK(tree.status == naive->status);
        }
      }
    }
  }
  CHECK(compared > 100);

  int ccompared = 0;
  for (long a : {2, 3, -1}) {
    for (long d : {1, 2, 5, 7}) {
      CubicModel m = cubic_model(Rat(a), Int(d));
      for (long q : {5, 7, 13}) {
        for (const LocalPlace& pl : places_over_K(Int(q))) {
          LocalVerdict tree = cubic_local(m, pl, 3);
          auto naive = support::naive_cubic(m, pl, 3, 4000000);
          if (!naive || naive->status == LocalStatus::Undetermined) continue;
          ++ccompared;
          CHECK(tree.status == naive->status);
        }
      }
    }
  }
  CHECK(ccompared > 20);
}
