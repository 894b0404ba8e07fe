#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "twistlib/curve.hpp"
#include "twistlib/localsolve.hpp"
#include "twistlib/model.hpp"
#include "twistlib/report.hpp"

using namespace twist;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct Options {
  int p = 0;
  std::string a, b;
  std::string d;
  std::string q;
  std::string field;
  std::string what = "all";
  int precision = 6;
  long good_below = 0;
  std::string places;
  bool json = false;
  bool strict = false;
};

Rat parse_rat_arg(const std::string& text, const char* flag) {
  try {
    return parse_rat(text);
  } catch (const ParseError&) {
    throw CLI::ValidationError(std::string(flag) + ": not a rational number: " + text);
  }
}

Int parse_int_arg(const std::string& text, const char* flag) {
  Rat r = parse_rat_arg(text, flag);
  if (r.get_den() != 1) throw CLI::ValidationError(std::string(flag) + ": not an integer: " + text);
  return r.get_num();
}

/// p=2 lives over Q, p=3 over Q(zeta3); an explicit --field must agree.
void check_field(const Options& opt) {
  if (opt.field.empty()) return;
  const char* expected = opt.p == 2 ? "Q" : "Qzeta3";
  if (opt.field != expected) {
    throw CLI::ValidationError("--field " + opt.field + " does not match --p " +
                               std::to_string(opt.p));
  }
}

void require_p23(int p) {
  if (p == 2 || p == 3) return;
  std::cerr << "p=" << p << " models not provided by the paper\n";
  std::exit(kExitUsage);
}

std::vector<Int> parse_places_list(const std::string& text) {
  std::vector<Int> out;
  std::stringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) continue;
    out.push_back(parse_int_arg(tok, "--places"));
  }
  return out;
}

int exit_for_rows(const std::vector<PlaceRow>& rows, bool strict) {
  bool undetermined = false;
  for (const PlaceRow& row : rows) {
    if (row.verdict.status == LocalStatus::Empty) return kExitNegative;
    if (row.verdict.status == LocalStatus::Undetermined) undetermined = true;
  }
  if (undetermined && strict) return kExitResource;
  return kExitOk;
}

int cmd_model(const Options& opt) {
  check_field(opt);
  if (opt.p == 2) {
    QuarticModel m = quadratic_model(parse_rat_arg(opt.a, "--a"), parse_rat_arg(opt.b, "--b"),
                                     parse_int_arg(opt.d, "--d"));
    std::cout << (opt.json ? quartic_model_json(m) : m.equation()) << "\n";
  } else {
    CubicModel m = cubic_model(parse_rat_arg(opt.a, "--a"), parse_int_arg(opt.d, "--d"));
    std::cout << (opt.json ? cubic_model_json(m) : m.equation()) << "\n";
  }
  return kExitOk;
}

int cmd_verify(const Options& opt) {
  struct Check {
    std::string name;
    bool pass;
  };
  std::vector<Check> checks;
  const ZWPair zw = build_zw();
  const std::string& what = opt.what;
  if (what == "relation" || what == "all") {
    checks.push_back({"relation", verify_cubic_relation(zw, cubic_alpha_poly(), cubic_beta_poly())});
  }
  if (what == "cocycle" || what == "all") {
    checks.push_back({"cocycle k=1", verify_cocycle(zw, 1)});
    checks.push_back({"cocycle k=2", verify_cocycle(zw, 2)});
  }
  if (what == "inverse" || what == "all") {
    PointMap m = inverse_map_composed(zw.z, zw.w);
    bool pass = *m.x == CurveFunction::x(zw.curve) && *m.y == CurveFunction::y(zw.curve);
    checks.push_back({"inverse", pass});
  }
  if (what == "fit" || what == "all") {
    auto lam = fit_relation(zw.z, zw.w);
    ParamFrac d{ParamPoly::var_d()};
    bool pass = lam[0] == d &&
                lam[1] == ParamFrac(ParamPoly(Cyc(3)) * ParamPoly::var_d() * cubic_alpha_poly()) &&
                lam[2] == d * d && lam[3] == ParamFrac(cubic_beta_poly());
    checks.push_back({"fit", pass});
  }
  if (checks.empty()) {
    std::cerr << "unknown verification: " << what << "\n";
    return kExitUsage;
  }
  bool all = true;
  if (opt.json) {
    std::ostringstream out;
    out << "{\"checks\":[";
    for (size_t i = 0; i < checks.size(); ++i) {
      if (i) out << ",";
      out << "{\"name\":\"" << checks[i].name << "\",\"pass\":" << (checks[i].pass ? "true" : "false")
          << "}";
      all = all && checks[i].pass;
    }
    out << "]}";
    std::cout << out.str() << "\n";
  } else {
    for (const Check& c : checks) {
      std::cout << c.name << ": " << (c.pass ? "pass" : "FAIL") << "\n";
      all = all && c.pass;
    }
  }
  return all ? kExitOk : kExitNegative;
}

int cmd_fit(const Options& opt) {
  const ZWPair zw = build_zw();
  auto lam = fit_relation(zw.z, zw.w);
  const char* names[4] = {"z^3", "z*w", "w^3", "1"};
  if (opt.json) {
    std::ostringstream out;
    out << "{\"coefficients\":{";
    for (int i = 0; i < 4; ++i) {
      if (i) out << ",";
      out << "\"" << names[i] << "\":\"" << lam[i].str() << "\"";
    }
    out << "}}";
    std::cout << out.str() << "\n";
  } else {
    for (int i = 0; i < 4; ++i) std::cout << names[i] << ": " << lam[i].str() << "\n";
  }
  return kExitOk;
}

int cmd_local(const Options& opt) {
  check_field(opt);
  std::vector<PlaceRow> rows;
  std::string curve;
  Int d;
  if (opt.p == 2) {
    Rat a = parse_rat_arg(opt.a, "--a");
    Rat b = parse_rat_arg(opt.b, "--b");
    d = parse_int_arg(opt.d, "--d");
    QuarticModel m = quadratic_model(a, b, d);
    curve = quartic_curve_str(a, b);
    if (opt.q == "real") {
      rows.push_back({LocalPlace{PlaceKind::RealPlace, Int(0), 0}, quartic_real(m)});
    } else {
      Int q = parse_int_arg(opt.q, "--q");
      if (q < 2 || !is_probable_prime(q)) throw CLI::ValidationError("--q: not a prime: " + opt.q);
      rows.push_back({LocalPlace{PlaceKind::Rational, q, 0}, quartic_local(m, q, opt.precision)});
    }
  } else {
    Int a = parse_int_arg(opt.a, "--a");
    d = parse_int_arg(opt.d, "--d");
    CubicModel m = cubic_model(Rat(a), d);
    curve = cubic_curve_str(a);
    if (opt.q == "complex") {
      LocalPlace place{PlaceKind::ComplexPlace, Int(0), 0};
      rows.push_back({place, cubic_local(m, place, opt.precision)});
    } else {
      Int q = parse_int_arg(opt.q, "--q");
      if (q < 2 || !is_probable_prime(q)) throw CLI::ValidationError("--q: not a prime: " + opt.q);
      for (const LocalPlace& place : places_over_K(q)) {
        rows.push_back({place, cubic_local(m, place, opt.precision)});
      }
    }
  }
  std::cout << (opt.json ? local_report_json(curve, opt.p, d, rows)
                         : local_report_text(curve, opt.p, d, rows));
  if (opt.json) std::cout << "\n";
  return exit_for_rows(rows, opt.strict);
}

int cmd_scan(const Options& opt) {
  check_field(opt);
  ScanOptions sopt;
  sopt.precision = opt.precision;
  sopt.verify_good_below = opt.good_below;
  if (!opt.places.empty()) sopt.restrict_places = parse_places_list(opt.places);
  ScanReport rep;
  if (opt.p == 2) {
    rep = els_scan_quartic(parse_rat_arg(opt.a, "--a"), parse_rat_arg(opt.b, "--b"), sopt);
  } else {
    rep = els_scan_cubic(parse_int_arg(opt.a, "--a"), sopt);
  }
  std::cout << (opt.json ? scan_report_json(rep) : scan_report_text(rep));
  if (opt.json) std::cout << "\n";
  bool inconclusive = false;
  for (const CandidateReport& c : rep.candidates) {
    if (c.verdict == "Inconclusive") inconclusive = true;
  }
  if (inconclusive && opt.strict) return kExitResource;
  return kExitOk;
}

int cmd_bad_primes(const Options& opt) {
  Int a = parse_int_arg(opt.a, "--a");
  std::vector<Int> primes = family_bad_primes(a);
  if (opt.json) {
    std::ostringstream out;
    out << "{\"a\":" << a.get_str() << ",\"bad_primes\":[";
    for (size_t i = 0; i < primes.size(); ++i) out << (i ? "," : "") << primes[i].get_str();
    out << "]}";
    std::cout << out.str() << "\n";
  } else {
    for (size_t i = 0; i < primes.size(); ++i) {
      std::cout << (i ? " " : "") << primes[i].get_str();
    }
    std::cout << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Twist models of elliptic curves from p-torsion points"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub, bool needs_p) {
    if (needs_p) sub->add_option("--p", opt.p, "torsion prime (2 or 3)")->required();
    sub->add_flag("--json", opt.json, "emit JSON instead of text");
    sub->add_option("--field", opt.field, "base field, Q or Qzeta3")
        ->check(CLI::IsMember({"Q", "Qzeta3"}));
  };

  CLI::App* model = app.add_subcommand("model", "construct the twist model");
  add_common(model, true);
  model->add_option("--a", opt.a, "curve parameter a")->required();
  model->add_option("--b", opt.b, "curve parameter b (p=2)");
  model->add_option("--d", opt.d, "twist parameter d")->required();

  CLI::App* verify = app.add_subcommand("verify", "run exact symbolic verifications");
  verify->add_option("what", opt.what, "relation|cocycle|inverse|fit|all");
  verify->add_flag("--json", opt.json, "emit JSON instead of text");

  CLI::App* fit = app.add_subcommand("fit", "recover the model coefficients by linear fit");
  fit->add_flag("--json", opt.json, "emit JSON instead of text");

  CLI::App* local = app.add_subcommand("local", "decide solvability at one place");
  add_common(local, true);
  local->add_option("--a", opt.a, "curve parameter a")->required();
  local->add_option("--b", opt.b, "curve parameter b (p=2)");
  local->add_option("--d", opt.d, "twist parameter d")->required();
  local->add_option("--q", opt.q, "rational prime, or real/complex")->required();
  local->add_option("--precision", opt.precision, "target q-adic precision");
  local->add_flag("--strict", opt.strict, "exit 3 when undetermined");

  CLI::App* scan = app.add_subcommand("scan", "scan every candidate twist for ELS");
  add_common(scan, true);
  scan->add_option("--a", opt.a, "curve parameter a")->required();
  scan->add_option("--b", opt.b, "curve parameter b (p=2)");
  scan->add_option("--precision", opt.precision, "target q-adic precision");
  scan->add_option("--verify-good-primes-below", opt.good_below,
                   "also check good primes under this bound");
  scan->add_option("--places", opt.places, "comma-separated list of primes to keep");
  scan->add_flag("--strict", opt.strict, "exit 3 when any row is inconclusive");

  CLI::App* bad = app.add_subcommand("bad-primes", "list bad primes of the family curve");
  bad->add_option("--a", opt.a, "integer curve parameter a")->required();
  bad->add_flag("--json", opt.json, "emit JSON instead of text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (model->parsed()) {
      require_p23(opt.p);
      if (opt.p == 2 && opt.b.empty()) throw CLI::ValidationError("model --p 2 requires --b");
      return cmd_model(opt);
    }
    if (verify->parsed()) return cmd_verify(opt);
    if (fit->parsed()) return cmd_fit(opt);
    if (local->parsed()) {
      require_p23(opt.p);
      if (opt.p == 2 && opt.b.empty()) throw CLI::ValidationError("local --p 2 requires --b");
      return cmd_local(opt);
    }
    if (scan->parsed()) {
      require_p23(opt.p);
      if (opt.p == 2 && opt.b.empty()) throw CLI::ValidationError("scan --p 2 requires --b");
      return cmd_scan(opt);
    }
    if (bad->parsed()) return cmd_bad_primes(opt);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const ZeroBoundError& e) {
    std::cerr << e.what() << "\n";
    return kExitNegative;
  } catch (const ResourceError& e) {
    std::cerr << e.what() << "\n";
    return kExitResource;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
