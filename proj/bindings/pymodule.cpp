#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "twistlib/curve.hpp"
#include "twistlib/localsolve.hpp"
#include "twistlib/model.hpp"
#include "twistlib/report.hpp"

namespace py = pybind11;
using namespace twist;

namespace {

Rat rat_arg(const std::string& s) { return parse_rat(s); }

Int int_arg(const std::string& s) {
  Rat r = parse_rat(s);
  if (r.get_den() != 1) throw InvalidArgumentError("expected an integer, got " + s);
  return r.get_num();
}

ScanOptions scan_options(int precision, long good_below, const std::vector<std::string>& places) {
  ScanOptions opt;
  opt.precision = precision;
  opt.verify_good_below = good_below;
  for (const std::string& q : places) opt.restrict_places.push_back(int_arg(q));
  return opt;
}

std::vector<std::string> int_strings(const std::vector<Int>& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const Int& n : v) out.push_back(n.get_str());
  return out;
}

std::string py_quartic_model(const std::string& a, const std::string& b, const std::string& d) {
  return quartic_model_json(quadratic_model(rat_arg(a), rat_arg(b), int_arg(d)));
}

std::string py_cubic_model(const std::string& a, const std::string& d) {
  return cubic_model_json(cubic_model(rat_arg(a), int_arg(d)));
}

std::string py_quartic_local(const std::string& a, const std::string& b, const std::string& d,
                             const std::string& q, int precision) {
  QuarticModel m = quadratic_model(rat_arg(a), rat_arg(b), int_arg(d));
  std::vector<PlaceRow> rows;
  if (q == "real") {
    rows.push_back({LocalPlace{PlaceKind::RealPlace, Int(0), 0}, quartic_real(m)});
  } else {
    Int qq = int_arg(q);
    rows.push_back({LocalPlace{PlaceKind::Rational, qq, 0}, quartic_local(m, qq, precision)});
  }
  return local_report_json(quartic_curve_str(m.a, m.b), 2, m.d, rows);
}

std::string py_cubic_local(const std::string& a, const std::string& d, const std::string& q,
                           int precision) {
  Int ia = int_arg(a);
  CubicModel m = cubic_model(Rat(ia), int_arg(d));
  std::vector<PlaceRow> rows;
  if (q == "complex") {
    LocalPlace place{PlaceKind::ComplexPlace, Int(0), 0};
    rows.push_back({place, cubic_local(m, place, precision)});
  } else {
    for (const LocalPlace& place : places_over_K(int_arg(q))) {
      rows.push_back({place, cubic_local(m, place, precision)});
    }
  }
  return local_report_json(cubic_curve_str(ia), 3, m.d, rows);
}

std::string py_scan_quartic(const std::string& a, const std::string& b, int precision,
                            long good_below, const std::vector<std::string>& places) {
  return scan_report_json(
      els_scan_quartic(rat_arg(a), rat_arg(b), scan_options(precision, good_below, places)));
}

std::string py_scan_cubic(const std::string& a, int precision, long good_below,
                          const std::vector<std::string>& places) {
  return scan_report_json(els_scan_cubic(int_arg(a), scan_options(precision, good_below, places)));
}

std::vector<std::string> py_candidates_quartic(const std::string& a, const std::string& b) {
  return int_strings(els_candidates_quartic(rat_arg(a), rat_arg(b)));
}

std::vector<std::string> py_candidates_cubic(const std::string& a) {
  return int_strings(els_candidates_cubic(int_arg(a)));
}

std::vector<std::string> py_bad_primes(const std::string& a) {
  return int_strings(family_bad_primes(int_arg(a)));
}

py::dict py_verify(const std::string& what) {
  const ZWPair zw = build_zw();
  py::dict out;
  if (what == "relation" || what == "all") {
    out["relation"] = verify_cubic_relation(zw, cubic_alpha_poly(), cubic_beta_poly());
  }
  if (what == "cocycle" || what == "all") {
    out["cocycle k=1"] = verify_cocycle(zw, 1);
    out["cocycle k=2"] = verify_cocycle(zw, 2);
  }
  if (what == "inverse" || what == "all") {
    PointMap m = inverse_map_composed(zw.z, zw.w);
    out["inverse"] = *m.x == CurveFunction::x(zw.curve) && *m.y == CurveFunction::y(zw.curve);
  }
  if (what == "fit" || what == "all") {
    auto lam = fit_relation(zw.z, zw.w);
    ParamFrac d{ParamPoly::var_d()};
    out["fit"] = lam[0] == d &&
                 lam[1] == ParamFrac(ParamPoly(Cyc(3)) * ParamPoly::var_d() * cubic_alpha_poly()) &&
                 lam[2] == d * d && lam[3] == ParamFrac(cubic_beta_poly());
  }
  if (out.size() == 0) throw InvalidArgumentError("unknown verification: " + what);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Twist models of elliptic curves from p-torsion points";

  py::register_exception<ResourceError>(m, "ResourceError");
  py::register_exception<Error>(m, "TwistError");

  m.def("quartic_model_json", &py_quartic_model, py::arg("a"), py::arg("b"), py::arg("d"));
  m.def("cubic_model_json", &py_cubic_model, py::arg("a"), py::arg("d"));
  m.def("quartic_local_json", &py_quartic_local, py::arg("a"), py::arg("b"), py::arg("d"),
        py::arg("q"), py::arg("precision") = 6);
  m.def("cubic_local_json", &py_cubic_local, py::arg("a"), py::arg("d"), py::arg("q"),
        py::arg("precision") = 4);
  m.def("scan_quartic_json", &py_scan_quartic, py::arg("a"), py::arg("b"), py::arg("precision") = 6,
        py::arg("verify_good_primes_below") = 0, py::arg("places") = std::vector<std::string>{});
  m.def("scan_cubic_json", &py_scan_cubic, py::arg("a"), py::arg("precision") = 4,
        py::arg("verify_good_primes_below") = 0, py::arg("places") = std::vector<std::string>{});
  m.def("els_candidates_quartic", &py_candidates_quartic, py::arg("a"), py::arg("b"));
  m.def("els_candidates_cubic", &py_candidates_cubic, py::arg("a"));
  m.def("bad_primes", &py_bad_primes, py::arg("a"));
  m.def("verify", &py_verify, py::arg("what") = "all",
        "Exact symbolic verifications; slow (symbolic a, d)");
}
