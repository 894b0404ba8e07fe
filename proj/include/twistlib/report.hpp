#pragma once

#include <string>

#include "twistlib/localsolve.hpp"
#include "twistlib/model.hpp"

namespace twist {

/// JSON renderings; field order is fixed, so identical inputs produce
/// byte-identical output.
std::string quartic_model_json(const QuarticModel& m);
std::string cubic_model_json(const CubicModel& m);
std::string verdict_json(const LocalVerdict& v);
std::string local_rows_json(const std::vector<PlaceRow>& rows);
std::string local_report_json(const std::string& curve, int p, const Int& d,
                              const std::vector<PlaceRow>& rows);
std::string scan_report_json(const ScanReport& rep);

std::string verdict_text(const LocalVerdict& v);
std::string local_report_text(const std::string& curve, int p, const Int& d,
                              const std::vector<PlaceRow>& rows);
std::string scan_report_text(const ScanReport& rep);

}  // namespace twist
