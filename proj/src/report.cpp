#include "twistlib/report.hpp"

#include <json.hpp>
#include <sstream>

namespace twist {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json int_field(const Int& n) {
  if (n.fits_slong_p()) return ordered_json(n.get_si());
  return ordered_json(n.get_str());
}

ordered_json verdict_fields(const LocalVerdict& v) {
  ordered_json j;
  j["status"] = status_name(v.status);
  j["witness"] = v.witness;
  j["depth"] = v.depth;
  j["nodes"] = v.nodes;
  j["hensel_valuation"] = v.hensel_valuation;
  if (!v.reason.empty()) j["reason"] = v.reason;
  return j;
}

ordered_json place_fields(const LocalPlace& place) {
  ordered_json j;
  j["q"] = int_field(place.q);
  j["kind"] = place_kind_name(place.kind);
  if (place.kind == PlaceKind::SplitOverK) j["embedding"] = place.embedding;
  return j;
}

ordered_json row_fields(const PlaceRow& row) {
  ordered_json j = place_fields(row.place);
  j["status"] = status_name(row.verdict.status);
  j["witness"] = row.verdict.witness;
  if (!row.verdict.reason.empty()) j["reason"] = row.verdict.reason;
  return j;
}

ordered_json scan_fields(const ScanReport& rep) {
  ordered_json j;
  j["curve"] = rep.curve;
  j["p"] = rep.p;
  j["candidates"] = ordered_json::array();
  for (const auto& c : rep.candidates) {
    ordered_json cj;
    cj["d"] = int_field(c.d);
    cj["places"] = ordered_json::array();
    for (const auto& row : c.rows) cj["places"].push_back(row_fields(row));
    cj["verdict"] = c.verdict;
    j["candidates"].push_back(std::move(cj));
  }
  return j;
}

}  // namespace

std::string quartic_model_json(const QuarticModel& m) {
  ordered_json j;
  j["p"] = 2;
  j["d"] = int_field(m.d);
  j["A"] = rat_str(m.A);
  j["B"] = rat_str(m.B);
  j["C"] = rat_str(m.C);
  j["equation"] = m.equation();
  return j.dump();
}

std::string cubic_model_json(const CubicModel& m) {
  ordered_json j;
  j["p"] = 3;
  j["d"] = int_field(m.d);
  j["alpha"] = cyc_str(m.alpha);
  j["beta"] = cyc_str(m.beta);
  j["equation"] = m.equation();
  return j.dump();
}

std::string verdict_json(const LocalVerdict& v) { return verdict_fields(v).dump(); }

std::string local_rows_json(const std::vector<PlaceRow>& rows) {
  ordered_json j = ordered_json::array();
  for (const auto& row : rows) j.push_back(row_fields(row));
  return j.dump();
}

std::string local_report_json(const std::string& curve, int p, const Int& d,
                              const std::vector<PlaceRow>& rows) {
  ordered_json j;
  j["curve"] = curve;
  j["p"] = p;
  j["d"] = int_field(d);
  j["places"] = ordered_json::array();
  for (const auto& row : rows) j["places"].push_back(row_fields(row));
  return j.dump();
}

std::string scan_report_json(const ScanReport& rep) { return scan_fields(rep).dump(); }

std::string verdict_text(const LocalVerdict& v) {
  std::ostringstream out;
  out << status_name(v.status);
  if (!v.witness.empty()) {
    out << "  witness (";
    for (size_t i = 0; i < v.witness.size(); ++i) out << (i ? ", " : "") << v.witness[i];
    out << ")";
  }
  out << "  depth " << v.depth << ", " << v.nodes << " nodes";
  if (v.hensel_valuation >= 0) out << ", hensel v(f')=" << v.hensel_valuation;
  if (!v.reason.empty()) out << "  [" << v.reason << "]";
  return out.str();
}

std::string local_report_text(const std::string& curve, int p, const Int& d,
                              const std::vector<PlaceRow>& rows) {
  std::ostringstream out;
  out << "curve: " << curve << "\n";
  out << "p = " << p << ", d = " << d.get_str() << "\n";
  for (const auto& row : rows) {
    out << "  " << row.place.str() << ": " << verdict_text(row.verdict) << "\n";
  }
  return out.str();
}

std::string scan_report_text(const ScanReport& rep) {
  std::ostringstream out;
  out << "curve: " << rep.curve << "\n";
  out << "p = " << rep.p << ", " << rep.candidates.size() << " candidates\n";
  for (const auto& c : rep.candidates) {
    out << "d = " << c.d.get_str() << ": " << c.verdict << "\n";
    for (const auto& row : c.rows) {
      out << "  " << row.place.str() << ": " << verdict_text(row.verdict) << "\n";
    }
  }
  return out.str();
}

}  // namespace twist
