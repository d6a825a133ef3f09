#include "chordlab/report.hpp"

#include <cstdio>
#include <sstream>

#include "chordlab/clutter_file.hpp"
#include "chordlab/errors.hpp"

namespace chordlab {

std::string input_digest(const Clutter& c, const LabelMap& labels) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : format_clutter(c, labels)) h = (h ^ ch) * 1099511628211ull;
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

nlohmann::json sets_to_json(const std::vector<FaceSet>& sets, const LabelMap& labels) {
  nlohmann::json arr = nlohmann::json::array();
  for (FaceSet f : sets) arr.push_back(labels.to_external(f));
  return arr;
}

nlohmann::json clutter_to_json(const Clutter& c, const LabelMap& labels) {
  return {{"n", c.n()}, {"d", c.d()}, {"labels", labels.labels()}, {"circuits", sets_to_json(c.circuits(), labels)}};
}

Clutter clutter_from_json(const nlohmann::json& j, LabelMap* labels) {
  try {
    const int n = j.at("n").get<int>();
    const int d = j.at("d").get<int>();
    LabelMap map(j.at("labels").get<std::vector<std::int64_t>>());
    if (map.size() != n) throw InputError("label count differs from n");
    std::vector<FaceSet> circuits;
    for (const auto& circ : j.at("circuits")) circuits.push_back(map.to_internal(circ.get<std::vector<std::int64_t>>()));
    if (labels) *labels = map;
    return Clutter(n, d, std::move(circuits));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed clutter document: ") + e.what());
  }
}

nlohmann::json report_to_json(const VerificationReport& report, bool timing) {
  const LabelMap labels = LabelMap::one_based(report.n);
  nlohmann::json examples = nlohmann::json::array();
  for (const auto& ex : report.counterexamples) {
    nlohmann::json e{{"index", ex.index}, {"reason", ex.reason}};
    if (ex.clutter) {
      e["clutter"] = clutter_to_json(*ex.clutter, labels);
      e["replay"] = format_clutter(*ex.clutter, labels);
    }
    if (!ex.sequence.empty()) e["sequence"] = sets_to_json(ex.sequence, labels);
    examples.push_back(std::move(e));
  }
  nlohmann::json shards = nlohmann::json::array();
  for (const auto& s : report.shards)
    shards.push_back({{"sweep", s.sweep},
                      {"index", s.index},
                      {"begin", s.begin},
                      {"end", s.end},
                      {"population", s.population},
                      {"failures", s.failures}});
  nlohmann::json j{{"format_version", kReportFormatVersion},
                   {"kind", report.kind},
                   {"id", report.theorem_id},
                   {"n", report.n},
                   {"d", report.d},
                   {"verdict", report.pass ? "pass" : "fail"},
                   {"enumerated", report.enumerated},
                   {"population", report.population},
                   {"failures", report.failures},
                   {"counterexamples", std::move(examples)},
                   {"tallies", report.tallies},
                   {"shards", std::move(shards)},
                   {"notes", report.notes}};
  if (timing) j["wall_seconds"] = report.wall_seconds;
  return j;
}

std::string report_to_text(const VerificationReport& report, bool timing) {
  std::ostringstream out;
  out << report.kind << ' ' << report.theorem_id << " n=" << report.n << " d=" << report.d << ": "
      << (report.pass ? "PASS" : "FAIL") << "  population=" << report.population
      << " enumerated=" << report.enumerated << " failures=" << report.failures << '\n';
  for (const auto& [k, v] : report.tallies) out << "  " << k << " = " << v << '\n';
  for (const auto& note : report.notes) out << "  note: " << note << '\n';
  const LabelMap labels = LabelMap::one_based(report.n);
  for (const auto& ex : report.counterexamples) {
    out << "  counterexample #" << ex.index << ": " << ex.reason << '\n';
    if (ex.clutter) out << "    " << labels.format(ex.clutter->circuits()) << '\n';
    if (!ex.sequence.empty()) out << "    sequence " << labels.format(ex.sequence) << '\n';
  }
  if (timing) out << "  wall time " << report.wall_seconds << " s\n";
  return out.str();
}

}  // namespace chordlab
