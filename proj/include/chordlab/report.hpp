#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "chordlab/clutter.hpp"
#include "chordlab/harness.hpp"
#include "chordlab/label_map.hpp"

namespace chordlab {

inline constexpr int kReportFormatVersion = 1;

/// "fnv1a64:<hex>" of the canonical clutter text.
std::string input_digest(const Clutter& c, const LabelMap& labels);

/// {"n", "d", "labels", "circuits"}; circuits in external labels.
nlohmann::json clutter_to_json(const Clutter& c, const LabelMap& labels);

/// Inverse of clutter_to_json. Throws InputError on malformed documents.
Clutter clutter_from_json(const nlohmann::json& j, LabelMap* labels = nullptr);

nlohmann::json sets_to_json(const std::vector<FaceSet>& sets, const LabelMap& labels);

/// Reports number counterexamples with labels 1..n. Timing only when asked,
/// so the document is otherwise a pure function of the run's inputs.
nlohmann::json report_to_json(const VerificationReport& report, bool timing);

std::string report_to_text(const VerificationReport& report, bool timing);

}  // namespace chordlab
