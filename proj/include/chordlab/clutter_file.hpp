#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "chordlab/clutter.hpp"
#include "chordlab/label_map.hpp"

namespace chordlab {

/// A clutter read from text, with the labels used in the file.
struct ClutterFile {
  Clutter clutter;
  LabelMap labels;
};

/// Grammar: a header line "n=<int> d=<int>", then one circuit per line as
/// whitespace-separated labels. A line holding a single token of exactly d+1
/// digits (d >= 1) is read digit by digit, so "145" means {1,4,5}. '#' starts
/// a comment; blank lines are skipped. Labels within 1..n are read as [n],
/// else within 0..n-1 as {0..n-1}; otherwise exactly n distinct labels must
/// appear. Errors name the source and line.
ClutterFile parse_clutter(std::string_view text, const std::string& source = "<input>");

ClutterFile read_clutter_file(const std::string& path);

std::string format_clutter(const Clutter& c, const LabelMap& labels);

/// Parses a whitespace-separated list of sets of size k: a token is either k
/// single digits ("14") or comma-separated labels ("10,11").
std::vector<FaceSet> parse_set_list(std::string_view text, int k, const LabelMap& labels);

}  // namespace chordlab
