#include "chordlab/label_map.hpp"

#include <algorithm>
#include <sstream>

#include "chordlab/errors.hpp"

namespace chordlab {

LabelMap::LabelMap(std::vector<std::int64_t> labels) : labels_(std::move(labels)) {
  std::sort(labels_.begin(), labels_.end());
  if (std::adjacent_find(labels_.begin(), labels_.end()) != labels_.end())
    throw InputError("duplicate vertex label");
  if (!labels_.empty() && labels_.front() < 0) throw InputError("vertex labels must be non-negative");
  if (size() > kMaxVertices) throw CapacityError("at most 63 vertices are supported");
}

LabelMap LabelMap::one_based(int n) {
  std::vector<std::int64_t> labels(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) labels[static_cast<std::size_t>(i)] = i + 1;
  return LabelMap(std::move(labels));
}

LabelMap LabelMap::zero_based(int n) {
  std::vector<std::int64_t> labels(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) labels[static_cast<std::size_t>(i)] = i;
  return LabelMap(std::move(labels));
}

int LabelMap::to_internal(std::int64_t label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) throw InputError("unknown vertex label " + std::to_string(label));
  return static_cast<int>(it - labels_.begin());
}

FaceSet LabelMap::to_internal(const std::vector<std::int64_t>& labels) const {
  FaceSet s;
  for (auto l : labels) s = s.with(to_internal(l));
  return s;
}

std::vector<std::int64_t> LabelMap::to_external(FaceSet set) const {
  std::vector<std::int64_t> out;
  set.for_each([&](int v) { out.push_back(to_external(v)); });
  return out;
}

std::string LabelMap::format(FaceSet set) const {
  const bool digits = labels_.empty() || labels_.back() <= 9;
  std::ostringstream os;
  if (digits) {
    if (set.empty()) return "{}";
    set.for_each([&](int v) { os << to_external(v); });
    return os.str();
  }
  os << '{';
  bool first = true;
  set.for_each([&](int v) {
    if (!first) os << ',';
    os << to_external(v);
    first = false;
  });
  os << '}';
  return os.str();
}

std::string LabelMap::format(const std::vector<FaceSet>& sets, const std::string& sep) const {
  std::string out;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (i) out += sep;
    out += format(sets[i]);
  }
  return out;
}

}  // namespace chordlab
