#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chordlab/face_set.hpp"

namespace chordlab {

/// Bijection between external vertex labels and internal 0-based indices.
/// Internal index i corresponds to the i-th smallest external label.
class LabelMap {
 public:
  LabelMap() = default;
  /// Labels must be distinct and non-negative; they are sorted internally.
  explicit LabelMap(std::vector<std::int64_t> labels);

  /// Labels 1..n, the usual [n].
  static LabelMap one_based(int n);
  /// Labels 0..n-1.
  static LabelMap zero_based(int n);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::int64_t>& labels() const { return labels_; }

  /// Throws InputError for an unknown label.
  int to_internal(std::int64_t label) const;
  std::int64_t to_external(int index) const { return labels_.at(static_cast<std::size_t>(index)); }

  FaceSet to_internal(const std::vector<std::int64_t>& labels) const;
  std::vector<std::int64_t> to_external(FaceSet set) const;

  /// "145" when every label is a single digit, otherwise "{10,11,12}".
  std::string format(FaceSet set) const;
  std::string format(const std::vector<FaceSet>& sets, const std::string& sep = " ") const;

  friend bool operator==(const LabelMap&, const LabelMap&) = default;

 private:
  std::vector<std::int64_t> labels_;
};

}  // namespace chordlab
