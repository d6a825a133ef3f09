#include "chordlab/face_set.hpp"

#include <algorithm>
#include <sstream>

#include "chordlab/errors.hpp"

namespace chordlab {

FaceSet::FaceSet(std::initializer_list<int> vertices) {
  for (int v : vertices) {
    if (v < 0 || v >= kMaxVertices) throw InputError("vertex index out of range");
    bits_ |= std::uint64_t{1} << v;
  }
}

FaceSet FaceSet::from_vertices(const std::vector<int>& vertices) {
  FaceSet s;
  for (int v : vertices) {
    if (v < 0 || v >= kMaxVertices) throw InputError("vertex index out of range");
    s = s.with(v);
  }
  return s;
}

std::vector<int> FaceSet::vertices() const {
  std::vector<int> out;
  out.reserve(size());
  for_each([&](int v) { out.push_back(v); });
  return out;
}

std::string FaceSet::debug_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for_each([&](int v) {
    if (!first) os << ',';
    os << v;
    first = false;
  });
  os << '}';
  return os.str();
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
  return static_cast<std::uint64_t>(r);
}

namespace {

void subsets_rec(const std::vector<int>& elems, std::size_t start, int remaining, FaceSet acc,
                 const std::function<void(FaceSet)>& fn) {
  if (remaining == 0) {
    fn(acc);
    return;
  }
  for (std::size_t i = start; i + static_cast<std::size_t>(remaining) <= elems.size(); ++i) {
    subsets_rec(elems, i + 1, remaining - 1, acc.with(elems[i]), fn);
  }
}

}  // namespace

void for_each_subset_of_size(FaceSet set, int k, const std::function<void(FaceSet)>& fn) {
  if (k < 0 || k > set.size()) return;
  subsets_rec(set.vertices(), 0, k, FaceSet{}, fn);
}

std::vector<FaceSet> subsets_of_size(FaceSet set, int k) {
  std::vector<FaceSet> out;
  for_each_subset_of_size(set, k, [&](FaceSet s) { out.push_back(s); });
  return out;
}

void canonicalize(std::vector<FaceSet>& sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

std::vector<FaceSet> maximal_elements(std::vector<FaceSet> sets) {
  canonicalize(sets);
  // Larger sets first so a survivor can only be contained in an earlier survivor.
  std::stable_sort(sets.begin(), sets.end(), [](FaceSet a, FaceSet b) { return a.size() > b.size(); });
  std::vector<FaceSet> out;
  for (FaceSet s : sets) {
    const bool dominated = std::any_of(out.begin(), out.end(), [&](FaceSet t) { return s.subset_of(t); });
    if (!dominated) out.push_back(s);
  }
  canonicalize(out);
  return out;
}

std::vector<FaceSet> minimal_elements(std::vector<FaceSet> sets) {
  canonicalize(sets);
  std::stable_sort(sets.begin(), sets.end(), [](FaceSet a, FaceSet b) { return a.size() < b.size(); });
  std::vector<FaceSet> out;
  for (FaceSet s : sets) {
    const bool dominated = std::any_of(out.begin(), out.end(), [&](FaceSet t) { return t.subset_of(s); });
    if (!dominated) out.push_back(s);
  }
  canonicalize(out);
  return out;
}

}  // namespace chordlab
