#pragma once

#include <chordlab/clutter.hpp>
#include <chordlab/clutter_file.hpp>
#include <chordlab/face_set.hpp>
#include <chordlab/simplicial_complex.hpp>

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace testing {

using chordlab::Clutter;
using chordlab::FaceSet;

/// "145" with 1-based digits -> {0,3,4}.
inline FaceSet s1(std::string_view digits) {
  FaceSet f;
  for (char ch : digits) f = f.with(ch - '1');
  return f;
}

/// "012" with 0-based digits.
inline FaceSet s0(std::string_view digits) {
  FaceSet f;
  for (char ch : digits) f = f.with(ch - '0');
  return f;
}

inline std::vector<FaceSet> sets1(std::initializer_list<std::string_view> items) {
  std::vector<FaceSet> out;
  for (auto s : items) out.push_back(s1(s));
  chordlab::canonicalize(out);
  return out;
}

inline Clutter c1(int n, int d, std::initializer_list<std::string_view> items) {
  return Clutter(n, d, sets1(items));
}

inline chordlab::SimplicialComplex k1(int n, std::initializer_list<std::string_view> facets) {
  return chordlab::SimplicialComplex(n, sets1(facets));
}

inline std::string data_path(const std::string& name) { return std::string(CHORDLAB_TEST_DATA) + "/" + name; }

inline Clutter fixture(const std::string& name) { return chordlab::read_clutter_file(data_path(name)).clutter; }

inline Clutter pm() { return c1(5, 2, {"145", "245", "345"}); }
inline Clutter octahedron() { return fixture("oct.clutter"); }
inline Clutter ex16() { return fixture("ex16.clutter"); }

}  // namespace testing
