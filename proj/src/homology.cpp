#include "chordlab/homology.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "chordlab/errors.hpp"

namespace chordlab {

namespace {

GF2Matrix incidence(const std::vector<FaceSet>& rows, const std::vector<FaceSet>& cols) {
  GF2Matrix m(rows.size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    cols[c].for_each([&](int v) {
      const FaceSet face = cols[c].without(v);
      const auto it = std::lower_bound(rows.begin(), rows.end(), face);
      if (it != rows.end() && *it == face) m.set(static_cast<std::size_t>(it - rows.begin()), c, true);
    });
  }
  return m;
}

}  // namespace

GF2Matrix boundary_matrix(const SimplicialComplex& d, int i) {
  if (i < -1 || i > d.dim()) throw InputError("boundary index " + std::to_string(i) + " out of range");
  if (i == -1) return GF2Matrix(0, 1);
  return incidence(d.faces_of_dim(i - 1), d.faces_of_dim(i));
}

ChainComplexZ2::ChainComplexZ2(const SimplicialComplex& d) {
  for (int i = -1; i <= d.dim(); ++i) faces_.push_back(d.faces_of_dim(i));
  boundaries_.emplace_back(0, faces_.empty() ? 0 : 1);
  for (int i = 0; i <= d.dim(); ++i) boundaries_.push_back(incidence(faces(i - 1), faces(i)));
  for (int i = 0; i < d.dim(); ++i)
    if (!(boundary(i) * boundary(i + 1)).is_zero()) throw std::logic_error("boundary of a boundary is nonzero");
}

bool HomologyRanks::acyclic() const {
  return std::all_of(betti.begin(), betti.end(), [](int b) { return b == 0; });
}

HomologyRanks reduced_homology_ranks(const SimplicialComplex& d) {
  if (d.is_void()) throw InputError("reduced homology of the void complex");
  const int top = d.dim();
  std::vector<int> face_count;
  std::vector<int> rank;  // rank[i + 1] of the boundary out of dimension i
  for (int i = -1; i <= top; ++i) {
    face_count.push_back(static_cast<int>(d.faces_of_dim(i).size()));
    rank.push_back(i == -1 ? 0 : static_cast<int>(boundary_matrix(d, i).rank()));
  }
  rank.push_back(0);
  HomologyRanks out;
  for (int i = -1; i <= top; ++i) out.betti.push_back(face_count[i + 1] - rank[i + 1] - rank[i + 2]);
  return out;
}

bool is_cohen_macaulay_z2(const SimplicialComplex& d) {
  if (d.is_void() || !d.is_pure()) return false;
  for (FaceSet f : d.all_faces()) {
    const SimplicialComplex lk = link(d, f);
    const HomologyRanks h = reduced_homology_ranks(lk);
    for (int i = -1; i < lk.dim(); ++i)
      if (h.at(i) != 0) return false;
  }
  return true;
}

bool has_linear_resolution_z2(const Clutter& c) {
  const Clutter dual = alexander_dual_clutter(c);
  if (dual.empty()) return true;
  return is_cohen_macaulay_z2(facet_complex(dual));
}

namespace {

class Decomposer {
 public:
  std::optional<std::vector<int>> run(const SimplicialComplex& d) {
    if (d.is_void() || !d.is_pure()) return std::nullopt;
    if (d.is_simplex()) {
      if (d.dim() < 0) return std::nullopt;
      return std::vector<int>{};
    }
    if (auto it = memo_.find(d.facets()); it != memo_.end()) return it->second;
    std::optional<std::vector<int>> result;
    const FaceSet verts = d.vertices();
    for (int v = verts.empty() ? 0 : verts.min(); !result && v < d.n(); ++v) {
      if (!verts.contains(v)) continue;
      if (!run(link(d, FaceSet::singleton(v)))) continue;
      auto rest = run(delete_vertex(d, v));
      if (!rest) continue;
      rest->insert(rest->begin(), v);
      result = std::move(rest);
    }
    memo_.emplace(d.facets(), result);
    return result;
  }

 private:
  std::map<std::vector<FaceSet>, std::optional<std::vector<int>>> memo_;
};

}  // namespace

VertexDecomposition vertex_decomposition(const SimplicialComplex& d) {
  if (!d.is_pure()) throw InputError("vertex decomposability needs a pure complex");
  VertexDecomposition out;
  if (auto seq = Decomposer{}.run(d)) {
    out.decomposable = true;
    out.shedding = std::move(*seq);
  }
  return out;
}

bool is_vertex_decomposable(const SimplicialComplex& d) { return vertex_decomposition(d).decomposable; }

bool is_shedding_vertex(const SimplicialComplex& d, int v) {
  if (!d.vertices().contains(v)) return false;
  Decomposer dec;
  return dec.run(link(d, FaceSet::singleton(v))).has_value() && dec.run(delete_vertex(d, v)).has_value();
}

bool is_boundary_of_facets(const SimplicialComplex& d, std::span<const FaceSet> cycle) {
  const int k = cycle.empty() ? d.dim() - 1 : static_cast<int>(cycle.front().size()) - 1;
  for (FaceSet f : cycle)
    if (static_cast<int>(f.size()) != k + 1) throw InputError("cycle faces have mixed dimensions");
  if (k > d.dim()) throw InputError("cycle dimension exceeds the complex");
  std::vector<FaceSet> facets;
  for (FaceSet f : d.facets())
    if (static_cast<int>(f.size()) == k + 2) facets.push_back(f);
  std::vector<FaceSet> rows(cycle.begin(), cycle.end());
  for (FaceSet f : facets) f.for_each([&](int v) { rows.push_back(f.without(v)); });
  canonicalize(rows);
  const GF2Matrix m = incidence(rows, facets);
  std::vector<bool> target(rows.size(), false);
  for (FaceSet f : cycle) {
    const auto idx = static_cast<std::size_t>(std::lower_bound(rows.begin(), rows.end(), f) - rows.begin());
    target[idx] = !target[idx];
  }
  return m.solve(target).has_value();
}

}  // namespace chordlab
