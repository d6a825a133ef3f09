#include "chordlab/simplicial_complex.hpp"

#include <algorithm>

#include "chordlab/errors.hpp"

namespace chordlab {

SimplicialComplex::SimplicialComplex(int n, std::vector<FaceSet> facets) : n_(n) {
  if (n < 0 || n > kMaxVertices) throw CapacityError("at most 63 vertices are supported");
  const FaceSet ground = FaceSet::range(n);
  for (FaceSet f : facets) {
    if (!f.subset_of(ground)) throw InputError("facet outside the ground set");
  }
  facets_ = maximal_elements(std::move(facets));
}

int SimplicialComplex::dim() const {
  if (facets_.empty()) return -2;
  int best = -1;
  for (FaceSet f : facets_) best = std::max(best, f.size() - 1);
  return best;
}

bool SimplicialComplex::is_pure() const {
  if (facets_.empty()) return true;
  const int s = facets_.front().size();
  return std::all_of(facets_.begin(), facets_.end(), [&](FaceSet f) { return f.size() == s; });
}

bool SimplicialComplex::contains(FaceSet face) const {
  return std::any_of(facets_.begin(), facets_.end(), [&](FaceSet f) { return face.subset_of(f); });
}

FaceSet SimplicialComplex::vertices() const {
  FaceSet v;
  for (FaceSet f : facets_) v = v | f;
  return v;
}

std::vector<FaceSet> SimplicialComplex::faces_of_dim(int dim) const {
  std::vector<FaceSet> out;
  if (facets_.empty()) return out;
  for (FaceSet f : facets_) {
    if (f.size() < dim + 1) continue;
    for_each_subset_of_size(f, dim + 1, [&](FaceSet s) { out.push_back(s); });
  }
  canonicalize(out);
  return out;
}

std::vector<FaceSet> SimplicialComplex::all_faces() const {
  std::vector<FaceSet> out;
  for (int k = -1; k <= dim(); ++k) {
    auto layer = faces_of_dim(k);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  canonicalize(out);
  return out;
}

SimplicialComplex link(const SimplicialComplex& d, FaceSet face) {
  if (!d.contains(face)) throw InputError("link of a set that is not a face");
  std::vector<FaceSet> out;
  for (FaceSet f : d.facets()) {
    if (face.subset_of(f)) out.push_back(f - face);
  }
  return SimplicialComplex(d.n(), std::move(out));
}

SimplicialComplex restrict(const SimplicialComplex& d, FaceSet subset) {
  if (d.is_void()) return d;
  std::vector<FaceSet> out;
  out.reserve(d.facets().size());
  for (FaceSet f : d.facets()) out.push_back(f & subset);
  return SimplicialComplex(d.n(), std::move(out));
}

SimplicialComplex delete_vertex(const SimplicialComplex& d, int v) {
  return restrict(d, FaceSet::range(d.n()).without(v));
}

std::vector<FaceSet> minimal_nonfaces(const SimplicialComplex& d) {
  std::vector<FaceSet> out;
  if (d.is_void()) {
    // Even the empty set is missing.
    out.push_back(FaceSet{});
    return out;
  }
  const FaceSet ground = FaceSet::range(d.n());
  // Every minimal non-face S satisfies S \ {v} ∈ D for all v ∈ S, hence S = G ∪ {v}
  // for a face G and a vertex v ∉ G.
  for (FaceSet g : d.all_faces()) {
    (ground - g).for_each([&](int v) {
      const FaceSet s = g.with(v);
      // Generate each candidate only from its largest vertex.
      if (!g.empty() && v < g.max()) return;
      if (d.contains(s)) return;
      bool minimal = true;
      s.for_each([&](int u) {
        if (minimal && !d.contains(s.without(u))) minimal = false;
      });
      if (minimal) out.push_back(s);
    });
  }
  canonicalize(out);
  return out;
}

SimplicialComplex alexander_dual(const SimplicialComplex& d) {
  const FaceSet ground = FaceSet::range(d.n());
  std::vector<FaceSet> facets;
  for (FaceSet s : minimal_nonfaces(d)) facets.push_back(ground - s);
  return SimplicialComplex(d.n(), std::move(facets));
}

}  // namespace chordlab
