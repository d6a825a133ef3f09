#pragma once

#include <vector>

#include "chordlab/face_set.hpp"

namespace chordlab {

/// A simplicial complex on the ground set {0, ..., n-1}, stored by its facets.
///
/// The void complex (no faces at all) and the irrelevant complex (only the
/// empty face) are distinct values: the former has no facets, the latter has
/// the single facet {}.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  /// Non-maximal entries are dropped, so the stored facets form an antichain.
  SimplicialComplex(int n, std::vector<FaceSet> facets);

  static SimplicialComplex void_complex(int n) { return SimplicialComplex(n, {}); }
  static SimplicialComplex irrelevant(int n) { return SimplicialComplex(n, {FaceSet{}}); }
  static SimplicialComplex simplex(int n, FaceSet face) { return SimplicialComplex(n, {face}); }

  int n() const { return n_; }
  const std::vector<FaceSet>& facets() const { return facets_; }
  bool is_void() const { return facets_.empty(); }
  /// -1 for the irrelevant complex, -2 for the void complex.
  int dim() const;
  bool is_pure() const;
  bool is_simplex() const { return facets_.size() == 1; }

  bool contains(FaceSet face) const;
  /// Union of all facets.
  FaceSet vertices() const;

  /// Faces of the given dimension (dim -1 is the empty face), canonically sorted.
  std::vector<FaceSet> faces_of_dim(int dim) const;
  /// Every face including the empty one, canonically sorted.
  std::vector<FaceSet> all_faces() const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  int n_ = 0;
  std::vector<FaceSet> facets_;
};

/// link_D(F) = { G \ F : F ⊆ G ∈ D }. Throws InputError if F is not a face.
SimplicialComplex link(const SimplicialComplex& d, FaceSet face);

/// D|_L = { G ∈ D : G ⊆ L }.
SimplicialComplex restrict(const SimplicialComplex& d, FaceSet subset);

/// D \ v, i.e. the restriction to every vertex except v.
SimplicialComplex delete_vertex(const SimplicialComplex& d, int v);

/// Inclusion-minimal subsets of {0..n-1} that are not faces.
std::vector<FaceSet> minimal_nonfaces(const SimplicialComplex& d);

/// Alexander dual: facets are the complements of the minimal non-faces.
SimplicialComplex alexander_dual(const SimplicialComplex& d);

}  // namespace chordlab
