#pragma once

#include <optional>
#include <span>
#include <vector>

#include "chordlab/clutter.hpp"
#include "chordlab/gf2_matrix.hpp"
#include "chordlab/simplicial_complex.hpp"

namespace chordlab {

/// Matrix of the boundary map from i-faces to (i-1)-faces over GF(2). Columns
/// follow faces_of_dim(i), rows faces_of_dim(i-1); for i = 0 the single row is
/// the augmentation. Throws InputError unless -1 <= i <= dim.
GF2Matrix boundary_matrix(const SimplicialComplex& d, int i);

/// The augmented chain complex. Construction checks that consecutive
/// boundaries compose to zero.
class ChainComplexZ2 {
 public:
  explicit ChainComplexZ2(const SimplicialComplex& d);

  int dim() const { return static_cast<int>(faces_.size()) - 2; }
  /// Faces of dimension i, -1 <= i <= dim().
  const std::vector<FaceSet>& faces(int i) const { return faces_.at(i + 1); }
  const GF2Matrix& boundary(int i) const { return boundaries_.at(i + 1); }

 private:
  std::vector<std::vector<FaceSet>> faces_;
  std::vector<GF2Matrix> boundaries_;
};

/// Reduced Betti numbers over Z₂, from dimension -1 up to dim.
struct HomologyRanks {
  std::vector<int> betti;  // betti[i + 1] is the rank in dimension i
  int at(int i) const { return i + 1 < 0 || i + 1 >= static_cast<int>(betti.size()) ? 0 : betti[i + 1]; }
  bool acyclic() const;
};

/// Throws InputError for the void complex.
HomologyRanks reduced_homology_ranks(const SimplicialComplex& d);

/// Reisner's criterion over Z₂ across every face, the empty face included.
/// Impure and void complexes are reported as not Cohen–Macaulay.
bool is_cohen_macaulay_z2(const SimplicialComplex& d);

/// Linear resolution of I(C̄) over Z₂, decided through the facet complex of
/// the Alexander dual clutter. A complete clutter gives the zero ideal: true.
bool has_linear_resolution_z2(const Clutter& c);

struct VertexDecomposition {
  bool decomposable = false;
  /// Shedding vertices, each chosen in the complex left after deleting the previous ones.
  std::vector<int> shedding;
};

/// Pure vertex decomposability. A simplex of dimension >= 0 is a base case;
/// the irrelevant complex is not decomposable. Throws InputError if impure.
VertexDecomposition vertex_decomposition(const SimplicialComplex& d);

bool is_vertex_decomposable(const SimplicialComplex& d);

/// Both the link of v and the deletion of v are pure vertex decomposable.
bool is_shedding_vertex(const SimplicialComplex& d, int v);

/// Whether `cycle`, a set of k-faces, is the GF(2) boundary of some set of
/// (k+1)-dimensional facets of D. Normally k = dim D - 1. Throws InputError for
/// mixed face sizes or k > dim D.
bool is_boundary_of_facets(const SimplicialComplex& d, std::span<const FaceSet> cycle);

}  // namespace chordlab
