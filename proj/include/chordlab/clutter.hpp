#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "chordlab/face_set.hpp"
#include "chordlab/simplicial_complex.hpp"

namespace chordlab {

/// A uniform d-dimensional clutter on {0, ..., n-1}: a set of circuits, each of
/// cardinality d+1. Circuits are kept in canonical (lexicographic) order.
class Clutter {
 public:
  Clutter() = default;
  /// Duplicated circuits collapse; a circuit of the wrong size or outside the
  /// ground set is an InputError. d = -1 (circuits equal to {}) is permitted.
  Clutter(int n, int d, std::vector<FaceSet> circuits);

  static Clutter complete(int n, int d);
  static Clutter empty(int n, int d) { return Clutter(n, d, {}); }

  int n() const { return n_; }
  int d() const { return d_; }
  const std::vector<FaceSet>& circuits() const { return circuits_; }
  std::size_t size() const { return circuits_.size(); }
  bool empty() const { return circuits_.empty(); }
  bool contains(FaceSet f) const;
  /// Union of all circuits.
  FaceSet support() const;

  auto begin() const { return circuits_.begin(); }
  auto end() const { return circuits_.end(); }

  /// Same ground set and dimension, different circuits.
  Clutter with_circuits(std::vector<FaceSet> circuits) const { return Clutter(n_, d_, std::move(circuits)); }

  friend bool operator==(const Clutter&, const Clutter&) = default;

 private:
  int n_ = 0;
  int d_ = 0;
  std::vector<FaceSet> circuits_;
};

/// An MS together with its degree.
struct MsDegree {
  FaceSet ms;
  int degree = 0;
};

/// MS(C): every d-subset of some circuit, canonically ordered.
std::vector<FaceSet> maximal_subcircuits(const Clutter& c);

/// Every MS with its degree, canonically ordered.
std::vector<MsDegree> ms_degrees(const Clutter& c);

/// Number of circuits containing e. Requires |e| = d.
int ms_degree(const Clutter& c, FaceSet e);

/// N[e] = e ∪ { v : e ∪ {v} ∈ C }. Requires |e| = d.
FaceSet closed_neighborhood(const Clutter& c, FaceSet e);

/// Every (d+1)-subset of A is a circuit (vacuous when |A| <= d).
bool is_clique(const Clutter& c, FaceSet a);

/// C - L: the circuits not containing L.
Clutter remove(const Clutter& c, FaceSet l);

/// { F ∈ C : F ⊆ A }.
Clutter induced_by_vertices(const Clutter& c, FaceSet a);

/// { F ∈ C : MS({F}) ⊆ M }. Every member of M must have cardinality d.
Clutter induced_by_ms(const Clutter& c, const std::vector<FaceSet>& ms);

/// The d-complement: all (d+1)-subsets of [n] not in C.
Clutter complement(const Clutter& c);

/// C^∨ = { [n] \ F : F ∈ complement(C) }, an (n-d-2)-dimensional clutter.
Clutter alexander_dual_clutter(const Clutter& c);

/// ⟨C⟩: the complex whose facets are the circuits.
SimplicialComplex facet_complex(const Clutter& c);

/// Δ(C): all cliques of C, stored by its maximal cliques.
SimplicialComplex clique_complex(const Clutter& c);

/// Strong components: classes of the transitive closure of "shares an MS",
/// each canonically ordered, listed by their least circuit.
std::vector<Clutter> strong_components(const Clutter& c);

bool is_strongly_connected(const Clutter& c);

}  // namespace chordlab
