#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "chordlab/clutter.hpp"

namespace chordlab {

/// A squarefree monomial ideal, stored by the supports of its minimal
/// generators. Divisibility is containment of supports.
class SquarefreeIdeal {
 public:
  SquarefreeIdeal() = default;
  /// Non-minimal supports are dropped, so the generators form an antichain.
  SquarefreeIdeal(int n, std::vector<FaceSet> generators);

  /// I(C), generated by the circuits.
  static SquarefreeIdeal circuit_ideal(const Clutter& c);
  /// I(C̄), generated by the circuits of the d-complement.
  static SquarefreeIdeal complement_ideal(const Clutter& c);

  int n() const { return n_; }
  const std::vector<FaceSet>& generators() const { return generators_; }
  std::size_t size() const { return generators_.size(); }
  bool is_zero() const { return generators_.empty(); }
  bool is_equigenerated() const;

  /// Whether the monomial with support u lies in the ideal.
  bool contains(FaceSet u) const;
  bool is_generator(FaceSet u) const;

  friend bool operator==(const SquarefreeIdeal&, const SquarefreeIdeal&) = default;

 private:
  int n_ = 0;
  std::vector<FaceSet> generators_;
};

/// An ordering of an ideal's generators, as indices into generators().
struct QuotientOrder {
  std::vector<std::size_t> indices;
  friend bool operator==(const QuotientOrder&, const QuotientOrder&) = default;
};

/// The combinatorial linear-quotient test on a sequence of supports: for all
/// j < i there are l ∈ F_j \ F_i and k < i with F_k \ F_i = {l}.
bool is_linear_quotient_sequence(std::span<const FaceSet> supports);

/// Throws InputError when `order` is not a permutation of the generators.
bool is_linear_quotient_order(const SquarefreeIdeal& ideal, const QuotientOrder& order);

std::vector<FaceSet> apply_order(const SquarefreeIdeal& ideal, const QuotientOrder& order);

inline constexpr std::size_t kLinearQuotientCap = 12;

/// Backtracking search for a linear-quotient order. Deterministic: returns the
/// first order found when generators are tried in canonical order. Requires
/// an equigenerated ideal; throws CapacityError above `cap` generators.
std::optional<QuotientOrder> find_linear_quotients(const SquarefreeIdeal& ideal,
                                                   std::size_t cap = kLinearQuotientCap);

/// Extends a linear-quotient order of an equigenerated ideal (generators of
/// size k) to one of the complete squarefree ideal in degree k, by appending
/// members of SMS′ of the residual complete k-clutter. Returns supports in
/// order. Throws InputError for an invalid order; CounterexampleAlert if no
/// extension exists.
std::vector<FaceSet> extend_order_to_complete(const SquarefreeIdeal& ideal, const QuotientOrder& order);

/// Vertex order used by the stability predicates; `reversed` reads vertex v as n-1-v.
enum class VertexOrder { natural, reversed };

/// For every generator F and j < max(F) outside F: (F \ max F) ∪ {j} ∈ I.
bool is_squarefree_stable(const SquarefreeIdeal& ideal, VertexOrder order = VertexOrder::natural);

/// For every generator F, i ∈ F and j < i outside F: (F \ i) ∪ {j} ∈ I.
bool is_squarefree_strongly_stable(const SquarefreeIdeal& ideal, VertexOrder order = VertexOrder::natural);

struct ExchangeFailure {
  FaceSet u;
  FaceSet v;
  int i = 0;
};

struct ExchangeResult {
  bool holds = true;
  bool symmetric_holds = true;
  /// First pair (u, v) and i ∈ u \ v without an exchange partner.
  std::optional<ExchangeFailure> failure;
};

/// Exchange property of the generator supports, plus the symmetric variant.
/// Throws InputError for a non-equigenerated ideal.
ExchangeResult polymatroidal_exchange(const SquarefreeIdeal& ideal);

bool is_polymatroidal(const SquarefreeIdeal& ideal);

/// Maximal independent sets of a graph (a 1-clutter), canonically ordered.
std::vector<FaceSet> maximal_independent_sets(const Clutter& graph);

struct VertexCoverIdeal {
  /// I_G, generated by the minimal vertex covers.
  SquarefreeIdeal ideal;
  /// All minimal vertex covers have the same size.
  bool unmixed = false;
};

VertexCoverIdeal vertex_cover_ideal(const Clutter& graph);

/// The graph G with I_G equal to `ideal`, if one exists.
std::optional<Clutter> graph_with_cover_ideal(const SquarefreeIdeal& ideal);

struct ConnectivitySms {
  enum class Status { found, empty_clutter, not_vertex_cover_ideal, not_strongly_connected };
  Status status = Status::found;
  std::optional<FaceSet> sms;
  std::optional<Clutter> graph;
};

/// When I(C̄) = I_G and the maximal independent sets of G form a strongly
/// connected clutter, builds an SMS of C from two maximal independent sets
/// sharing all but one vertex. Throws CounterexampleAlert if the recipe fails.
ConnectivitySms sms_from_strong_connectivity(const Clutter& c);

/// A not necessarily uniform clutter on a vertex set V ⊆ {0..n-1}.
class NonUniformClutter {
 public:
  NonUniformClutter() = default;
  /// Throws InputError unless the edges form an antichain inside `vertices`.
  NonUniformClutter(int n, std::vector<FaceSet> edges);
  NonUniformClutter(int n, FaceSet vertices, std::vector<FaceSet> edges);

  static NonUniformClutter from_clutter(const Clutter& c) { return NonUniformClutter(c.n(), c.circuits()); }

  int n() const { return n_; }
  FaceSet vertices() const { return vertices_; }
  const std::vector<FaceSet>& edges() const { return edges_; }

  friend bool operator==(const NonUniformClutter&, const NonUniformClutter&) = default;

 private:
  int n_ = 0;
  FaceSet vertices_;
  std::vector<FaceSet> edges_;
};

/// D / v: minimal elements of { F \ {v} }, with v leaving the vertex set.
NonUniformClutter contraction(const NonUniformClutter& d, int v);

/// D \ v: edges avoiding v, with v leaving the vertex set.
NonUniformClutter deletion(const NonUniformClutter& d, int v);

/// Vertices v such that any two distinct edges F1, F2 through v have an edge
/// F3 ⊆ (F1 ∪ F2) \ {v}.
FaceSet simplicial_vertex_set(const NonUniformClutter& d);

inline constexpr int kWChordalVertexCap = 8;

/// Every clutter reachable by deletions and contractions, with a nonempty
/// vertex set, has a simplicial vertex. Throws CapacityError above 8 vertices.
bool is_w_chordal(const NonUniformClutter& d);

}  // namespace chordlab
