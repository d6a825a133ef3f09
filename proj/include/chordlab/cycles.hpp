#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "chordlab/clutter.hpp"

namespace chordlab {

/// Whether d-subsets of degree zero count as simplicial (the SMS′ variant).
enum class SmsMode { strict, with_degree_zero };

/// SMS(C): MSs whose closed neighborhood is a clique. With
/// SmsMode::with_degree_zero every d-subset of [n] outside MS(C) is included too.
std::vector<FaceSet> simplicial_ms_set(const Clutter& c, SmsMode mode = SmsMode::strict);

/// Whether e (|e| = d) is simplicial in C; degree-zero sets only under SMS′.
bool is_simplicial(const Clutter& c, FaceSet e, SmsMode mode = SmsMode::strict);

/// Early-exit test for SMS(C) ≠ ∅.
bool has_simplicial_ms(const Clutter& c);

/// MSs of degree exactly one.
std::vector<FaceSet> free_ms_set(const Clutter& c);

enum class ChordalityMode { greedy, exhaustive };

struct ChordalityCertificate {
  bool chordal = false;
  /// False only for a greedy run that got stuck: greedy is not assumed confluent.
  bool conclusive = true;
  /// SMS deletion sequence emptying the clutter (when chordal).
  std::vector<FaceSet> sequence;
  /// A nonempty clutter with empty SMS reached by SMS deletions (when not chordal).
  std::optional<Clutter> stuck_witness;
  /// Distinct residual clutters visited.
  std::size_t states_explored = 0;
};

/// Decides chordality. Greedy deletes the least SMS repeatedly; exhaustive
/// backtracks over all SMS choices, memoized on the residual circuit set.
ChordalityCertificate chordality(const Clutter& c, ChordalityMode mode = ChordalityMode::exhaustive);

bool is_chordal(const Clutter& c);

/// Replays `sequence` from C, re-checking simpliciality at every step. True
/// iff every step deletes an SMS of the current residue and the residue ends empty.
bool replays_to_empty(const Clutter& c, std::span<const FaceSet> sequence);

/// Re-verifies every claim a certificate makes.
bool verify_certificate(const Clutter& c, const ChordalityCertificate& cert);

/// Nonempty, strongly connected and every MS has even degree.
bool is_cf_cycle(const Clutter& c);

/// No subclutter is a CF-cycle, decided by a trivial kernel of the top
/// boundary map of ⟨C⟩ over GF(2). The empty clutter is a CF-tree.
bool is_cf_tree(const Clutter& c);

struct BoundaryDecomposition {
  /// ∂(C): odd-degree MSs, as a (d-1)-clutter.
  Clutter boundary;
  /// Strong components of ∂(C).
  std::vector<Clutter> components;
};

/// Requires d >= 1.
BoundaryDecomposition boundary_clutter(const Clutter& c);

/// Subclutter family searched by the cycle notions.
enum class CycleKind { c1 = 1, c2 = 2, c3 = 3 };

/// Size cap for the subset enumerations behind the Ci-cycle tests.
inline constexpr std::size_t kCiEnumerationCap = 22;

/// Complete clutter whose support has exactly d+2 vertices.
bool is_complete_small(const Clutter& c);

struct CiCycleResult {
  bool is_cycle = false;
  bool complete_small = false;
  bool sms_empty = false;
  /// When SMS(C) = ∅ but C is not a cycle: a proper nonempty subclutter of the
  /// searched family whose SMS is empty.
  std::optional<Clutter> witness;
};

/// Ci-cycle test. Throws CapacityError when the enumeration exceeds the cap
/// (|C| for C1, |MS(C)| for C2, |support| for C3).
CiCycleResult ci_cycle(const Clutter& c, CycleKind kind);

bool is_ci_cycle(const Clutter& c, CycleKind kind);

struct CycleClassification {
  bool cf_cycle = false;
  bool complete_small = false;
  bool sms_empty = false;
  bool c1 = false;
  bool c2 = false;
  bool c3 = false;
  std::optional<Clutter> c1_witness;
  std::optional<Clutter> c2_witness;
  std::optional<Clutter> c3_witness;
};

CycleClassification classify_cycles(const Clutter& c);

/// A nonempty MS-induced (c2) or vertex-induced (c3) subclutter with empty
/// SMS, the least one in enumeration order, if any. Such a subclutter exists
/// iff some induced subclutter of that kind is a non-complete Ci-cycle.
std::optional<Clutter> find_induced_sms_free(const Clutter& c, CycleKind kind);

/// kind must be c2 or c3.
bool has_induced_noncomplete_ci_cycle(const Clutter& c, CycleKind kind);

}  // namespace chordlab
