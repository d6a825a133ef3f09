#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chordlab/clutter.hpp"

namespace chordlab {

/// Contiguous slice `index` of `count` equal slices of the enumeration index space.
struct Shard {
  std::uint64_t index = 0;
  std::uint64_t count = 1;
};

enum class Dedup { none, canonical };

struct ClutterFilter {
  std::string name;
  std::function<bool(const Clutter&)> keep;
};

/// Clutters on [n] of dimension d are indexed by bitmasks over the canonical
/// list of all (d+1)-subsets; bit i selects the i-th subset.
struct EnumerationTask {
  int n = 0;
  int d = 0;
  std::vector<ClutterFilter> filters;
  Dedup dedup = Dedup::none;
  Shard shard;
};

/// An unsharded index space may hold at most 2^24 clutters; so may each shard.
inline constexpr int kUnshardedCircuitCap = 24;

/// All (d+1)-subsets of [n], canonically ordered.
std::vector<FaceSet> circuit_universe(int n, int d);

/// Size of the index space, 2^C(n, d+1). Throws CapacityError if it exceeds 2^62.
std::uint64_t index_space_size(int n, int d);

/// Half-open index range covered by a shard. Throws InputError for a bad shard.
std::pair<std::uint64_t, std::uint64_t> shard_range(std::uint64_t total, const Shard& shard);

Clutter clutter_from_index(int n, int d, const std::vector<FaceSet>& universe, std::uint64_t index);

/// Streams every clutter of the task's shard that passes all filters, in index
/// order. With canonical dedup only clutters equal to their canonical form are
/// yielded. Throws CapacityError when the shard exceeds 2^24 clutters.
void enumerate_clutters(const EnumerationTask& task,
                        const std::function<void(const Clutter&, std::uint64_t index)>& sink);

std::vector<Clutter> collect_clutters(const EnumerationTask& task);

struct Counterexample {
  std::uint64_t index = 0;
  std::optional<Clutter> clutter;
  /// Sequence witnesses (deletion or generator orders) for non-clutter jobs.
  std::vector<FaceSet> sequence;
  std::string reason;
};

struct ShardSummary {
  /// Which sweep of the job the shard belongs to, e.g. "5,2".
  std::string sweep;
  std::uint64_t index = 0;
  std::uint64_t begin = 0;
  std::uint64_t end = 0;
  std::uint64_t population = 0;
  std::uint64_t failures = 0;
};

struct VerificationReport {
  std::string kind;  // "verify" or "hunt"
  std::string theorem_id;
  int n = 0;
  int d = 0;
  std::uint64_t enumerated = 0;
  std::uint64_t population = 0;
  std::uint64_t failures = 0;
  bool pass = true;
  /// The first failures in index order, at most RunOptions::max_counterexamples.
  std::vector<Counterexample> counterexamples;
  std::map<std::string, std::uint64_t> tallies;
  std::vector<ShardSummary> shards;
  std::vector<std::string> notes;
  double wall_seconds = 0;
};

struct RunOptions {
  /// 0 picks default_worker_count().
  int workers = 0;
  /// Shard count; by default a fixed function of the index-space size, so
  /// results never depend on the worker count.
  std::optional<std::uint64_t> shards;
  std::size_t max_counterexamples = 10;
  /// Sequence length for lq-sms-equivalence.
  int sequence_length = 4;
};

/// Reads CHORDLAB_WORKERS; 1 when unset or invalid.
int default_worker_count();

std::uint64_t default_shard_count(std::uint64_t total);

std::vector<std::string> theorem_ids();
std::vector<std::string> hunt_properties();

/// Runs a named theorem sweep. Unknown ids and out-of-range parameters are
/// InputErrors; oversized sweeps are CapacityErrors.
VerificationReport verify(const std::string& theorem_id, int n, int d, const RunOptions& options = {});

/// Exhaustive search for counterexamples to an open implication
/// ("lq-implies-chordal") or for non-confluent greedy runs ("greedy-confluence").
VerificationReport counterexample_search(const std::string& property, int n, int d, const RunOptions& options = {});

}  // namespace chordlab
