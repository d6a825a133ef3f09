#include "chordlab/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <set>
#include <thread>

#include "chordlab/canonical.hpp"
#include "chordlab/cycles.hpp"
#include "chordlab/errors.hpp"
#include "chordlab/homology.hpp"
#include "chordlab/ideal.hpp"

namespace chordlab {

std::vector<FaceSet> circuit_universe(int n, int d) {
  if (n < 0 || n > kMaxVertices || d < -1) throw InputError("invalid enumeration bounds");
  return subsets_of_size(FaceSet::range(n), d + 1);
}

std::uint64_t index_space_size(int n, int d) {
  if (n < 0 || n > kMaxVertices || d < -1) throw InputError("invalid enumeration bounds");
  const std::uint64_t m = binomial(n, d + 1);
  if (m > 62) throw CapacityError("index space 2^" + std::to_string(m) + " is too large");
  return std::uint64_t{1} << m;
}

std::pair<std::uint64_t, std::uint64_t> shard_range(std::uint64_t total, const Shard& shard) {
  if (shard.count == 0 || shard.index >= shard.count) throw InputError("shard index must be below the shard count");
  if (shard.count > total) throw InputError("more shards than clutters");
  auto edge = [&](std::uint64_t i) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(total) * i / shard.count);
  };
  return {edge(shard.index), edge(shard.index + 1)};
}

Clutter clutter_from_index(int n, int d, const std::vector<FaceSet>& universe, std::uint64_t index) {
  std::vector<FaceSet> circuits;
  for (std::uint64_t b = index; b; b &= b - 1) circuits.push_back(universe[static_cast<std::size_t>(std::countr_zero(b))]);
  return Clutter(n, d, std::move(circuits));
}

void enumerate_clutters(const EnumerationTask& task,
                        const std::function<void(const Clutter&, std::uint64_t index)>& sink) {
  const std::uint64_t total = index_space_size(task.n, task.d);
  const auto [begin, end] = shard_range(total, task.shard);
  if (end - begin > (std::uint64_t{1} << kUnshardedCircuitCap))
    throw CapacityError("enumeration of " + std::to_string(end - begin) +
                        " clutters exceeds 2^24 per shard; use more shards");
  const auto universe = circuit_universe(task.n, task.d);
  for (std::uint64_t i = begin; i < end; ++i) {
    const Clutter c = clutter_from_index(task.n, task.d, universe, i);
    if (!std::all_of(task.filters.begin(), task.filters.end(), [&](const ClutterFilter& f) { return f.keep(c); }))
      continue;
    if (task.dedup == Dedup::canonical && canonical_form(c) != c) continue;
    sink(c, i);
  }
}

std::vector<Clutter> collect_clutters(const EnumerationTask& task) {
  std::vector<Clutter> out;
  enumerate_clutters(task, [&](const Clutter& c, std::uint64_t) { out.push_back(c); });
  return out;
}

int default_worker_count() {
  if (const char* env = std::getenv("CHORDLAB_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v <= 1024) return static_cast<int>(v);
  }
  return 1;
}

std::uint64_t default_shard_count(std::uint64_t total) {
  return std::clamp<std::uint64_t>(total >> 14, 1, 64);
}

namespace {

/// Per-shard accumulator; merged in shard order.
class Tally {
 public:
  explicit Tally(std::size_t max_examples) : max_examples_(max_examples) {}

  void count(const std::string& key, std::uint64_t by = 1) { tallies[key] += by; }
  void member() { ++population; }
  void fail(std::uint64_t index, const Clutter& c, std::string reason) {
    ++failures;
    if (examples.size() < max_examples_) examples.push_back({index, c, {}, std::move(reason)});
  }
  void fail_sequence(std::uint64_t index, std::vector<FaceSet> seq, std::string reason) {
    ++failures;
    if (examples.size() < max_examples_) examples.push_back({index, std::nullopt, std::move(seq), std::move(reason)});
  }

  std::uint64_t enumerated = 0;
  std::uint64_t population = 0;
  std::uint64_t failures = 0;
  std::map<std::string, std::uint64_t> tallies;
  std::vector<Counterexample> examples;

 private:
  std::size_t max_examples_;
};

using Evaluator = std::function<void(const Clutter&, std::uint64_t index, Tally&)>;

void merge_into(VerificationReport& report, const Tally& t, std::size_t max_examples) {
  report.enumerated += t.enumerated;
  report.population += t.population;
  report.failures += t.failures;
  for (const auto& [k, v] : t.tallies) report.tallies[k] += v;
  for (const auto& ex : t.examples)
    if (report.counterexamples.size() < max_examples) report.counterexamples.push_back(ex);
}

/// Sweeps every clutter of (n, d) through `eval`, shard-parallel, merging in
/// shard order. Returns the merged tally; shard summaries go into the report.
Tally run_sweep(int n, int d, const Evaluator& eval, const RunOptions& options, VerificationReport& report) {
  const std::uint64_t total = index_space_size(n, d);
  const std::uint64_t shard_count = options.shards ? *options.shards : default_shard_count(total);
  if (shard_count == 0) throw InputError("shard count must be positive");
  if (shard_count == 1 && binomial(n, d + 1) > kUnshardedCircuitCap)
    throw CapacityError("an unsharded sweep is capped at 2^24 clutters; pass a shard count");

  std::vector<Tally> results(shard_count, Tally(options.max_counterexamples));
  std::vector<std::pair<std::uint64_t, std::uint64_t>> ranges(shard_count);
  std::vector<std::exception_ptr> errors(shard_count);
  std::atomic<std::uint64_t> next{0};

  auto worker = [&] {
    for (std::uint64_t s; (s = next.fetch_add(1)) < shard_count;) {
      try {
        EnumerationTask task{n, d, {}, Dedup::none, Shard{s, shard_count}};
        ranges[s] = shard_range(total, task.shard);
        Tally& t = results[s];
        enumerate_clutters(task, [&](const Clutter& c, std::uint64_t index) {
          ++t.enumerated;
          try {
            eval(c, index, t);
          } catch (const CounterexampleAlert& alert) {
            t.fail(index, c, std::string("alert: ") + alert.what());
          }
        });
      } catch (...) {
        errors[s] = std::current_exception();
      }
    }
  };
  const int requested = options.workers > 0 ? options.workers : default_worker_count();
  const auto workers = static_cast<std::uint64_t>(std::min<std::uint64_t>(requested, shard_count));
  std::vector<std::thread> pool;
  for (std::uint64_t w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  Tally merged(options.max_counterexamples);
  const std::string label = std::to_string(n) + "," + std::to_string(d);
  for (std::uint64_t s = 0; s < shard_count; ++s) {
    const Tally& t = results[s];
    report.shards.push_back({label, s, ranges[s].first, ranges[s].second, t.population, t.failures});
    merged.enumerated += t.enumerated;
    merged.population += t.population;
    merged.failures += t.failures;
    for (const auto& [k, v] : t.tallies) merged.tallies[k] += v;
    for (const auto& ex : t.examples)
      if (merged.examples.size() < options.max_counterexamples) merged.examples.push_back(ex);
  }
  return merged;
}

bool has_free_ms(const Clutter& c) {
  const auto degrees = ms_degrees(c);
  return std::any_of(degrees.begin(), degrees.end(), [](const MsDegree& m) { return m.degree == 1; });
}

bool all_degrees_above_one(const Clutter& c) {
  const auto degrees = ms_degrees(c);
  return std::all_of(degrees.begin(), degrees.end(), [](const MsDegree& m) { return m.degree > 1; });
}

void require(bool ok, const std::string& what) {
  if (!ok) throw InputError(what);
}

// ---- theorem sweeps -------------------------------------------------------

void eval_cor_low_n(const Clutter& c, std::uint64_t index, Tally& t) {
  if (c.empty() || !is_cf_tree(c)) return;
  t.member();
  const bool free_ms = has_free_ms(c);
  const bool chordal = is_chordal(c);
  if (!free_ms) t.fail(index, c, "CF-tree without a free MS");
  else if (!chordal) t.fail(index, c, "CF-tree is not chordal");
  if (simplicial_ms_set(c) != free_ms_set(c)) t.fail(index, c, "CF-tree whose SMS set differs from its free MSs");
}

void eval_remark_3_10(const Clutter& c, std::uint64_t index, Tally& t) {
  if (!is_chordal(c)) return;
  t.member();
  if (!has_linear_resolution_z2(c)) t.fail(index, c, "chordal clutter without a Z2 linear resolution");
}

/// The least-extension MS: a_1 < ... chosen greedily inside some circuit.
FaceSet least_extension_ms(const Clutter& c) {
  FaceSet chosen;
  for (int i = 0; i < c.d(); ++i) {
    for (int v = 0; v < c.n(); ++v) {
      if (chosen.contains(v)) continue;
      const FaceSet next = chosen.with(v);
      if (std::any_of(c.begin(), c.end(), [&](FaceSet f) { return next.subset_of(f); })) {
        chosen = next;
        break;
      }
    }
  }
  return chosen;
}

void eval_sqf_stable(const Clutter& c, std::uint64_t index, Tally& t) {
  if (is_squarefree_strongly_stable(SquarefreeIdeal::circuit_ideal(c)) && !c.empty()) {
    t.count("strongly_stable_circuit_ideal");
    if (!is_chordal(c)) t.fail(index, c, "strongly stable I(C) but C is not chordal");
    if (!is_w_chordal(NonUniformClutter::from_clutter(c))) t.fail(index, c, "strongly stable I(C) but not W-chordal");
    if (!is_squarefree_strongly_stable(SquarefreeIdeal::complement_ideal(c), VertexOrder::reversed))
      t.fail(index, c, "strongly stable I(C) but I(C-bar) not strongly stable in reverse order");
  }
  if (!is_squarefree_stable(SquarefreeIdeal::complement_ideal(c))) return;
  t.member();
  Clutter current = c;
  while (!current.empty()) {
    const FaceSet e = least_extension_ms(current);
    if (!is_simplicial(current, e)) {
      t.fail(index, c, "least-extension MS is not simplicial");
      return;
    }
    current = remove(current, e);
    if (!is_squarefree_stable(SquarefreeIdeal::complement_ideal(current))) {
      t.fail(index, c, "residual complement ideal lost squarefree stability");
      return;
    }
  }
  if (!is_chordal(c)) t.fail(index, c, "squarefree stable I(C-bar) but C is not chordal");
}

void eval_polymatroidal(const Clutter& c, std::uint64_t index, Tally& t) {
  if (c.empty()) return;
  const auto ideal = SquarefreeIdeal::complement_ideal(c);
  if (!is_polymatroidal(ideal)) return;
  t.member();
  if (!has_simplicial_ms(c)) t.fail(index, c, "polymatroidal I(C-bar) but SMS(C) is empty");
  if (ideal.size() <= kLinearQuotientCap) {
    t.count("linear_quotients_checked");
    if (!find_linear_quotients(ideal)) t.fail(index, c, "polymatroidal ideal without linear quotients");
  }
}

void eval_ci_chain(const Clutter& c, std::uint64_t index, Tally& t) {
  if (c.empty()) return;
  t.member();
  const bool c2_hit = has_induced_noncomplete_ci_cycle(c, CycleKind::c2);
  const bool chordal = is_chordal(c);
  const bool c3_hit = has_induced_noncomplete_ci_cycle(c, CycleKind::c3);
  if (c2_hit) t.count("ms_induced_noncomplete_c2");
  if (chordal) t.count("chordal");
  if (c3_hit) t.count("vertex_induced_noncomplete_c3");
  if (!c2_hit && !chordal) t.fail(index, c, "no MS-induced non-complete C2-cycle yet not chordal");
  if (chordal && c3_hit) t.fail(index, c, "chordal yet has a vertex-induced non-complete C3-cycle");
}

void eval_cycle_size(const Clutter& c, std::uint64_t index, Tally& t) {
  if (!is_cf_cycle(c)) return;
  t.member();
  const std::size_t bound = static_cast<std::size_t>(c.d() + 2);
  if (c.size() < bound) t.fail(index, c, "CF-cycle with fewer than d+2 circuits");
  if (static_cast<std::size_t>(c.support().size()) < bound) t.fail(index, c, "CF-cycle on fewer than d+2 vertices");
}

void eval_deg2(const Clutter& c, std::uint64_t index, Tally& t) {
  if (c.empty() || !is_strongly_connected(c)) return;
  const auto degrees = ms_degrees(c);
  if (!std::all_of(degrees.begin(), degrees.end(), [](const MsDegree& m) { return m.degree == 2; })) return;
  t.member();
  if (!is_ci_cycle(c, CycleKind::c1)) t.fail(index, c, "all MS degrees 2 and strongly connected, yet not a C1-cycle");
}

void eval_boundary(const Clutter& c, std::uint64_t index, Tally& t) {
  const auto dec = boundary_clutter(c);
  if (dec.boundary.empty()) return;
  t.member();
  std::vector<FaceSet> united;
  for (const Clutter& comp : dec.components) {
    if (!is_cf_cycle(comp)) t.fail(index, c, "boundary component is not a CF-cycle");
    united.insert(united.end(), comp.begin(), comp.end());
  }
  canonicalize(united);
  if (united != dec.boundary.circuits()) t.fail(index, c, "boundary components do not partition the boundary");
}

void eval_vdec(const Clutter& c, std::uint64_t index, Tally& t) {
  if (c.empty()) return;
  const SimplicialComplex delta = facet_complex(c);
  if (!is_vertex_decomposable(delta)) return;
  t.member();
  if (!is_cf_tree(c)) t.fail(index, c, "vertex decomposable but not a CF-tree");
  if (!is_chordal(c)) t.fail(index, c, "vertex decomposable but not chordal");
  if (delta.is_simplex()) return;
  delta.vertices().for_each([&](int v) {
    if (!is_shedding_vertex(delta, v)) return;
    t.count("shedding_vertices");
    const Clutter minus_v = remove(c, FaceSet::singleton(v));
    if (!minus_v.empty() && facet_complex(minus_v) != delete_vertex(delta, v))
      t.fail(index, c, "deleting a shedding vertex changed the facets");
    bool leaf = false;
    for (FaceSet e : free_ms_set(c)) {
      if (!e.contains(v)) continue;
      const Clutter minus_e = remove(c, e);
      if (minus_e == minus_v ||
          (!minus_e.empty() && is_vertex_decomposable(facet_complex(minus_e)) &&
           is_shedding_vertex(facet_complex(minus_e), v))) {
        leaf = true;
        break;
      }
    }
    if (!leaf) t.fail(index, c, "no free MS through the shedding vertex " + std::to_string(v));
  });
}

void eval_trees_have_leaf(const Clutter& c, std::uint64_t index, Tally& t) {
  if (c.empty()) return;
  t.member();
  const bool tree = is_cf_tree(c);
  if (tree) {
    t.count("cf_trees");
    if (!is_chordal(c)) t.count("nonchordal_cf_trees");
    if (!has_free_ms(c)) t.count("cf_trees_without_free_ms");
    if (simplicial_ms_set(c) != free_ms_set(c)) t.fail(index, c, "CF-tree whose SMS set differs from its free MSs");
  }
  if (all_degrees_above_one(c)) {
    t.count("all_degrees_above_one");
    if (tree) t.count("all_degrees_above_one_without_cf_cycle");
  }
}

void eval_vertex_cover(const Clutter& c, std::uint64_t index, Tally& t) {
  if (c.empty()) return;
  const auto r = sms_from_strong_connectivity(c);
  if (r.graph) {
    t.count("vertex_cover_ideal");
    if (r.status == ConnectivitySms::Status::not_strongly_connected && has_linear_resolution_z2(c))
      t.fail(index, c, "I_G has a linear resolution but the independent sets are not strongly connected");
  }
  if (r.status == ConnectivitySms::Status::found) {
    t.member();
    if (!r.sms || !is_simplicial(c, *r.sms)) t.fail(index, c, "recipe output is not simplicial");
  }
  for (FaceSet e : maximal_subcircuits(c)) {
    const auto g = graph_with_cover_ideal(SquarefreeIdeal::complement_ideal(remove(c, e)));
    if (!g || !vertex_cover_ideal(*g).unmixed) continue;
    t.count("deleted_ms_vertex_cover_hits");
    if (c.n() != c.d() + 2 || g->size() != binomial(c.n(), 2))
      t.fail(index, c, "I(complement of C-e) is a vertex cover ideal off the n = d+2 complete case");
  }
}

// ---- jobs with their own structure ---------------------------------------

bool almost_complete_on(const Clutter& facets, FaceSet l) {
  int missing = 0;
  for_each_subset_of_size(l, facets.d() + 1, [&](FaceSet f) { missing += facets.contains(f) ? 0 : 1; });
  return missing == 1;
}

bool codim_one_complete(const Clutter& c) {
  return maximal_subcircuits(c).size() == binomial(c.n(), c.d());
}

/// Condition (b) of the dual characterization: over every A with
/// |A| >= n-d'+1, every k-cycle on A bounds facets of link(complement of A).
/// The k-cycles on A are spanned by boundaries of (k+1)-simplices on A.
bool link_cycles_bound(const Clutter& c) {
  const int n = c.n();
  const int dp = c.d();
  const SimplicialComplex delta = facet_complex(c);
  const FaceSet ground = FaceSet::range(n);
  for (int size = n - dp + 1; size <= n; ++size) {
    const int k = size - (n - dp + 1);
    bool ok = true;
    for_each_subset_of_size(ground, size, [&](FaceSet a) {
      if (!ok) return;
      const SimplicialComplex lk = link(delta, ground - a);
      for_each_subset_of_size(a, k + 2, [&](FaceSet s) {
        if (!ok) return;
        const auto cycle = subsets_of_size(s, k + 1);
        if (lk.dim() != k + 1 || !is_boundary_of_facets(lk, cycle)) ok = false;
      });
    });
    if (!ok) return false;
  }
  return true;
}

void run_dual(int n, int d, const RunOptions& options, VerificationReport& report) {
  require(d >= 0 && d <= n - 2, "dual-equivalence needs 0 <= d <= n-2");
  const int dp = n - d - 2;
  report.notes.push_back("side (1): every " + std::to_string(d) + "-dimensional CF-tree on [n] is chordal");
  report.notes.push_back("side (2): every non-complete, codimension-one-complete, " + std::to_string(dp) +
                         "-dimensional Z2-CM complex has a set L of size " + std::to_string(dp + 2) +
                         " on which it misses exactly one top face");
  const Tally side1 = run_sweep(
      n, d,
      [](const Clutter& c, std::uint64_t, Tally& t) {
        if (c.empty() || !is_cf_tree(c)) return;
        t.count("side1_cf_trees");
        if (!is_chordal(c)) t.count("side1_nonchordal_cf_trees");
      },
      options, report);
  const bool check_b = n <= 6;
  const Tally side2 = run_sweep(
      n, dp,
      [&](const Clutter& c, std::uint64_t index, Tally& t) {
        if (c.empty() || !codim_one_complete(c) || c.size() == binomial(n, dp + 1)) return;
        t.count("side2_candidates");
        const bool cm = is_cohen_macaulay_z2(facet_complex(c));
        if (check_b && cm != link_cycles_bound(c)) t.fail(index, c, "Reisner test disagrees with link-cycle bounding");
        if (!cm) return;
        t.member();
        t.count("side2_cm_complexes");
        bool has_l = false;
        for_each_subset_of_size(FaceSet::range(n), dp + 2, [&](FaceSet l) { has_l = has_l || almost_complete_on(c, l); });
        if (!has_l) t.count("side2_cm_without_l");
        const Clutter dual = alexander_dual_clutter(c);
        if (!is_cf_tree(dual)) t.fail(index, c, "Alexander dual of a CM complex is not a CF-tree");
        if (has_l != has_free_ms(dual)) t.fail(index, c, "almost-complete restriction disagrees with a free MS of the dual");
      },
      options, report);
  merge_into(report, side1, options.max_counterexamples);
  merge_into(report, side2, options.max_counterexamples);
  report.population = side2.population;
  const bool s1 = report.tallies["side1_nonchordal_cf_trees"] == 0;
  const bool s2 = report.tallies["side2_cm_without_l"] == 0;
  report.tallies["side1_holds"] = s1;
  report.tallies["side2_holds"] = s2;
  if (check_b) report.notes.push_back("condition (b) compared with the Reisner test on every candidate");
  if (s1 != s2) {
    ++report.failures;
    report.notes.push_back("the two sides disagree");
  }
}

void run_trees_have_leaf(int n, int d, const RunOptions& options, VerificationReport& report) {
  const Tally t = run_sweep(n, d, eval_trees_have_leaf, options, report);
  merge_into(report, t, options.max_counterexamples);
  const bool s1 = report.tallies["nonchordal_cf_trees"] == 0;
  const bool s2 = report.tallies["cf_trees_without_free_ms"] == 0;
  const bool s3 = report.tallies["all_degrees_above_one_without_cf_cycle"] == 0;
  report.tallies["statement1_holds"] = s1;
  report.tallies["statement2_holds"] = s2;
  report.tallies["statement3_holds"] = s3;
  if (s1 != s2 || s2 != s3) {
    ++report.failures;
    report.notes.push_back("the three equivalent statements disagree");
  }
}

std::uint64_t sequence_count(std::uint64_t m, int length) {
  std::uint64_t total = 0;
  std::uint64_t term = 1;
  for (int l = 1; l <= length && static_cast<std::uint64_t>(l) <= m; ++l) {
    term *= m - static_cast<std::uint64_t>(l) + 1;
    total += term;
    if (total > 50'000'000) return total;
  }
  return total;
}

void run_lq_sms(int n, int d, const RunOptions& options, VerificationReport& report) {
  require(d >= 1 && d <= n, "lq-sms-equivalence needs 1 <= d <= n");
  const int length = options.sequence_length;
  require(length >= 1, "sequence length must be positive");
  const auto elements = subsets_of_size(FaceSet::range(n), d);
  if (sequence_count(elements.size(), length) > 50'000'000)
    throw CapacityError("lq-sms-equivalence is capped at 5e7 sequences");
  const Clutter complete = Clutter::complete(n, d);

  std::set<std::vector<FaceSet>> by_sms;
  std::set<std::vector<FaceSet>> by_lq;
  Tally t(options.max_counterexamples);
  std::vector<FaceSet> seq;
  std::vector<bool> used(elements.size(), false);
  std::uint64_t index = 0;
  // Both predicates are prefix-closed, so every prefix is enumerated and tested.
  auto dfs = [&](auto&& self, const Clutter& current, bool sms_ok) -> void {
    for (std::size_t i = 0; i < elements.size(); ++i) {
      if (used[i]) continue;
      const FaceSet e = elements[i];
      const bool next_sms = sms_ok && is_simplicial(current, e, SmsMode::with_degree_zero);
      seq.push_back(e);
      used[i] = true;
      const bool lq = is_linear_quotient_sequence(seq);
      ++t.enumerated;
      t.member();
      if (next_sms) by_sms.insert(seq);
      if (lq) by_lq.insert(seq);
      if (next_sms != lq) t.fail_sequence(index, seq, next_sms ? "SMS' sequence is not a linear-quotient order"
                                                               : "linear-quotient order is not an SMS' sequence");
      ++index;
      if (static_cast<int>(seq.size()) < length) self(self, remove(current, e), next_sms);
      used[i] = false;
      seq.pop_back();
    }
  };
  dfs(dfs, complete, true);
  merge_into(report, t, options.max_counterexamples);
  report.tallies["sms_prime_sequences"] = by_sms.size();
  report.tallies["linear_quotient_sequences"] = by_lq.size();
  report.tallies["sets_equal"] = by_sms == by_lq;
  report.shards.push_back({std::to_string(n) + "," + std::to_string(d), 0, 0, index, t.population, t.failures});
  if (by_sms != by_lq && report.failures == 0) ++report.failures;
}

struct SweepJob {
  const char* id;
  Evaluator eval;
};

const std::vector<SweepJob>& sweep_jobs() {
  static const std::vector<SweepJob> jobs = {
      {"cor-low-n", eval_cor_low_n},
      {"remark-3-10", eval_remark_3_10},
      {"sqf-stable-chordal", eval_sqf_stable},
      {"polymatroidal-sms", eval_polymatroidal},
      {"ci-chain", eval_ci_chain},
      {"cycle-size-bound", eval_cycle_size},
      {"deg2-c1", eval_deg2},
      {"boundary-decomposition", eval_boundary},
      {"vdec-chordal-tree", eval_vdec},
      {"vertex-cover-sms", eval_vertex_cover},
  };
  return jobs;
}

void finish(VerificationReport& report, std::chrono::steady_clock::time_point start) {
  report.pass = report.failures == 0;
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

std::vector<std::string> theorem_ids() {
  std::vector<std::string> ids;
  for (const auto& job : sweep_jobs()) ids.emplace_back(job.id);
  ids.emplace_back("lq-sms-equivalence");
  ids.emplace_back("dual-equivalence");
  ids.emplace_back("trees-have-leaf-equiv");
  std::sort(ids.begin(), ids.end());
  return ids;
}

std::vector<std::string> hunt_properties() { return {"greedy-confluence", "lq-implies-chordal"}; }

VerificationReport verify(const std::string& theorem_id, int n, int d, const RunOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  require(n >= 1 && n <= kMaxVertices && d >= 0 && d < n, "need 1 <= n <= 63 and 0 <= d < n");
  VerificationReport report;
  report.kind = "verify";
  report.theorem_id = theorem_id;
  report.n = n;
  report.d = d;

  if (theorem_id == "lq-sms-equivalence") {
    run_lq_sms(n, d, options, report);
  } else if (theorem_id == "dual-equivalence") {
    run_dual(n, d, options, report);
  } else if (theorem_id == "trees-have-leaf-equiv") {
    run_trees_have_leaf(n, d, options, report);
  } else {
    const auto& jobs = sweep_jobs();
    const auto it = std::find_if(jobs.begin(), jobs.end(), [&](const SweepJob& j) { return theorem_id == j.id; });
    if (it == jobs.end()) throw InputError("unknown theorem id '" + theorem_id + "'");
    if (theorem_id == "cor-low-n") require(n <= d + 3, "cor-low-n needs n <= d+3");
    if (theorem_id == "boundary-decomposition") require(d >= 1, "boundary-decomposition needs d >= 1");
    if (theorem_id == "sqf-stable-chordal") require(n <= kWChordalVertexCap, "sqf-stable-chordal needs n <= 8");
    merge_into(report, run_sweep(n, d, it->eval, options, report), options.max_counterexamples);
  }
  finish(report, start);
  return report;
}

VerificationReport counterexample_search(const std::string& property, int n, int d, const RunOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  require(n >= 1 && n <= kMaxVertices && d >= 0 && d < n, "need 1 <= n <= 63 and 0 <= d < n");
  VerificationReport report;
  report.kind = "hunt";
  report.theorem_id = property;
  report.n = n;
  report.d = d;
  Evaluator eval;
  if (property == "lq-implies-chordal") {
    eval = [](const Clutter& c, std::uint64_t index, Tally& t) {
      const auto ideal = SquarefreeIdeal::complement_ideal(c);
      if (ideal.size() > kLinearQuotientCap) {
        t.count(has_linear_resolution_z2(c) ? "beyond_cap_undetermined" : "beyond_cap_no_linear_resolution");
        return;
      }
      const auto order = find_linear_quotients(ideal);
      if (!order) {
        t.count("without_linear_quotients");
        return;
      }
      t.member();
      if (is_chordal(c)) return;
      // Triple check before reporting.
      std::string reason = "linear quotients but not chordal";
      if (!is_linear_quotient_order(ideal, *order)) reason += "; order failed re-validation";
      if (chordality(c, ChordalityMode::exhaustive).chordal) reason += "; exhaustive re-run disagrees";
      if (!has_linear_resolution_z2(c)) reason += "; Z2 resolution oracle disagrees";
      t.fail(index, c, reason);
    };
  } else if (property == "greedy-confluence") {
    eval = [](const Clutter& c, std::uint64_t index, Tally& t) {
      const auto exhaustive = chordality(c, ChordalityMode::exhaustive);
      if (!exhaustive.chordal) return;
      t.member();
      const auto greedy = chordality(c, ChordalityMode::greedy);
      if (!greedy.chordal) t.fail(index, c, "greedy deletion gets stuck on a chordal clutter");
    };
  } else {
    throw InputError("unknown hunt property '" + property + "'");
  }
  merge_into(report, run_sweep(n, d, eval, options, report), options.max_counterexamples);
  finish(report, start);
  return report;
}

}  // namespace chordlab
