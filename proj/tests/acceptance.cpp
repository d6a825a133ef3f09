// Acceptance run: one PASS/FAIL line per criterion, time limits pinned below.
#include "oracles.hpp"
#include "test_support.hpp"

#include <chordlab/canonical.hpp>
#include <chordlab/cli.hpp>
#include <chordlab/cycles.hpp>
#include <chordlab/harness.hpp>
#include <chordlab/homology.hpp>
#include <chordlab/ideal.hpp>
#include <chordlab/report.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

using namespace chordlab;
using namespace testing;

namespace {

/// Structured documents collected by each criterion, replayed by criterion 11.
std::map<std::string, std::string> g_documents;

struct Check {
  bool ok = true;
  std::ostringstream detail;
  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << " [failed: " << what << "]";
    }
  }
};

std::string verify_doc(const std::string& id, int n, int d, int workers, Check& ck, bool hunt = false) {
  RunOptions o{.workers = workers};
  auto r = hunt ? counterexample_search(id, n, d, o) : verify(id, n, d, o);
  ck.expect(r.pass && r.failures == 0, id + " " + std::to_string(n) + "," + std::to_string(d) + " passes");
  ck.detail << ' ' << id << '(' << n << ',' << d << ")=" << r.population;
  return report_to_json(r, false).dump();
}

void record(const std::string& key, const std::string& doc) { g_documents.emplace(key, doc); }

std::string analyze_doc(const std::string& name) {
  std::ostringstream out, err;
  run_cli({"analyze", "--json", data_path(name)}, out, err);
  return out.str();
}

std::vector<FaceSet> faces_of(const oracle::Family& f) {
  std::vector<FaceSet> out;
  for (const auto& s : f) {
    FaceSet x;
    for (int v : s) x = x.with(v);
    out.push_back(x);
  }
  canonicalize(out);
  return out;
}

void criterion1(Check& ck) {
  const Clutter c = pm();
  const auto sms = simplicial_ms_set(c);
  ck.expect(sms == sets1({"14", "15", "24", "25", "34", "35"}), "SMS is the six pairs");
  ck.expect(faces_of(oracle::sms(oracle::family(c), 5, 2)) == sms, "SMS matches the oracle");
  const auto cert = chordality(c);
  ck.expect(cert.chordal && verify_certificate(c, cert) && replays_to_empty(c, cert.sequence), "chordal witness replays");
  const std::vector<FaceSet> text_order{s1("14"), s1("34"), s1("24")};
  ck.expect(replays_to_empty(c, text_order), "sequence 14 34 24 replays");
  ck.expect(oracle::chordal(c), "oracle chordal");
  const auto ideal = SquarefreeIdeal::complement_ideal(c);
  ck.expect(is_polymatroidal(ideal), "polymatroidal");
  ck.expect(is_squarefree_stable(ideal), "stable");
  ck.expect(is_squarefree_strongly_stable(ideal), "strongly stable");
  const auto lq = find_linear_quotients(ideal);
  ck.expect(lq.has_value(), "linear quotients found");
  if (lq) {
    std::vector<oracle::Set> order;
    for (auto f : apply_order(ideal, *lq)) order.push_back(oracle::to_set(f));
    ck.expect(oracle::linear_quotients(order), "order passes the colon-ideal oracle");
  }
  ck.detail << " witness=" << LabelMap::one_based(5).format(cert.sequence);
  record("analyze pm", analyze_doc("pm.clutter"));
}

void criterion2(Check& ck) {
  const Clutter c = ex16();
  ck.expect(simplicial_ms_set(c).empty() && oracle::sms(oracle::family(c), 6, 2).empty(), "SMS empty");
  ck.expect(is_ci_cycle(c, CycleKind::c3), "C3-cycle");
  const auto c2 = ci_cycle(c, CycleKind::c2);
  ck.expect(!c2.is_cycle, "not a C2-cycle");
  auto ms = maximal_subcircuits(c);
  std::erase(ms, s0("12"));
  const Clutter named = induced_by_ms(c, ms);
  ck.expect(named == remove(c, s0("12")), "C-12 is MS-induced");
  ck.expect(!named.empty() && simplicial_ms_set(named).empty(), "SMS(C-12) empty");
  ck.expect(oracle::sms(oracle::family(named), 6, 2).empty(), "oracle SMS(C-12) empty");
  ck.expect(c2.witness && isomorphic(*c2.witness, named), "reported witness is C-12 up to symmetry");
  record("analyze ex16", analyze_doc("ex16.clutter"));
}

void criterion3(Check& ck) {
  const Clutter oct = octahedron();
  ck.expect(is_cf_cycle(oct), "octahedron CF-cycle");
  ck.expect(is_ci_cycle(oct, CycleKind::c1), "octahedron C1-cycle");
  ck.expect(simplicial_ms_set(oct).empty(), "octahedron SMS empty");

  const Clutter pp = fixture("oct-pp.clutter");
  bool any = false;
  for (std::uint64_t a = 1; a < 64; ++a) {
    const Clutter sub = induced_by_vertices(pp, FaceSet(a));
    if (sub.empty() || is_complete_small(sub)) continue;
    for (auto k : {CycleKind::c1, CycleKind::c2, CycleKind::c3}) any = any || is_ci_cycle(sub, k);
  }
  ck.expect(!any, "oct+345 has no vertex-induced non-complete Ci-cycle");
  ck.expect(!has_linear_resolution_z2(pp), "oct+345 linear resolution false");
  ck.expect(!is_chordal(pp) && !oracle::chordal(pp), "oct+345 not chordal");

  const Clutter p = fixture("oct-p.clutter");
  ck.expect(is_chordal(p) && oracle::chordal(p), "oct' chordal");
  ck.expect(has_linear_resolution_z2(p), "oct' linear resolution true");
  for (const char* f : {"oct.clutter", "oct-p.clutter", "oct-pp.clutter"}) record(std::string("analyze ") + f, analyze_doc(f));
}

void criterion4(Check& ck) {
  for (auto [n, d] : {std::pair{5, 2}, std::pair{6, 3}}) {
    RunOptions o{.workers = 1};
    auto r = verify("remark-3-10", n, d, o);
    ck.expect(r.pass && r.failures == 0, "remark-3-10 passes");
    ck.expect(r.enumerated == index_space_size(n, d), "whole index space enumerated");
    ck.detail << " (" << n << ',' << d << ") enumerated=" << r.enumerated << " chordal=" << r.population;
    record("remark-3-10 " + std::to_string(n), report_to_json(r, false).dump());
  }
}

void criterion5(Check& ck) {
  for (auto [n, d] : {std::pair{5, 2}, std::pair{6, 3}})
    record("cor-low-n " + std::to_string(n), verify_doc("cor-low-n", n, d, 1, ck));
  std::uint64_t trees = 0;
  for (const auto& c : collect_clutters({.n = 5, .d = 2}))
    if (!c.empty() && !oracle::has_cf_cycle_subclutter(c)) ++trees;
  ck.expect(trees == verify("cor-low-n", 5, 2).population, "population matches the oracle CF-tree count");
}

void criterion6(Check& ck) {
  for (const char* id : {"sqf-stable-chordal", "polymatroidal-sms", "ci-chain"})
    record(id, verify_doc(id, 5, 2, 1, ck));
}

void criterion7(Check& ck) {
  using clock = std::chrono::steady_clock;
  for (int workers : {1, 8}) {
    const auto t0 = clock::now();
    RunOptions o{.workers = workers};
    auto r = verify("cycle-size-bound", 6, 2, o);
    const double s = std::chrono::duration<double>(clock::now() - t0).count();
    const double limit = workers == 1 ? 600.0 : 120.0;
    ck.expect(r.pass && r.failures == 0, "cycle-size-bound passes");
    ck.expect(r.enumerated == (std::uint64_t{1} << 20), "2^20 clutters");
    ck.expect(s < limit, "within " + std::to_string(static_cast<int>(limit)) + " s at " + std::to_string(workers) + " workers");
    ck.detail << " workers=" << workers << ": " << s << " s, CF-cycles=" << r.population;
    record("cycle-size-bound w" + std::to_string(workers), report_to_json(r, false).dump());
  }
}

void criterion8(Check& ck) {
  std::uint64_t graphs = 0, disagreements = 0;
  for (int n = 2; n <= 6; ++n)
    for (const auto& g : collect_clutters({.n = n, .d = 1})) {
      ++graphs;
      const auto edges = oracle::edges_of(g);
      if (is_chordal(g) != oracle::graph_chordal(n, edges)) ++disagreements;
      const bool cyc = oracle::graph_is_cycle(n, edges);
      for (auto k : {CycleKind::c1, CycleKind::c2, CycleKind::c3})
        if (is_ci_cycle(g, k) != cyc) ++disagreements;
    }
  ck.expect(disagreements == 0, "no disagreements");
  ck.detail << " graphs=" << graphs << " disagreements=" << disagreements;
}

/// Deterministic sample of (6,2) clutters with at most 12 circuits.
std::vector<std::uint64_t> sample_indices() {
  std::mt19937_64 rng(20261016);
  std::vector<std::uint64_t> out;
  while (out.size() < 2000) {
    const std::uint64_t idx = rng() & ((std::uint64_t{1} << 20) - 1);
    if (std::popcount(idx) <= 12) out.push_back(idx);
  }
  return out;
}

void criterion9(Check& ck) {
  std::uint64_t checked = 0, disagreements = 0, trees = 0;
  auto compare = [&](const Clutter& c) {
    ++checked;
    const bool tree = is_cf_tree(c);
    trees += tree;
    if (tree == oracle::has_cf_cycle_subclutter(c)) ++disagreements;
  };
  for (const auto& c : collect_clutters({.n = 5, .d = 2})) compare(c);
  const auto universe = circuit_universe(6, 2);
  const auto indices = sample_indices();
  for (auto idx : indices) compare(clutter_from_index(6, 2, universe, idx));
  ck.expect(disagreements == 0, "no disagreements");
  ck.detail << " clutters=" << checked << " cf-trees=" << trees << " disagreements=" << disagreements;
  std::ostringstream doc;
  for (auto idx : indices) doc << idx << ',';
  record("criterion 9 sample", doc.str());
}

void criterion10(Check& ck) {
  RunOptions o{.workers = 1, .sequence_length = 4};
  auto r = verify("lq-sms-equivalence", 4, 1, o);
  ck.expect(r.pass && r.tallies["sets_equal"] == 1, "library sets equal");
  record("lq-sms-equivalence", report_to_json(r, false).dump());

  // Independent enumeration: SMS' by brute force, linear quotients via colon ideals.
  const int n = 4, d = 1;
  const auto elements = oracle::subsets(oracle::range(n), d);
  std::set<std::vector<oracle::Set>> by_sms, by_lq;
  std::vector<oracle::Set> seq;
  auto dfs = [&](auto&& self, const oracle::Family& current, bool sms_ok) -> void {
    for (const auto& e : elements) {
      if (std::find(seq.begin(), seq.end(), e) != seq.end()) continue;
      const auto ms = oracle::ms(current, d);
      const bool simplicial = !ms.count(e) || oracle::sms(current, n, d).count(e);
      seq.push_back(e);
      if (sms_ok && simplicial) by_sms.insert(seq);
      if (oracle::linear_quotients(seq)) by_lq.insert(seq);
      if (seq.size() < 4) self(self, oracle::remove(current, e), sms_ok && simplicial);
      seq.pop_back();
    }
  };
  dfs(dfs, oracle::family(Clutter::complete(n, d)), true);
  ck.expect(by_sms == by_lq, "oracle sets equal");
  ck.expect(by_sms.size() == r.tallies["sms_prime_sequences"], "oracle and library count the same SMS' sequences");
  ck.expect(by_lq.size() == r.tallies["linear_quotient_sequences"], "oracle and library count the same LQ prefixes");
  ck.detail << " sequences=" << by_sms.size();
}

void criterion11(Check& ck) {
  std::map<std::string, std::string> again;
  Check scratch;
  for (const char* f : {"pm.clutter", "ex16.clutter", "oct.clutter", "oct-p.clutter", "oct-pp.clutter"})
    again[std::string("analyze ") + f] = analyze_doc(f);
  again["analyze pm"] = again["analyze pm.clutter"];
  again["analyze ex16"] = again["analyze ex16.clutter"];
  for (int workers : {4, 2}) {
    const std::string w = std::to_string(workers);
    again["remark-3-10 5"] = verify_doc("remark-3-10", 5, 2, workers, scratch);
    again["remark-3-10 6"] = verify_doc("remark-3-10", 6, 3, workers, scratch);
    again["cor-low-n 5"] = verify_doc("cor-low-n", 5, 2, workers, scratch);
    again["cor-low-n 6"] = verify_doc("cor-low-n", 6, 3, workers, scratch);
    for (const char* id : {"sqf-stable-chordal", "polymatroidal-sms", "ci-chain"})
      again[id] = verify_doc(id, 5, 2, workers, scratch);
    again["lq-sms-equivalence"] = verify_doc("lq-sms-equivalence", 4, 1, workers, scratch);
    const std::string cs = verify_doc("cycle-size-bound", 6, 2, workers, scratch);
    again["cycle-size-bound w1"] = cs;
    again["cycle-size-bound w8"] = cs;
    std::ostringstream doc;
    for (auto idx : sample_indices()) doc << idx << ',';
    again["criterion 9 sample"] = doc.str();

    int compared = 0;
    for (const auto& [key, doc0] : g_documents) {
      auto it = again.find(key);
      if (it == again.end()) continue;
      ++compared;
      ck.expect(it->second == doc0, key + " identical at " + w + " workers");
    }
    ck.expect(compared == static_cast<int>(g_documents.size()), "every recorded document re-run");
    ck.detail << " workers=" << w << ": " << compared << " documents";
  }
  ck.expect(scratch.ok, "re-runs pass");
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<void(Check&)> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "fixture matrix {145,245,345}", 1.0, criterion1},
      {2, "example c3 not c2", 1.0, criterion2},
      {3, "octahedron suite", 5.0, criterion3},
      {4, "chordal implies linear resolution, (5,2) and (6,3)", 60.0, criterion4},
      {5, "CF-trees in low n have a free MS and are chordal", 60.0, criterion5},
      {6, "stable / polymatroidal / Ci chain on (5,2)", 120.0, criterion6},
      {7, "cycle size bound on (6,2)", 600.0, criterion7},
      {8, "graphs n <= 6 against classical recognition", 60.0, criterion8},
      {9, "CF-tree kernel test against subclutter search", 120.0, criterion9},
      {10, "SMS' sequences equal LQ prefixes on complete 1-clutter of [4]", 60.0, criterion10},
      {11, "determinism across repeats and worker counts", 600.0, criterion11},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Check ck;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.body(ck);
    } catch (const std::exception& e) {
      ck.expect(false, std::string("exception: ") + e.what());
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    ck.expect(s < c.limit_seconds, "time limit");
    failed += !ck.ok;
    std::printf("%s %2d %s (%.2f s, limit %.0f s)%s\n", ck.ok ? "PASS" : "FAIL", c.id, c.name, s, c.limit_seconds,
                ck.detail.str().c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
