#include "test_support.hpp"

#include <chordlab/canonical.hpp>
#include <chordlab/clutter_file.hpp>
#include <chordlab/cycles.hpp>
#include <chordlab/errors.hpp>
#include <chordlab/harness.hpp>
#include <chordlab/report.hpp>

#include <doctest.h>

#include <fstream>
#include <map>
#include <sstream>

using namespace chordlab;
using namespace testing;

namespace {

std::map<std::vector<FaceSet>, int> canonical_multiset(const EnumerationTask& base, std::uint64_t shards) {
  std::map<std::vector<FaceSet>, int> out;
  for (std::uint64_t i = 0; i < shards; ++i) {
    EnumerationTask t = base;
    t.shard = {i, shards};
    enumerate_clutters(t, [&](const Clutter& c, std::uint64_t) { ++out[canonical_form(c).circuits()]; });
  }
  return out;
}

EnumerationTask cf_tree_task(int n, int d) {
  EnumerationTask t{.n = n, .d = d};
  t.filters.push_back({"cf-tree", [](const Clutter& c) { return is_cf_tree(c); }});
  return t;
}

}  // namespace

TEST_CASE("enumeration counts") {
  CHECK(collect_clutters({.n = 5, .d = 2}).size() == 1024);
  CHECK(collect_clutters({.n = 4, .d = 1}).size() == 64);
  CHECK(index_space_size(6, 2) == (std::uint64_t{1} << 20));
  CHECK(circuit_universe(5, 2).size() == 10);
  auto u = circuit_universe(5, 2);
  CHECK(clutter_from_index(5, 2, u, 0).empty());
  CHECK(clutter_from_index(5, 2, u, 1023) == Clutter::complete(5, 2));
  CHECK_THROWS_AS(collect_clutters({.n = 7, .d = 2}), CapacityError);
  CHECK_THROWS_AS(index_space_size(12, 5), CapacityError);
}

TEST_CASE("shard ranges tile the index space") {
  for (std::uint64_t k : {1, 3, 7, 64}) {
    std::uint64_t next = 0;
    for (std::uint64_t i = 0; i < k; ++i) {
      auto [b, e] = shard_range(1000, {i, k});
      CHECK(b == next);
      next = e;
    }
    CHECK(next == 1000);
  }
  CHECK_THROWS_AS(shard_range(10, {3, 3}), InputError);
  CHECK_THROWS_AS(shard_range(10, {0, 0}), InputError);
}

TEST_CASE("sharding preserves the multiset of canonical forms") {
  EnumerationTask base{.n = 5, .d = 2};
  auto whole = canonical_multiset(base, 1);
  CHECK(whole == canonical_multiset(base, 4));
  CHECK(whole == canonical_multiset(base, 16));
  int total = 0;
  for (auto& [k, v] : whole) total += v;
  CHECK(total == 1024);
}

TEST_CASE("canonical dedup yields one representative per class") {
  EnumerationTask t{.n = 4, .d = 1, .dedup = Dedup::canonical};
  // Graphs on four vertices up to isomorphism.
  CHECK(collect_clutters(t).size() == 11);
}

TEST_CASE("pinned expectations") {
  std::ifstream in(data_path("../expectations.txt"));
  REQUIRE(in.good());
  std::string line;
  int checked = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    std::string id, verdict;
    int n = 0, d = 0;
    std::uint64_t population = 0;
    ss >> id >> n >> d >> verdict >> population;
    CAPTURE(line);
    if (verdict == "count") {
      auto t = cf_tree_task(n, d);
      if (id == "enum-cf-tree-canonical") t.dedup = Dedup::canonical;
      CHECK(collect_clutters(t).size() == population);
    } else {
      const bool hunt = id == "lq-implies-chordal" || id == "greedy-confluence";
      auto r = hunt ? counterexample_search(id, n, d) : verify(id, n, d);
      CHECK((r.pass ? "pass" : "fail") == verdict);
      CHECK(r.population == population);
    }
    ++checked;
  }
  CHECK(checked >= 20);
}

TEST_CASE("verify rejects bad requests") {
  CHECK_THROWS_AS(verify("no-such-theorem", 5, 2), InputError);
  CHECK_THROWS_AS(counterexample_search("no-such-property", 5, 2), InputError);
  CHECK_THROWS_AS(verify("cor-low-n", 7, 2), InputError);
  CHECK_THROWS_AS(verify("remark-3-10", 8, 3), CapacityError);
  CHECK(theorem_ids().size() == 13);
  CHECK(hunt_properties() == std::vector<std::string>{"greedy-confluence", "lq-implies-chordal"});
}

TEST_CASE("reports do not depend on worker or shard scheduling") {
  RunOptions one{.workers = 1};
  RunOptions four{.workers = 4};
  for (const char* id : {"ci-chain", "vdec-chordal-tree", "dual-equivalence"}) {
    CAPTURE(id);
    auto a = report_to_json(verify(id, 5, 2, one), false);
    auto b = report_to_json(verify(id, 5, 2, four), false);
    CHECK(a.dump() == b.dump());
  }
  RunOptions sharded{.workers = 3, .shards = 16};
  auto a = verify("remark-3-10", 5, 2, sharded);
  auto b = verify("remark-3-10", 5, 2, one);
  CHECK(a.population == b.population);
  CHECK(a.shards.size() == 16);
}

TEST_CASE("counterexamples replay through the file grammar") {
  VerificationReport r;
  r.kind = "verify";
  r.theorem_id = "synthetic";
  r.n = 6;
  r.d = 2;
  r.pass = false;
  r.failures = 1;
  r.counterexamples.push_back({17, fixture("oct-pp.clutter"), {}, "not chordal"});
  auto j = report_to_json(r, false);
  const auto& ex = j.at("counterexamples").at(0);
  CHECK(ex.at("index") == 17);
  auto replayed = parse_clutter(ex.at("replay").get<std::string>());
  CHECK(replayed.clutter == fixture("oct-pp.clutter"));
  CHECK(clutter_from_json(ex.at("clutter")) == fixture("oct-pp.clutter"));
  CHECK_FALSE(is_chordal(replayed.clutter));
  CHECK(j.at("verdict") == "fail");
  CHECK_FALSE(j.contains("wall_seconds"));
  CHECK(report_to_json(r, true).contains("wall_seconds"));
}

TEST_CASE("worker count from the environment") {
  CHECK(default_worker_count() >= 1);
  CHECK(default_shard_count(1024) == 1);
  CHECK(default_shard_count(std::uint64_t{1} << 20) == 64);
}
