#include "chordlab/clutter.hpp"

#include <algorithm>
#include <numeric>

#include "chordlab/errors.hpp"

namespace chordlab {

Clutter::Clutter(int n, int d, std::vector<FaceSet> circuits) : n_(n), d_(d), circuits_(std::move(circuits)) {
  if (n < 0 || n > kMaxVertices) throw CapacityError("at most 63 vertices are supported");
  if (d < -1) throw InputError("clutter dimension must be at least -1");
  const FaceSet ground = FaceSet::range(n);
  for (FaceSet f : circuits_) {
    if (f.size() != d + 1) throw InputError("circuit " + f.debug_string() + " does not have d+1 vertices");
    if (!f.subset_of(ground)) throw InputError("circuit outside the ground set");
  }
  canonicalize(circuits_);
}

Clutter Clutter::complete(int n, int d) {
  return Clutter(n, d, subsets_of_size(FaceSet::range(n), d + 1));
}

bool Clutter::contains(FaceSet f) const { return std::binary_search(circuits_.begin(), circuits_.end(), f); }

FaceSet Clutter::support() const {
  FaceSet s;
  for (FaceSet f : circuits_) s = s | f;
  return s;
}

namespace {

void require_ms_size(const Clutter& c, FaceSet e) {
  if (e.size() != c.d()) throw InputError("expected a set of cardinality d = " + std::to_string(c.d()));
}

/// All d-subsets of all circuits, with multiplicity, sorted.
std::vector<FaceSet> ms_multiset(const Clutter& c) {
  std::vector<FaceSet> all;
  all.reserve(c.size() * static_cast<std::size_t>(c.d() + 1));
  for (FaceSet f : c) f.for_each([&](int v) { all.push_back(f.without(v)); });
  std::sort(all.begin(), all.end());
  return all;
}

}  // namespace

std::vector<FaceSet> maximal_subcircuits(const Clutter& c) {
  auto all = ms_multiset(c);
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

std::vector<MsDegree> ms_degrees(const Clutter& c) {
  const auto all = ms_multiset(c);
  std::vector<MsDegree> out;
  for (std::size_t i = 0; i < all.size();) {
    std::size_t j = i;
    while (j < all.size() && all[j] == all[i]) ++j;
    out.push_back({all[i], static_cast<int>(j - i)});
    i = j;
  }
  return out;
}

int ms_degree(const Clutter& c, FaceSet e) {
  require_ms_size(c, e);
  return static_cast<int>(std::count_if(c.begin(), c.end(), [&](FaceSet f) { return e.subset_of(f); }));
}

FaceSet closed_neighborhood(const Clutter& c, FaceSet e) {
  require_ms_size(c, e);
  FaceSet n = e;
  for (FaceSet f : c) {
    if (e.subset_of(f)) n = n | f;
  }
  return n;
}

bool is_clique(const Clutter& c, FaceSet a) {
  if (a.size() <= c.d()) return true;
  const auto inside =
      static_cast<std::uint64_t>(std::count_if(c.begin(), c.end(), [&](FaceSet f) { return f.subset_of(a); }));
  return inside == binomial(a.size(), c.d() + 1);
}

Clutter remove(const Clutter& c, FaceSet l) {
  std::vector<FaceSet> kept;
  for (FaceSet f : c) {
    if (!l.subset_of(f)) kept.push_back(f);
  }
  return c.with_circuits(std::move(kept));
}

Clutter induced_by_vertices(const Clutter& c, FaceSet a) {
  std::vector<FaceSet> kept;
  for (FaceSet f : c) {
    if (f.subset_of(a)) kept.push_back(f);
  }
  return c.with_circuits(std::move(kept));
}

Clutter induced_by_ms(const Clutter& c, const std::vector<FaceSet>& ms) {
  std::vector<FaceSet> sorted = ms;
  for (FaceSet e : sorted) require_ms_size(c, e);
  canonicalize(sorted);
  std::vector<FaceSet> kept;
  for (FaceSet f : c) {
    bool all_in = true;
    f.for_each([&](int v) {
      if (all_in && !std::binary_search(sorted.begin(), sorted.end(), f.without(v))) all_in = false;
    });
    if (all_in) kept.push_back(f);
  }
  return c.with_circuits(std::move(kept));
}

Clutter complement(const Clutter& c) {
  std::vector<FaceSet> missing;
  for_each_subset_of_size(FaceSet::range(c.n()), c.d() + 1, [&](FaceSet s) {
    if (!c.contains(s)) missing.push_back(s);
  });
  return c.with_circuits(std::move(missing));
}

Clutter alexander_dual_clutter(const Clutter& c) {
  const FaceSet ground = FaceSet::range(c.n());
  std::vector<FaceSet> dual;
  for (FaceSet f : complement(c)) dual.push_back(ground - f);
  return Clutter(c.n(), c.n() - c.d() - 2, std::move(dual));
}

SimplicialComplex facet_complex(const Clutter& c) { return SimplicialComplex(c.n(), c.circuits()); }

namespace {

struct CliqueSearch {
  const Clutter& c;
  std::vector<FaceSet> maximal;

  // Adding v to the clique a keeps it a clique iff every d-subset of a plus v is a circuit.
  bool extends(FaceSet a, int v) const {
    if (a.size() < c.d()) return true;
    bool ok = true;
    for_each_subset_of_size(a, c.d(), [&](FaceSet s) {
      if (ok && !c.contains(s.with(v))) ok = false;
    });
    return ok;
  }

  void run(FaceSet a, int next) {
    bool is_maximal = true;
    for (int v = 0; v < c.n(); ++v) {
      if (a.contains(v) || !extends(a, v)) continue;
      is_maximal = false;
      if (v >= next) run(a.with(v), v + 1);
    }
    if (is_maximal) maximal.push_back(a);
  }
};

}  // namespace

SimplicialComplex clique_complex(const Clutter& c) {
  CliqueSearch search{c, {}};
  search.run(FaceSet{}, 0);
  return SimplicialComplex(c.n(), std::move(search.maximal));
}

std::vector<Clutter> strong_components(const Clutter& c) {
  const auto& circuits = c.circuits();
  std::vector<std::size_t> parent(circuits.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  std::vector<std::pair<FaceSet, std::size_t>> incidences;
  for (std::size_t i = 0; i < circuits.size(); ++i) {
    circuits[i].for_each([&](int v) { incidences.emplace_back(circuits[i].without(v), i); });
  }
  std::sort(incidences.begin(), incidences.end(), [](const auto& a, const auto& b) {
    return a.first < b.first || (a.first == b.first && a.second < b.second);
  });
  for (std::size_t k = 1; k < incidences.size(); ++k) {
    if (incidences[k].first == incidences[k - 1].first) {
      const auto a = find(incidences[k].second);
      const auto b = find(incidences[k - 1].second);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }

  // Roots are the least index of their class, so classes come out ordered.
  std::vector<std::vector<FaceSet>> groups(circuits.size());
  for (std::size_t i = 0; i < circuits.size(); ++i) groups[find(i)].push_back(circuits[i]);
  std::vector<Clutter> out;
  for (auto& g : groups) {
    if (!g.empty()) out.push_back(c.with_circuits(std::move(g)));
  }
  return out;
}

bool is_strongly_connected(const Clutter& c) { return strong_components(c).size() <= 1; }

}  // namespace chordlab
