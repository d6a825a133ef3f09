#include "chordlab/ideal.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "chordlab/cycles.hpp"
#include "chordlab/errors.hpp"

namespace chordlab {

SquarefreeIdeal::SquarefreeIdeal(int n, std::vector<FaceSet> generators) : n_(n) {
  if (n < 0 || n > kMaxVertices) throw InputError("vertex count out of range: " + std::to_string(n));
  const FaceSet ground = FaceSet::range(n);
  for (FaceSet g : generators)
    if (!g.subset_of(ground)) throw InputError("generator outside the ground set");
  generators_ = minimal_elements(std::move(generators));
}

SquarefreeIdeal SquarefreeIdeal::circuit_ideal(const Clutter& c) { return SquarefreeIdeal(c.n(), c.circuits()); }

SquarefreeIdeal SquarefreeIdeal::complement_ideal(const Clutter& c) {
  return SquarefreeIdeal(c.n(), complement(c).circuits());
}

bool SquarefreeIdeal::is_equigenerated() const {
  return std::all_of(generators_.begin(), generators_.end(),
                     [&](FaceSet g) { return g.size() == generators_.front().size(); });
}

bool SquarefreeIdeal::contains(FaceSet u) const {
  return std::any_of(generators_.begin(), generators_.end(), [&](FaceSet g) { return g.subset_of(u); });
}

bool SquarefreeIdeal::is_generator(FaceSet u) const {
  return std::binary_search(generators_.begin(), generators_.end(), u);
}

namespace {

// Union of the singletons F_k \ F for k in `prefix`.
FaceSet singleton_differences(std::span<const FaceSet> prefix, FaceSet f) {
  FaceSet s;
  for (FaceSet p : prefix) {
    const FaceSet diff = p - f;
    if (diff.size() == 1) s = s | diff;
  }
  return s;
}

bool appendable(std::span<const FaceSet> prefix, FaceSet f) {
  const FaceSet s = singleton_differences(prefix, f);
  return std::all_of(prefix.begin(), prefix.end(), [&](FaceSet p) { return (p - f).intersects(s); });
}

void check_permutation(const SquarefreeIdeal& ideal, const QuotientOrder& order) {
  if (order.indices.size() != ideal.size()) throw InputError("order length differs from the generator count");
  std::vector<bool> seen(ideal.size(), false);
  for (std::size_t i : order.indices) {
    if (i >= ideal.size() || seen[i]) throw InputError("order is not a permutation of the generators");
    seen[i] = true;
  }
}

}  // namespace

bool is_linear_quotient_sequence(std::span<const FaceSet> supports) {
  for (std::size_t i = 1; i < supports.size(); ++i)
    if (!appendable(supports.first(i), supports[i])) return false;
  return true;
}

std::vector<FaceSet> apply_order(const SquarefreeIdeal& ideal, const QuotientOrder& order) {
  check_permutation(ideal, order);
  std::vector<FaceSet> out;
  out.reserve(order.indices.size());
  for (std::size_t i : order.indices) out.push_back(ideal.generators()[i]);
  return out;
}

bool is_linear_quotient_order(const SquarefreeIdeal& ideal, const QuotientOrder& order) {
  return is_linear_quotient_sequence(apply_order(ideal, order));
}

std::optional<QuotientOrder> find_linear_quotients(const SquarefreeIdeal& ideal, std::size_t cap) {
  if (!ideal.is_equigenerated()) throw InputError("linear-quotient search needs an equigenerated ideal");
  const std::size_t m = ideal.size();
  if (m > cap || m > 63)
    throw CapacityError("linear-quotient search is capped at " + std::to_string(cap) + " generators, got " +
                        std::to_string(m));
  const auto& gens = ideal.generators();
  const std::uint64_t full = m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;

  std::unordered_set<std::uint64_t> failed;
  std::vector<FaceSet> prefix;
  QuotientOrder order;

  auto dfs = [&](auto&& self, std::uint64_t chosen) -> bool {
    if (chosen == full) return true;
    if (failed.contains(chosen)) return false;
    for (std::size_t g = 0; g < m; ++g) {
      if (chosen >> g & 1) continue;
      if (!appendable(prefix, gens[g])) continue;
      prefix.push_back(gens[g]);
      order.indices.push_back(g);
      if (self(self, chosen | std::uint64_t{1} << g)) return true;
      prefix.pop_back();
      order.indices.pop_back();
    }
    failed.insert(chosen);
    return false;
  };
  if (!dfs(dfs, 0)) return std::nullopt;
  return order;
}

std::vector<FaceSet> extend_order_to_complete(const SquarefreeIdeal& ideal, const QuotientOrder& order) {
  std::vector<FaceSet> seq = apply_order(ideal, order);
  if (!ideal.is_equigenerated()) throw InputError("order extension needs an equigenerated ideal");
  if (!is_linear_quotient_sequence(seq)) throw InputError("input order is not a linear-quotient order");
  if (ideal.is_zero()) throw InputError("order extension needs a nonzero ideal");

  const int n = ideal.n();
  const int k = ideal.generators().front().size();
  const std::vector<FaceSet> all = subsets_of_size(FaceSet::range(n), k);
  if (seq.size() == all.size()) return seq;

  std::unordered_map<FaceSet, std::size_t> index;
  for (std::size_t i = 0; i < all.size(); ++i) index.emplace(all[i], i);
  std::vector<std::uint64_t> used((all.size() + 63) / 64, 0);
  auto mark = [&](FaceSet e, bool on) {
    const std::size_t i = index.at(e);
    if (on)
      used[i / 64] |= std::uint64_t{1} << (i % 64);
    else
      used[i / 64] &= ~(std::uint64_t{1} << (i % 64));
  };
  auto is_used = [&](std::size_t i) { return (used[i / 64] >> (i % 64) & 1) != 0; };

  Clutter residual = Clutter::complete(n, k);
  for (FaceSet e : seq) {
    mark(e, true);
    residual = remove(residual, e);
  }

  struct VectorHash {
    std::size_t operator()(const std::vector<std::uint64_t>& v) const {
      std::uint64_t h = 1469598103934665603ull;
      for (std::uint64_t w : v) h = (h ^ w) * 1099511628211ull;
      return static_cast<std::size_t>(h);
    }
  };
  std::unordered_set<std::vector<std::uint64_t>, VectorHash> failed;

  auto dfs = [&](auto&& self, const Clutter& current) -> bool {
    if (seq.size() == all.size()) return true;
    if (failed.contains(used)) return false;
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (is_used(i) || !is_simplicial(current, all[i], SmsMode::with_degree_zero)) continue;
      seq.push_back(all[i]);
      mark(all[i], true);
      if (self(self, remove(current, all[i]))) return true;
      mark(all[i], false);
      seq.pop_back();
    }
    failed.insert(used);
    return false;
  };
  if (!dfs(dfs, residual)) throw CounterexampleAlert("no linear-quotient extension to the complete ideal");
  if (!is_linear_quotient_sequence(seq))
    throw CounterexampleAlert("extension by SMS' elements is not a linear-quotient order");
  return seq;
}

namespace {

SquarefreeIdeal reverse_vertices(const SquarefreeIdeal& ideal) {
  std::vector<FaceSet> gens;
  for (FaceSet g : ideal.generators()) {
    FaceSet r;
    g.for_each([&](int v) { r = r.with(ideal.n() - 1 - v); });
    gens.push_back(r);
  }
  return SquarefreeIdeal(ideal.n(), std::move(gens));
}

bool stable_natural(const SquarefreeIdeal& ideal) {
  for (FaceSet f : ideal.generators()) {
    if (f.empty()) continue;
    const int m = f.max();
    const FaceSet rest = f.without(m);
    for (int j = 0; j < m; ++j)
      if (!f.contains(j) && !ideal.contains(rest.with(j))) return false;
  }
  return true;
}

bool strongly_stable_natural(const SquarefreeIdeal& ideal) {
  for (FaceSet f : ideal.generators()) {
    bool ok = true;
    f.for_each([&](int i) {
      for (int j = 0; j < i && ok; ++j)
        if (!f.contains(j) && !ideal.contains(f.without(i).with(j))) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

}  // namespace

bool is_squarefree_stable(const SquarefreeIdeal& ideal, VertexOrder order) {
  return order == VertexOrder::natural ? stable_natural(ideal) : stable_natural(reverse_vertices(ideal));
}

bool is_squarefree_strongly_stable(const SquarefreeIdeal& ideal, VertexOrder order) {
  const SquarefreeIdeal view = order == VertexOrder::natural ? ideal : reverse_vertices(ideal);
  const bool strong = strongly_stable_natural(view);
  if (strong && !stable_natural(view)) throw std::logic_error("strongly stable ideal failed the stable check");
  return strong;
}

ExchangeResult polymatroidal_exchange(const SquarefreeIdeal& ideal) {
  if (!ideal.is_equigenerated()) throw InputError("polymatroidal test needs an equigenerated ideal");
  ExchangeResult result;
  const auto& gens = ideal.generators();
  for (FaceSet u : gens) {
    for (FaceSet v : gens) {
      if (u == v) continue;
      const FaceSet v_only = v - u;
      (u - v).for_each([&](int i) {
        bool plain = false;
        bool symmetric = false;
        v_only.for_each([&](int j) {
          if (!ideal.is_generator(u.without(i).with(j))) return;
          plain = true;
          if (ideal.is_generator(v.without(j).with(i))) symmetric = true;
        });
        if (!plain && result.holds) {
          result.holds = false;
          result.failure = ExchangeFailure{u, v, i};
        }
        if (!symmetric) result.symmetric_holds = false;
      });
    }
  }
  if (result.holds && !result.symmetric_holds)
    throw CounterexampleAlert("exchange holds but symmetric exchange fails");
  return result;
}

bool is_polymatroidal(const SquarefreeIdeal& ideal) { return polymatroidal_exchange(ideal).holds; }

namespace {

std::vector<FaceSet> adjacency(const Clutter& graph) {
  std::vector<FaceSet> adj(graph.n());
  for (FaceSet e : graph) {
    adj[e.min()] = adj[e.min()].with(e.max());
    adj[e.max()] = adj[e.max()].with(e.min());
  }
  return adj;
}

}  // namespace

std::vector<FaceSet> maximal_independent_sets(const Clutter& graph) {
  if (graph.d() != 1) throw InputError("maximal independent sets need a graph (d = 1)");
  const auto adj = adjacency(graph);
  const FaceSet ground = FaceSet::range(graph.n());
  // Bron–Kerbosch with pivoting on the complement graph.
  auto non_neighbors = [&](int v) { return ground - adj[v].with(v); };
  std::vector<FaceSet> out;
  auto bk = [&](auto&& self, FaceSet r, FaceSet p, FaceSet x) -> void {
    if (p.empty() && x.empty()) {
      out.push_back(r);
      return;
    }
    const int pivot = (p | x).min();
    (p - non_neighbors(pivot)).for_each([&](int v) {
      if (!p.contains(v)) return;
      self(self, r.with(v), p & non_neighbors(v), x & non_neighbors(v));
      p = p.without(v);
      x = x.with(v);
    });
  };
  bk(bk, FaceSet{}, ground, FaceSet{});
  canonicalize(out);
  return out;
}

VertexCoverIdeal vertex_cover_ideal(const Clutter& graph) {
  const FaceSet ground = FaceSet::range(graph.n());
  std::vector<FaceSet> covers;
  for (FaceSet a : maximal_independent_sets(graph)) covers.push_back(ground - a);
  for (FaceSet cover : covers) {
    auto covers_all = [&](FaceSet s) {
      return std::all_of(graph.begin(), graph.end(), [&](FaceSet e) { return e.intersects(s); });
    };
    bool minimal = covers_all(cover);
    cover.for_each([&](int v) { minimal = minimal && !covers_all(cover.without(v)); });
    if (!minimal) throw std::logic_error("complement of a maximal independent set is not a minimal cover");
  }
  VertexCoverIdeal out;
  out.unmixed = std::all_of(covers.begin(), covers.end(), [&](FaceSet c) { return c.size() == covers.front().size(); });
  out.ideal = SquarefreeIdeal(graph.n(), std::move(covers));
  return out;
}

std::optional<Clutter> graph_with_cover_ideal(const SquarefreeIdeal& ideal) {
  if (ideal.is_zero()) return std::nullopt;
  std::vector<FaceSet> edges;
  for (FaceSet pair : subsets_of_size(FaceSet::range(ideal.n()), 2)) {
    const auto& gens = ideal.generators();
    if (std::all_of(gens.begin(), gens.end(), [&](FaceSet g) { return g.intersects(pair); })) edges.push_back(pair);
  }
  Clutter graph(ideal.n(), 1, std::move(edges));
  if (vertex_cover_ideal(graph).ideal != ideal) return std::nullopt;
  return graph;
}

ConnectivitySms sms_from_strong_connectivity(const Clutter& c) {
  ConnectivitySms out;
  if (c.empty()) {
    out.status = ConnectivitySms::Status::empty_clutter;
    return out;
  }
  const Clutter bar = complement(c);
  if (bar.empty()) {
    out.sms = simplicial_ms_set(c).front();
    return out;
  }
  auto graph = graph_with_cover_ideal(SquarefreeIdeal::circuit_ideal(bar));
  if (!graph) {
    out.status = ConnectivitySms::Status::not_vertex_cover_ideal;
    return out;
  }
  out.graph = graph;
  const auto independent = maximal_independent_sets(*graph);
  const int dim = independent.front().size() - 1;
  const Clutter facets(c.n(), dim, independent);
  if (!is_strongly_connected(facets)) {
    out.status = ConnectivitySms::Status::not_strongly_connected;
    return out;
  }
  if (independent.size() == 1) throw CounterexampleAlert("a single maximal independent set with a nonempty complement");
  const FaceSet ground = FaceSet::range(c.n());
  for (std::size_t a = 0; a < independent.size() && !out.sms; ++a) {
    for (std::size_t b = a + 1; b < independent.size(); ++b) {
      if ((independent[a] & independent[b]).size() + 1 != independent[a].size()) continue;
      out.sms = ground - (independent[a] | independent[b]);
      break;
    }
  }
  if (!out.sms || !is_simplicial(c, *out.sms))
    throw CounterexampleAlert("strong-connectivity recipe did not produce an SMS");
  return out;
}

NonUniformClutter::NonUniformClutter(int n, std::vector<FaceSet> edges)
    : NonUniformClutter(n, FaceSet::range(n), std::move(edges)) {}

NonUniformClutter::NonUniformClutter(int n, FaceSet vertices, std::vector<FaceSet> edges) : n_(n), vertices_(vertices) {
  if (n < 0 || n > kMaxVertices) throw InputError("vertex count out of range: " + std::to_string(n));
  if (!vertices.subset_of(FaceSet::range(n))) throw InputError("vertex set outside the ground set");
  canonicalize(edges);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (!edges[i].subset_of(vertices)) throw InputError("edge outside the vertex set");
    for (std::size_t j = 0; j < edges.size(); ++j)
      if (i != j && edges[i].subset_of(edges[j])) throw InputError("edges do not form an antichain");
  }
  edges_ = std::move(edges);
}

NonUniformClutter contraction(const NonUniformClutter& d, int v) {
  if (!d.vertices().contains(v)) throw InputError("contraction vertex is not in the vertex set");
  std::vector<FaceSet> edges;
  for (FaceSet f : d.edges()) edges.push_back(f.without(v));
  return NonUniformClutter(d.n(), d.vertices().without(v), minimal_elements(std::move(edges)));
}

NonUniformClutter deletion(const NonUniformClutter& d, int v) {
  if (!d.vertices().contains(v)) throw InputError("deletion vertex is not in the vertex set");
  std::vector<FaceSet> edges;
  for (FaceSet f : d.edges())
    if (!f.contains(v)) edges.push_back(f);
  return NonUniformClutter(d.n(), d.vertices().without(v), std::move(edges));
}

FaceSet simplicial_vertex_set(const NonUniformClutter& d) {
  FaceSet out;
  const auto& edges = d.edges();
  d.vertices().for_each([&](int v) {
    std::vector<FaceSet> through;
    for (FaceSet f : edges)
      if (f.contains(v)) through.push_back(f);
    for (std::size_t a = 0; a < through.size(); ++a)
      for (std::size_t b = a + 1; b < through.size(); ++b) {
        const FaceSet target = (through[a] | through[b]).without(v);
        if (std::none_of(edges.begin(), edges.end(), [&](FaceSet f) { return f.subset_of(target); })) return;
      }
    out = out.with(v);
  });
  return out;
}

bool is_w_chordal(const NonUniformClutter& d) {
  if (d.vertices().size() > kWChordalVertexCap)
    throw CapacityError("W-chordality is capped at " + std::to_string(kWChordalVertexCap) + " vertices");
  struct KeyHash {
    std::size_t operator()(const std::vector<std::uint64_t>& v) const {
      std::uint64_t h = 1469598103934665603ull;
      for (std::uint64_t w : v) h = (h ^ w) * 1099511628211ull;
      return static_cast<std::size_t>(h);
    }
  };
  std::unordered_map<std::vector<std::uint64_t>, bool, KeyHash> memo;
  auto visit = [&](auto&& self, const NonUniformClutter& cur) -> bool {
    if (cur.vertices().empty()) return true;
    std::vector<std::uint64_t> key{cur.vertices().bits()};
    for (FaceSet f : cur.edges()) key.push_back(f.bits());
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    bool ok = !simplicial_vertex_set(cur).empty();
    cur.vertices().for_each([&](int v) {
      ok = ok && self(self, deletion(cur, v)) && self(self, contraction(cur, v));
    });
    memo.emplace(std::move(key), ok);
    return ok;
  };
  return visit(visit, d);
}

}  // namespace chordlab
