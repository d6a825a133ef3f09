#include "chordlab/cycles.hpp"

#include <algorithm>
#include <unordered_set>

#include "chordlab/errors.hpp"
#include "chordlab/gf2_matrix.hpp"

namespace chordlab {

namespace {

/// Scans the MSs of a circuit list (sorted, d-uniform) for simplicial ones.
/// Stops at the first hit when `out` is null.
bool scan_sms(std::span<const FaceSet> circuits, int d, std::vector<FaceSet>* out) {
  std::vector<FaceSet> all;
  all.reserve(circuits.size() * static_cast<std::size_t>(d + 1));
  for (FaceSet f : circuits) f.for_each([&](int v) { all.push_back(f.without(v)); });
  std::sort(all.begin(), all.end());
  bool found = false;
  for (std::size_t i = 0; i < all.size();) {
    std::size_t j = i;
    while (j < all.size() && all[j] == all[i]) ++j;
    const FaceSet e = all[i];
    bool simplicial = (j - i == 1);
    if (!simplicial) {
      FaceSet nbhd = e;
      for (FaceSet f : circuits)
        if (e.subset_of(f)) nbhd = nbhd | f;
      std::uint64_t inside = 0;
      for (FaceSet f : circuits)
        if (f.subset_of(nbhd)) ++inside;
      simplicial = inside == binomial(nbhd.size(), d + 1);
    }
    if (simplicial) {
      found = true;
      if (!out) return true;
      out->push_back(e);
    }
    i = j;
  }
  return found;
}

std::vector<FaceSet> select(const std::vector<FaceSet>& items, std::uint64_t mask) {
  std::vector<FaceSet> out;
  for (std::uint64_t b = mask; b; b &= b - 1) out.push_back(items[static_cast<std::size_t>(std::countr_zero(b))]);
  return out;
}

std::uint64_t next_same_popcount(std::uint64_t x) {
  const std::uint64_t c = x & (~x + 1);
  const std::uint64_t r = x + c;
  return (((r ^ x) >> 2) / c) | r;
}

/// Calls fn(mask) for every subset of {0..m-1} with exactly `k` elements.
template <typename Fn>
bool for_each_mask(int m, int k, Fn&& fn) {
  if (k < 0 || k > m) return false;
  if (k == 0) return fn(std::uint64_t{0});
  const std::uint64_t limit = std::uint64_t{1} << m;
  for (std::uint64_t x = (std::uint64_t{1} << k) - 1; x < limit; x = next_same_popcount(x)) {
    if (fn(x)) return true;
  }
  return false;
}

struct VectorHash {
  std::size_t operator()(const std::vector<std::uint64_t>& v) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto w : v) {
      h ^= w;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

/// Backtracking over SMS deletions on a fixed circuit list.
class ExhaustiveChordality {
 public:
  explicit ExhaustiveChordality(const Clutter& c) : c_(c), words_((c.size() + 63) / 64) {}

  ChordalityCertificate run() {
    std::vector<std::uint64_t> all(words_, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) all[i / 64] |= std::uint64_t{1} << (i % 64);
    ChordalityCertificate cert;
    cert.chordal = search(all, cert.sequence);
    std::reverse(cert.sequence.begin(), cert.sequence.end());
    if (cert.chordal) stuck_.reset();
    cert.stuck_witness = stuck_;
    cert.states_explored = visited_;
    return cert;
  }

 private:
  std::vector<FaceSet> circuits_of(const std::vector<std::uint64_t>& state) const {
    std::vector<FaceSet> out;
    for (std::size_t w = 0; w < words_; ++w)
      for (std::uint64_t b = state[w]; b; b &= b - 1)
        out.push_back(c_.circuits()[w * 64 + static_cast<std::size_t>(std::countr_zero(b))]);
    return out;
  }

  // Appends the deletion sequence in reverse on success.
  bool search(const std::vector<std::uint64_t>& state, std::vector<FaceSet>& reversed) {
    ++visited_;
    const auto circuits = circuits_of(state);
    if (circuits.empty()) return true;
    std::vector<FaceSet> sms;
    scan_sms(circuits, c_.d(), &sms);
    if (sms.empty()) {
      if (!stuck_) stuck_ = c_.with_circuits(circuits);
      failed_.insert(state);
      return false;
    }
    for (FaceSet e : sms) {
      std::vector<std::uint64_t> next = state;
      for (std::size_t i = 0; i < c_.size(); ++i)
        if (e.subset_of(c_.circuits()[i])) next[i / 64] &= ~(std::uint64_t{1} << (i % 64));
      if (failed_.contains(next)) continue;
      if (search(next, reversed)) {
        reversed.push_back(e);
        return true;
      }
    }
    failed_.insert(state);
    return false;
  }

  const Clutter& c_;
  std::size_t words_;
  std::unordered_set<std::vector<std::uint64_t>, VectorHash> failed_;
  std::optional<Clutter> stuck_;
  std::size_t visited_ = 0;
};

void require_mask_capacity(std::size_t size, const char* what) {
  if (size > kCiEnumerationCap) {
    throw CapacityError(std::string("Ci-cycle enumeration over ") + what + " exceeds the cap of " +
                        std::to_string(kCiEnumerationCap));
  }
}

}  // namespace

std::vector<FaceSet> simplicial_ms_set(const Clutter& c, SmsMode mode) {
  std::vector<FaceSet> out;
  scan_sms(c.circuits(), c.d(), &out);
  if (mode == SmsMode::with_degree_zero) {
    const auto ms = maximal_subcircuits(c);
    for_each_subset_of_size(FaceSet::range(c.n()), c.d(), [&](FaceSet e) {
      if (!std::binary_search(ms.begin(), ms.end(), e)) out.push_back(e);
    });
    canonicalize(out);
  }
  return out;
}

bool is_simplicial(const Clutter& c, FaceSet e, SmsMode mode) {
  if (ms_degree(c, e) == 0) return mode == SmsMode::with_degree_zero;
  return is_clique(c, closed_neighborhood(c, e));
}

bool has_simplicial_ms(const Clutter& c) { return scan_sms(c.circuits(), c.d(), nullptr); }

std::vector<FaceSet> free_ms_set(const Clutter& c) {
  std::vector<FaceSet> out;
  for (const auto& [e, deg] : ms_degrees(c))
    if (deg == 1) out.push_back(e);
  return out;
}

ChordalityCertificate chordality(const Clutter& c, ChordalityMode mode) {
  if (mode == ChordalityMode::exhaustive) return ExhaustiveChordality(c).run();

  ChordalityCertificate cert;
  Clutter current = c;
  while (!current.empty()) {
    ++cert.states_explored;
    const auto sms = simplicial_ms_set(current);
    if (sms.empty()) {
      cert.chordal = false;
      cert.conclusive = false;
      cert.stuck_witness = current;
      return cert;
    }
    cert.sequence.push_back(sms.front());
    current = remove(current, sms.front());
  }
  ++cert.states_explored;
  cert.chordal = true;
  return cert;
}

bool is_chordal(const Clutter& c) { return chordality(c, ChordalityMode::exhaustive).chordal; }

bool replays_to_empty(const Clutter& c, std::span<const FaceSet> sequence) {
  Clutter current = c;
  for (FaceSet e : sequence) {
    if (e.size() != c.d()) return false;
    if (ms_degree(current, e) == 0 || !is_simplicial(current, e)) return false;
    current = remove(current, e);
  }
  return current.empty();
}

bool verify_certificate(const Clutter& c, const ChordalityCertificate& cert) {
  if (cert.chordal) return replays_to_empty(c, cert.sequence);
  if (!cert.stuck_witness) return false;
  const Clutter& w = *cert.stuck_witness;
  return !w.empty() && w.n() == c.n() && w.d() == c.d() && !has_simplicial_ms(w) &&
         std::all_of(w.begin(), w.end(), [&](FaceSet f) { return c.contains(f); });
}

bool is_cf_cycle(const Clutter& c) {
  if (c.empty() || !is_strongly_connected(c)) return false;
  const auto degrees = ms_degrees(c);
  return std::all_of(degrees.begin(), degrees.end(), [](const MsDegree& m) { return m.degree % 2 == 0; });
}

bool is_cf_tree(const Clutter& c) {
  if (c.empty()) return true;
  const auto ms = maximal_subcircuits(c);
  GF2Matrix boundary(ms.size(), c.size());
  for (std::size_t col = 0; col < c.size(); ++col) {
    const FaceSet f = c.circuits()[col];
    f.for_each([&](int v) {
      const auto row = static_cast<std::size_t>(std::lower_bound(ms.begin(), ms.end(), f.without(v)) - ms.begin());
      boundary.set(row, col, true);
    });
  }
  return boundary.rank() == c.size();
}

BoundaryDecomposition boundary_clutter(const Clutter& c) {
  if (c.d() < 1) throw InputError("boundary is only defined for dimension d >= 1");
  std::vector<FaceSet> odd;
  for (const auto& [e, deg] : ms_degrees(c))
    if (deg % 2 == 1) odd.push_back(e);
  BoundaryDecomposition out{Clutter(c.n(), c.d() - 1, std::move(odd)), {}};
  out.components = strong_components(out.boundary);
  return out;
}

bool is_complete_small(const Clutter& c) {
  const FaceSet support = c.support();
  return !c.empty() && support.size() == c.d() + 2 && c.size() == static_cast<std::size_t>(c.d() + 2);
}

namespace {

/// Searches proper nonempty subclutters of the given family for an empty SMS.
/// include_whole additionally admits C itself.
std::optional<Clutter> search_family(const Clutter& c, CycleKind kind, bool include_whole) {
  const auto& circuits = c.circuits();
  std::optional<Clutter> hit;

  if (kind == CycleKind::c1) {
    require_mask_capacity(circuits.size(), "circuits");
    const int m = static_cast<int>(circuits.size());
    const std::uint64_t all = (std::uint64_t{1} << m) - 1;
    for (int removed = include_whole ? 0 : 1; removed < m && !hit; ++removed) {
      for_each_mask(m, removed, [&](std::uint64_t dropped) {
        const auto sub = select(circuits, all & ~dropped);
        if (scan_sms(sub, c.d(), nullptr)) return false;
        hit = c.with_circuits(sub);
        return true;
      });
    }
    return hit;
  }

  if (circuits.size() > 64) throw CapacityError("induced-subclutter search supports at most 64 circuits");
  // Each circuit is described by the generator set it needs (its MSs or its vertices).
  std::vector<FaceSet> generators;
  if (kind == CycleKind::c2) {
    generators = maximal_subcircuits(c);
    require_mask_capacity(generators.size(), "maximal subcircuits");
  } else {
    const FaceSet support = c.support();
    require_mask_capacity(static_cast<std::size_t>(support.size()), "support vertices");
    support.for_each([&](int v) { generators.push_back(FaceSet::singleton(v)); });
  }
  std::vector<std::uint64_t> needs(circuits.size(), 0);
  for (std::size_t i = 0; i < circuits.size(); ++i) {
    for (std::size_t g = 0; g < generators.size(); ++g) {
      if (generators[g].subset_of(circuits[i])) needs[i] |= std::uint64_t{1} << g;
    }
  }
  const std::uint64_t whole = circuits.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << circuits.size()) - 1;
  std::unordered_set<std::uint64_t> seen;
  const int m = static_cast<int>(generators.size());
  const std::uint64_t all = (std::uint64_t{1} << m) - 1;
  for (int removed = 0; removed <= m && !hit; ++removed) {
    for_each_mask(m, removed, [&](std::uint64_t dropped) {
      const std::uint64_t allowed = all & ~dropped;
      std::uint64_t induced = 0;
      for (std::size_t i = 0; i < circuits.size(); ++i)
        if ((needs[i] & ~allowed) == 0) induced |= std::uint64_t{1} << i;
      if (induced == 0 || (induced == whole && !include_whole)) return false;
      if (!seen.insert(induced).second) return false;
      const auto sub = select(circuits, induced);
      if (scan_sms(sub, c.d(), nullptr)) return false;
      hit = c.with_circuits(sub);
      return true;
    });
  }
  return hit;
}

}  // namespace

CiCycleResult ci_cycle(const Clutter& c, CycleKind kind) {
  CiCycleResult r;
  if (c.empty()) return r;
  r.complete_small = is_complete_small(c);
  r.sms_empty = !has_simplicial_ms(c);
  if (r.complete_small) {
    r.is_cycle = true;
    return r;
  }
  if (!r.sms_empty) return r;
  r.witness = search_family(c, kind, false);
  r.is_cycle = !r.witness.has_value();
  return r;
}

bool is_ci_cycle(const Clutter& c, CycleKind kind) { return ci_cycle(c, kind).is_cycle; }

CycleClassification classify_cycles(const Clutter& c) {
  CycleClassification out;
  out.cf_cycle = is_cf_cycle(c);
  out.complete_small = is_complete_small(c);
  out.sms_empty = !c.empty() && !has_simplicial_ms(c);
  const auto r3 = ci_cycle(c, CycleKind::c3);
  out.c3 = r3.is_cycle;
  out.c3_witness = r3.witness;
  const auto r2 = ci_cycle(c, CycleKind::c2);
  out.c2 = r2.is_cycle;
  out.c2_witness = r2.witness;
  const auto r1 = ci_cycle(c, CycleKind::c1);
  out.c1 = r1.is_cycle;
  out.c1_witness = r1.witness;
  return out;
}

std::optional<Clutter> find_induced_sms_free(const Clutter& c, CycleKind kind) {
  if (kind == CycleKind::c1) throw InputError("induced search is defined for C2 (MS-induced) and C3 (vertex-induced)");
  if (c.empty()) return std::nullopt;
  if (!has_simplicial_ms(c)) return c;
  return search_family(c, kind, true);
}

bool has_induced_noncomplete_ci_cycle(const Clutter& c, CycleKind kind) {
  return find_induced_sms_free(c, kind).has_value();
}

}  // namespace chordlab
