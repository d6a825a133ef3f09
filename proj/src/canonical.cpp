#include "chordlab/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "chordlab/errors.hpp"

namespace chordlab {

FaceSet relabel(FaceSet set, std::span<const int> perm) {
  FaceSet out;
  set.for_each([&](int v) { out = out.with(perm[v]); });
  return out;
}

Clutter relabel(const Clutter& c, std::span<const int> perm) {
  std::vector<FaceSet> circuits;
  circuits.reserve(c.size());
  for (FaceSet f : c) circuits.push_back(relabel(f, perm));
  return c.with_circuits(std::move(circuits));
}

Clutter canonical_form(const Clutter& c) {
  if (c.n() > kCanonicalVertexCap)
    throw CapacityError("canonical form is capped at " + std::to_string(kCanonicalVertexCap) + " vertices");
  std::vector<int> perm(c.n());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<FaceSet> best = c.circuits();
  std::vector<FaceSet> image(c.size());
  do {
    for (std::size_t i = 0; i < c.size(); ++i) image[i] = relabel(c.circuits()[i], perm);
    std::sort(image.begin(), image.end());
    if (image < best) best = image;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return c.with_circuits(std::move(best));
}

bool isomorphic(const Clutter& a, const Clutter& b) {
  return a.n() == b.n() && a.d() == b.d() && a.size() == b.size() && canonical_form(a) == canonical_form(b);
}

}  // namespace chordlab
