#pragma once

#include <span>
#include <vector>

#include "chordlab/clutter.hpp"

namespace chordlab {

inline constexpr int kCanonicalVertexCap = 8;

/// Image of `set` under the vertex map v -> perm[v].
FaceSet relabel(FaceSet set, std::span<const int> perm);

Clutter relabel(const Clutter& c, std::span<const int> perm);

/// The relabeling whose sorted circuit list is lexicographically least, over
/// all n! permutations. Throws CapacityError for n > 8.
Clutter canonical_form(const Clutter& c);

bool isomorphic(const Clutter& a, const Clutter& b);

}  // namespace chordlab
