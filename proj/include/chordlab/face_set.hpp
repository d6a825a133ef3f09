#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace chordlab {

/// Largest supported ground set; a FaceSet is one machine word.
inline constexpr int kMaxVertices = 63;

/// A subset of the 0-based vertex ground set, bit-packed into one word.
///
/// The ordering operator is lexicographic on the sorted vertex lists, which
/// is the canonical order used for circuits, MSs and every report.
class FaceSet {
 public:
  constexpr FaceSet() = default;
  constexpr explicit FaceSet(std::uint64_t bits) : bits_(bits) {}
  FaceSet(std::initializer_list<int> vertices);

  static FaceSet from_vertices(const std::vector<int>& vertices);
  /// {0, ..., n-1}
  static constexpr FaceSet range(int n) {
    return FaceSet(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }
  static constexpr FaceSet singleton(int v) { return FaceSet(std::uint64_t{1} << v); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }

  constexpr FaceSet with(int v) const { return FaceSet(bits_ | (std::uint64_t{1} << v)); }
  constexpr FaceSet without(int v) const { return FaceSet(bits_ & ~(std::uint64_t{1} << v)); }

  /// Smallest / largest vertex. Undefined on the empty set.
  constexpr int min() const { return std::countr_zero(bits_); }
  constexpr int max() const { return 63 - std::countl_zero(bits_); }

  constexpr bool subset_of(FaceSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(FaceSet other) const { return (bits_ & other.bits_) != 0; }

  std::vector<int> vertices() const;

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) fn(std::countr_zero(b));
  }

  friend constexpr FaceSet operator|(FaceSet a, FaceSet b) { return FaceSet(a.bits_ | b.bits_); }
  friend constexpr FaceSet operator&(FaceSet a, FaceSet b) { return FaceSet(a.bits_ & b.bits_); }
  /// Set difference.
  friend constexpr FaceSet operator-(FaceSet a, FaceSet b) { return FaceSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(FaceSet a, FaceSet b) { return a.bits_ == b.bits_; }

  /// Lexicographic order on sorted vertex lists (a proper prefix sorts first).
  friend constexpr bool operator<(FaceSet a, FaceSet b) {
    const std::uint64_t diff = a.bits_ ^ b.bits_;
    if (diff == 0) return false;
    const std::uint64_t low = diff & (~diff + 1);
    const std::uint64_t above = ~((low << 1) - 1);
    if (b.bits_ & low) {
      // b has the smaller element at the first difference unless a has ended.
      return (a.bits_ & above) == 0;
    }
    return (b.bits_ & above) != 0;
  }
  friend constexpr bool operator>(FaceSet a, FaceSet b) { return b < a; }
  friend constexpr bool operator<=(FaceSet a, FaceSet b) { return !(b < a); }
  friend constexpr bool operator>=(FaceSet a, FaceSet b) { return !(a < b); }

  /// Debug form with internal indices, e.g. "{0,3,4}".
  std::string debug_string() const;

 private:
  std::uint64_t bits_ = 0;
};

/// Binomial coefficient; exact for the sizes used here (n <= 63).
std::uint64_t binomial(int n, int k);

/// Calls fn(subset) for every k-subset of `set`, in lexicographic order.
void for_each_subset_of_size(FaceSet set, int k, const std::function<void(FaceSet)>& fn);

/// All k-subsets of `set`, in lexicographic order.
std::vector<FaceSet> subsets_of_size(FaceSet set, int k);

/// Sorts by the canonical order and removes duplicates.
void canonicalize(std::vector<FaceSet>& sets);

/// Keeps the inclusion-maximal members (result canonically ordered).
std::vector<FaceSet> maximal_elements(std::vector<FaceSet> sets);

/// Keeps the inclusion-minimal members (result canonically ordered).
std::vector<FaceSet> minimal_elements(std::vector<FaceSet> sets);

}  // namespace chordlab

template <>
struct std::hash<chordlab::FaceSet> {
  std::size_t operator()(chordlab::FaceSet s) const noexcept {
    return std::hash<std::uint64_t>{}(s.bits());
  }
};
