#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace chordlab {

/// Dense matrix over the two-element field, rows bit-packed into 64-bit words.
class GF2Matrix {
 public:
  GF2Matrix() = default;
  GF2Matrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const { return (row(r)[c / 64] >> (c % 64)) & 1U; }
  void set(std::size_t r, std::size_t c, bool value);
  void flip(std::size_t r, std::size_t c) { row(r)[c / 64] ^= std::uint64_t{1} << (c % 64); }

  bool is_zero() const;
  GF2Matrix transpose() const;
  /// Reduced row echelon form.
  GF2Matrix rref() const;
  std::size_t rank() const;
  std::size_t nullity() const { return cols_ - rank(); }

  /// Some x with A x = b, if the system is consistent. b must have rows() entries.
  std::optional<std::vector<bool>> solve(const std::vector<bool>& b) const;

  /// Applies the matrix to a vector of cols() entries.
  std::vector<bool> apply(const std::vector<bool>& x) const;

  friend GF2Matrix operator*(const GF2Matrix& a, const GF2Matrix& b);
  friend bool operator==(const GF2Matrix&, const GF2Matrix&) = default;

 private:
  std::uint64_t* row(std::size_t r) { return data_.data() + r * words_; }
  const std::uint64_t* row(std::size_t r) const { return data_.data() + r * words_; }
  /// Row-reduces in place, restricted to the first `pivot_cols` columns. Returns the rank.
  std::size_t reduce(std::size_t pivot_cols);

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> data_;
};

}  // namespace chordlab
