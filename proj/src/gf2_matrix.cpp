#include "chordlab/gf2_matrix.hpp"

#include <algorithm>
#include <utility>

#include "chordlab/errors.hpp"

namespace chordlab {

GF2Matrix::GF2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64), data_(rows * words_, 0) {}

void GF2Matrix::set(std::size_t r, std::size_t c, bool value) {
  const std::uint64_t mask = std::uint64_t{1} << (c % 64);
  if (value) {
    row(r)[c / 64] |= mask;
  } else {
    row(r)[c / 64] &= ~mask;
  }
}

bool GF2Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](std::uint64_t w) { return w == 0; });
}

GF2Matrix GF2Matrix::transpose() const {
  GF2Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (get(r, c)) t.set(c, r, true);
  return t;
}

std::size_t GF2Matrix::reduce(std::size_t pivot_cols) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < pivot_cols && rank < rows_; ++c) {
    const std::size_t w = c / 64;
    const std::uint64_t mask = std::uint64_t{1} << (c % 64);
    std::size_t pivot = rank;
    while (pivot < rows_ && !(row(pivot)[w] & mask)) ++pivot;
    if (pivot == rows_) continue;
    if (pivot != rank) std::swap_ranges(row(pivot), row(pivot) + words_, row(rank));
    const std::uint64_t* prow = row(rank);
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == rank || !(row(r)[w] & mask)) continue;
      std::uint64_t* target = row(r);
      for (std::size_t k = w; k < words_; ++k) target[k] ^= prow[k];
    }
    ++rank;
  }
  return rank;
}

GF2Matrix GF2Matrix::rref() const {
  GF2Matrix m = *this;
  m.reduce(cols_);
  return m;
}

std::size_t GF2Matrix::rank() const {
  GF2Matrix m = *this;
  return m.reduce(cols_);
}

std::optional<std::vector<bool>> GF2Matrix::solve(const std::vector<bool>& b) const {
  if (b.size() != rows_) throw InputError("right-hand side has the wrong length");
  GF2Matrix aug(rows_, cols_ + 1);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::copy(row(r), row(r) + words_, aug.row(r));
    aug.set(r, cols_, b[r]);
  }
  const std::size_t rank = aug.reduce(cols_);
  for (std::size_t r = rank; r < rows_; ++r) {
    if (aug.get(r, cols_)) return std::nullopt;
  }
  std::vector<bool> x(cols_, false);
  for (std::size_t r = 0; r < rank; ++r) {
    std::size_t c = 0;
    while (!aug.get(r, c)) ++c;
    x[c] = aug.get(r, cols_);
  }
  return x;
}

std::vector<bool> GF2Matrix::apply(const std::vector<bool>& x) const {
  if (x.size() != cols_) throw InputError("vector has the wrong length");
  std::vector<bool> y(rows_, false);
  for (std::size_t r = 0; r < rows_; ++r) {
    bool acc = false;
    for (std::size_t c = 0; c < cols_; ++c) acc ^= (get(r, c) && x[c]);
    y[r] = acc;
  }
  return y;
}

GF2Matrix operator*(const GF2Matrix& a, const GF2Matrix& b) {
  if (a.cols_ != b.rows_) throw InputError("matrix dimensions do not agree");
  GF2Matrix out(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    std::uint64_t* dst = out.row(r);
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (!a.get(r, k)) continue;
      const std::uint64_t* src = b.row(k);
      for (std::size_t w = 0; w < out.words_; ++w) dst[w] ^= src[w];
    }
  }
  return out;
}

}  // namespace chordlab
