#pragma once

#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cob/core.hpp"

namespace cob {

/// Dense row-major matrix over an exact scalar (Int or Rat).
///
/// Degenerate shapes (0xn, nx0, 0x0) are first-class values: empty links and
/// genus-0 boundaries flow through every formula unchanged.
template <typename T>
class Matrix {
 public:
  Matrix() = default;

  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_)
      throw DimensionError("matrix entry count does not match rows*cols");
  }

  /// Row-of-rows constructor, mainly for literals in tests and fixtures.
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw DimensionError("ragged matrix literal");
      for (const auto& v : r) data_.push_back(v);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  static Matrix zero(std::size_t rows, std::size_t cols) {
    return Matrix(rows, cols);
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  bool is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  bool is_zero() const {
    for (const auto& v : data_)
      if (v != T(0)) return false;
    return true;
  }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix operator+(const Matrix& o) const {
    require_same_shape(o);
    Matrix r(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] + o.data_[k];
    return r;
  }

  Matrix operator-(const Matrix& o) const {
    require_same_shape(o);
    Matrix r(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] - o.data_[k];
    return r;
  }

  Matrix operator-() const {
    Matrix r(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = -data_[k];
    return r;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_)
      throw DimensionError("matrix product shape mismatch");
    Matrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const T& a = (*this)(i, k);
        if (a == T(0)) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
      }
    return r;
  }

  Matrix operator*(const T& s) const {
    Matrix r(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] * s;
    return r;
  }

  /// Copy of the rectangular block with corner (i0,j0) and the given shape.
  Matrix block(std::size_t i0, std::size_t j0, std::size_t rows,
               std::size_t cols) const {
    if (i0 + rows > rows_ || j0 + cols > cols_)
      throw DimensionError("block out of range");
    Matrix b(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) b(i, j) = (*this)(i0 + i, j0 + j);
    return b;
  }

  void set_block(std::size_t i0, std::size_t j0, const Matrix& b) {
    if (i0 + b.rows() > rows_ || j0 + b.cols() > cols_)
      throw DimensionError("block out of range");
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) (*this)(i0 + i, j0 + j) = b(i, j);
  }

  /// Assemble from a grid of blocks; row heights and column widths must be
  /// consistent along each band.
  static Matrix from_blocks(const std::vector<std::vector<Matrix>>& grid) {
    std::vector<std::size_t> heights, widths;
    for (const auto& band : grid) heights.push_back(band.empty() ? 0 : band.front().rows());
    if (!grid.empty())
      for (const auto& b : grid.front()) widths.push_back(b.cols());
    std::size_t total_r = 0, total_c = 0;
    for (auto h : heights) total_r += h;
    for (auto w : widths) total_c += w;
    Matrix m(total_r, total_c);
    std::size_t i0 = 0;
    for (std::size_t bi = 0; bi < grid.size(); ++bi) {
      if (grid[bi].size() != widths.size())
        throw DimensionError("block grid is ragged");
      std::size_t j0 = 0;
      for (std::size_t bj = 0; bj < grid[bi].size(); ++bj) {
        const Matrix& b = grid[bi][bj];
        if (b.rows() != heights[bi] || b.cols() != widths[bj])
          throw DimensionError("block grid shape mismatch");
        m.set_block(i0, j0, b);
        j0 += widths[bj];
      }
      i0 += heights[bi];
    }
    return m;
  }

  void swap_rows(std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < cols_; ++k)
      std::swap((*this)(i, k), (*this)(j, k));
  }

  void swap_cols(std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < rows_; ++k)
      std::swap((*this)(k, i), (*this)(k, j));
  }

  /// row[dst] += c * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const T& c) {
    for (std::size_t k = 0; k < cols_; ++k)
      (*this)(dst, k) += c * (*this)(src, k);
  }

  /// col[dst] += c * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const T& c) {
    for (std::size_t k = 0; k < rows_; ++k)
      (*this)(k, dst) += c * (*this)(k, src);
  }

  void negate_row(std::size_t i) {
    for (std::size_t k = 0; k < cols_; ++k) (*this)(i, k) = -(*this)(i, k);
  }

  void negate_col(std::size_t j) {
    for (std::size_t k = 0; k < rows_; ++k) (*this)(k, j) = -(*this)(k, j);
  }

  std::vector<T> row(std::size_t i) const {
    std::vector<T> r(cols_);
    for (std::size_t k = 0; k < cols_; ++k) r[k] = (*this)(i, k);
    return r;
  }

  std::vector<T> col(std::size_t j) const {
    std::vector<T> c(rows_);
    for (std::size_t k = 0; k < rows_; ++k) c[k] = (*this)(k, j);
    return c;
  }

  Matrix without_row_col(std::size_t ri, std::size_t cj) const {
    Matrix m(rows_ - 1, cols_ - 1);
    for (std::size_t i = 0, di = 0; i < rows_; ++i) {
      if (i == ri) continue;
      for (std::size_t j = 0, dj = 0; j < cols_; ++j) {
        if (j == cj) continue;
        m(di, dj) = (*this)(i, j);
        ++dj;
      }
      ++di;
    }
    return m;
  }

  std::string to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      os << (i ? "; " : "") << "[";
      for (std::size_t j = 0; j < cols_; ++j)
        os << (j ? ", " : "") << (*this)(i, j);
      os << "]";
    }
    os << "]";
    return os.str();
  }

 private:
  void require_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw DimensionError("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rat>;

inline RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
  return r;
}

/// Exact integer content of a rational matrix; fails if any entry has a
/// denominator other than 1.
inline IntMatrix to_integral(const RatMatrix& m) {
  IntMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (denominator(m(i, j)) != 1)
        throw DimensionError("rational matrix is not integral");
      r(i, j) = numerator(m(i, j));
    }
  return r;
}

inline bool is_integral(const RatMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (denominator(m(i, j)) != 1) return false;
  return true;
}

}  // namespace cob
