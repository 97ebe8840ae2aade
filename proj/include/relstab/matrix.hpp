#pragma once

#include "relstab/bigint.hpp"
#include "relstab/ring.hpp"

#include <algorithm>
#include <cassert>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace relstab {

/// Dense row-major matrix of arbitrary-precision integers.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<long long>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw ValidationError("ragged matrix literal");
      for (long long v : row) data_.emplace_back(v);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static Matrix diagonal(std::span<const Int> d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Int& operator()(std::size_t i, std::size_t j) {
    assert(i < rows_ && j < cols_);
    return data_[i * cols_ + j];
  }
  const Int& operator()(std::size_t i, std::size_t j) const {
    assert(i < rows_ && j < cols_);
    return data_[i * cols_ + j];
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Int& x) { return x == 0; });
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  Matrix operator*(const Matrix& b) const {
    if (cols_ != b.rows_) throw ValidationError("matrix product shape mismatch");
    Matrix c(rows_, b.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Int& a = (*this)(i, k);
        if (a == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (b(k, j) != 0) c(i, j) += a * b(k, j);
      }
    return c;
  }

  Matrix operator+(const Matrix& b) const {
    check_same_shape(b);
    Matrix c = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) c.data_[i] += b.data_[i];
    return c;
  }

  Matrix operator-(const Matrix& b) const {
    check_same_shape(b);
    Matrix c = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) c.data_[i] -= b.data_[i];
    return c;
  }

  Matrix operator-() const {
    Matrix c = *this;
    for (auto& x : c.data_) x = -x;
    return c;
  }

  Matrix scaled(const Int& s) const {
    Matrix c = *this;
    for (auto& x : c.data_) x *= s;
    return c;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw ValidationError("block out of range");
    Matrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
  }

  void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw ValidationError("block out of range");
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }

  Matrix column(std::size_t j) const { return block(0, j, rows_, 1); }

  Matrix select_columns(std::span<const std::size_t> idx) const {
    Matrix m(rows_, idx.size());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < idx.size(); ++k) m(i, k) = (*this)(i, idx[k]);
    return m;
  }

  Matrix select_rows(std::span<const std::size_t> idx) const {
    Matrix m(idx.size(), cols_);
    for (std::size_t k = 0; k < idx.size(); ++k)
      for (std::size_t j = 0; j < cols_; ++j) m(k, j) = (*this)(idx[k], j);
    return m;
  }

  static Matrix hstack(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ && !(a.cols_ == 0 || b.cols_ == 0))
      throw ValidationError("hstack row mismatch");
    if (a.cols_ == 0 && a.rows_ != b.rows_) return b;
    if (b.cols_ == 0 && a.rows_ != b.rows_) return a;
    Matrix m(a.rows_, a.cols_ + b.cols_);
    m.set_block(0, 0, a);
    m.set_block(0, a.cols_, b);
    return m;
  }

  static Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.cols_) throw ValidationError("vstack column mismatch");
    Matrix m(a.rows_ + b.rows_, a.cols_);
    m.set_block(0, 0, a);
    m.set_block(a.rows_, 0, b);
    return m;
  }

  static Matrix block_diagonal(const Matrix& a, const Matrix& b) {
    Matrix m(a.rows_ + b.rows_, a.cols_ + b.cols_);
    m.set_block(0, 0, a);
    m.set_block(a.rows_, a.cols_, b);
    return m;
  }

  static Matrix kronecker(const Matrix& a, const Matrix& b) {
    Matrix m(a.rows_ * b.rows_, a.cols_ * b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) {
        if (a(i, j) == 0) continue;
        for (std::size_t k = 0; k < b.rows_; ++k)
          for (std::size_t l = 0; l < b.cols_; ++l) m(i * b.rows_ + k, j * b.cols_ + l) = a(i, j) * b(k, l);
      }
    return m;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  /// row[dst] += q * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Int& q) {
    if (q == 0) return;
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(src, j) != 0) (*this)(dst, j) += q * (*this)(src, j);
  }
  /// col[dst] += q * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Int& q) {
    if (q == 0) return;
    for (std::size_t i = 0; i < rows_; ++i)
      if ((*this)(i, src) != 0) (*this)(i, dst) += q * (*this)(i, src);
  }
  void scale_row(std::size_t i, const Int& s) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) *= s;
  }
  void scale_col(std::size_t j, const Int& s) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) *= s;
  }

  /// Reduce every row i modulo moduli[i] (0 = leave as is).
  void reduce_rows(std::span<const Int> moduli) {
    if (moduli.size() != rows_) throw ValidationError("row moduli length mismatch");
    for (std::size_t i = 0; i < rows_; ++i)
      if (moduli[i] != 0)
        for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = mod_floor((*this)(i, j), moduli[i]);
  }

  Matrix reduced_rows(std::span<const Int> moduli) const {
    Matrix m = *this;
    m.reduce_rows(moduli);
    return m;
  }

  void reduce_all(const Int& m) {
    if (m == 0) return;
    for (auto& x : data_) x = mod_floor(x, m);
  }

  std::size_t max_bits() const {
    std::size_t b = 0;
    for (const auto& x : data_) b = std::max(b, bit_length(x));
    return b;
  }

  void check_entries() const {
    for (const auto& x : data_) check_entry(x);
  }

  const std::vector<Int>& data() const { return data_; }

  std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      s += i ? ",[" : "[";
      for (std::size_t j = 0; j < cols_; ++j) s += (j ? "," : "") + (*this)(i, j).str();
      s += "]";
    }
    return s + "]";
  }

 private:
  void check_same_shape(const Matrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw ValidationError("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

/// True when a ≡ b entrywise modulo the row moduli.
inline bool congruent_rows(const Matrix& a, const Matrix& b, std::span<const Int> moduli) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      Int d = a(i, j) - b(i, j);
      if (moduli[i] == 0 ? d != 0 : d % moduli[i] != 0) return false;
    }
  return true;
}

/// A matrix over a coefficient ring; entries are kept canonically reduced.
struct RMatrix {
  CoefficientRing ring;
  Matrix entries;

  RMatrix() = default;
  RMatrix(CoefficientRing r, Matrix m) : ring(std::move(r)), entries(std::move(m)) { entries.reduce_all(ring.modulus()); }

  std::size_t rows() const { return entries.rows(); }
  std::size_t cols() const { return entries.cols(); }

  RMatrix operator*(const RMatrix& b) const {
    if (!(ring == b.ring)) throw ValidationError("ring mismatch in matrix product");
    return RMatrix(ring, entries * b.entries);
  }
  friend bool operator==(const RMatrix& a, const RMatrix& b) { return a.ring == b.ring && a.entries == b.entries; }
};

}  // namespace relstab
