#ifndef SLW_MATRIX_HPP
#define SLW_MATRIX_HPP

#include <optional>
#include <vector>

#include "slw/scalar.hpp"

namespace slw {

/// Dense matrix over the exact scalar field, with the Gaussian-elimination
/// routines the verification suites need (rank, kernel, solve, det, inverse).
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows, std::vector<Scalar>(cols)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r][c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r][c]; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) out(i, j) = a(i, j) + b(i, j);
    return out;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) out(i, j) = a(i, j) - b(i, j);
    return out;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k).is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          out(i, j) += a(i, k) * b(k, j);
      }
    return out;
  }
  friend Matrix operator*(const Scalar& s, const Matrix& a) {
    Matrix out(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) out(i, j) = s * a(i, j);
    return out;
  }

  std::vector<Scalar> apply(const std::vector<Scalar>& v) const {
    std::vector<Scalar> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (!data_[i][j].is_zero()) out[i] += data_[i][j] * v[j];
    return out;
  }

  bool is_zero() const {
    for (const auto& row : data_)
      for (const auto& s : row)
        if (!s.is_zero()) return false;
    return true;
  }

  /// In-place reduced row echelon form; returns pivot column indices.
  std::vector<std::size_t> rref() {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t pivot = r;
      while (pivot < rows_ && data_[pivot][c].is_zero()) ++pivot;
      if (pivot == rows_) continue;
      std::swap(data_[r], data_[pivot]);
      Scalar inv = Scalar(1) / data_[r][c];
      for (std::size_t j = c; j < cols_; ++j) data_[r][j] *= inv;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == r || data_[i][c].is_zero()) continue;
        Scalar f = data_[i][c];
        for (std::size_t j = c; j < cols_; ++j)
          data_[i][j] -= f * data_[r][j];
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

  std::size_t rank() const {
    Matrix tmp = *this;
    return tmp.rref().size();
  }

  /// Basis of the right kernel (columns of the returned matrix).
  Matrix kernel() const {
    Matrix tmp = *this;
    auto pivots = tmp.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < cols_; ++c)
      if (!is_pivot[c]) free_cols.push_back(c);
    Matrix out(cols_, free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
      std::size_t fc = free_cols[k];
      out(fc, k) = Scalar(1);
      for (std::size_t i = 0; i < pivots.size(); ++i)
        out(pivots[i], k) = -tmp(i, fc);
    }
    return out;
  }

  /// Solves A x = b exactly; nullopt when inconsistent.
  std::optional<std::vector<Scalar>> solve(const std::vector<Scalar>& b) const {
    Matrix aug(rows_, cols_ + 1);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = data_[i][j];
      aug(i, cols_) = b[i];
    }
    auto pivots = aug.rref();
    std::vector<Scalar> x(cols_);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      if (pivots[i] == cols_) return std::nullopt;  // pivot in the rhs column
      x[pivots[i]] = aug(i, cols_);
    }
    return x;
  }

  Scalar det() const {
    if (rows_ != cols_) throw error("det of non-square matrix");
    Matrix tmp = *this;
    Scalar d(1);
    for (std::size_t c = 0; c < cols_; ++c) {
      std::size_t pivot = c;
      while (pivot < rows_ && tmp(pivot, c).is_zero()) ++pivot;
      if (pivot == rows_) return Scalar(0);
      if (pivot != c) {
        std::swap(tmp.data_[c], tmp.data_[pivot]);
        d = -d;
      }
      d *= tmp(c, c);
      Scalar inv = Scalar(1) / tmp(c, c);
      for (std::size_t i = c + 1; i < rows_; ++i) {
        if (tmp(i, c).is_zero()) continue;
        Scalar f = tmp(i, c) * inv;
        for (std::size_t j = c; j < cols_; ++j) tmp(i, j) -= f * tmp(c, j);
      }
    }
    return d;
  }

  std::optional<Matrix> inverse() const {
    if (rows_ != cols_) throw error("inverse of non-square matrix");
    Matrix aug(rows_, 2 * cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = data_[i][j];
      aug(i, cols_ + i) = Scalar(1);
    }
    auto pivots = aug.rref();
    if (pivots.size() != rows_ || pivots.back() >= cols_) return std::nullopt;
    Matrix out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = aug(i, cols_ + j);
    return out;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<std::vector<Scalar>> data_;
};

}  // namespace slw

#endif
