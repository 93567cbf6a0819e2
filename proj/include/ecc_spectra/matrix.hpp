#pragma once

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "ecc_spectra/errors.hpp"

namespace ecc_spectra {

/// Dense row-major matrix.
template <typename T>
class Matrix {
 public:
  using value_type = T;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, T fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  Matrix(std::initializer_list<std::initializer_list<T>> rows) : rows_(rows.size()) {
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      assert(row.size() == cols_);
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  /// Keeps the rows and columns listed in `keep`, in that order.
  Matrix principal_submatrix(std::span<const std::size_t> keep) const {
    Matrix sub(keep.size(), keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i)
      for (std::size_t j = 0; j < keep.size(); ++j) sub(i, j) = (*this)(keep[i], keep[j]);
    return sub;
  }

  /// Leading t x t block.
  Matrix leading_block(std::size_t t) const {
    Matrix sub(t, t);
    for (std::size_t i = 0; i < t; ++i)
      for (std::size_t j = 0; j < t; ++j) sub(i, j) = (*this)(i, j);
    return sub;
  }

  T trace() const {
    T sum{};
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) sum += (*this)(i, i);
    return sum;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<std::int64_t>;

template <typename T>
bool is_symmetric(const Matrix<T>& m) {
  if (!m.is_square()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i + 1; j < m.cols(); ++j)
      if (m(i, j) != m(j, i)) return false;
  return true;
}

template <typename T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  assert(a.cols() == b.rows());
  Matrix<T> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T aik = a(i, k);
      if (aik == T{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

template <typename T>
std::vector<T> operator*(const Matrix<T>& a, std::span<const T> x) {
  assert(a.cols() == x.size());
  std::vector<T> y(a.rows(), T{});
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
  return y;
}

/// m - shift * I
inline IntMatrix shifted(const IntMatrix& m, std::int64_t shift) {
  IntMatrix out = m;
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) out(i, i) -= shift;
  return out;
}

inline Matrix<double> to_real(const IntMatrix& m) {
  Matrix<double> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = static_cast<double>(m(i, j));
  return out;
}

/// Real symmetric matrix. Construction rejects inputs whose largest asymmetry
/// exceeds 1e-12 relative to the largest entry, then averages the two triangles.
class RealSymMatrix {
 public:
  static constexpr double kSymmetryTolerance = 1e-12;

  RealSymMatrix() = default;

  explicit RealSymMatrix(Matrix<double> m) : m_(std::move(m)) {
    if (!m_.is_square()) throw NotSymmetric("matrix is not square");
    double scale = 0.0;
    double asym = 0.0;
    for (std::size_t i = 0; i < m_.rows(); ++i)
      for (std::size_t j = 0; j < m_.cols(); ++j) {
        scale = std::max(scale, std::abs(m_(i, j)));
        asym = std::max(asym, std::abs(m_(i, j) - m_(j, i)));
      }
    if (asym > kSymmetryTolerance * std::max(1.0, scale)) {
      throw NotSymmetric("matrix asymmetry " + std::to_string(asym) + " exceeds tolerance");
    }
    for (std::size_t i = 0; i < m_.rows(); ++i)
      for (std::size_t j = i + 1; j < m_.cols(); ++j) {
        const double avg = 0.5 * (m_(i, j) + m_(j, i));
        m_(i, j) = avg;
        m_(j, i) = avg;
      }
  }

  explicit RealSymMatrix(const IntMatrix& m) : RealSymMatrix(to_real(m)) {}

  std::size_t order() const noexcept { return m_.rows(); }
  double operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  const Matrix<double>& matrix() const noexcept { return m_; }

  double frobenius_norm() const {
    double sum = 0.0;
    for (std::size_t i = 0; i < m_.rows(); ++i)
      for (std::size_t j = 0; j < m_.cols(); ++j) sum += m_(i, j) * m_(i, j);
    return std::sqrt(sum);
  }

  double trace() const { return m_.trace(); }

 private:
  Matrix<double> m_;
};

}  // namespace ecc_spectra
