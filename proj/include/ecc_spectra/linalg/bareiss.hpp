#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <type_traits>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "ecc_spectra/matrix.hpp"

namespace ecc_spectra {

namespace detail {

using Int128 = __int128;
using BigInt = boost::multiprecision::cpp_int;

// a*b - c*d, or nullopt on 128-bit overflow.
inline std::optional<Int128> cross_difference(Int128 a, Int128 b, Int128 c, Int128 d) {
  Int128 ab = 0;
  Int128 cd = 0;
  Int128 out = 0;
  if (__builtin_mul_overflow(a, b, &ab) || __builtin_mul_overflow(c, d, &cd) || __builtin_sub_overflow(ab, cd, &out)) {
    return std::nullopt;
  }
  return out;
}

inline BigInt cross_difference(const BigInt& a, const BigInt& b, const BigInt& c, const BigInt& d) {
  return a * b - c * d;
}

/// Fraction-free (Bareiss) elimination to row-echelon form. Every
/// intermediate entry is a minor of the input, so the division by the
/// previous pivot is exact. Returns nullopt if the integer type overflows.
template <typename Int>
std::optional<std::size_t> bareiss_rank(Matrix<Int> a) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  Int previous_pivot = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a(pivot, col) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(pivot, j), a(rank, j));
    const Int p = a(rank, col);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const Int lead = a(i, col);
      for (std::size_t j = col + 1; j < cols; ++j) {
        if constexpr (std::is_same_v<Int, Int128>) {
          auto value = cross_difference(p, a(i, j), lead, a(rank, j));
          if (!value) return std::nullopt;
          if (*value % previous_pivot != 0) throw std::logic_error("Bareiss: inexact division");
          a(i, j) = *value / previous_pivot;
        } else {
          Int value = cross_difference(p, a(i, j), lead, a(rank, j));
          if (value % previous_pivot != 0) throw std::logic_error("Bareiss: inexact division");
          a(i, j) = value / previous_pivot;
        }
      }
      a(i, col) = 0;
    }
    previous_pivot = p;
    ++rank;
  }
  return rank;
}

template <typename Int>
Matrix<Int> widen(const IntMatrix& m) {
  Matrix<Int> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Int(m(i, j));
  return out;
}

}  // namespace detail

/// Exact rank of an integer matrix. Runs Bareiss elimination on 128-bit
/// integers and falls back to arbitrary precision if any step overflows.
inline std::size_t integer_rank(const IntMatrix& m) {
  if (auto rank = detail::bareiss_rank(detail::widen<detail::Int128>(m))) return *rank;
  return *detail::bareiss_rank(detail::widen<detail::BigInt>(m));
}

/// Same as integer_rank but always on arbitrary-precision integers.
inline std::size_t integer_rank_bigint(const IntMatrix& m) {
  return *detail::bareiss_rank(detail::widen<detail::BigInt>(m));
}

/// Multiplicity of the integer eigenvalue t of a symmetric integer matrix:
/// order - rank(M - tI), computed exactly.
inline std::size_t eigenvalue_multiplicity_exact(const IntMatrix& m, std::int64_t t) {
  return m.rows() - integer_rank(shifted(m, t));
}

}  // namespace ecc_spectra
