#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <string>

#include "ecc_spectra/errors.hpp"
#include "ecc_spectra/linalg/bareiss.hpp"
#include "ecc_spectra/linalg/eigen_sym.hpp"
#include "ecc_spectra/matrix.hpp"

namespace ecc_spectra {

/// (n-, n0, n+): counts of negative, zero and positive eigenvalues.
struct Inertia {
  std::size_t negative = 0;
  std::size_t zero = 0;
  std::size_t positive = 0;

  std::size_t order() const noexcept { return negative + zero + positive; }

  std::string to_string() const {
    return "(" + std::to_string(negative) + "," + std::to_string(zero) + "," + std::to_string(positive) + ")";
  }

  friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Signs of floating-point eigenvalues, with the number of zeros fixed by an
/// exact count. Throws InertiaAmbiguous unless exactly `exact_zeros` values
/// lie within `tol` of zero.
inline Inertia inertia_from_values(std::span<const double> values, std::size_t exact_zeros, double tol) {
  Inertia in;
  for (double x : values) {
    if (std::abs(x) <= tol)
      ++in.zero;
    else if (x < 0.0)
      ++in.negative;
    else
      ++in.positive;
  }
  if (in.zero != exact_zeros) {
    throw InertiaAmbiguous("found " + std::to_string(in.zero) + " eigenvalues within " + std::to_string(tol) +
                           " of zero but the exact nullity is " + std::to_string(exact_zeros));
  }
  return in;
}

/// Inertia of a symmetric integer matrix: n0 from the exact Bareiss rank,
/// n- and n+ from the eigensolver.
inline Inertia inertia_of(const IntMatrix& m) {
  if (!is_symmetric(m)) throw NotSymmetric("inertia_of requires a symmetric matrix");
  const std::size_t nullity = m.rows() - integer_rank(m);
  const Spectrum s = eigen_sym(m);
  return inertia_from_values(s.eigenvalues, nullity, s.tol_used);
}

}  // namespace ecc_spectra
