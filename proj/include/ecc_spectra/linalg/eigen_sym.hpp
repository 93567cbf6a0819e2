#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "ecc_spectra/errors.hpp"
#include "ecc_spectra/matrix.hpp"

namespace ecc_spectra {

struct EigenGroup {
  double value = 0.0;
  std::size_t multiplicity = 0;

  friend bool operator==(const EigenGroup&, const EigenGroup&) = default;
};

/// Eigenvalues in non-decreasing order plus a grouping into distinct values.
struct Spectrum {
  std::vector<double> eigenvalues;
  std::vector<EigenGroup> groups;
  double tol_used = 0.0;

  std::size_t order() const noexcept { return eigenvalues.size(); }
  std::size_t distinct_count() const noexcept { return groups.size(); }

  double spectral_norm() const {
    if (eigenvalues.empty()) return 0.0;
    return std::max(std::abs(eigenvalues.front()), std::abs(eigenvalues.back()));
  }

  /// Number of eigenvalues within tol_used of `value`.
  std::size_t count_near(double value) const {
    return static_cast<std::size_t>(std::count_if(eigenvalues.begin(), eigenvalues.end(),
                                                  [&](double x) { return std::abs(x - value) <= tol_used; }));
  }
};

/// Relative tolerance used to group numerically equal eigenvalues.
inline constexpr double kGroupingTolerance = 1e-7;

/// Groups sorted values: a value joins the current group when it is within
/// `tol` of the previous one. Group value is the mean of its members.
inline std::vector<EigenGroup> group_eigenvalues(const std::vector<double>& sorted, double tol) {
  std::vector<EigenGroup> groups;
  double sum = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i == 0 || sorted[i] - sorted[i - 1] > tol) {
      if (!groups.empty()) groups.back().value = sum / static_cast<double>(groups.back().multiplicity);
      groups.push_back({sorted[i], 0});
      sum = 0.0;
    }
    groups.back().multiplicity += 1;
    sum += sorted[i];
  }
  if (!groups.empty()) groups.back().value = sum / static_cast<double>(groups.back().multiplicity);
  return groups;
}

inline Spectrum make_spectrum(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  Spectrum s;
  s.eigenvalues = std::move(values);
  s.tol_used = kGroupingTolerance * std::max(1.0, s.spectral_norm());
  s.groups = group_eigenvalues(s.eigenvalues, s.tol_used);
  return s;
}

namespace detail {

/// Householder reduction of a symmetric matrix (lower triangle used) to
/// tridiagonal form. On return `diag` holds the diagonal and `offdiag[i]`
/// the element coupling rows i-1 and i (offdiag[0] = 0). Eigenvectors are
/// not accumulated.
inline void householder_tridiagonalize(Matrix<double> a, std::vector<double>& diag, std::vector<double>& offdiag) {
  const std::size_t n = a.rows();
  diag.assign(n, 0.0);
  offdiag.assign(n, 0.0);
  if (n == 0) return;
  for (std::size_t i = n; i-- > 1;) {
    const std::size_t l = i - 1;
    double h = 0.0;
    if (l > 0) {
      double scale = 0.0;
      for (std::size_t k = 0; k <= l; ++k) scale += std::abs(a(i, k));
      if (scale == 0.0) {
        offdiag[i] = a(i, l);
      } else {
        for (std::size_t k = 0; k <= l; ++k) {
          a(i, k) /= scale;
          h += a(i, k) * a(i, k);
        }
        double f = a(i, l);
        double g = f >= 0.0 ? -std::sqrt(h) : std::sqrt(h);
        offdiag[i] = scale * g;
        h -= f * g;
        a(i, l) = f - g;
        f = 0.0;
        for (std::size_t j = 0; j <= l; ++j) {
          g = 0.0;
          for (std::size_t k = 0; k <= j; ++k) g += a(j, k) * a(i, k);
          for (std::size_t k = j + 1; k <= l; ++k) g += a(k, j) * a(i, k);
          offdiag[j] = g / h;
          f += offdiag[j] * a(i, j);
        }
        const double hh = f / (h + h);
        for (std::size_t j = 0; j <= l; ++j) {
          f = a(i, j);
          g = offdiag[j] - hh * f;
          offdiag[j] = g;
          for (std::size_t k = 0; k <= j; ++k) a(j, k) -= f * offdiag[k] + g * a(i, k);
        }
      }
    } else {
      offdiag[i] = a(i, l);
    }
  }
  offdiag[0] = 0.0;
  for (std::size_t i = 0; i < n; ++i) diag[i] = a(i, i);
}

/// Implicit-shift QL on a symmetric tridiagonal matrix. `offdiag` follows the
/// layout produced by householder_tridiagonalize. Eigenvalues land in `diag`.
inline void implicit_ql(std::vector<double>& diag, std::vector<double>& offdiag, int max_iterations = 50) {
  const std::size_t n = diag.size();
  if (n == 0) return;
  for (std::size_t i = 1; i < n; ++i) offdiag[i - 1] = offdiag[i];
  offdiag[n - 1] = 0.0;
  constexpr double eps = std::numeric_limits<double>::epsilon();

  for (std::size_t l = 0; l < n; ++l) {
    int iterations = 0;
    std::size_t m = l;
    do {
      for (m = l; m + 1 < n; ++m) {
        const double dd = std::abs(diag[m]) + std::abs(diag[m + 1]);
        if (std::abs(offdiag[m]) <= eps * dd) break;
      }
      if (m != l) {
        if (iterations++ == max_iterations) {
          throw NoConvergence("implicit QL did not converge for eigenvalue " + std::to_string(l) + " within " +
                              std::to_string(max_iterations) + " iterations");
        }
        double g = (diag[l + 1] - diag[l]) / (2.0 * offdiag[l]);
        double r = std::hypot(g, 1.0);
        g = diag[m] - diag[l] + offdiag[l] / (g + (g >= 0.0 ? std::abs(r) : -std::abs(r)));
        double s = 1.0;
        double c = 1.0;
        double p = 0.0;
        bool underflow = false;
        for (std::size_t i = m; i-- > l;) {
          double f = s * offdiag[i];
          const double b = c * offdiag[i];
          r = std::hypot(f, g);
          offdiag[i + 1] = r;
          if (r == 0.0) {
            diag[i + 1] -= p;
            offdiag[m] = 0.0;
            underflow = true;
            break;
          }
          s = f / r;
          c = g / r;
          g = diag[i + 1] - p;
          r = (diag[i] - g) * s + 2.0 * c * b;
          p = s * r;
          diag[i + 1] = g + p;
          g = c * r - b;
        }
        if (underflow) continue;
        diag[l] -= p;
        offdiag[l] = g;
        offdiag[m] = 0.0;
      }
    } while (m != l);
  }
}

}  // namespace detail

/// All eigenvalues of a real symmetric matrix: Householder tridiagonalization
/// followed by implicit-shift QL. Multiplicities are grouped with tolerance
/// 1e-7 * max(1, ||M||_2).
inline Spectrum eigen_sym(const RealSymMatrix& m) {
  std::vector<double> diag;
  std::vector<double> offdiag;
  detail::householder_tridiagonalize(m.matrix(), diag, offdiag);
  detail::implicit_ql(diag, offdiag);
  return make_spectrum(std::move(diag));
}

inline Spectrum eigen_sym(const IntMatrix& m) { return eigen_sym(RealSymMatrix(m)); }

}  // namespace ecc_spectra
