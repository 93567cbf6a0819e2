#pragma once

// Seeded generators and independent oracles shared by the test binaries.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "ecc_spectra/ecc_spectra.hpp"

namespace testing_support {

using ecc_spectra::GeneratingSequence;
using ecc_spectra::IntMatrix;
using ecc_spectra::Matrix;

inline std::mt19937_64 rng_for(std::uint64_t seed, std::size_t index) {
  return std::mt19937_64(ecc_spectra::splitmix64(seed ^ ecc_spectra::splitmix64(index)));
}

/// Any positive sequence of length in [1, max_len] (not only in-scope ones).
inline GeneratingSequence random_sequence(std::mt19937_64& rng, std::size_t max_len, int max_alpha) {
  std::uniform_int_distribution<std::size_t> len(1, max_len);
  std::uniform_int_distribution<int> part(1, max_alpha);
  std::vector<int> a(len(rng));
  for (auto& x : a) x = part(rng);
  return GeneratingSequence(std::move(a));
}

inline Matrix<double> random_symmetric(std::mt19937_64& rng, std::size_t n, double scale = 1.0) {
  std::uniform_real_distribution<double> u(-scale, scale);
  Matrix<double> m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = u(rng);
  return m;
}

inline IntMatrix random_int_symmetric(std::mt19937_64& rng, std::size_t n, int lo, int hi) {
  std::uniform_int_distribution<int> u(lo, hi);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = u(rng);
  return m;
}

/// Floyd-Warshall distances; -1 for unreachable pairs.
inline IntMatrix floyd_warshall(const IntMatrix& adj) {
  const std::size_t n = adj.rows();
  const std::int64_t inf = static_cast<std::int64_t>(n) + 1;
  IntMatrix d(n, n, inf);
  for (std::size_t i = 0; i < n; ++i) {
    d(i, i) = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (adj(i, j)) d(i, j) = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d(i, j) = std::min(d(i, j), d(i, k) + d(k, j));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (d(i, j) == inf) d(i, j) = -1;
  return d;
}

/// Eccentricity matrix straight from the definition on a distance matrix.
inline IntMatrix ecc_by_definition(const IntMatrix& d) {
  const std::size_t n = d.rows();
  std::vector<std::int64_t> e(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) e[i] = std::max(e[i], d(i, j));
  IntMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (d(i, j) == std::min(e[i], e[j])) out(i, j) = d(i, j);
  return out;
}

/// Adjacency of C(a1..al) without building intermediate graphs. Part i is
/// touched by l - i + 1 complements after it is added: inside a part the
/// clique survives iff that count is even, and across parts i < j the pair
/// starts non-adjacent when part j arrives and ends adjacent iff l - j + 1 is odd.
inline IntMatrix cograph_by_rule(const GeneratingSequence& seq) {
  const std::size_t n = seq.order();
  const std::size_t l = seq.length();
  std::vector<std::size_t> part(n);
  for (std::size_t i = 1, v = 0; i <= l; ++i)
    for (int c = 0; c < seq.part_size(i); ++c) part[v++] = i;
  IntMatrix a(n, n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      if (u == v) continue;
      const std::size_t later = std::max(part[u], part[v]);
      const bool same = part[u] == part[v];
      const std::size_t flips = l - later + 1;
      a(u, v) = (flips % 2 == 0) == same ? 1 : 0;
    }
  return a;
}

/// Number of eigenvalues of symmetric m strictly below t, by counting negative
/// pivots of the LDL^T factorization of m - tI (Sylvester's law of inertia).
inline std::size_t count_below(const Matrix<double>& m, double t) {
  const std::size_t n = m.rows();
  Matrix<double> a = m;
  for (std::size_t i = 0; i < n; ++i) a(i, i) -= t;
  std::size_t negatives = 0;
  for (std::size_t k = 0; k < n; ++k) {
    double pivot = a(k, k);
    if (pivot == 0.0) pivot = -1e-300;
    if (pivot < 0.0) ++negatives;
    for (std::size_t i = k + 1; i < n; ++i) {
      const double f = a(i, k) / pivot;
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return negatives;
}

/// Eigenvalues by cyclic Jacobi rotations, independent of the QL solver.
inline std::vector<double> eigenvalues_by_jacobi(const Matrix<double>& m, double tol = 1e-14) {
  const std::size_t n = m.rows();
  Matrix<double> a = m;
  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) scale += a(i, j) * a(i, j);
  scale = std::max(1.0, std::sqrt(scale));
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += a(i, j) * a(i, j);
    if (std::sqrt(off) <= tol * scale) break;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        if (a(p, q) == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
      }
  }
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = a(i, i);
  std::sort(out.begin(), out.end());
  return out;
}

/// Rank from the spectrum of the symmetric dilation [[0, M], [M^T, 0]], whose
/// nonzero eigenvalues are the +- singular values of M.
inline std::size_t dilation_rank(const IntMatrix& m, double rel_tol = 1e-9) {
  const std::size_t r = m.rows();
  const std::size_t c = m.cols();
  Matrix<double> big(r + c, r + c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) big(i, r + j) = big(r + j, i) = static_cast<double>(m(i, j));
  const auto s = ecc_spectra::eigen_sym(ecc_spectra::RealSymMatrix(big));
  const double cutoff = rel_tol * std::max(1.0, s.spectral_norm());
  std::size_t nonzero = 0;
  for (double x : s.eigenvalues)
    if (std::abs(x) > cutoff) ++nonzero;
  return nonzero / 2;
}

inline double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

}  // namespace testing_support
