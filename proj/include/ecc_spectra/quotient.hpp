#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "ecc_spectra/errors.hpp"
#include "ecc_spectra/graph.hpp"
#include "ecc_spectra/linalg/bareiss.hpp"
#include "ecc_spectra/linalg/eigen_sym.hpp"
#include "ecc_spectra/matrix.hpp"
#include "ecc_spectra/sequence.hpp"

namespace ecc_spectra {

/// Exact fraction num/den with den > 0 and gcd(num, den) = 1.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d = 1) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("Rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const std::int64_t g = std::gcd(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  bool is_integer() const noexcept { return den == 1; }
  double to_double() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
  std::string to_string() const { return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den); }

  friend bool operator==(const Rational&, const Rational&) = default;
};

/// Vertex partition into consecutive index ranges.
class Partition {
 public:
  explicit Partition(std::vector<std::size_t> part_sizes) : sizes_(std::move(part_sizes)) {
    for (std::size_t s : sizes_)
      if (s == 0) throw std::invalid_argument("partition parts must be nonempty");
    for (std::size_t p = 0; p < sizes_.size(); ++p)
      for (std::size_t i = 0; i < sizes_[p]; ++i) part_of_.push_back(p);
  }

  /// V1 | V2 | ... | Vl of a C-graph.
  static Partition canonical(const GeneratingSequence& seq) {
    std::vector<std::size_t> sizes;
    for (int a : seq.alphas()) sizes.push_back(static_cast<std::size_t>(a));
    return Partition(std::move(sizes));
  }

  std::size_t part_count() const noexcept { return sizes_.size(); }
  std::size_t part_size(std::size_t p) const { return sizes_.at(p); }
  std::size_t part_of(std::size_t v) const { return part_of_.at(v); }
  std::size_t vertex_count() const noexcept { return part_of_.size(); }

  std::size_t offset(std::size_t p) const {
    return std::accumulate(sizes_.begin(), sizes_.begin() + static_cast<std::ptrdiff_t>(p), std::size_t{0});
  }

 private:
  std::vector<std::size_t> sizes_;
  std::vector<std::size_t> part_of_;
};

struct QuotientMatrix {
  /// b_ij = average row sum of block (i, j).
  Matrix<Rational> averages;
  /// Every block has constant row sums (checked exactly).
  bool equitable = false;

  IntMatrix to_integer() const {
    IntMatrix out(averages.rows(), averages.cols());
    for (std::size_t i = 0; i < averages.rows(); ++i)
      for (std::size_t j = 0; j < averages.cols(); ++j) {
        if (!averages(i, j).is_integer()) {
          throw NonIntegerAverage("quotient entry (" + std::to_string(i) + "," + std::to_string(j) +
                                  ") = " + averages(i, j).to_string() + " is not an integer");
        }
        out(i, j) = averages(i, j).num;
      }
    return out;
  }
};

inline QuotientMatrix quotient_matrix(const IntMatrix& m, const Partition& p) {
  if (p.vertex_count() != m.rows() || !m.is_square()) {
    throw std::invalid_argument("partition does not cover the matrix index set");
  }
  const std::size_t parts = p.part_count();
  QuotientMatrix q{Matrix<Rational>(parts, parts), true};
  for (std::size_t bi = 0; bi < parts; ++bi) {
    const std::size_t r0 = p.offset(bi);
    for (std::size_t bj = 0; bj < parts; ++bj) {
      const std::size_t c0 = p.offset(bj);
      std::int64_t total = 0;
      std::int64_t first_row = 0;
      for (std::size_t i = 0; i < p.part_size(bi); ++i) {
        std::int64_t row_sum = 0;
        for (std::size_t j = 0; j < p.part_size(bj); ++j) row_sum += m(r0 + i, c0 + j);
        if (i == 0)
          first_row = row_sum;
        else if (row_sum != first_row)
          q.equitable = false;
        total += row_sum;
      }
      q.averages(bi, bj) = Rational(total, static_cast<std::int64_t>(p.part_size(bi)));
    }
  }
  return q;
}

/// Closed-form 2k x 2k quotient matrix of the eccentricity matrix of an
/// in-scope C-graph, row by row (parts numbered from 1):
///   odd row i:   2 a_j for every j < i and every odd j > i
///   even row i:  2(a_i - 1) on the diagonal, 2 a_j for odd j > i
///   row 2k:      only 2(a_2k - 1) on the diagonal; column 2k is otherwise 0
inline IntMatrix build_q2k(const GeneratingSequence& seq) {
  require_main_scope(seq);
  const std::size_t l = seq.length();
  IntMatrix q(l, l);
  for (std::size_t i = 1; i < l; ++i) {
    for (std::size_t j = 1; j < l; ++j) {
      const std::int64_t a = seq.part_size(j);
      if (i % 2 == 1) {
        if (j < i || (j > i && j % 2 == 1)) q(i - 1, j - 1) = 2 * a;
      } else {
        if (j == i) q(i - 1, j - 1) = 2 * (a - 1);
        if (j > i && j % 2 == 1) q(i - 1, j - 1) = 2 * a;
      }
    }
  }
  q(l - 1, l - 1) = 2 * (static_cast<std::int64_t>(seq.last_part_size()) - 1);
  return q;
}

/// Q2k with its last row and column removed.
inline IntMatrix build_qtilde(const GeneratingSequence& seq) { return build_q2k(seq).leading_block(seq.length() - 1); }

/// R = D^(1/2) Q D^(-1/2) for the diagonal D = diag(d). Throws NotSymmetric if
/// the result is not symmetric to 1e-12.
inline RealSymMatrix symmetrize(const IntMatrix& q, const std::vector<std::int64_t>& d) {
  Matrix<double> r(q.rows(), q.cols());
  for (std::size_t i = 0; i < q.rows(); ++i)
    for (std::size_t j = 0; j < q.cols(); ++j)
      r(i, j) = static_cast<double>(q(i, j)) * std::sqrt(static_cast<double>(d[i]) / static_cast<double>(d[j]));
  return RealSymMatrix(std::move(r));
}

/// (a1, ..., a_{2k-1}): the diagonal of D.
inline std::vector<std::int64_t> reduced_part_sizes(const GeneratingSequence& seq) {
  return {seq.alphas().begin(), seq.alphas().end() - 1};
}

/// Diagonal of D~: (a_i - 1)/a_i on even parts, 0 on odd parts, for i < 2k.
inline std::vector<Rational> dtilde_diagonal(const GeneratingSequence& seq) {
  std::vector<Rational> out;
  for (std::size_t i = 1; i < seq.length(); ++i)
    out.push_back(i % 2 == 0 ? Rational(seq.part_size(i) - 1, seq.part_size(i)) : Rational(0));
  return out;
}

/// R via the symmetric similarity of Q~.
inline RealSymMatrix symmetrize_r(const GeneratingSequence& seq) {
  return symmetrize(build_qtilde(seq), reduced_part_sizes(seq));
}

/// 2 D^(1/2) (A_{2k-1} + D~) D^(1/2), built from the antiregular adjacency.
inline Matrix<double> r_via_antiregular(const GeneratingSequence& seq) {
  require_main_scope(seq);
  const std::size_t m = seq.length() - 1;
  const IntMatrix a = antiregular_adjacency(m);
  const auto d = reduced_part_sizes(seq);
  const auto dt = dtilde_diagonal(seq);
  Matrix<double> r(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const double inner = static_cast<double>(a(i, j)) + (i == j ? dt[i].to_double() : 0.0);
      r(i, j) = 2.0 * std::sqrt(static_cast<double>(d[i])) * inner * std::sqrt(static_cast<double>(d[j]));
    }
  return r;
}

/// Symmetric image D^(1/2) Q2k D^(-1/2) of the full quotient (order 2k).
inline RealSymMatrix symmetrized_q2k(const GeneratingSequence& seq) {
  const std::vector<std::int64_t> d(seq.alphas().begin(), seq.alphas().end());
  return symmetrize(build_q2k(seq), d);
}

/// Tridiagonal matrix row equivalent to Q~, written down from the part sizes.
/// Rows are numbered from 1; a(i) is the size of part i.
///   row 1:          (0, -2(a2 - 1))
///   even row r:     2a(r-1), 2a(r), -2a(r+1)               at columns r-1, r, r+1
///   odd row r >= 3: 2(a(r-1) - 1), 2a(r), -2(a(r+1) - 1)   at columns r-1, r, r+1
/// Entries that would fall past column 2k-1 are dropped.
inline IntMatrix tridiagonal_t(const GeneratingSequence& seq) {
  require_main_scope(seq);
  const std::size_t m = seq.length() - 1;
  auto a = [&](std::size_t i) -> std::int64_t { return seq.part_size(i); };
  IntMatrix t(m, m);
  t(0, 1) = -2 * (a(2) - 1);
  for (std::size_t r = 2; r <= m; ++r) {
    const std::int64_t left = r % 2 == 0 ? 2 * a(r - 1) : 2 * (a(r - 1) - 1);
    t(r - 1, r - 2) = left;
    t(r - 1, r - 1) = 2 * a(r);
    if (r < m) t(r - 1, r) = r % 2 == 0 ? -2 * a(r + 1) : -2 * (a(r + 1) - 1);
  }
  return t;
}

/// Tridiagonal matrix row equivalent to Q~ + 2I.
///   row 1:          (2, -2a2)
///   even row r:     2(a(r-1) - 1), 2a(r), 2(1 - a(r+1))
///   odd row r >= 3: 2a(r-1), 2a(r), -2a(r+1)
inline IntMatrix tridiagonal_s(const GeneratingSequence& seq) {
  require_main_scope(seq);
  const std::size_t m = seq.length() - 1;
  auto a = [&](std::size_t i) -> std::int64_t { return seq.part_size(i); };
  IntMatrix s(m, m);
  s(0, 0) = 2;
  s(0, 1) = -2 * a(2);
  for (std::size_t r = 2; r <= m; ++r) {
    s(r - 1, r - 2) = r % 2 == 0 ? 2 * (a(r - 1) - 1) : 2 * a(r - 1);
    s(r - 1, r - 1) = 2 * a(r);
    if (r < m) s(r - 1, r) = r % 2 == 0 ? 2 * (1 - a(r + 1)) : -2 * a(r + 1);
  }
  return s;
}

struct QuotientBundle {
  IntMatrix q2k;
  IntMatrix qtilde;
  RealSymMatrix r;
  std::vector<std::int64_t> d_diagonal;
  std::vector<Rational> dtilde_diagonal;
};

inline QuotientBundle make_quotient_bundle(const GeneratingSequence& seq) {
  QuotientBundle b;
  b.q2k = build_q2k(seq);
  b.qtilde = b.q2k.leading_block(seq.length() - 1);
  b.d_diagonal = reduced_part_sizes(seq);
  b.dtilde_diagonal = dtilde_diagonal(seq);
  b.r = symmetrize(b.qtilde, b.d_diagonal);
  return b;
}

/// Eigenvalues of Q2k, ascending: Spec(R) together with 2(a_2k - 1).
/// Q2k itself is never handed to the symmetric solver.
inline Spectrum quotient_spectrum(const GeneratingSequence& seq) {
  Spectrum r = eigen_sym(symmetrize_r(seq));
  std::vector<double> values = r.eigenvalues;
  values.push_back(2.0 * (seq.last_part_size() - 1));
  return make_spectrum(std::move(values));
}

}  // namespace ecc_spectra
