#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "support.hpp"

using namespace ecc_spectra;
using namespace testing_support;

namespace {

constexpr double kTol = 1e-8;

std::vector<double> eigs(const Matrix<double>& m) { return eigen_sym(RealSymMatrix(m)).eigenvalues; }

template <typename T>
Matrix<T> add(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) += b(i, j);
  return c;
}

/// U V with U n x r and V r x n, small integer entries: rank <= r.
IntMatrix low_rank(std::mt19937_64& rng, std::size_t n, std::size_t r, int spread) {
  std::uniform_int_distribution<int> u(-spread, spread);
  IntMatrix a(n, r);
  IntMatrix b(r, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < r; ++j) a(i, j) = u(rng);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < n; ++j) b(i, j) = u(rng);
  return a * b;
}

}  // namespace

TEST(EigenSym, KnownSpectra) {
  // K5: 4 and -1 (x4).
  Matrix<double> k5(5, 5, 1.0);
  for (std::size_t i = 0; i < 5; ++i) k5(i, i) = 0.0;
  const Spectrum s = eigen_sym(RealSymMatrix(k5));
  ASSERT_EQ(s.groups.size(), 2u);
  EXPECT_NEAR(s.groups[0].value, -1.0, kTol);
  EXPECT_EQ(s.groups[0].multiplicity, 4u);
  EXPECT_NEAR(s.groups[1].value, 4.0, kTol);

  // P3: -sqrt2, 0, sqrt2.
  const auto p3 = eigen_sym(antiregular_adjacency(3)).eigenvalues;
  EXPECT_NEAR(p3[0], -std::sqrt(2.0), kTol);
  EXPECT_NEAR(p3[1], 0.0, kTol);
  EXPECT_NEAR(p3[2], std::sqrt(2.0), kTol);

  const Matrix<double> diag{{3, 0, 0}, {0, -1, 0}, {0, 0, 2}};
  EXPECT_EQ(eigs(diag), (std::vector<double>{-1, 2, 3}));

  EXPECT_EQ(eigs(Matrix<double>{{7.5}}), std::vector<double>{7.5});
  EXPECT_TRUE(eigen_sym(RealSymMatrix(Matrix<double>(0, 0))).eigenvalues.empty());
}

TEST(EigenSym, TwoByTwoClosedForm) {
  for (std::size_t t = 0; t < 200; ++t) {
    auto rng = rng_for(31, t);
    const Matrix<double> m = random_symmetric(rng, 2, 5.0);
    const double mean = 0.5 * (m(0, 0) + m(1, 1));
    const double rad = std::hypot(0.5 * (m(0, 0) - m(1, 1)), m(0, 1));
    const auto e = eigs(m);
    EXPECT_NEAR(e[0], mean - rad, kTol);
    EXPECT_NEAR(e[1], mean + rad, kTol);
  }
}

TEST(EigenSym, RejectsAsymmetricInput) {
  EXPECT_THROW(RealSymMatrix(Matrix<double>{{0, 1}, {2, 0}}), NotSymmetric);
  EXPECT_THROW(RealSymMatrix(Matrix<double>(2, 3)), NotSymmetric);
  EXPECT_NO_THROW(RealSymMatrix(Matrix<double>{{0, 1}, {1 + 1e-14, 0}}));
}

TEST(EigenSym, IterationCapRaisesNoConvergence) {
  std::vector<double> diag{1.0, 2.0, 3.0};
  std::vector<double> off{0.0, 1.0, 1.0};
  EXPECT_THROW(detail::implicit_ql(diag, off, 0), NoConvergence);
}

TEST(EigenSym, MatchesJacobiOracle) {
  for (std::size_t t = 0; t < 300; ++t) {
    auto rng = rng_for(32, t);
    const std::size_t n = 1 + rng() % 10;
    const Matrix<double> m = random_symmetric(rng, n, 3.0);
    EXPECT_LT(max_abs_diff(eigs(m), eigenvalues_by_jacobi(m)), 1e-9) << "trial " << t;
  }
}

TEST(EigenSym, MatchesJacobiOnEccentricityMatrices) {
  for (std::size_t t = 0; t < 40; ++t) {
    const auto seq = sample_sequence(33, t, {4, 4, false});
    const IntMatrix e = eccentricity_matrix(build_cograph(seq)).matrix();
    const auto direct = eigen_sym(e).eigenvalues;
    EXPECT_LT(max_abs_diff(direct, eigenvalues_by_jacobi(to_real(e))), 1e-8) << seq.to_string();
  }
}

TEST(EigenSymProperty, TraceAndFrobeniusIdentities) {
  for (std::size_t t = 0; t < 1000; ++t) {
    auto rng = rng_for(34, t);
    const std::size_t n = 1 + rng() % 10;
    const RealSymMatrix m(random_symmetric(rng, n, 4.0));
    const auto e = eigen_sym(m).eigenvalues;
    const double sum = std::accumulate(e.begin(), e.end(), 0.0);
    double squares = 0.0;
    for (double x : e) squares += x * x;
    const double fro2 = m.frobenius_norm() * m.frobenius_norm();
    EXPECT_LE(std::abs(sum - m.trace()), kTol * std::max(1.0, m.frobenius_norm()));
    EXPECT_LE(std::abs(squares - fro2), kTol * std::max(1.0, fro2));
  }
}

TEST(EigenSymProperty, WeylInequalities) {
  for (std::size_t t = 0; t < 1000; ++t) {
    auto rng = rng_for(35, t);
    const std::size_t n = 1 + rng() % 10;
    const Matrix<double> a = random_symmetric(rng, n, 2.0);
    const Matrix<double> b = random_symmetric(rng, n, 2.0);
    const auto ea = eigs(a);
    const auto eb = eigs(b);
    const auto ec = eigs(add(a, b));
    for (std::size_t i = 0; i < n; ++i) {
      EXPECT_GE(ec[i], ea[i] + eb.front() - kTol);
      EXPECT_LE(ec[i], ea[i] + eb.back() + kTol);
    }
  }
}

TEST(EigenSymProperty, CauchyInterlacing) {
  for (std::size_t t = 0; t < 1000; ++t) {
    auto rng = rng_for(36, t);
    const std::size_t n = 2 + rng() % 9;
    const Matrix<double> a = random_symmetric(rng, n, 2.0);
    const std::size_t drop = rng() % n;
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < n; ++i)
      if (i != drop) keep.push_back(i);
    const auto lam = eigs(a);
    const auto mu = eigs(a.principal_submatrix(keep));
    for (std::size_t i = 0; i + 1 < n; ++i) {
      EXPECT_LE(lam[i], mu[i] + kTol);
      EXPECT_LE(mu[i], lam[i + 1] + kTol);
    }
  }
}

TEST(EigenSym, LargeEccentricityMatrixStaysAccurate) {
  const auto seq = GeneratingSequence({20, 30, 25, 40, 35, 50});
  const IntMatrix e = eccentricity_matrix(build_cograph(seq)).matrix();
  const RealSymMatrix m(e);
  const auto s = eigen_sym(m);
  EXPECT_EQ(s.order(), 200u);
  const double sum = std::accumulate(s.eigenvalues.begin(), s.eigenvalues.end(), 0.0);
  EXPECT_LE(std::abs(sum - m.trace()), kTol * m.frobenius_norm());
}

TEST(Grouping, ChainsCloseValuesAndAveragesThem) {
  const auto g = group_eigenvalues({-2.0, -2.0 + 1e-9, 0.0, 1.0, 1.0 + 5e-8, 1.0 + 1e-7}, 1e-7);
  ASSERT_EQ(g.size(), 3u);
  EXPECT_EQ(g[0].multiplicity, 2u);
  EXPECT_EQ(g[2].multiplicity, 3u);
  EXPECT_NEAR(g[2].value, 1.0 + 5e-8, 1e-15);
}

TEST(Bareiss, SmallKnownRanks) {
  EXPECT_EQ(integer_rank(IntMatrix{{1, 2}, {2, 4}}), 1u);
  EXPECT_EQ(integer_rank(IntMatrix{{0, 0}, {0, 0}}), 0u);
  EXPECT_EQ(integer_rank(IntMatrix{{0, 1, 2}, {0, 0, 3}, {0, 0, 0}}), 2u);
  EXPECT_EQ(integer_rank(IntMatrix::identity(7)), 7u);
  EXPECT_EQ(integer_rank(IntMatrix(0, 0)), 0u);
  EXPECT_EQ(integer_rank(IntMatrix{{1, 2, 3}}), 1u);
  // det(A3 + I) = -1 and det(A3) = 0.
  EXPECT_EQ(eigenvalue_multiplicity_exact(antiregular_adjacency(3), -1), 0u);
  EXPECT_EQ(eigenvalue_multiplicity_exact(antiregular_adjacency(3), 0), 1u);
}

TEST(BareissProperty, MatchesDilationRank) {
  for (std::size_t t = 0; t < 400; ++t) {
    auto rng = rng_for(37, t);
    const std::size_t n = 1 + rng() % 9;
    const std::size_t r = rng() % (n + 1);
    const IntMatrix m = low_rank(rng, n, r, 3);
    const std::size_t exact = integer_rank(m);
    EXPECT_LE(exact, r);
    EXPECT_EQ(exact, dilation_rank(m)) << "trial " << t;
    EXPECT_EQ(exact, integer_rank_bigint(m));
  }
}

TEST(Bareiss, FallsBackToBigIntegersOnOverflow) {
  // Entries up to 2^40: 2x2 minors reach 2^81 and their products overflow 128 bits.
  auto rng = rng_for(39, 0);
  std::uniform_int_distribution<std::int64_t> u(-(std::int64_t{1} << 40), std::int64_t{1} << 40);
  IntMatrix m(6, 6);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) m(i, j) = u(rng);
  EXPECT_FALSE(detail::bareiss_rank(detail::widen<detail::Int128>(m)).has_value());
  EXPECT_EQ(integer_rank(m), 6u);
  EXPECT_EQ(integer_rank_bigint(m), 6u);

  // Duplicate a row (scaled) to drop the rank by one.
  for (std::size_t j = 0; j < 6; ++j) m(5, j) = -m(2, j);
  EXPECT_EQ(integer_rank(m), 5u);
}

TEST(Inertia, FromValues) {
  const std::vector<double> v{-3.0, -1e-12, 0.0, 2.0, 5.0};
  EXPECT_EQ(inertia_from_values(v, 2, 1e-9), (Inertia{1, 2, 2}));
  EXPECT_THROW(inertia_from_values(v, 1, 1e-9), InertiaAmbiguous);
  EXPECT_EQ((Inertia{1, 2, 3}).to_string(), "(1,2,3)");
}

TEST(InertiaProperty, CountsMatchSylvesterOracle) {
  for (std::size_t t = 0; t < 300; ++t) {
    auto rng = rng_for(38, t);
    const std::size_t n = 1 + rng() % 8;
    const std::size_t r = rng() % (n + 1);
    IntMatrix m = low_rank(rng, n, r, 2);
    m = add(m, m.transpose());
    const Inertia in = inertia_of(m);
    EXPECT_EQ(in.order(), n);
    EXPECT_EQ(in.zero, n - integer_rank(m));
    // Negative count by LDL^T pivots just below zero.
    const double shift = 1e-6;
    EXPECT_EQ(in.negative, count_below(to_real(m), -shift)) << "trial " << t;
  }
}

TEST(Inertia, RequiresSymmetry) { EXPECT_THROW(inertia_of(IntMatrix{{0, 1}, {0, 0}}), NotSymmetric); }
