#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace weylclifford;

namespace {

const RationalMatrix printed_L{
    {1, 0, 0, 0, 0, 0}, {1, 1, 0, 0, 0, 0}, {0, 1, 1, 0, 0, 0},
    {0, 1, 1, 1, 0, 0}, {0, 1, 0, 1, 1, 0}, {0, 1, 0, 1, 1, 1},
};

const RationalMatrix printed_Lprime{
    {1, 0, 0, 0, 0, 0},   {0, 1, 0, 0, 0, 0},   {-1, 1, 1, 0, 0, 0},
    {-1, 1, 0, 1, 0, 0},  {-1, 1, -1, 1, 1, 0}, {-1, 1, -1, 1, 0, 1},
};

RationalMatrix oracle_transform(const RationalMatrix &g, const RationalMatrix &h) {
  return oracle::matmul(oracle::matmul(g, h), g.transpose());
}

// Built entry by entry from the definitions.
RationalMatrix oracle_hc(std::size_t n) {
  RationalMatrix h(n, n);
  for (std::size_t k = 0; k + 1 < n; k += 2) {
    h(k, k + 1) = 1;
    h(k + 1, k) = -1;
  }
  return h;
}

RationalMatrix oracle_hpm(std::size_t n) {
  RationalMatrix h(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) h(r, c) = r < c ? 1 : (r > c ? -1 : 0);
  return h;
}

} // namespace

TEST(Commforms, CanonicalForm) {
  EXPECT_EQ(canonical_form(2).matrix(), (RationalMatrix{{0, 1}, {-1, 0}}));
  EXPECT_EQ(canonical_form(4).matrix(), (RationalMatrix{{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}}));
  for (std::size_t n = 2; n <= 12; n += 2) {
    EXPECT_EQ(canonical_form(n).matrix(), oracle_hc(n));
    EXPECT_TRUE(canonical_form(n).matrix().is_antisymmetric());
  }
  EXPECT_THROW(canonical_form(3), InvalidArgument);
  EXPECT_THROW(canonical_form(0), InvalidArgument);
}

TEST(Commforms, CliffordForm) {
  EXPECT_EQ(clifford_form(2), canonical_form(2));
  EXPECT_EQ(clifford_form(3).matrix(), (RationalMatrix{{0, 1, 1}, {-1, 0, 1}, {-1, -1, 0}}));
  for (std::size_t n = 2; n <= 12; ++n) {
    EXPECT_EQ(clifford_form(n).matrix(), oracle_hpm(n));
    EXPECT_EQ(clifford_form(n).matrix(), -clifford_form(n).matrix().transpose());
  }
}

TEST(Commforms, FormRejectsNonAntisymmetric) {
  EXPECT_THROW(CommutatorForm(RationalMatrix{{0, 1}, {1, 0}}), InvalidArgument);
  EXPECT_THROW(CommutatorForm(RationalMatrix{{1, 0}, {0, 0}}), InvalidArgument);
}

TEST(Commforms, TransformForm) {
  const auto h = clifford_form(4);
  EXPECT_EQ(transform_form(RationalMatrix::identity(4), h), h);
  EXPECT_EQ(transform_form(Rational(2) * RationalMatrix::identity(4), h).matrix(), Rational(4) * h.matrix());
  EXPECT_THROW(transform_form(RationalMatrix::identity(3), h), DimensionMismatch);
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<int> d(-5, 5);
  for (int t = 0; t < 20; ++t) {
    RationalMatrix g(4, 4);
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c) g(r, c) = Rational(d(rng), 3);
    const auto out = transform_form(g, h);
    EXPECT_TRUE(out.matrix().is_antisymmetric());
    EXPECT_EQ(out.matrix(), oracle_transform(g, h.matrix()));
  }
}

TEST(Commforms, PrintedMatrices) {
  EXPECT_EQ(matrix_L(6), printed_L);
  EXPECT_EQ(matrix_Lprime(6), printed_Lprime);
  EXPECT_EQ(oracle_transform(printed_L, oracle_hc(6)), oracle_hpm(6));
  EXPECT_EQ(oracle_transform(printed_Lprime, oracle_hc(6)), oracle_hpm(6));
  // Leading blocks of larger n agree with the printed corner.
  for (std::size_t n = 8; n <= 12; n += 2) {
    const auto l = matrix_L(n), lp = matrix_Lprime(n);
    for (std::size_t r = 0; r < 6; ++r)
      for (std::size_t c = 0; c < 6; ++c) {
        EXPECT_EQ(l(r, c), printed_L(r, c));
        EXPECT_EQ(lp(r, c), printed_Lprime(r, c));
      }
  }
  EXPECT_THROW(matrix_L(5), InvalidArgument);
  EXPECT_THROW(matrix_Lprime(7), InvalidArgument);
}

TEST(Commforms, TransportIdentityAllSizes) {
  for (std::size_t n = 2; n <= 12; n += 2) {
    const auto hc = canonical_form(n);
    EXPECT_EQ(transform_form(matrix_L(n), hc), clifford_form(n)) << n;
    EXPECT_EQ(transform_form(matrix_Lprime(n), hc), clifford_form(n)) << n;
    EXPECT_EQ(oracle_transform(matrix_L(n), oracle_hc(n)), oracle_hpm(n));
    EXPECT_EQ(oracle_transform(matrix_Lprime(n), oracle_hc(n)), oracle_hpm(n));
    EXPECT_EQ(matrix_L(n).determinant(), 1);
    EXPECT_EQ(matrix_Lprime(n).determinant(), 1);
    for (std::size_t r = 0; r < n; ++r) {
      EXPECT_EQ(matrix_L(n)(r, r), 1);
      for (std::size_t c = r + 1; c < n; ++c) {
        EXPECT_EQ(matrix_L(n)(r, c), 0);
        EXPECT_EQ(matrix_Lprime(n)(r, c), 0);
      }
    }
  }
}

TEST(Commforms, SignFlipRegression) {
  for (std::size_t r = 0; r < 6; ++r)
    for (std::size_t c = 0; c < 6; ++c) {
      if (printed_Lprime(r, c) != -1) continue;
      RationalMatrix wrong = printed_Lprime;
      wrong(r, c) = 1;
      EXPECT_NE(transform_form(wrong, canonical_form(6)), clifford_form(6)) << r << " " << c;
    }
}

TEST(Commforms, Symplectic) {
  EXPECT_TRUE(is_symplectic(RationalMatrix::identity(4)));
  EXPECT_FALSE(is_symplectic(Rational(2) * RationalMatrix::identity(4)));
  EXPECT_EQ(diagonal_symplectic({1, 1}), RationalMatrix::identity(4));
  const auto d2 = diagonal_symplectic({2});
  EXPECT_EQ(d2(0, 0), 2);
  EXPECT_EQ(d2(1, 1), Rational(1, 2));
  EXPECT_TRUE(is_symplectic(diagonal_symplectic({3, Rational(1, 5)})));
  EXPECT_THROW(diagonal_symplectic({1, 0}), InvalidArgument);
  EXPECT_FALSE(is_symplectic(RationalMatrix::identity(3)));
}

TEST(Commforms, ConjugateToN) {
  EXPECT_EQ(conjugate_to_N(RationalMatrix::identity(6)), RationalMatrix::identity(6));
  const auto n2 = conjugate_to_N(diagonal_symplectic({2}));
  EXPECT_EQ(oracle_transform(n2, oracle_hpm(2)), oracle_hpm(2));
  EXPECT_THROW(conjugate_to_N(Rational(2) * RationalMatrix::identity(4)), NotSymplectic);

  std::mt19937_64 rng(50);
  for (std::size_t n : {2u, 4u, 6u, 8u}) {
    for (int t = 0; t < 50; ++t) {
      const auto s = oracle::random_symplectic(n, rng);
      ASSERT_TRUE(is_symplectic(s));
      ASSERT_EQ(oracle_transform(s, oracle_hc(n)), oracle_hc(n));
      const auto ns = conjugate_to_N(s);
      EXPECT_EQ(oracle_transform(ns, oracle_hpm(n)), oracle_hpm(n)) << n;
      const auto s2 = oracle::random_symplectic(n, rng);
      EXPECT_EQ(conjugate_to_N(oracle::matmul(s, s2)), oracle::matmul(ns, conjugate_to_N(s2)));
    }
  }
}

TEST(Commforms, RationalMatrixAlgebra) {
  const RationalMatrix a{{2, 1}, {7, 4}};
  EXPECT_EQ(a.determinant(), 1);
  EXPECT_EQ(a * a.inverse(), RationalMatrix::identity(2));
  EXPECT_THROW((RationalMatrix{{1, 2}, {2, 4}}).inverse(), SingularMatrix);
  std::mt19937_64 rng(2);
  for (int t = 0; t < 10; ++t) {
    const auto s = oracle::random_symplectic(6, rng);
    EXPECT_EQ(s.determinant(), 1);
    EXPECT_EQ(oracle::matmul(s, s.inverse()), RationalMatrix::identity(6));
  }
}
