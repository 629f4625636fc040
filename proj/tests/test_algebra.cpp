#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace weylclifford;

namespace {

AlgebraElement random_element(const AlgebraSignature &sig, CoefficientStream &rng, int max_terms = 6) {
  AlgebraElement x(sig);
  const long terms = rng.integer(1, max_terms);
  const long top = sig.mode() == AlgebraMode::strict ? sig.l() - 1 : sig.l() + 1;
  for (long t = 0; t < terms; ++t) {
    Monomial m(static_cast<std::size_t>(sig.n()));
    for (auto &e : m) e = rng.integer(0, top);
    x += AlgebraElement::term(sig, m, rng.cyclotomic(sig.field()));
  }
  return x;
}

// Dense evaluation by the oracle monomial product.
ComplexMatrix oracle_matrix(const AlgebraElement &x, const std::vector<ComplexMatrix> &rep) {
  const auto d = rep.front().rows();
  ComplexMatrix out = ComplexMatrix::Zero(d, d);
  for (const auto &[m, c] : x.terms()) out += c.to_complex() * oracle::monomial(m, rep);
  return out;
}

std::vector<CyclotomicNumber> random_coeffs(const AlgebraSignature &sig, CoefficientStream &rng) {
  std::vector<CyclotomicNumber> a;
  for (int k = 0; k < sig.n(); ++k) a.push_back(rng.cyclotomic(sig.field()));
  return a;
}

} // namespace

TEST(Algebra, Generators) {
  const AlgebraSignature sig(2, 3);
  const auto one = CyclotomicNumber::one(sig.field());
  EXPECT_EQ(generator(sig, 1), AlgebraElement::term(sig, {1, 0}, one));
  EXPECT_EQ(generator(sig, 2), AlgebraElement::term(sig, {0, 1}, one));
  EXPECT_EQ(power(generator(sig, 1), 3), AlgebraElement::identity(sig));
  EXPECT_THROW(generator(sig, 0), InvalidArgument);
  EXPECT_THROW(generator(sig, 3), InvalidArgument);
}

TEST(Algebra, ReorderingExamples) {
  const AlgebraSignature sig(2, 3);
  const auto t1 = generator(sig, 1), t2 = generator(sig, 2);
  EXPECT_EQ(multiply(t1, t2), AlgebraElement::term(sig, {1, 1}, sig.zeta_pow(0)));
  EXPECT_EQ(multiply(t2, t1), AlgebraElement::term(sig, {1, 1}, sig.zeta_pow(2)));
  EXPECT_EQ(multiply(power(t2, 2), t1), AlgebraElement::term(sig, {1, 2}, sig.zeta_pow(1)));

  // Pin the phase convention against U, V with U V = zeta V U.
  const std::vector<ComplexMatrix> rep{oracle::shift(3), oracle::clock(3)};
  const ComplexMatrix want = oracle::mpow(rep[1], 2) * rep[0];
  EXPECT_LE((oracle_matrix(multiply(power(t2, 2), t1), rep) - want).norm(), 1e-13);
}

TEST(Algebra, RelationSet) {
  for (int n = 2; n <= 4; ++n)
    for (int l = 2; l <= 7; ++l) {
      const AlgebraSignature sig(n, l);
      for (int j = 1; j <= n; ++j)
        for (int k = j + 1; k <= n; ++k) {
          const auto tj = generator(sig, j), tk = generator(sig, k);
          EXPECT_EQ(tj * tk, sig.zeta_pow(1) * (tk * tj));
        }
      for (int k = 1; k <= n; ++k) EXPECT_EQ(power(generator(sig, k), l), AlgebraElement::identity(sig));
    }
}

TEST(Algebra, AddAndScale) {
  const AlgebraSignature sig(2, 3);
  CoefficientStream rng(5);
  const auto t1 = generator(sig, 1);
  EXPECT_EQ(add(t1, t1), AlgebraElement::term(sig, {1, 0}, CyclotomicNumber::from_rational(sig.field(), 2)));
  const auto x = random_element(sig, rng);
  EXPECT_TRUE(scale(CyclotomicNumber::zero(sig.field()), x).is_zero());
  EXPECT_TRUE(add(x, scale(CyclotomicNumber::from_rational(sig.field(), -1), x)).is_zero());
  EXPECT_THROW(t1 + generator(AlgebraSignature(2, 4), 1), SignatureMismatch);
  EXPECT_THROW(t1 * generator(AlgebraSignature(2, 3, AlgebraMode::weak), 1), SignatureMismatch);
}

TEST(Algebra, SmallPowers) {
  const AlgebraSignature s2(2, 2), s3(2, 3);
  EXPECT_EQ(power(generator(s2, 1) + generator(s2, 2), 2),
            AlgebraElement::scalar(s2, CyclotomicNumber::from_rational(s2.field(), 2)));
  const auto cube = power(generator(s3, 1) + generator(s3, 2), 3);
  EXPECT_EQ(cube, AlgebraElement::scalar(s3, CyclotomicNumber::from_rational(s3.field(), 2)));
  const std::vector<ComplexMatrix> rep{oracle::shift(3), oracle::clock(3)};
  EXPECT_LE((oracle::mpow(rep[0] + rep[1], 3) - 2.0 * ComplexMatrix::Identity(3, 3)).norm(), 1e-13);
  EXPECT_EQ(power(generator(s3, 1), 0), AlgebraElement::identity(s3));
}

TEST(Algebra, Associativity) {
  CoefficientStream rng(2024);
  for (int n = 1; n <= 4; ++n)
    for (int l = 2; l <= 6; ++l)
      for (auto mode : {AlgebraMode::strict, AlgebraMode::weak}) {
        const AlgebraSignature sig(n, l, mode);
        const int trials = mode == AlgebraMode::strict ? 200 : 40;
        for (int t = 0; t < trials; ++t) {
          const auto x = random_element(sig, rng, 3), y = random_element(sig, rng, 3),
                     z = random_element(sig, rng, 3);
          ASSERT_EQ((x * y) * z, x * (y * z)) << n << " " << l;
          ASSERT_EQ(x * (y + z), x * y + x * z);
        }
      }
}

TEST(Algebra, LameExamples) {
  CoefficientStream rng(9);
  for (int l = 2; l <= 7; ++l) {
    const AlgebraSignature sig(1, l);
    const auto a = random_coeffs(sig, rng);
    EXPECT_TRUE(lame_check(sig, a).holds);
  }
  const AlgebraSignature s(3, 2);
  const auto one = CyclotomicNumber::one(s.field());
  const std::vector<CyclotomicNumber> ones{one, one, one};
  EXPECT_TRUE(lame_check(s, ones).holds);
  EXPECT_EQ(power(linear_form(s, ones), 2), AlgebraElement::scalar(s, CyclotomicNumber::from_rational(s.field(), 3)));
}

TEST(Algebra, LameMatchesDenseMatrixPower) {
  CoefficientStream rng(77);
  const AlgebraSignature sig(2, 5);
  const std::vector<ComplexMatrix> rep{oracle::shift(5), oracle::clock(5)};
  for (int t = 0; t < 5; ++t) {
    const auto a = random_coeffs(sig, rng);
    const auto r = lame_check(sig, a);
    EXPECT_TRUE(r.holds);
    EXPECT_TRUE(r.residual.is_zero());
    const ComplexMatrix sum = a[0].to_complex() * rep[0] + a[1].to_complex() * rep[1];
    const Complex rhs = std::pow(a[0].to_complex(), 5) + std::pow(a[1].to_complex(), 5);
    const double scale = std::pow(std::abs(a[0].to_complex()) + std::abs(a[1].to_complex()), 5);
    EXPECT_LE((oracle::mpow(sum, 5) - rhs * ComplexMatrix::Identity(5, 5)).norm() / std::max(1.0, scale), 1e-12);
  }
}

TEST(Algebra, LameStrictAndWeakGrid) {
  CoefficientStream rng(1);
  for (int n = 1; n <= 3; ++n)
    for (int l = 2; l <= 5; ++l)
      for (auto mode : {AlgebraMode::strict, AlgebraMode::weak}) {
        const AlgebraSignature sig(n, l, mode);
        for (int t = 0; t < 3; ++t) EXPECT_TRUE(lame_check(sig, random_coeffs(sig, rng)).holds) << n << " " << l;
      }
}

TEST(Algebra, PowersBelowOrderAreNotScalar) {
  const AlgebraSignature sig(2, 3);
  const auto sq = power(generator(sig, 1) + generator(sig, 2), 2);
  EXPECT_EQ(sq.size(), 3u);
  EXPECT_EQ(sq.coefficient({1, 1}), CyclotomicNumber::one(sig.field()) + sig.zeta_pow(2));
}

TEST(Algebra, Centrality) {
  const AlgebraSignature strict(2, 3), weak(3, 4, AlgebraMode::weak);
  EXPECT_TRUE(is_central(AlgebraElement::identity(strict)));
  EXPECT_FALSE(is_central(generator(strict, 1)));
  for (int k = 1; k <= 3; ++k) {
    const auto tl = power(generator(weak, k), 4);
    EXPECT_TRUE(is_central(tl));
    EXPECT_FALSE(tl == AlgebraElement::identity(weak));
    EXPECT_FALSE(is_central(power(generator(weak, k), 2)));
  }
}

TEST(Algebra, WeakLameKeepsPowerTerms) {
  CoefficientStream rng(4);
  const AlgebraSignature sig(2, 5, AlgebraMode::weak);
  const auto a = random_coeffs(sig, rng);
  const auto lhs = power(linear_form(sig, a), 5);
  EXPECT_EQ(lhs.size(), 2u);
  EXPECT_EQ(lhs.coefficient({5, 0}), a[0].pow(5));
  EXPECT_EQ(lhs.coefficient({0, 5}), a[1].pow(5));
  // In strict mode the same terms collapse onto the identity.
  const AlgebraSignature strict(2, 5);
  const auto collapsed = power(linear_form(strict, a), 5);
  EXPECT_EQ(collapsed, AlgebraElement::scalar(strict, a[0].pow(5) + a[1].pow(5)));
}

TEST(Algebra, ToMatrix) {
  const AlgebraSignature sig(2, 4);
  const auto [u, v] = weyl_pair(4);
  const std::vector<ComplexMatrix> rep{u, v};
  EXPECT_LE((to_matrix(AlgebraElement::identity(sig), rep) - ComplexMatrix::Identity(4, 4)).norm(), 1e-15);
  EXPECT_LE((to_matrix(generator(sig, 1), rep) - oracle::shift(4)).norm(), 1e-15);
  const std::vector<ComplexMatrix> bad{u, ComplexMatrix::Identity(3, 3)};
  EXPECT_THROW(to_matrix(generator(sig, 1), bad), DimensionMismatch);
}

TEST(Algebra, HomomorphismOracle) {
  CoefficientStream rng(31);
  for (int n = 1; n <= 4; ++n)
    for (int l = 2; l <= 5; ++l) {
      const AlgebraSignature sig(n, l);
      const auto rep = t_generators(n, l, TripleVariant::tau);
      for (int t = 0; t < 20; ++t) {
        const auto x = random_element(sig, rng), y = random_element(sig, rng);
        const ComplexMatrix mx = oracle_matrix(x, rep.matrices), my = oracle_matrix(y, rep.matrices);
        const ComplexMatrix mxy = to_matrix(x * y, rep);
        const double denom = std::max(1e-300, mx.norm() * my.norm());
        EXPECT_LE((mxy - mx * my).norm() / denom, 1e-10) << n << " " << l;
        EXPECT_LE((to_matrix(x, rep) - mx).norm() / std::max(1.0, mx.norm()), 1e-12);
      }
    }
}

TEST(Algebra, RootSubstitution) {
  CoefficientStream rng(13);
  for (int l = 2; l <= 7; ++l)
    for (int j = 1; j < l; ++j) {
      const AlgebraSignature sig(3, l, AlgebraMode::strict, j);
      if (std::gcd(j, l) == 1) {
        for (int t = 0; t < 3; ++t) EXPECT_TRUE(lame_check(sig, random_coeffs(sig, rng)).holds) << l << " " << j;
        continue;
      }
      bool found = false;
      for (int t = 0; t < 20 && !found; ++t) found = !lame_check(sig, random_coeffs(sig, rng)).holds;
      EXPECT_TRUE(found) << "no counterexample for l=" << l << " j=" << j;
    }
}

TEST(Algebra, RootSubstitutionMatchesMatrices) {
  // zeta -> zeta^2 at l = 5 is realized by (U^2, V).
  const AlgebraSignature sig(2, 5, AlgebraMode::strict, 2);
  const std::vector<ComplexMatrix> rep{oracle::mpow(oracle::shift(5), 2), oracle::clock(5)};
  CoefficientStream rng(8);
  for (int t = 0; t < 10; ++t) {
    const auto x = random_element(sig, rng), y = random_element(sig, rng);
    const ComplexMatrix mx = oracle_matrix(x, rep), my = oracle_matrix(y, rep);
    EXPECT_LE((to_matrix(x * y, rep) - mx * my).norm() / std::max(1e-300, mx.norm() * my.norm()), 1e-10);
  }
}

TEST(Algebra, WeakFromGroupPhases) {
  const std::vector<Rational> equal{1, 1, 1};
  const std::vector<Rational> arbitrary{Rational(3, 2), Rational(-2, 7), Rational(5)};
  const auto we = weak_from_group_phases(equal, 5);
  const auto wa = weak_from_group_phases(arbitrary, 5);
  EXPECT_EQ(we.phase_table, clifford_form(6).matrix());
  EXPECT_EQ(wa.phase_table, we.phase_table);
  EXPECT_EQ(we.signature, AlgebraSignature(6, 5, AlgebraMode::weak));

  // Same relations as strict T(6, 5) in every ordered pair.
  const AlgebraSignature strict(6, 5);
  for (int j = 1; j <= 6; ++j)
    for (int k = j + 1; k <= 6; ++k) {
      const auto &tj = wa.generators[static_cast<std::size_t>(j - 1)];
      const auto &tk = wa.generators[static_cast<std::size_t>(k - 1)];
      EXPECT_EQ(tj * tk, wa.signature.zeta_pow(1) * (tk * tj));
      const auto sj = generator(strict, j), sk = generator(strict, k);
      EXPECT_EQ(sj * sk, strict.zeta_pow(1) * (sk * sj));
    }

  CoefficientStream rng(3);
  std::vector<CyclotomicNumber> a;
  for (int k = 0; k < 6; ++k) a.push_back(rng.cyclotomic(wa.signature.field()));
  EXPECT_TRUE(lame_check(wa.signature, a).holds);

  const auto single = weak_from_group_phases(std::vector<Rational>{Rational(2)}, 3);
  EXPECT_EQ(single.phase_table, canonical_form(2).matrix());
  EXPECT_THROW(weak_from_group_phases(std::vector<Rational>{1, 0}, 3), InvalidArgument);
}

TEST(Algebra, WeakFromGroupPhasesLambdaMultiple) {
  const auto w = weak_from_group_phases(std::vector<Rational>{2, Rational(1, 3)}, 6, 5);
  EXPECT_EQ(w.signature.zeta_power(), 5);
  const auto &t1 = w.generators[0], &t2 = w.generators[1];
  EXPECT_EQ(t1 * t2, w.signature.zeta_pow(5) * (t2 * t1));
  CoefficientStream rng(21);
  std::vector<CyclotomicNumber> a;
  for (int k = 0; k < 4; ++k) a.push_back(rng.cyclotomic(w.signature.field()));
  EXPECT_TRUE(lame_check(w.signature, a).holds);
}
