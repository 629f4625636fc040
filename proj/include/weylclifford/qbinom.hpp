#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "cyclotomic.hpp"
#include "error.hpp"
#include "int_polynomial.hpp"
#include "random.hpp"

namespace weylclifford {

// ---------------------------------------------------------------------------
// r_{kl}(lambda): prod_{j=0}^{l-1} (x - lambda^j) = sum_k r_{kl}(lambda) x^k

// Coefficients in x of the root product, each an integer polynomial in a
// formal lambda. Expanded one linear factor at a time.
inline std::vector<IntPolynomial> root_product_formal(int l) {
  if (l < 0) throw InvalidArgument("root_product: l must be >= 0");
  std::vector<IntPolynomial> coeffs{IntPolynomial::constant(1)};
  for (int j = 0; j < l; ++j) {
    const IntPolynomial root = IntPolynomial::monomial(static_cast<std::size_t>(j));
    std::vector<IntPolynomial> next(coeffs.size() + 1);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      next[k + 1] = next[k + 1] + coeffs[k];
      next[k] = next[k] - root * coeffs[k];
    }
    coeffs = std::move(next);
  }
  return coeffs;
}

inline std::vector<CyclotomicNumber> root_product(int l, const CyclotomicNumber &lambda) {
  if (l < 0) throw InvalidArgument("root_product: l must be >= 0");
  std::vector<CyclotomicNumber> coeffs{CyclotomicNumber::one(lambda.field())};
  CyclotomicNumber root = CyclotomicNumber::one(lambda.field());
  for (int j = 0; j < l; ++j) {
    std::vector<CyclotomicNumber> next(coeffs.size() + 1, CyclotomicNumber::zero(lambda.field()));
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      next[k + 1] += coeffs[k];
      next[k] -= root * coeffs[k];
    }
    coeffs = std::move(next);
    root *= lambda;
  }
  return coeffs;
}

inline IntPolynomial r_poly(int k, int l) {
  if (l < 0 || k < 0 || k > l) throw InvalidArgument("r_poly: need 0 <= k <= l");
  return root_product_formal(l)[static_cast<std::size_t>(k)];
}

inline CyclotomicNumber r_poly(int k, int l, const CyclotomicNumber &lambda) {
  if (l < 0 || k < 0 || k > l) throw InvalidArgument("r_poly: need 0 <= k <= l");
  return root_product(l, lambda)[static_cast<std::size_t>(k)];
}

// ---------------------------------------------------------------------------
// [k]_lambda, [k]_lambda!, [l k]_lambda

inline IntPolynomial q_int(int k) {
  if (k < 0) throw InvalidArgument("q_int: k must be >= 0");
  std::vector<BigInt> v(static_cast<std::size_t>(k), BigInt(1));
  return IntPolynomial(std::move(v));
}

inline IntPolynomial q_factorial(int k) {
  IntPolynomial f = IntPolynomial::constant(1);
  for (int j = 1; j <= k; ++j) f = f * q_int(j);
  return f;
}

// [l]! / ([k]! [l-k]!) by exact division; every [j] is monic so the quotient
// stays integral.
inline IntPolynomial q_binomial(int l, int k) {
  if (l < 0 || k < 0 || k > l) throw InvalidArgument("q_binomial: need 0 <= k <= l");
  return q_factorial(l).exact_divide(q_factorial(k) * q_factorial(l - k));
}

inline CyclotomicNumber q_int(int k, const CyclotomicNumber &lambda) {
  if (k < 0) throw InvalidArgument("q_int: k must be >= 0");
  CyclotomicNumber sum = CyclotomicNumber::zero(lambda.field()), p = CyclotomicNumber::one(lambda.field());
  for (int j = 0; j < k; ++j) {
    sum += p;
    p *= lambda;
  }
  return sum;
}

inline CyclotomicNumber q_factorial(int k, const CyclotomicNumber &lambda) {
  CyclotomicNumber f = CyclotomicNumber::one(lambda.field());
  for (int j = 1; j <= k; ++j) f *= q_int(j, lambda);
  return f;
}

// Quotient formula when the denominator is a unit; otherwise (lambda a root
// of unity of small order) the value comes from the root product through
// r_{kl}(lambda) = (-1)^{l-k} lambda^{(l-k)(l-k-1)/2} [l k]_lambda.
inline CyclotomicNumber q_binomial(int l, int k, const CyclotomicNumber &lambda) {
  if (l < 0 || k < 0 || k > l) throw InvalidArgument("q_binomial: need 0 <= k <= l");
  const auto den = q_factorial(k, lambda) * q_factorial(l - k, lambda);
  if (den.is_zero()) {
    const std::int64_t j = l - k;
    const auto r = r_poly(k, l, lambda) * lambda.pow(-(j * (j - 1) / 2));
    return j % 2 == 0 ? r : -r;
  }
  return q_factorial(l, lambda) / den;
}

// ---------------------------------------------------------------------------
// Identity checks

namespace detail {

// Rank-2 weak algebra with L R = lambda R L, lambda = e^{2 pi i / order}.
inline AlgebraSignature lambda_signature(int order) {
  if (order < 1) throw InvalidArgument("lambda order must be >= 1");
  if (order == 1) return AlgebraSignature(2, 2, AlgebraMode::weak, 0);
  return AlgebraSignature(2, order, AlgebraMode::weak, 1);
}

} // namespace detail

struct BinomialExpansion {
  AlgebraElement lhs;      // (a L + b R)^l
  AlgebraElement expected; // sum_k [l k]_lambda a^k b^{l-k} R^{l-k} L^k
};

// Both sides in the normal-ordered basis L^i R^j. The deformed coefficient
// multiplies the word R^{l-k} L^k; in the L^k R^{l-k} order it becomes
// [l k]_{1/lambda}. The two agree when lambda^{k(l-k)} = 1.
inline BinomialExpansion deformed_binomial_expansion(int l, int lambda_order, const Rational &a,
                                                     const Rational &b) {
  if (l < 1) throw InvalidArgument("deformed_binomial: l must be >= 1");
  const auto sig = detail::lambda_signature(lambda_order);
  const auto one = CyclotomicNumber::one(sig.field());
  const auto L = generator(sig, 1), R = generator(sig, 2);
  const auto lhs = power((a * one) * L + (b * one) * R, l);
  const auto lambda = sig.zeta_pow(sig.zeta_power());
  AlgebraElement expected(sig);
  for (int k = 0; k <= l; ++k) {
    const CyclotomicNumber c = q_binomial(l, k, lambda) * CyclotomicNumber::from_rational(sig.field(), rational_pow(a, k) * rational_pow(b, l - k));
    expected += c * (power(R, l - k) * power(L, k));
  }
  return {lhs, expected};
}

inline bool deformed_binomial_theorem_check(int l, int lambda_order, int trials, std::uint64_t seed = 1) {
  if (trials < 1) throw InvalidArgument("deformed_binomial_theorem_check: trials must be >= 1");
  CoefficientStream rng(seed);
  for (int t = 0; t < trials; ++t) {
    const auto e = deformed_binomial_expansion(l, lambda_order, rng.rational(), rng.rational());
    if (!(e.lhs == e.expected)) return false;
  }
  return true;
}

// Coefficients c_i of a^i b^{l-i} in prod_{k=0}^{l-1} (a + zeta^k b), zeta of
// the given order, for commuting a and b.
inline std::vector<CyclotomicNumber> commuting_factorization(int l, int lambda_order) {
  if (l < 1) throw InvalidArgument("commuting_factorization: l must be >= 1");
  const auto field = make_field(lambda_order);
  std::vector<CyclotomicNumber> coeffs{CyclotomicNumber::one(field)};
  for (int k = 0; k < l; ++k) {
    const auto z = CyclotomicNumber::root_of_unity(field, k);
    // multiply by (a + z b): a raises the a-degree, z b keeps it.
    std::vector<CyclotomicNumber> next(coeffs.size() + 1, CyclotomicNumber::zero(field));
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      next[i + 1] += coeffs[i];
      next[i] += z * coeffs[i];
    }
    coeffs = std::move(next);
  }
  return coeffs;
}

// prod_{k=0}^{l-1} (a + zeta^k b) == a^l + (-1)^{l-1} b^l
inline bool commuting_factorization_check(int l, int lambda_order) {
  const auto c = commuting_factorization(l, lambda_order);
  const auto &field = c.front().field();
  for (int i = 0; i <= l; ++i) {
    Rational want = 0;
    if (i == l) want = 1;
    if (i == 0) want += (l - 1) % 2 == 0 ? 1 : -1;
    if (!(c[static_cast<std::size_t>(i)] == CyclotomicNumber::from_rational(field, want))) return false;
  }
  return true;
}

} // namespace weylclifford
