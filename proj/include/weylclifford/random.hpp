#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "cyclotomic.hpp"
#include "rational.hpp"

namespace weylclifford {

// Seeded source of random test coefficients. The seed fully determines every
// stream drawn from it: rationals take a numerator uniform in [-9, 9] and a
// denominator uniform in [1, 9].
class CoefficientStream {
public:
  explicit CoefficientStream(std::uint64_t seed) : engine_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(engine_); }

  Rational rational() {
    const long num = integer(-9, 9);
    const long den = integer(1, 9);
    return Rational(num, den);
  }

  Rational nonzero_rational() {
    Rational q = rational();
    while (q == 0) q = rational();
    return q;
  }

  // Every power-basis coordinate drawn independently.
  CyclotomicNumber cyclotomic(const FieldPtr &field) {
    std::vector<Rational> v(static_cast<std::size_t>(field->degree()));
    for (auto &c : v) c = rational();
    return {field, std::move(v)};
  }

  CyclotomicNumber nonzero_cyclotomic(const FieldPtr &field) {
    auto x = cyclotomic(field);
    while (x.is_zero()) x = cyclotomic(field);
    return x;
  }

  double real(double lo = -1.0, double hi = 1.0) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }

  std::complex<double> complex() {
    const double re = real();
    const double im = real();
    return {re, im};
  }

  std::mt19937_64 &engine() { return engine_; }

private:
  std::mt19937_64 engine_;
};

} // namespace weylclifford
