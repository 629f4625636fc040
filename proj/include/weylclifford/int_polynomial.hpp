#pragma once

#include <algorithm>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "rational.hpp"

namespace weylclifford {

// Dense univariate polynomial with arbitrary-precision integer coefficients,
// ascending degree. The zero polynomial has no coefficients.
class IntPolynomial {
public:
  IntPolynomial() = default;
  IntPolynomial(std::initializer_list<long long> coeffs) {
    for (auto c : coeffs) coeffs_.emplace_back(c);
    trim();
  }
  explicit IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static IntPolynomial constant(BigInt c) { return IntPolynomial(std::vector<BigInt>{std::move(c)}); }

  static IntPolynomial monomial(std::size_t degree, BigInt c = 1) {
    std::vector<BigInt> v(degree + 1);
    v[degree] = std::move(c);
    return IntPolynomial(std::move(v));
  }

  // x^m - 1
  static IntPolynomial x_pow_minus_one(std::size_t m) {
    std::vector<BigInt> v(m + 1);
    v[0] = -1;
    v[m] = 1;
    return IntPolynomial(std::move(v));
  }

  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<BigInt> &coeffs() const { return coeffs_; }
  const BigInt &leading() const { return coeffs_.back(); }

  BigInt operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

  friend bool operator==(const IntPolynomial &, const IntPolynomial &) = default;

  friend IntPolynomial operator+(const IntPolynomial &a, const IntPolynomial &b) {
    std::vector<BigInt> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a[i] + b[i];
    return IntPolynomial(std::move(v));
  }

  friend IntPolynomial operator-(const IntPolynomial &a) {
    std::vector<BigInt> v(a.coeffs_);
    for (auto &c : v) c = -c;
    return IntPolynomial(std::move(v));
  }

  friend IntPolynomial operator-(const IntPolynomial &a, const IntPolynomial &b) { return a + (-b); }

  friend IntPolynomial operator*(const IntPolynomial &a, const IntPolynomial &b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntPolynomial(std::move(v));
  }

  // Quotient and remainder over Q, required to stay integral. Throws when the
  // division does not stay in Z[x] (never happens for monic divisors).
  std::pair<IntPolynomial, IntPolynomial> divmod(const IntPolynomial &divisor) const {
    if (divisor.is_zero()) throw DivisionByZero();
    std::vector<BigInt> rem = coeffs_;
    const long dd = divisor.degree();
    if (degree() < dd) return {IntPolynomial{}, *this};
    std::vector<BigInt> quot(static_cast<std::size_t>(degree() - dd + 1));
    const BigInt &lead = divisor.leading();
    for (long i = degree(); i >= dd; --i) {
      const BigInt &top = rem[static_cast<std::size_t>(i)];
      if (top == 0) continue;
      if (top % lead != 0) throw Error("IntPolynomial::divmod: quotient leaves Z[x]");
      BigInt q = top / lead;
      quot[static_cast<std::size_t>(i - dd)] = q;
      for (long j = 0; j <= dd; ++j)
        rem[static_cast<std::size_t>(i - dd + j)] -= q * divisor.coeffs_[static_cast<std::size_t>(j)];
    }
    return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
  }

  // Exact quotient; throws if the remainder is nonzero.
  IntPolynomial exact_divide(const IntPolynomial &divisor) const {
    auto [q, r] = divmod(divisor);
    if (!r.is_zero()) throw Error("IntPolynomial::exact_divide: nonzero remainder");
    return q;
  }

  std::string str(const std::string &var = "x") const {
    if (is_zero()) return "0";
    std::string out;
    for (long i = degree(); i >= 0; --i) {
      const BigInt &c = coeffs_[static_cast<std::size_t>(i)];
      if (c == 0) continue;
      BigInt mag = c < 0 ? BigInt(-c) : c;
      if (out.empty()) {
        if (c < 0) out += "-";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      if (i == 0 || mag != 1) out += mag.str();
      if (i > 0) {
        if (mag != 1) out += "*";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out;
  }

  friend std::ostream &operator<<(std::ostream &os, const IntPolynomial &p) { return os << p.str(); }

private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<BigInt> coeffs_;
};

inline long euler_totient(long m) {
  if (m < 1) throw InvalidArgument("euler_totient: m must be positive");
  long result = m;
  long n = m;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

// Phi_m by exact division of x^m - 1 by Phi_d for every proper divisor d,
// built bottom-up over the divisors of m.
inline IntPolynomial cyclotomic_polynomial(long m) {
  if (m < 1) throw InvalidArgument("cyclotomic_polynomial: m must be >= 1");
  std::vector<std::pair<long, IntPolynomial>> done;
  for (long d = 1; d <= m; ++d) {
    if (m % d != 0) continue;
    IntPolynomial p = IntPolynomial::x_pow_minus_one(static_cast<std::size_t>(d));
    for (const auto &[e, phi_e] : done)
      if (d % e == 0) p = p.exact_divide(phi_e);
    done.emplace_back(d, std::move(p));
  }
  return done.back().second;
}

} // namespace weylclifford
