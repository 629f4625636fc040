#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <memory>
#include <numbers>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "int_polynomial.hpp"
#include "rational.hpp"

namespace weylclifford {

// Q(zeta_m) as a vector space over Q with the power basis 1, zeta, ...,
// zeta^{deg-1}, deg = totient(m). Immutable once built; share it by pointer.
class CyclotomicField {
public:
  explicit CyclotomicField(int order) : order_(order) {
    if (order < 1) throw InvalidArgument("cyclotomic order must be >= 1");
    auto phi = cyclotomic_polynomial(order);
    degree_ = static_cast<int>(phi.degree());
    for (const auto &c : phi.coeffs()) phi_.push_back(c.convert_to<long long>());
  }

  int order() const { return order_; }
  int degree() const { return degree_; }
  // Monic Phi_m, ascending, length degree + 1.
  const std::vector<long long> &modulus() const { return phi_; }

  // Reduce an arbitrary-length power-basis vector modulo Phi_m in place and
  // truncate it to `degree` entries.
  void reduce(std::vector<Rational> &v) const {
    const auto d = static_cast<std::size_t>(degree_);
    for (std::size_t i = v.size(); i-- > d;) {
      if (v[i] == 0) continue;
      const Rational c = v[i];
      for (std::size_t j = 0; j < d; ++j)
        if (phi_[j] != 0) v[i - d + j] -= c * phi_[j];
      v[i] = 0;
    }
    v.resize(d);
  }

private:
  int order_;
  int degree_ = 0;
  std::vector<long long> phi_;
};

using FieldPtr = std::shared_ptr<const CyclotomicField>;

inline FieldPtr make_field(int order) { return std::make_shared<const CyclotomicField>(order); }

// Field order used for T(n,l) work: l for odd l, 2l for even l, so that
// nu = zeta^{(l+1)/2} is a power of the field generator.
inline int default_order(int l) { return l % 2 == 0 ? 2 * l : l; }

namespace detail {

using QPoly = std::vector<Rational>;

inline void trim(QPoly &p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly &b) {
  trim(a);
  if (a.size() < b.size()) return {QPoly{}, a};
  QPoly q(a.size() - b.size() + 1);
  const Rational &lead = b.back();
  const auto shift = static_cast<long>(b.size()) - 1;
  for (long i = static_cast<long>(a.size()) - 1; i >= shift; --i) {
    const auto ui = static_cast<std::size_t>(i);
    if (a[ui] == 0) continue;
    Rational f = a[ui] / lead;
    const auto base = static_cast<std::size_t>(i - shift);
    q[base] = f;
    for (std::size_t j = 0; j < b.size(); ++j) a[base + j] -= f * b[j];
  }
  trim(a);
  trim(q);
  return {q, a};
}

inline QPoly sub_mul(const QPoly &a, const QPoly &q, const QPoly &b) {
  QPoly out(std::max(a.size(), q.empty() || b.empty() ? 0 : q.size() + b.size() - 1));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] -= q[i] * b[j];
  trim(out);
  return out;
}

} // namespace detail

// Exact element of Q(zeta_m). Canonical: the coefficient vector is the
// remainder modulo Phi_m, so equal values have identical vectors.
class CyclotomicNumber {
public:
  CyclotomicNumber(FieldPtr field, std::vector<Rational> coeffs) : field_(std::move(field)) {
    if (!field_) throw InvalidArgument("CyclotomicNumber: null field");
    field_->reduce(coeffs);
    coeffs_ = std::move(coeffs);
  }

  static CyclotomicNumber zero(FieldPtr field) { return {std::move(field), {}}; }
  static CyclotomicNumber from_rational(FieldPtr field, Rational q) {
    return {std::move(field), std::vector<Rational>{std::move(q)}};
  }
  static CyclotomicNumber one(FieldPtr field) { return from_rational(std::move(field), Rational(1)); }

  // zeta_m^k for any integer k.
  static CyclotomicNumber root_of_unity(FieldPtr field, std::int64_t k) {
    const auto e = static_cast<std::size_t>(mod_floor(k, field->order()));
    std::vector<Rational> v(e + 1);
    v[e] = 1;
    return {std::move(field), std::move(v)};
  }

  int order() const { return field_->order(); }
  const FieldPtr &field() const { return field_; }
  const std::vector<Rational> &coeffs() const { return coeffs_; }

  bool is_zero() const {
    for (const auto &c : coeffs_)
      if (c != 0) return false;
    return true;
  }

  bool is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
      if (coeffs_[i] != 0) return false;
    return true;
  }

  friend bool operator==(const CyclotomicNumber &a, const CyclotomicNumber &b) {
    a.require_same(b);
    return a.coeffs_ == b.coeffs_;
  }

  friend CyclotomicNumber operator+(const CyclotomicNumber &a, const CyclotomicNumber &b) {
    a.require_same(b);
    CyclotomicNumber out = a;
    for (std::size_t i = 0; i < out.coeffs_.size(); ++i) out.coeffs_[i] += b.coeffs_[i];
    return out;
  }

  friend CyclotomicNumber operator-(const CyclotomicNumber &a) {
    CyclotomicNumber out = a;
    for (auto &c : out.coeffs_) c = -c;
    return out;
  }

  friend CyclotomicNumber operator-(const CyclotomicNumber &a, const CyclotomicNumber &b) {
    a.require_same(b);
    CyclotomicNumber out = a;
    for (std::size_t i = 0; i < out.coeffs_.size(); ++i) out.coeffs_[i] -= b.coeffs_[i];
    return out;
  }

  friend CyclotomicNumber operator*(const CyclotomicNumber &a, const CyclotomicNumber &b) {
    a.require_same(b);
    const auto d = a.coeffs_.size();
    if (d == 0) return a;
    std::vector<Rational> prod(2 * d - 1);
    for (std::size_t i = 0; i < d; ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < d; ++j)
        if (b.coeffs_[j] != 0) prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return {a.field_, std::move(prod)};
  }

  friend CyclotomicNumber operator*(const Rational &q, const CyclotomicNumber &a) {
    CyclotomicNumber out = a;
    for (auto &c : out.coeffs_) c *= q;
    return out;
  }

  CyclotomicNumber &operator+=(const CyclotomicNumber &b) { return *this = *this + b; }
  CyclotomicNumber &operator-=(const CyclotomicNumber &b) { return *this = *this - b; }
  CyclotomicNumber &operator*=(const CyclotomicNumber &b) { return *this = *this * b; }

  // Multiply by zeta_m^k: shift the power basis and reduce.
  CyclotomicNumber times_root(std::int64_t k) const {
    const auto e = static_cast<std::size_t>(mod_floor(k, field_->order()));
    if (e == 0) return *this;
    std::vector<Rational> v(coeffs_.size() + e);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i + e] = coeffs_[i];
    return {field_, std::move(v)};
  }

  // Extended Euclid against Phi_m; Phi_m is irreducible so every nonzero
  // residue is a unit.
  CyclotomicNumber inverse() const {
    if (is_zero()) throw DivisionByZero();
    detail::QPoly r0, r1 = coeffs_, s0, s1{Rational(1)};
    for (auto c : field_->modulus()) r0.emplace_back(c);
    detail::trim(r1);
    while (!r1.empty()) {
      auto [q, r] = detail::divmod(r0, r1);
      r0 = std::move(r1);
      r1 = std::move(r);
      auto s2 = detail::sub_mul(s0, q, s1);
      s0 = std::move(s1);
      s1 = std::move(s2);
    }
    // r0 is a nonzero constant.
    for (auto &c : s0) c /= r0[0];
    return {field_, std::move(s0)};
  }

  friend CyclotomicNumber operator/(const CyclotomicNumber &a, const CyclotomicNumber &b) {
    return a * b.inverse();
  }

  CyclotomicNumber pow(std::int64_t p) const {
    if (p < 0) return inverse().pow(-p);
    CyclotomicNumber result = one(field_), base = *this;
    while (p > 0) {
      if (p & 1) result *= base;
      p >>= 1;
      if (p > 0) base *= base;
    }
    return result;
  }

  // Embed into Q(zeta_{k m}) using zeta_m = zeta_{km}^k.
  CyclotomicNumber lift(const FieldPtr &target) const {
    if (target->order() % order() != 0)
      throw InvalidArgument("lift: target order " + std::to_string(target->order()) +
                            " is not a multiple of " + std::to_string(order()));
    const std::int64_t step = target->order() / order();
    std::vector<Rational> v(static_cast<std::size_t>(step) * coeffs_.size());
    for (std::size_t j = 0; j < coeffs_.size(); ++j) v[j * static_cast<std::size_t>(step)] = coeffs_[j];
    return {target, std::move(v)};
  }

  std::complex<double> to_complex() const {
    std::complex<double> acc{0.0, 0.0};
    const double base = 2.0 * std::numbers::pi / field_->order();
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
      if (coeffs_[j] == 0) continue;
      acc += to_double(coeffs_[j]) * std::polar(1.0, base * static_cast<double>(j));
    }
    return acc;
  }

  std::string str() const {
    std::string out;
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
      if (coeffs_[j] == 0) continue;
      std::string c = coeffs_[j].str();
      if (!out.empty()) out += (c[0] == '-') ? " - " : " + ";
      else if (c[0] == '-') out += "-";
      if (c[0] == '-') c.erase(0, 1);
      if (j == 0) out += c;
      else {
        if (c != "1") out += c + "*";
        out += "z";
        if (j > 1) out += "^" + std::to_string(j);
      }
    }
    return out.empty() ? "0" : out;
  }

  friend std::ostream &operator<<(std::ostream &os, const CyclotomicNumber &x) {
    return os << x.str() << " [zeta_" << x.order() << "]";
  }

private:
  void require_same(const CyclotomicNumber &other) const {
    if (field_ != other.field_ && field_->order() != other.field_->order())
      throw OrderMismatch(field_->order(), other.field_->order());
  }

  FieldPtr field_;
  std::vector<Rational> coeffs_;
};

// zeta_m^k in a freshly built Q(zeta_m).
inline CyclotomicNumber root_of_unity(int m, std::int64_t k) {
  return CyclotomicNumber::root_of_unity(make_field(m), k);
}

} // namespace weylclifford
