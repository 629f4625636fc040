#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "commforms.hpp"
#include "cyclotomic.hpp"
#include "error.hpp"
#include "matrep.hpp"
#include "rational.hpp"

namespace weylclifford {

enum class AlgebraMode {
  strict, // t_k^l = 1, exponents in Z_l
  weak,   // no power relation, exponents are non-negative integers
};

inline const char *to_string(AlgebraMode m) { return m == AlgebraMode::strict ? "strict" : "weak"; }

// T(n, l) or its weak version. The commutation phase is zeta_l^{zeta_power}
// (zeta_power = 1 is the primitive root e^{2 pi i / l}); coefficients live in
// Q(zeta_m) with m = default_order(l).
class AlgebraSignature {
public:
  AlgebraSignature(int n, int l, AlgebraMode mode = AlgebraMode::strict, int zeta_power = 1)
      : n_(n), l_(l), mode_(mode), zeta_power_(static_cast<int>(mod_floor(zeta_power, l))) {
    if (n < 1) throw InvalidArgument("AlgebraSignature: n must be >= 1");
    if (l < 2) throw InvalidArgument("AlgebraSignature: l must be >= 2");
    field_ = make_field(default_order(l));
  }

  int n() const { return n_; }
  int l() const { return l_; }
  AlgebraMode mode() const { return mode_; }
  int zeta_power() const { return zeta_power_; }
  const FieldPtr &field() const { return field_; }
  int order() const { return field_->order(); }

  // zeta_l^e in the coefficient field.
  CyclotomicNumber zeta_pow(std::int64_t e) const {
    return CyclotomicNumber::root_of_unity(field_, e * (order() / l_));
  }

  friend bool operator==(const AlgebraSignature &a, const AlgebraSignature &b) {
    return a.n_ == b.n_ && a.l_ == b.l_ && a.mode_ == b.mode_ && a.zeta_power_ == b.zeta_power_;
  }

private:
  int n_, l_;
  AlgebraMode mode_;
  int zeta_power_;
  FieldPtr field_;
};

using Monomial = std::vector<std::int64_t>;

// Phase exponent of the reordering t^a t^b = zeta^{phase(a, b)} t^{a+b}.
// Bringing t_j^{b_j} left past t_k^{a_k} (j < k) costs zeta^{-a_k b_j}, since
// t_k t_j = zeta^{-1} t_j t_k, so phase(a, b) = -sum_{j<k} a_k b_j.
inline std::int64_t reorder_phase(const Monomial &a, const Monomial &b) {
  std::int64_t phase = 0, prefix_b = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    phase -= a[k] * prefix_b;
    prefix_b += b[k];
  }
  return phase;
}

// Sparse combination of normal-ordered monomials t_1^{a_1} ... t_n^{a_n}.
class AlgebraElement {
public:
  using Terms = std::map<Monomial, CyclotomicNumber>;

  explicit AlgebraElement(AlgebraSignature sig) : sig_(std::move(sig)) {}

  static AlgebraElement zero(const AlgebraSignature &sig) { return AlgebraElement(sig); }

  static AlgebraElement term(const AlgebraSignature &sig, Monomial exps, const CyclotomicNumber &c) {
    AlgebraElement x(sig);
    x.add_term(std::move(exps), c);
    return x;
  }

  static AlgebraElement identity(const AlgebraSignature &sig) {
    return term(sig, Monomial(static_cast<std::size_t>(sig.n()), 0), CyclotomicNumber::one(sig.field()));
  }

  static AlgebraElement scalar(const AlgebraSignature &sig, const CyclotomicNumber &c) {
    return term(sig, Monomial(static_cast<std::size_t>(sig.n()), 0), c);
  }

  const AlgebraSignature &signature() const { return sig_; }
  const Terms &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  // Coefficient of a monomial (zero when absent).
  CyclotomicNumber coefficient(const Monomial &m) const {
    auto it = terms_.find(normalize(m));
    return it == terms_.end() ? CyclotomicNumber::zero(sig_.field()) : it->second;
  }

  friend bool operator==(const AlgebraElement &a, const AlgebraElement &b) {
    a.require_same(b);
    return a.terms_ == b.terms_;
  }

  friend AlgebraElement operator+(const AlgebraElement &a, const AlgebraElement &b) {
    a.require_same(b);
    AlgebraElement out = a;
    for (const auto &[m, c] : b.terms_) out.add_term(m, c);
    return out;
  }

  friend AlgebraElement operator-(const AlgebraElement &a) {
    AlgebraElement out = a;
    for (auto &[m, c] : out.terms_) c = -c;
    return out;
  }

  friend AlgebraElement operator-(const AlgebraElement &a, const AlgebraElement &b) { return a + (-b); }

  friend AlgebraElement operator*(const CyclotomicNumber &s, const AlgebraElement &x) {
    AlgebraElement out(x.sig_);
    if (s.is_zero()) return out;
    for (const auto &[m, c] : x.terms_) out.add_term(m, s * c);
    return out;
  }

  friend AlgebraElement operator*(const AlgebraElement &x, const AlgebraElement &y) {
    x.require_same(y);
    const auto &sig = x.sig_;
    AlgebraElement out(sig);
    const std::int64_t step = static_cast<std::int64_t>(sig.order() / sig.l()) * sig.zeta_power();
    Monomial sum(static_cast<std::size_t>(sig.n()));
    for (const auto &[a, ca] : x.terms_)
      for (const auto &[b, cb] : y.terms_) {
        for (std::size_t k = 0; k < sum.size(); ++k) sum[k] = a[k] + b[k];
        out.add_term(sum, (ca * cb).times_root(reorder_phase(a, b) * step));
      }
    return out;
  }

  AlgebraElement &operator+=(const AlgebraElement &b) { return *this = *this + b; }
  AlgebraElement &operator*=(const AlgebraElement &b) { return *this = *this * b; }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto &[m, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += "(" + c.str() + ")";
      for (std::size_t k = 0; k < m.size(); ++k) {
        if (m[k] == 0) continue;
        out += "*t" + std::to_string(k + 1);
        if (m[k] != 1) out += "^" + std::to_string(m[k]);
      }
    }
    return out;
  }

  // Accumulate c * t^m, reducing exponents in strict mode and pruning zeros.
  void add_term(Monomial m, const CyclotomicNumber &c) {
    if (m.size() != static_cast<std::size_t>(sig_.n()))
      throw InvalidArgument("AlgebraElement: monomial length differs from n");
    m = normalize(std::move(m));
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(std::move(m), c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

private:
  Monomial normalize(Monomial m) const {
    if (sig_.mode() == AlgebraMode::strict) {
      for (auto &e : m) e = mod_floor(e, sig_.l());
    } else {
      for (auto e : m)
        if (e < 0) throw InvalidArgument("weak-mode monomials take non-negative exponents only");
    }
    return m;
  }

  void require_same(const AlgebraElement &other) const {
    if (!(sig_ == other.sig_)) throw SignatureMismatch("algebra elements from different signatures");
  }

  AlgebraSignature sig_;
  Terms terms_;
};

// t_k, 1-based.
inline AlgebraElement generator(const AlgebraSignature &sig, int k) {
  if (k < 1 || k > sig.n()) throw InvalidArgument("generator: index out of range");
  Monomial m(static_cast<std::size_t>(sig.n()), 0);
  m[static_cast<std::size_t>(k - 1)] = 1;
  return AlgebraElement::term(sig, std::move(m), CyclotomicNumber::one(sig.field()));
}

inline AlgebraElement multiply(const AlgebraElement &x, const AlgebraElement &y) { return x * y; }
inline AlgebraElement add(const AlgebraElement &x, const AlgebraElement &y) { return x + y; }
inline AlgebraElement scale(const CyclotomicNumber &c, const AlgebraElement &x) { return c * x; }

inline AlgebraElement power(const AlgebraElement &x, std::int64_t p) {
  if (p < 0) throw InvalidArgument("power: negative exponent");
  AlgebraElement result = AlgebraElement::identity(x.signature());
  for (std::int64_t i = 0; i < p; ++i) result = result * x;
  return result;
}

// sum_k a_k t_k
inline AlgebraElement linear_form(const AlgebraSignature &sig, std::span<const CyclotomicNumber> coeffs) {
  if (coeffs.size() != static_cast<std::size_t>(sig.n()))
    throw InvalidArgument("linear_form: need one coefficient per generator");
  AlgebraElement x(sig);
  for (int k = 1; k <= sig.n(); ++k) x += coeffs[static_cast<std::size_t>(k - 1)] * generator(sig, k);
  return x;
}

struct LameResult {
  bool holds;
  AlgebraElement residual; // lhs - rhs
};

// Strict: (sum a_k t_k)^l == (sum a_k^l) * 1.
// Weak:   (sum a_k t_k)^l == sum a_k^l t_k^l.
inline LameResult lame_check(const AlgebraSignature &sig, std::span<const CyclotomicNumber> coeffs) {
  const AlgebraElement lhs = power(linear_form(sig, coeffs), sig.l());
  AlgebraElement rhs(sig);
  for (int k = 1; k <= sig.n(); ++k) {
    const auto ak = coeffs[static_cast<std::size_t>(k - 1)].pow(sig.l());
    rhs += ak * power(generator(sig, k), sig.l());
  }
  AlgebraElement residual = lhs - rhs;
  const bool holds = residual.is_zero();
  return {holds, std::move(residual)};
}

// Commutes with every generator.
inline bool is_central(const AlgebraElement &x) {
  for (int k = 1; k <= x.signature().n(); ++k) {
    const auto t = generator(x.signature(), k);
    if (!(x * t == t * x)) return false;
  }
  return true;
}

// Evaluate every monomial as t_1^{a_1} ... t_n^{a_n} over the representation
// matrices; the representation's zeta must match the signature's phase.
inline ComplexMatrix to_matrix(const AlgebraElement &x, std::span<const ComplexMatrix> rep) {
  const auto n = static_cast<std::size_t>(x.signature().n());
  if (rep.size() != n) throw DimensionMismatch("to_matrix: need one matrix per generator");
  const auto dim = rep.front().rows();
  for (const auto &m : rep)
    if (m.rows() != dim || m.cols() != dim) throw DimensionMismatch("to_matrix: representation matrices differ in size");

  std::vector<std::vector<ComplexMatrix>> powers(n, std::vector<ComplexMatrix>{identity_matrix(dim)});
  auto power_of = [&](std::size_t k, std::int64_t e) -> const ComplexMatrix & {
    auto &p = powers[k];
    while (static_cast<std::int64_t>(p.size()) <= e) p.push_back(p.back() * rep[k]);
    return p[static_cast<std::size_t>(e)];
  };

  ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
  for (const auto &[m, c] : x.terms()) {
    ComplexMatrix prod = identity_matrix(dim);
    for (std::size_t k = 0; k < n; ++k)
      if (m[k] != 0) prod = prod * power_of(k, m[k]);
    out += c.to_complex() * prod;
  }
  return out;
}

inline ComplexMatrix to_matrix(const AlgebraElement &x, const GeneratorSet &rep) {
  return to_matrix(x, std::span<const ComplexMatrix>(rep.matrices));
}

// ---------------------------------------------------------------------------
// Weak generators from split Weyl groups

struct WeakGenerators {
  AlgebraSignature signature;
  std::vector<AlgebraElement> generators;
  // Row k: coordinates of t~_k in (p_1, q_1, ..., p_m, q_m), with the q
  // entries in units of lambda.
  RationalMatrix coordinates;
  // Entry (j, k): omega(t~_j, t~_k) / lambda, where U_k(a) V_k(b) =
  // e^{iab} V_k(b) U_k(a) gives omega(x, y) = sum_j (alpha_j beta'_j - beta_j alpha'_j).
  RationalMatrix phase_table;
};

// t~_{2k-1} = U_k(a_k) Pi_k, t~_{2k} = V_k(lambda / a_k) Pi_k,
// Pi_k = prod_{j<k} U_j^dag(a_j) V_j(lambda / a_j), lambda = 2 pi lambda_multiple / l.
// The phase table must come out as h^+_-, i.e. t~_j t~_k = e^{i lambda} t~_k t~_j
// for all j < k; the returned generators are the weak-mode t_k with phase
// zeta_l^{lambda_multiple}.
inline WeakGenerators weak_from_group_phases(std::span<const Rational> steps, int l, int lambda_multiple = 1) {
  if (steps.empty()) throw InvalidArgument("weak_from_group_phases: need at least one pair");
  for (const auto &a : steps)
    if (a == 0) throw InvalidArgument("weak_from_group_phases: zero step parameter");
  const std::size_t pairs = steps.size(), n = 2 * pairs;

  RationalMatrix coords(n, n);
  for (std::size_t k = 0; k < pairs; ++k) {
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t row : {2 * k, 2 * k + 1}) {
        coords(row, 2 * j) = -steps[j];
        coords(row, 2 * j + 1) = 1 / steps[j];
      }
    coords(2 * k, 2 * k) = steps[k];
    coords(2 * k + 1, 2 * k + 1) = 1 / steps[k];
  }

  RationalMatrix table(n, n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      Rational w = 0;
      for (std::size_t j = 0; j < pairs; ++j)
        w += coords(x, 2 * j) * coords(y, 2 * j + 1) - coords(x, 2 * j + 1) * coords(y, 2 * j);
      table(x, y) = w;
    }
  if (!(table == clifford_form(n).matrix()))
    throw RelationViolated("weak_from_group_phases: phase table differs from h^+_-");

  AlgebraSignature sig(static_cast<int>(n), l, AlgebraMode::weak, lambda_multiple);
  std::vector<AlgebraElement> gens;
  for (int k = 1; k <= static_cast<int>(n); ++k) gens.push_back(generator(sig, k));
  return {sig, std::move(gens), std::move(coords), std::move(table)};
}

} // namespace weylclifford
