#pragma once

#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "rational.hpp"

namespace weylclifford {

// Dense exact rational matrix, row-major.
class RationalMatrix {
public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  RationalMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    for (const auto &r : rows) {
      if (r.size() != cols_) throw DimensionMismatch("RationalMatrix: ragged initializer");
      for (auto v : r) data_.emplace_back(v);
    }
  }

  static RationalMatrix identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend bool operator==(const RationalMatrix &, const RationalMatrix &) = default;

  RationalMatrix transpose() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend RationalMatrix operator*(const RationalMatrix &a, const RationalMatrix &b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("RationalMatrix: product shape mismatch");
    RationalMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Rational &aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (b(k, j) != 0) out(i, j) += aik * b(k, j);
      }
    return out;
  }

  friend RationalMatrix operator*(const Rational &s, const RationalMatrix &a) {
    RationalMatrix out = a;
    for (auto &v : out.data_) v *= s;
    return out;
  }

  friend RationalMatrix operator-(const RationalMatrix &a) { return Rational(-1) * a; }

  bool is_antisymmetric() const {
    if (!is_square()) return false;
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = r; c < cols_; ++c)
        if ((*this)(r, c) != -(*this)(c, r)) return false;
    return true;
  }

  // Gauss-Jordan over Q.
  RationalMatrix inverse() const {
    if (!is_square()) throw DimensionMismatch("RationalMatrix::inverse: not square");
    const std::size_t n = rows_;
    RationalMatrix a = *this, inv = identity(n);
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t piv = col;
      while (piv < n && a(piv, col) == 0) ++piv;
      if (piv == n) throw SingularMatrix("RationalMatrix::inverse: singular");
      if (piv != col)
        for (std::size_t c = 0; c < n; ++c) {
          std::swap(a(piv, c), a(col, c));
          std::swap(inv(piv, c), inv(col, c));
        }
      const Rational p = a(col, col);
      for (std::size_t c = 0; c < n; ++c) {
        a(col, c) /= p;
        inv(col, c) /= p;
      }
      for (std::size_t r = 0; r < n; ++r) {
        if (r == col || a(r, col) == 0) continue;
        const Rational f = a(r, col);
        for (std::size_t c = 0; c < n; ++c) {
          a(r, c) -= f * a(col, c);
          inv(r, c) -= f * inv(col, c);
        }
      }
    }
    return inv;
  }

  // Product of pivots from exact elimination.
  Rational determinant() const {
    if (!is_square()) throw DimensionMismatch("RationalMatrix::determinant: not square");
    const std::size_t n = rows_;
    RationalMatrix a = *this;
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t piv = col;
      while (piv < n && a(piv, col) == 0) ++piv;
      if (piv == n) return 0;
      if (piv != col) {
        for (std::size_t c = 0; c < n; ++c) std::swap(a(piv, c), a(col, c));
        det = -det;
      }
      det *= a(col, col);
      for (std::size_t r = col + 1; r < n; ++r) {
        if (a(r, col) == 0) continue;
        const Rational f = a(r, col) / a(col, col);
        for (std::size_t c = col; c < n; ++c) a(r, c) -= f * a(col, c);
      }
    }
    return det;
  }

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

using TransformMatrix = RationalMatrix;

// Antisymmetric commutator form h, [c_j, c_k] = i h_{kj}.
class CommutatorForm {
public:
  explicit CommutatorForm(RationalMatrix entries) : entries_(std::move(entries)) {
    if (!entries_.is_antisymmetric()) throw InvalidArgument("CommutatorForm: matrix is not antisymmetric");
  }

  std::size_t n() const { return entries_.rows(); }
  const RationalMatrix &matrix() const { return entries_; }
  const Rational &operator()(std::size_t r, std::size_t c) const { return entries_(r, c); }

  friend bool operator==(const CommutatorForm &, const CommutatorForm &) = default;

private:
  RationalMatrix entries_;
};

// h_c: 2x2 blocks [[0, 1], [-1, 0]] on the diagonal.
inline CommutatorForm canonical_form(std::size_t n) {
  if (n < 2 || n % 2 != 0) throw InvalidArgument("canonical_form: n must be even and >= 2");
  RationalMatrix h(n, n);
  for (std::size_t k = 0; k < n; k += 2) {
    h(k, k + 1) = 1;
    h(k + 1, k) = -1;
  }
  return CommutatorForm(std::move(h));
}

// h^+_-: +1 above the diagonal, -1 below.
inline CommutatorForm clifford_form(std::size_t n) {
  if (n < 2) throw InvalidArgument("clifford_form: n must be >= 2");
  RationalMatrix h(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) h(r, c) = r < c ? 1 : (r > c ? -1 : 0);
  return CommutatorForm(std::move(h));
}

// h' = G h G^T
inline CommutatorForm transform_form(const TransformMatrix &g, const CommutatorForm &h) {
  if (g.cols() != h.n() || !g.is_square()) throw DimensionMismatch("transform_form: G and h differ in size");
  return CommutatorForm(g * h.matrix() * g.transpose());
}

namespace detail {
inline void require_even(std::size_t n, const char *who) {
  if (n < 2 || n % 2 != 0) throw InvalidArgument(std::string(who) + ": n must be even and >= 2");
}
} // namespace detail

// Pair block k (rows 2k-1, 2k): ones in the q-column of every earlier pair,
// own block [[1, 0], [1, 1]].
inline TransformMatrix matrix_L(std::size_t n) {
  detail::require_even(n, "matrix_L");
  TransformMatrix m(n, n);
  for (std::size_t k = 0; k < n / 2; ++k) {
    const std::size_t p = 2 * k, q = 2 * k + 1;
    for (std::size_t j = 0; j < k; ++j) {
      m(p, 2 * j + 1) = 1;
      m(q, 2 * j + 1) = 1;
    }
    m(p, p) = 1;
    m(q, p) = 1;
    m(q, q) = 1;
  }
  return m;
}

// Exponent bookkeeping of t^w_{2k-1} = alpha_k U_k prod_{j<k} U_j^dag V_j:
// pair block k has (-1, +1) in every earlier pair and the identity in its own.
inline TransformMatrix matrix_Lprime(std::size_t n) {
  detail::require_even(n, "matrix_Lprime");
  TransformMatrix m(n, n);
  for (std::size_t k = 0; k < n / 2; ++k) {
    const std::size_t p = 2 * k, q = 2 * k + 1;
    for (std::size_t j = 0; j < k; ++j) {
      m(p, 2 * j) = -1;
      m(p, 2 * j + 1) = 1;
      m(q, 2 * j) = -1;
      m(q, 2 * j + 1) = 1;
    }
    m(p, p) = 1;
    m(q, q) = 1;
  }
  return m;
}

// S h_c S^T == h_c
inline bool is_symplectic(const TransformMatrix &s) {
  if (!s.is_square() || s.rows() < 2 || s.rows() % 2 != 0) return false;
  const auto hc = canonical_form(s.rows());
  return transform_form(s, hc) == hc;
}

// diag(a_1, 1/a_1, ..., a_m, 1/a_m)
inline TransformMatrix diagonal_symplectic(const std::vector<Rational> &a) {
  if (a.empty()) throw InvalidArgument("diagonal_symplectic: need at least one parameter");
  TransformMatrix d(2 * a.size(), 2 * a.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] == 0) throw InvalidArgument("diagonal_symplectic: zero parameter");
    d(2 * k, 2 * k) = a[k];
    d(2 * k + 1, 2 * k + 1) = 1 / a[k];
  }
  return d;
}

// N_S = L S L^{-1}; preserves h^+_- whenever S preserves h_c.
inline TransformMatrix conjugate_to_N(const TransformMatrix &s) {
  if (!s.is_square() || s.rows() < 2 || s.rows() % 2 != 0)
    throw InvalidArgument("conjugate_to_N: S must be square of even size");
  if (!is_symplectic(s)) throw NotSymplectic("conjugate_to_N: S does not preserve h_c");
  const auto l = matrix_L(s.rows());
  return l * s * l.inverse();
}

} // namespace weylclifford
