#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "cyclotomic.hpp"
#include "error.hpp"

namespace weylclifford {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

// ---------------------------------------------------------------------------
// Small dense helpers

inline ComplexMatrix identity_matrix(Eigen::Index dim) { return ComplexMatrix::Identity(dim, dim); }

inline ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

inline ComplexMatrix kron_all(const std::vector<ComplexMatrix> &factors) {
  ComplexMatrix out = ComplexMatrix::Identity(1, 1);
  for (const auto &f : factors) out = kron(out, f);
  return out;
}

inline ComplexMatrix matrix_power(const ComplexMatrix &a, long p) {
  if (p < 0) throw InvalidArgument("matrix_power: negative exponent");
  ComplexMatrix result = identity_matrix(a.rows()), base = a;
  while (p > 0) {
    if (p & 1) result = result * base;
    p >>= 1;
    if (p > 0) base = base * base;
  }
  return result;
}

inline double max_abs_entry(const ComplexMatrix &a) { return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff(); }

inline double unitarity_deviation(const ComplexMatrix &a) {
  return (a * a.adjoint() - identity_matrix(a.rows())).norm();
}

inline bool is_invertible(const ComplexMatrix &a) {
  if (a.rows() != a.cols() || a.rows() == 0) return false;
  Eigen::FullPivLU<ComplexMatrix> lu(a);
  lu.setThreshold(1e-12);
  return lu.isInvertible();
}

inline ComplexMatrix checked_inverse(const ComplexMatrix &a, const char *who) {
  if (!is_invertible(a)) throw SingularMatrix(std::string(who) + ": matrix is singular");
  return a.fullPivLu().inverse();
}

// zeta_order^exponent evaluated from the exact root of unity, so half-angle
// phases (order 2l) never accumulate floating drift in the exponent.
inline Complex unit_phase(int order, std::int64_t exponent) {
  const auto e = mod_floor(exponent, order);
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(e) / order);
}

// zeta = e^{2 pi i / l}
inline Complex zeta(int l) { return unit_phase(l, 1); }

// nu = zeta^{(l+1)/2} = e^{pi i (l+1)/l}, i.e. zeta_{2l}^{l+1}.
inline Complex nu(int l) { return unit_phase(2 * l, l + 1); }

// alpha_k = zeta^{-(k-1)(l-1)/2} = zeta_{2l}^{-(k-1)(l-1)}.
inline Complex alpha(int l, int k) { return unit_phase(2 * l, -static_cast<std::int64_t>(k - 1) * (l - 1)); }

// ---------------------------------------------------------------------------
// Pauli matrices and Weyl pairs

inline ComplexMatrix pauli(int i) {
  const Complex I{0.0, 1.0};
  ComplexMatrix s(2, 2);
  switch (i) {
  case 1: s << 0.0, 1.0, 1.0, 0.0; break;
  case 2: s << 0.0, -I, I, 0.0; break;
  case 3: s << 1.0, 0.0, 0.0, -1.0; break;
  default: throw InvalidArgument("pauli: index must be 1, 2 or 3");
  }
  return s;
}

struct MatrixPair {
  ComplexMatrix first;
  ComplexMatrix second;
};

// S^{(a)}: ones on the superdiagonal and `corner` at (l-1, 0).
inline ComplexMatrix shift_matrix(int l, Complex corner = 1.0) {
  if (l < 1) throw InvalidArgument("shift_matrix: l must be >= 1");
  ComplexMatrix s = ComplexMatrix::Zero(l, l);
  for (int k = 0; k + 1 < l; ++k) s(k, k + 1) = 1.0;
  s(l - 1, 0) += corner;
  return s;
}

// V^lambda = diag(1, lambda, ..., lambda^{l-1}).
inline ComplexMatrix clock_matrix(int l, Complex lambda) {
  ComplexMatrix v = ComplexMatrix::Zero(l, l);
  Complex p = 1.0;
  for (int k = 0; k < l; ++k) {
    v(k, k) = p;
    p *= lambda;
  }
  return v;
}

// U the cyclic shift, V = diag(1, zeta, ..., zeta^{l-1}); UV = zeta VU.
inline MatrixPair weyl_pair(int l) {
  if (l < 2) throw InvalidArgument("weyl_pair: l must be >= 2");
  ComplexMatrix v = ComplexMatrix::Zero(l, l);
  for (int k = 0; k < l; ++k) v(k, k) = unit_phase(l, k);
  return {shift_matrix(l), std::move(v)};
}

// (S^{(a)}, V^lambda). For a = 0 the relation S V = lambda V S holds for any
// lambda and S is singular.
inline MatrixPair degenerate_pair(int l, Complex a, Complex lambda) {
  if (l < 2) throw InvalidArgument("degenerate_pair: l must be >= 2");
  return {shift_matrix(l, a), clock_matrix(l, lambda)};
}

// Discrete Fourier transform F_{kj} = zeta^{-(j-1)(k-1)} / sqrt(l).
inline ComplexMatrix fourier(int l) {
  if (l < 2) throw InvalidArgument("fourier: l must be >= 2");
  ComplexMatrix f(l, l);
  const double s = 1.0 / std::sqrt(static_cast<double>(l));
  for (int k = 0; k < l; ++k)
    for (int j = 0; j < l; ++j) f(k, j) = s * unit_phase(l, -static_cast<std::int64_t>(j) * k);
  return f;
}

// ---------------------------------------------------------------------------
// Triples

enum class TripleVariant { tau, taw };

inline const char *to_string(TripleVariant v) { return v == TripleVariant::tau ? "tau" : "taw"; }

using Triple = std::array<ComplexMatrix, 3>;

// tau:  (U, conj(nu) U V, V)      -- tau_3 diagonal, equals the Pauli triple at l = 2
// taw:  (U, V, nu U^dagger V)
// Both are ordered triples: tau_1 tau_2 = zeta tau_2 tau_1, tau_2 tau_3 = zeta
// tau_3 tau_2, tau_1 tau_3 = zeta tau_3 tau_1, and every tau_i^l = 1.
inline Triple tau_triple(int l, TripleVariant variant) {
  auto [u, v] = weyl_pair(l);
  const Complex n = nu(l);
  if (variant == TripleVariant::tau) return {u, std::conj(n) * u * v, v};
  return {u, v, n * u.adjoint() * v};
}

// (M^{-1} U M, M^{-1} V M, nu M^{-1} U^dagger V M).
inline Triple conjugated_triple(int l, const ComplexMatrix &m) {
  if (m.rows() != l || m.cols() != l) throw DimensionMismatch("conjugated_triple: M must be l x l");
  const ComplexMatrix mi = checked_inverse(m, "conjugated_triple");
  auto t = tau_triple(l, TripleVariant::taw);
  return {mi * t[0] * m, mi * t[1] * m, mi * t[2] * m};
}

// ---------------------------------------------------------------------------
// Generator sets

enum class Labeling { pauli_clifford, tau, taw, custom };

inline const char *to_string(Labeling l) {
  switch (l) {
  case Labeling::pauli_clifford: return "pauli";
  case Labeling::tau: return "tau";
  case Labeling::taw: return "taw";
  case Labeling::custom: return "custom";
  }
  return "custom";
}

struct GeneratorSet {
  std::vector<ComplexMatrix> matrices;
  int l = 2;
  Complex zeta{-1.0, 0.0};
  Labeling labeling = Labeling::custom;

  std::size_t size() const { return matrices.size(); }
  Eigen::Index dim() const { return matrices.empty() ? 0 : matrices.front().rows(); }
};

// How an odd generator count 2n+1 is realized at dimension l^{n+1}.
enum class OddEmbedding {
  diagonal,  // last generator tau_3^{(x)(n+1)}, diagonal
  truncated, // first 2n+1 generators of the 2n+2 construction
};

namespace detail {

// chain^{(x)(k-1)} (x) site (x) 1^{(x)(sites-k)}
inline ComplexMatrix jordan_wigner_term(const ComplexMatrix &chain, const ComplexMatrix &site, int k,
                                        int sites) {
  std::vector<ComplexMatrix> f;
  for (int j = 1; j < k; ++j) f.push_back(chain);
  f.push_back(site);
  for (int j = k + 1; j <= sites; ++j) f.push_back(identity_matrix(site.rows()));
  return kron_all(f);
}

} // namespace detail

// Clifford generators e_1..e_{2n} at dimension 2^n; with_last appends
// e_{2n+1} = sigma_3^{(x)(n+1)} and embeds everything at dimension 2^{n+1}.
inline GeneratorSet clifford_generators(int n, bool with_last = false) {
  if (n < 0 || (n == 0 && !with_last)) throw InvalidArgument("clifford_generators: n must be >= 1");
  const int sites = with_last ? n + 1 : n;
  GeneratorSet g{{}, 2, {-1.0, 0.0}, Labeling::pauli_clifford};
  const auto s1 = pauli(1), s2 = pauli(2), s3 = pauli(3);
  for (int k = 1; k <= n; ++k) {
    g.matrices.push_back(detail::jordan_wigner_term(s3, s1, k, sites));
    g.matrices.push_back(detail::jordan_wigner_term(s3, s2, k, sites));
  }
  if (with_last) g.matrices.push_back(detail::jordan_wigner_term(s3, s3, sites, sites));
  return g;
}

// Tensor-product generators of T(count, l) at dimension l^{ceil(count/2)}.
//   tau:  t_{2k-1} = tau_3^{(k-1)} (x) tau_1 (x) 1...,  t_{2k} = tau_3^{(k-1)} (x) tau_2 (x) 1...
//   taw:  t_{2k-1} = alpha_k (U^dag V)^{(k-1)} (x) U (x) 1..., t_{2k} = alpha_k (U^dag V)^{(k-1)} (x) V (x) 1...
// Odd counts follow `odd`; the taw variant has no diagonal chain element and
// always truncates.
inline GeneratorSet t_generators(int count, int l, TripleVariant variant,
                                 OddEmbedding odd = OddEmbedding::diagonal) {
  if (count < 1) throw InvalidArgument("t_generators: need at least one generator");
  if (l < 2) throw InvalidArgument("t_generators: l must be >= 2");
  const int pairs = count / 2;
  const bool is_odd = count % 2 == 1;
  const int sites = pairs + (is_odd ? 1 : 0);
  GeneratorSet g{{}, l, zeta(l), variant == TripleVariant::tau ? Labeling::tau : Labeling::taw};

  if (variant == TripleVariant::tau) {
    const auto t = tau_triple(l, TripleVariant::tau);
    for (int k = 1; k <= pairs; ++k) {
      g.matrices.push_back(detail::jordan_wigner_term(t[2], t[0], k, sites));
      g.matrices.push_back(detail::jordan_wigner_term(t[2], t[1], k, sites));
    }
    if (is_odd) {
      const ComplexMatrix &last = odd == OddEmbedding::diagonal ? t[2] : t[0];
      g.matrices.push_back(detail::jordan_wigner_term(t[2], last, sites, sites));
    }
    return g;
  }

  auto [u, v] = weyl_pair(l);
  const ComplexMatrix chain = u.adjoint() * v;
  for (int k = 1; k <= sites; ++k) {
    const Complex a = alpha(l, k);
    g.matrices.push_back(a * detail::jordan_wigner_term(chain, u, k, sites));
    if (static_cast<int>(g.matrices.size()) == count) break;
    g.matrices.push_back(a * detail::jordan_wigner_term(chain, v, k, sites));
  }
  return g;
}

// 1^{(k-1)} (x) op (x) 1^{(sites-k)}
inline ComplexMatrix site_operator(const ComplexMatrix &op, int k, int sites) {
  if (k < 1 || k > sites) throw InvalidArgument("site_operator: site out of range");
  return detail::jordan_wigner_term(identity_matrix(op.rows()), op, k, sites);
}

// Rebuild tau_{i;k} from products of tau-variant generators:
//   tau_{3;k}      = nu t_{2k-1}^{l-1} t_{2k}
//   tau^dag_{3;k}  = conj(nu) t_{2k}^{l-1} t_{2k-1}
//   tau_{1;k}      = t_{2k-1} tau^dag_{3;1} ... tau^dag_{3;k-1}
//   tau_{2;k}      = t_{2k}   tau^dag_{3;1} ... tau^dag_{3;k-1}
inline ComplexMatrix extract_tau_site(const GeneratorSet &gens, int i, int k) {
  if (gens.labeling != Labeling::tau && gens.labeling != Labeling::pauli_clifford)
    throw InvalidArgument("extract_tau_site: generator set must come from the tau construction");
  if (i < 1 || i > 3) throw InvalidArgument("extract_tau_site: i must be 1, 2 or 3");
  const int pairs = static_cast<int>(gens.size()) / 2;
  if (k < 1 || k > pairs) throw InvalidArgument("extract_tau_site: site out of range");
  const int l = gens.l;
  const Complex n = nu(l);
  auto t = [&](int j) -> const ComplexMatrix & { return gens.matrices[static_cast<std::size_t>(j - 1)]; };
  auto tau3_dagger = [&](int site) {
    return (std::conj(n) * matrix_power(t(2 * site), l - 1) * t(2 * site - 1)).eval();
  };
  if (i == 3) return n * matrix_power(t(2 * k - 1), l - 1) * t(2 * k);
  ComplexMatrix out = i == 1 ? t(2 * k - 1) : t(2 * k);
  for (int j = 1; j < k; ++j) out = out * tau3_dagger(j);
  return out;
}

// t'_j = M^{-1} t_j M
inline GeneratorSet conjugate_generators(const GeneratorSet &gens, const ComplexMatrix &m) {
  if (m.rows() != gens.dim() || m.cols() != gens.dim())
    throw DimensionMismatch("conjugate_generators: M has the wrong dimension");
  const ComplexMatrix mi = checked_inverse(m, "conjugate_generators");
  GeneratorSet out = gens;
  for (auto &t : out.matrices) t = mi * t * m;
  return out;
}

// All normal-ordered products t_1^{a_1} ... t_n^{a_n}, 0 <= a_k < l, in
// lexicographic exponent order.
inline std::vector<ComplexMatrix> monomial_images(const GeneratorSet &gens) {
  const auto n = gens.size();
  std::vector<std::vector<ComplexMatrix>> powers(n);
  for (std::size_t k = 0; k < n; ++k) {
    powers[k].push_back(identity_matrix(gens.dim()));
    for (int p = 1; p < gens.l; ++p) powers[k].push_back(powers[k].back() * gens.matrices[k]);
  }
  std::vector<ComplexMatrix> out{identity_matrix(gens.dim())};
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<ComplexMatrix> next;
    next.reserve(out.size() * static_cast<std::size_t>(gens.l));
    for (const auto &m : out)
      for (int p = 0; p < gens.l; ++p) next.push_back(m * powers[k][static_cast<std::size_t>(p)]);
    out = std::move(next);
  }
  return out;
}

// Rank of the vectorized matrices; singular values below 1e-9 of the largest
// are treated as zero.
inline std::size_t span_dimension(const std::vector<ComplexMatrix> &matrices) {
  if (matrices.empty()) throw InvalidArgument("span_dimension: empty list");
  const auto rows = matrices.front().rows(), cols = matrices.front().cols();
  ComplexMatrix stacked(rows * cols, static_cast<Eigen::Index>(matrices.size()));
  for (std::size_t j = 0; j < matrices.size(); ++j) {
    if (matrices[j].rows() != rows || matrices[j].cols() != cols)
      throw DimensionMismatch("span_dimension: matrices differ in shape");
    stacked.col(static_cast<Eigen::Index>(j)) = matrices[j].reshaped();
  }
  Eigen::BDCSVD<ComplexMatrix> svd(stacked);
  const auto &s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  const double cut = 1e-9 * s(0);
  return static_cast<std::size_t>((s.array() > cut).count());
}

// ---------------------------------------------------------------------------
// Relation verification

struct RelationReport {
  double max_commutation_deviation = 0.0; // max_{j<k} |t_j t_k - zeta t_k t_j|_F
  double max_power_deviation = 0.0;       // max_k |t_k^l - 1|_F
  std::vector<std::pair<int, int>> failing_pairs; // 1-based (j, k)
  std::vector<int> failing_powers;                // 1-based k
  double tolerance = 1e-10;
  double threshold = 0.0; // tolerance scaled by dimension and entry magnitude
  bool pass = true;
};

// Pass iff every deviation is below tolerance * dim * max(1, max |entry|).
inline RelationReport verify_relations(const GeneratorSet &gens, double tolerance = 1e-10) {
  RelationReport r;
  r.tolerance = tolerance;
  double scale = 1.0;
  for (const auto &t : gens.matrices) {
    if (t.rows() != gens.dim() || t.cols() != gens.dim())
      throw DimensionMismatch("verify_relations: generators differ in dimension");
    scale = std::max(scale, max_abs_entry(t));
  }
  r.threshold = tolerance * static_cast<double>(std::max<Eigen::Index>(gens.dim(), 1)) * scale;
  const auto n = static_cast<int>(gens.size());
  for (int j = 0; j < n; ++j) {
    const auto &tj = gens.matrices[static_cast<std::size_t>(j)];
    for (int k = j + 1; k < n; ++k) {
      const auto &tk = gens.matrices[static_cast<std::size_t>(k)];
      const double dev = (tj * tk - gens.zeta * tk * tj).norm();
      r.max_commutation_deviation = std::max(r.max_commutation_deviation, dev);
      if (!(dev <= r.threshold)) r.failing_pairs.emplace_back(j + 1, k + 1);
    }
    const double pdev = (matrix_power(tj, gens.l) - identity_matrix(gens.dim())).norm();
    r.max_power_deviation = std::max(r.max_power_deviation, pdev);
    if (!(pdev <= r.threshold)) r.failing_powers.push_back(j + 1);
  }
  r.pass = r.failing_pairs.empty() && r.failing_powers.empty();
  return r;
}

// ---------------------------------------------------------------------------
// Weyl pair standardization

struct Standardization {
  ComplexMatrix basis;     // B with B^{-1} U' B = U and B^{-1} V' B = mu V
  ComplexMatrix transform; // M = B^{-1}, so U' = M^{-1} U M and V' = mu M^{-1} V M
  Complex mu{1.0, 0.0};
};

// Eigenvector chase: take an eigenvector e of V' (eigenvalue mu, the one
// closest to 1 in argument), then b_j = U'^{-j} e has eigenvalue mu zeta^j.
// e is normalized with its first nonzero entry real positive.
inline Standardization standardize_weyl_pair(const ComplexMatrix &u_prime, const ComplexMatrix &v_prime,
                                             int l) {
  if (l < 2) throw InvalidArgument("standardize_weyl_pair: l must be >= 2");
  const auto d = u_prime.rows();
  if (d == 0 || u_prime.cols() != d || v_prime.rows() != d || v_prime.cols() != d)
    throw DimensionMismatch("standardize_weyl_pair: U' and V' must be square of equal size");

  const Complex z = zeta(l);
  const double scale = static_cast<double>(d) * std::max(1.0, max_abs_entry(u_prime) * max_abs_entry(v_prime));
  const double residual = (u_prime * v_prime - z * v_prime * u_prime).norm();
  if (!(residual <= 1e-8 * scale))
    throw RelationViolated("standardize_weyl_pair: U'V' - zeta V'U' = " + std::to_string(residual));
  if (!is_invertible(u_prime) || !is_invertible(v_prime))
    throw RelationViolated("standardize_weyl_pair: U' and V' must be invertible");
  if (d != l)
    throw ReducibleRepresentation("standardize_weyl_pair: dimension " + std::to_string(d) +
                                  " exceeds relation order " + std::to_string(l));

  Eigen::ComplexEigenSolver<ComplexMatrix> es(v_prime);
  if (es.info() != Eigen::Success) throw Error("standardize_weyl_pair: eigen decomposition failed");
  const auto &evals = es.eigenvalues();
  const double spread = evals.cwiseAbs().maxCoeff();
  for (Eigen::Index a = 0; a < d; ++a)
    for (Eigen::Index b = a + 1; b < d; ++b)
      if (std::abs(evals(a) - evals(b)) <= 1e-6 * spread)
        throw ReducibleRepresentation("standardize_weyl_pair: V' has a repeated eigenvalue");

  Eigen::Index pick = 0;
  for (Eigen::Index a = 1; a < d; ++a)
    if (std::abs(std::arg(evals(a))) < std::abs(std::arg(evals(pick))) - 1e-12) pick = a;

  ComplexVector e = es.eigenvectors().col(pick).normalized();
  const double emax = e.cwiseAbs().maxCoeff();
  for (Eigen::Index r = 0; r < d; ++r) {
    if (std::abs(e(r)) > 1e-8 * emax) {
      e *= std::conj(e(r)) / std::abs(e(r));
      break;
    }
  }

  ComplexMatrix basis(d, d);
  basis.col(0) = e;
  ComplexVector w = e;
  for (Eigen::Index j = d - 1; j >= 1; --j) {
    w = u_prime * w;
    basis.col(j) = w;
  }
  if (!is_invertible(basis))
    throw ReducibleRepresentation("standardize_weyl_pair: orbit of U' does not span the space");

  Standardization s;
  s.mu = evals(pick);
  s.transform = basis.fullPivLu().inverse();
  s.basis = std::move(basis);
  return s;
}

// max over columns of min_theta |a_j - e^{i theta} b_j|
inline double column_phase_distance(const ComplexMatrix &a, const ComplexMatrix &b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("column_phase_distance");
  double worst = 0.0;
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    const Complex overlap = b.col(j).dot(a.col(j));
    const Complex phase = std::abs(overlap) > 0 ? overlap / std::abs(overlap) : Complex{1.0, 0.0};
    worst = std::max(worst, (a.col(j) - phase * b.col(j)).norm());
  }
  return worst;
}

// ---------------------------------------------------------------------------
// Reducible pairs

// (U^m, V) for a proper divisor m of l; relation order l/m.
inline MatrixPair reducible_pair(int l, int m) {
  if (m <= 1 || m >= l || l % m != 0) throw InvalidArgument("reducible_pair: m must be a proper divisor of l");
  auto [u, v] = weyl_pair(l);
  return {matrix_power(u, m), std::move(v)};
}

struct ReducibleDecomposition {
  ComplexMatrix permutation;          // P with P^T (U^m) P and P^T V P block diagonal
  std::vector<MatrixPair> blocks;     // j-th block: (U_k, zeta^{j} V_k), k = l/m, j = 0..m-1
};

// Index r = c + m s (residue class c, step s) moves to position c k + s.
inline ReducibleDecomposition reducible_decomposition(int l, int m) {
  if (m <= 1 || m >= l || l % m != 0)
    throw InvalidArgument("reducible_decomposition: m must be a proper divisor of l");
  const int k = l / m;
  ReducibleDecomposition out;
  out.permutation = ComplexMatrix::Zero(l, l);
  for (int c = 0; c < m; ++c)
    for (int s = 0; s < k; ++s) out.permutation(c + m * s, c * k + s) = 1.0;
  auto [uk, vk] = weyl_pair(k);
  for (int c = 0; c < m; ++c) out.blocks.push_back({uk, unit_phase(l, c) * vk});
  return out;
}

inline ComplexMatrix block_diagonal(const std::vector<ComplexMatrix> &blocks) {
  Eigen::Index d = 0;
  for (const auto &b : blocks) d += b.rows();
  ComplexMatrix out = ComplexMatrix::Zero(d, d);
  Eigen::Index at = 0;
  for (const auto &b : blocks) {
    out.block(at, at, b.rows(), b.cols()) = b;
    at += b.rows();
  }
  return out;
}

} // namespace weylclifford
