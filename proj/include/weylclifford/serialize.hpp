#pragma once

#include <json.hpp>

#include <cmath>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "commforms.hpp"
#include "cyclotomic.hpp"
#include "error.hpp"
#include "matrep.hpp"
#include "rational.hpp"

namespace weylclifford {

using Json = nlohmann::ordered_json;

// {"order": m, "coeffs": ["p/q", ...]}
inline Json cyclotomic_to_json(const CyclotomicNumber &x) {
  Json coeffs = Json::array();
  for (const auto &c : x.coeffs()) coeffs.push_back(to_fraction_string(c));
  return Json{{"order", x.order()}, {"coeffs", std::move(coeffs)}};
}

inline CyclotomicNumber cyclotomic_from_json(const Json &j, FieldPtr field = nullptr) {
  try {
    const int order = j.at("order").get<int>();
    if (!field) field = make_field(order);
    if (field->order() != order) throw OrderMismatch(field->order(), order);
    std::vector<Rational> v;
    for (const auto &c : j.at("coeffs")) v.push_back(parse_fraction(c.get<std::string>()));
    if (static_cast<int>(v.size()) != field->degree())
      throw ParseError("cyclotomic: expected " + std::to_string(field->degree()) + " coefficients");
    return {field, std::move(v)};
  } catch (const Json::exception &e) {
    throw ParseError(std::string("cyclotomic: ") + e.what());
  }
}

// {"n":..., "l":..., "mode":"strict|weak", "terms":[{"exp":[...], "coeff":{...}}]}
// Terms come out in lexicographic monomial order. A zeta_power other than 1
// is written as an extra field.
inline Json element_to_json(const AlgebraElement &x) {
  const auto &sig = x.signature();
  Json terms = Json::array();
  for (const auto &[m, c] : x.terms()) terms.push_back(Json{{"exp", m}, {"coeff", cyclotomic_to_json(c)}});
  Json out{{"n", sig.n()}, {"l", sig.l()}, {"mode", to_string(sig.mode())}};
  if (sig.zeta_power() != 1) out["zeta_power"] = sig.zeta_power();
  out["terms"] = std::move(terms);
  return out;
}

inline AlgebraElement element_from_json(const Json &j) {
  try {
    const std::string mode = j.at("mode").get<std::string>();
    if (mode != "strict" && mode != "weak") throw ParseError("element: mode must be strict or weak");
    AlgebraSignature sig(j.at("n").get<int>(), j.at("l").get<int>(),
                         mode == "strict" ? AlgebraMode::strict : AlgebraMode::weak,
                         j.value("zeta_power", 1));
    AlgebraElement x(sig);
    for (const auto &t : j.at("terms"))
      x.add_term(t.at("exp").get<Monomial>(), cyclotomic_from_json(t.at("coeff"), sig.field()));
    return x;
  } catch (const Json::exception &e) {
    throw ParseError(std::string("element: ") + e.what());
  }
}

// {"dim": d, "entries": [[re, im], ...]} row-major
inline Json matrix_to_json(const ComplexMatrix &m) {
  Json entries = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) entries.push_back(Json::array({m(r, c).real(), m(r, c).imag()}));
  return Json{{"dim", m.rows()}, {"entries", std::move(entries)}};
}

inline ComplexMatrix matrix_from_json(const Json &j) {
  try {
    const auto d = j.at("dim").get<long>();
    const auto &entries = j.at("entries");
    if (d < 1) throw ParseError("matrix: dim must be positive");
    if (!entries.is_array() || static_cast<long>(entries.size()) != d * d)
      throw ParseError("matrix: expected dim*dim entries");
    ComplexMatrix m(d, d);
    for (long i = 0; i < d * d; ++i) {
      const auto &e = entries[static_cast<std::size_t>(i)];
      if (!e.is_array() || e.size() != 2) throw ParseError("matrix: entries are [re, im] pairs");
      const double re = e[0].get<double>(), im = e[1].get<double>();
      if (!std::isfinite(re) || !std::isfinite(im)) throw ParseError("matrix: non-finite entry");
      m(i / d, i % d) = Complex(re, im);
    }
    return m;
  } catch (const Json::exception &e) {
    throw ParseError(std::string("matrix: ") + e.what());
  }
}

// {"n": n, "entries": [["p/q", ...], ...]}
inline Json rational_matrix_to_json(const RationalMatrix &m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_fraction_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return Json{{"n", m.rows()}, {"entries", std::move(rows)}};
}

inline RationalMatrix rational_matrix_from_json(const Json &j) {
  try {
    const auto n = j.at("n").get<std::size_t>();
    const auto &rows = j.at("entries");
    if (rows.size() != n) throw ParseError("form: expected n rows");
    RationalMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      if (rows[r].size() != n) throw ParseError("form: expected n columns");
      for (std::size_t c = 0; c < n; ++c) m(r, c) = parse_fraction(rows[r][c].get<std::string>());
    }
    return m;
  } catch (const Json::exception &e) {
    throw ParseError(std::string("form: ") + e.what());
  }
}

inline Json report_to_json(const RelationReport &r) {
  Json pairs = Json::array();
  for (const auto &[j, k] : r.failing_pairs) pairs.push_back(Json::array({j, k}));
  return Json{{"pass", r.pass},
              {"max_commutation_deviation", r.max_commutation_deviation},
              {"max_power_deviation", r.max_power_deviation},
              {"tolerance", r.tolerance},
              {"threshold", r.threshold},
              {"failing_pairs", std::move(pairs)},
              {"failing_powers", r.failing_powers}};
}

inline Labeling labeling_from_string(const std::string &s) {
  if (s == "pauli") return Labeling::pauli_clifford;
  if (s == "tau") return Labeling::tau;
  if (s == "taw") return Labeling::taw;
  if (s == "custom") return Labeling::custom;
  throw ParseError("unknown labeling: " + s);
}

// {"l":..., "zeta":[re, im], "variant":..., "matrices":[...]}
inline Json generator_set_to_json(const GeneratorSet &g) {
  Json mats = Json::array();
  for (const auto &m : g.matrices) mats.push_back(matrix_to_json(m));
  return Json{{"count", g.size()},
              {"l", g.l},
              {"zeta", Json::array({g.zeta.real(), g.zeta.imag()})},
              {"variant", to_string(g.labeling)},
              {"matrices", std::move(mats)}};
}

inline GeneratorSet generator_set_from_json(const Json &j) {
  try {
    GeneratorSet g;
    g.l = j.at("l").get<int>();
    if (g.l < 2) throw ParseError("generator set: l must be >= 2");
    if (j.contains("zeta")) {
      const auto &z = j.at("zeta");
      g.zeta = Complex(z.at(0).get<double>(), z.at(1).get<double>());
    } else {
      g.zeta = zeta(g.l);
    }
    g.labeling = labeling_from_string(j.value("variant", std::string("custom")));
    for (const auto &m : j.at("matrices")) g.matrices.push_back(matrix_from_json(m));
    if (g.matrices.empty()) throw ParseError("generator set: no matrices");
    for (const auto &m : g.matrices)
      if (m.rows() != g.dim()) throw ParseError("generator set: matrices differ in dimension");
    return g;
  } catch (const Json::exception &e) {
    throw ParseError(std::string("generator set: ") + e.what());
  }
}

} // namespace weylclifford
