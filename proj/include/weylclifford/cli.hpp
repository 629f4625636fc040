#pragma once

// Command-line front end. Kept in a header so tests can drive it in-process;
// tools/weylclifford.cpp is a thin main().

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "commforms.hpp"
#include "cyclotomic.hpp"
#include "error.hpp"
#include "matrep.hpp"
#include "qbinom.hpp"
#include "random.hpp"
#include "serialize.hpp"

namespace weylclifford::cli {

enum ExitCode : int { pass = 0, verification_failure = 1, usage_error = 2 };

inline constexpr double default_tolerance = 1e-10;
inline constexpr const char *tolerance_env = "WEYLCLIFFORD_TOL";

// --tol beats WEYLCLIFFORD_TOL beats the built-in default.
inline double resolve_tolerance(const std::optional<double> &flag) {
  if (flag) return *flag;
  if (const char *env = std::getenv(tolerance_env)) {
    char *end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && *end == '\0' && v > 0 && std::isfinite(v)) return v;
    throw InvalidArgument(std::string(tolerance_env) + " is not a positive number");
  }
  return default_tolerance;
}

struct RunConfig {
  int n = 2;
  int l = 3;
  std::string variant = "tau";
  std::string odd = "diagonal";
  std::string mode = "strict";
  int trials = 10;
  std::uint64_t seed = 1;
  std::optional<int> root;
  bool unit = false;
  std::optional<double> tol;
  std::string out;
  std::string format = "json";
  int k = 0;
  std::string input;
};

namespace detail {

// Six significant digits for pretty text.
inline std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(6) << v;
  return os.str();
}

// Matrix entries: round-off below 5e-16 shows as 0.
inline std::string fmt(Complex z) {
  std::ostringstream os;
  const double re = std::abs(z.real()) < 5e-16 ? 0.0 : z.real();
  const double im = std::abs(z.imag()) < 5e-16 ? 0.0 : z.imag();
  os << fmt(re) << (im < 0 ? "-" : "+") << fmt(std::abs(im)) << "i";
  return os.str();
}

inline std::string pretty_matrix(const ComplexMatrix &m) {
  std::ostringstream os;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    os << "  [";
    for (Eigen::Index c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << fmt(m(r, c));
    os << "]\n";
  }
  return os.str();
}

inline std::string pretty_rational_matrix(const RationalMatrix &m) {
  std::ostringstream os;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << "  [";
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << std::setw(3) << m(r, c).str();
    os << " ]\n";
  }
  return os.str();
}

inline std::string pretty_json(const Json &j) { return j.dump(2) + "\n"; }

struct Output {
  std::string json;
  std::string text;
};

inline void emit(const RunConfig &cfg, const Output &o, std::ostream &out) {
  const std::string &payload = cfg.format == "text" ? o.text : o.json;
  if (cfg.out.empty()) {
    out << payload;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw InvalidArgument("cannot open output file: " + cfg.out);
  f << payload;
}

inline Json read_json_file(const std::string &path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ParseError("cannot read input file: " + path);
  try {
    return Json::parse(f);
  } catch (const Json::exception &e) {
    throw ParseError("malformed JSON in " + path + ": " + e.what());
  }
}

inline TripleVariant parse_variant(const std::string &v) {
  if (v == "tau") return TripleVariant::tau;
  if (v == "taw") return TripleVariant::taw;
  throw InvalidArgument("unknown variant: " + v);
}

} // namespace detail

// ---------------------------------------------------------------------------
// Subcommands. Each returns an exit code and writes through emit().

inline int cmd_gen(const RunConfig &cfg, std::ostream &out) {
  if (cfg.n < 1) throw InvalidArgument("gen: --n must be >= 1");
  if (cfg.l < 2) throw InvalidArgument("gen: --l must be >= 2");
  GeneratorSet g;
  if (cfg.variant == "pauli") {
    if (cfg.l != 2) throw InvalidArgument("gen: the pauli variant needs --l 2");
    g = clifford_generators(cfg.n / 2, cfg.n % 2 == 1);
  } else {
    const auto odd = cfg.odd == "truncated" ? OddEmbedding::truncated : OddEmbedding::diagonal;
    g = t_generators(cfg.n, cfg.l, detail::parse_variant(cfg.variant), odd);
  }
  const auto report = verify_relations(g, resolve_tolerance(cfg.tol));

  Json j = generator_set_to_json(g);
  j["report"] = report_to_json(report);

  std::ostringstream text;
  text << "T(" << cfg.n << ", " << cfg.l << ") generators, variant " << to_string(g.labeling) << ", dim " << g.dim()
       << "\n";
  for (std::size_t k = 0; k < g.size(); ++k) text << "t_" << k + 1 << " =\n" << detail::pretty_matrix(g.matrices[k]);
  text << "relations: " << (report.pass ? "pass" : "FAIL")
       << " (commutation " << detail::fmt(report.max_commutation_deviation) << ", power "
       << detail::fmt(report.max_power_deviation) << ")\n";

  detail::emit(cfg, {detail::pretty_json(j), text.str()}, out);
  return report.pass ? pass : verification_failure;
}

inline int cmd_verify(const RunConfig &cfg, std::ostream &out) {
  const GeneratorSet g = generator_set_from_json(detail::read_json_file(cfg.input));
  const auto report = verify_relations(g, resolve_tolerance(cfg.tol));
  Json j{{"command", "verify"}, {"count", g.size()}, {"l", g.l}, {"dim", g.dim()}, {"report", report_to_json(report)}};
  std::ostringstream text;
  text << "relations: " << (report.pass ? "pass" : "FAIL") << " (commutation "
       << detail::fmt(report.max_commutation_deviation) << ", power " << detail::fmt(report.max_power_deviation)
       << ", threshold " << detail::fmt(report.threshold) << ")\n";
  for (const auto &[a, b] : report.failing_pairs) text << "  failing pair t_" << a << ", t_" << b << "\n";
  for (auto k : report.failing_powers) text << "  failing power t_" << k << "^l\n";
  detail::emit(cfg, {detail::pretty_json(j), text.str()}, out);
  return report.pass ? pass : verification_failure;
}

inline int cmd_verify_lame(const RunConfig &cfg, std::ostream &out) {
  if (cfg.n < 1) throw InvalidArgument("verify-lame: --n must be >= 1");
  if (cfg.l < 2) throw InvalidArgument("verify-lame: --l must be >= 2");
  if (cfg.trials < 1) throw InvalidArgument("verify-lame: --trials must be >= 1");
  if (cfg.mode != "strict" && cfg.mode != "weak") throw InvalidArgument("verify-lame: --mode is strict or weak");
  const bool weak = cfg.mode == "weak";
  const double tol = resolve_tolerance(cfg.tol);

  const AlgebraSignature sig(cfg.n, cfg.l, weak ? AlgebraMode::weak : AlgebraMode::strict);
  const auto rep = t_generators(cfg.n, cfg.l, TripleVariant::tau);
  const auto dim = rep.dim();
  CoefficientStream rng(cfg.seed);

  bool all_pass = true;
  std::size_t max_residual_terms = 0;
  double max_dev = 0.0, max_rel = 0.0;
  Json trials = Json::array();
  for (int t = 0; t < cfg.trials; ++t) {
    std::vector<CyclotomicNumber> a;
    for (int k = 0; k < cfg.n; ++k) a.push_back(rng.cyclotomic(sig.field()));
    const auto symbolic = lame_check(sig, a);
    max_residual_terms = std::max(max_residual_terms, symbolic.residual.size());

    // Numerical face: weak mode rescales each generator so that t_k^l is a
    // nontrivial central scalar.
    ComplexMatrix sum = ComplexMatrix::Zero(dim, dim), rhs = ComplexMatrix::Zero(dim, dim);
    double scale = 0.0;
    for (int k = 0; k < cfg.n; ++k) {
      const Complex s = weak ? Complex(1.0, 0.0) + 0.5 * rng.complex() : Complex(1.0, 0.0);
      const ComplexMatrix tk = s * rep.matrices[static_cast<std::size_t>(k)];
      const Complex ak = a[static_cast<std::size_t>(k)].to_complex();
      sum += ak * tk;
      rhs += std::pow(ak, cfg.l) * matrix_power(tk, cfg.l);
      scale += std::abs(ak) * std::abs(s);
    }
    const double dev = (matrix_power(sum, cfg.l) - rhs).norm();
    const double rel = dev / std::max(1.0, std::pow(scale, cfg.l));
    const bool numeric_ok = rel <= tol * static_cast<double>(dim);
    max_dev = std::max(max_dev, dev);
    max_rel = std::max(max_rel, rel);
    all_pass = all_pass && symbolic.holds && numeric_ok;
    trials.push_back(Json{{"symbolic", symbolic.holds}, {"residual_terms", symbolic.residual.size()},
                          {"numeric_deviation", dev}, {"numeric_relative", rel}, {"numeric", numeric_ok}});
  }

  Json j{{"command", "verify-lame"}, {"n", cfg.n}, {"l", cfg.l}, {"mode", cfg.mode}, {"trials", cfg.trials},
         {"seed", cfg.seed}, {"tolerance", tol}, {"max_residual_terms", max_residual_terms},
         {"max_numeric_deviation", max_dev}, {"max_numeric_relative", max_rel}, {"pass", all_pass},
         {"results", std::move(trials)}};
  std::ostringstream text;
  text << "Lame identity, T(" << cfg.n << ", " << cfg.l << ") " << cfg.mode << ", " << cfg.trials
       << " trials (seed " << cfg.seed << ")\n"
       << "  symbolic residual terms (max): " << max_residual_terms << "\n"
       << "  numeric deviation (max):       " << detail::fmt(max_dev) << " (relative " << detail::fmt(max_rel)
       << ")\n"
       << "  verdict: " << (all_pass ? "pass" : "FAIL") << "\n";
  detail::emit(cfg, {detail::pretty_json(j), text.str()}, out);
  return all_pass ? pass : verification_failure;
}

inline int cmd_qbinom(const RunConfig &cfg, std::ostream &out) {
  if (cfg.l < 0 || cfg.k < 0 || cfg.k > cfg.l) throw InvalidArgument("qbinom: need 0 <= k <= l");
  if (cfg.unit && cfg.root) throw InvalidArgument("qbinom: --unit and --root are exclusive");
  Json j{{"command", "qbinom"}, {"l", cfg.l}, {"k", cfg.k}};
  std::ostringstream text;
  if (!cfg.unit && !cfg.root) {
    const auto p = q_binomial(cfg.l, cfg.k);
    Json coeffs = Json::array();
    for (const auto &c : p.coeffs()) coeffs.push_back(c.str());
    j["lambda"] = "formal";
    j["polynomial"] = std::move(coeffs);
    text << "[" << cfg.l << " " << cfg.k << "]_lambda = " << p.str("lambda") << "\n";
  } else {
    const int order = cfg.unit ? 1 : *cfg.root;
    if (order < 1) throw InvalidArgument("qbinom: --root must be >= 1");
    const auto lambda = root_of_unity(order, 1);
    const auto v = q_binomial(cfg.l, cfg.k, lambda);
    const Complex approx = v.to_complex();
    j["lambda"] = cfg.unit ? Json("unit") : Json{{"root", order}};
    j["value"] = cyclotomic_to_json(v);
    j["approx"] = Json::array({approx.real(), approx.imag()});
    text << "[" << cfg.l << " " << cfg.k << "]_lambda at lambda = "
         << (cfg.unit ? std::string("1") : "zeta_" + std::to_string(order)) << ": " << v.str()
         << (order > 2 ? "  (z = zeta_" + std::to_string(order) + ")" : std::string()) << "\n"
         << "  ~ " << detail::fmt(approx) << "\n";
  }
  detail::emit(cfg, {detail::pretty_json(j), text.str()}, out);
  return pass;
}

inline int cmd_forms(const RunConfig &cfg, std::ostream &out) {
  if (cfg.n < 2 || cfg.n % 2 != 0) throw InvalidArgument("forms: --n must be even and >= 2");
  const auto n = static_cast<std::size_t>(cfg.n);
  const auto hc = canonical_form(n);
  const auto hpm = clifford_form(n);
  const auto L = matrix_L(n), Lp = matrix_Lprime(n);
  const bool l_ok = transform_form(L, hc) == hpm;
  const bool lp_ok = transform_form(Lp, hc) == hpm;
  const bool det_ok = L.determinant() == 1 && Lp.determinant() == 1;
  const bool ok = l_ok && lp_ok && det_ok;

  Json j{{"command", "forms"},
         {"n", cfg.n},
         {"h_c", rational_matrix_to_json(hc.matrix())},
         {"h_pm", rational_matrix_to_json(hpm.matrix())},
         {"L", rational_matrix_to_json(L)},
         {"L_prime", rational_matrix_to_json(Lp)},
         {"verdicts", Json{{"L_transports_h_c", l_ok}, {"L_prime_transports_h_c", lp_ok}, {"unit_determinants", det_ok}}},
         {"pass", ok}};
  std::ostringstream text;
  text << "h_c =\n" << detail::pretty_rational_matrix(hc.matrix()) << "h+- =\n"
       << detail::pretty_rational_matrix(hpm.matrix()) << "L =\n" << detail::pretty_rational_matrix(L)
       << "L' =\n" << detail::pretty_rational_matrix(Lp)
       << "L h_c L^T == h+-  : " << (l_ok ? "pass" : "FAIL") << "\n"
       << "L' h_c L'^T == h+-: " << (lp_ok ? "pass" : "FAIL") << "\n"
       << "det L = det L' = 1: " << (det_ok ? "pass" : "FAIL") << "\n";
  detail::emit(cfg, {detail::pretty_json(j), text.str()}, out);
  return ok ? pass : verification_failure;
}

inline int cmd_fourier(const RunConfig &cfg, std::ostream &out) {
  if (cfg.l < 2) throw InvalidArgument("fourier: --l must be >= 2");
  const auto f = fourier(cfg.l);
  const auto [u, v] = weyl_pair(cfg.l);
  const ComplexMatrix fi = f.adjoint();
  const double unitary = unitarity_deviation(f);
  const double u_dev = (fi * u * f - v.inverse()).norm();
  const double v_dev = (fi * v * f - u).norm();
  const bool ok = unitary <= 1e-12 * cfg.l && u_dev <= 1e-11 * cfg.l && v_dev <= 1e-11 * cfg.l;
  Json j{{"command", "fourier"}, {"l", cfg.l}, {"F", matrix_to_json(f)},
         {"unitarity_deviation", unitary}, {"FinvUF_minus_Vinv", u_dev}, {"FinvVF_minus_U", v_dev}, {"pass", ok}};
  std::ostringstream text;
  text << "F (l = " << cfg.l << ") =\n" << detail::pretty_matrix(f)
       << "|F F^dag - 1|        = " << detail::fmt(unitary) << "\n"
       << "|F^-1 U F - V^-1|    = " << detail::fmt(u_dev) << "\n"
       << "|F^-1 V F - U|       = " << detail::fmt(v_dev) << "\n"
       << "verdict: " << (ok ? "pass" : "FAIL") << "\n";
  detail::emit(cfg, {detail::pretty_json(j), text.str()}, out);
  return ok ? pass : verification_failure;
}

// Input: {"l": l, "U": matrix, "V": matrix}
inline int cmd_equiv(const RunConfig &cfg, std::ostream &out) {
  const Json in = detail::read_json_file(cfg.input);
  int l = 0;
  ComplexMatrix up, vp;
  try {
    l = in.at("l").get<int>();
    up = matrix_from_json(in.at("U"));
    vp = matrix_from_json(in.at("V"));
  } catch (const Json::exception &e) {
    throw ParseError(std::string("equiv input: ") + e.what());
  }

  Json j{{"command", "equiv"}, {"l", l}};
  std::ostringstream text;
  int code = pass;
  try {
    const auto s = standardize_weyl_pair(up, vp, l);
    const auto [u, v] = weyl_pair(l);
    const ComplexMatrix bi = s.transform;
    const double u_dev = (bi * up * s.basis - u).norm();
    const double v_dev = (bi * vp * s.basis - s.mu * v).norm();
    const double scale = static_cast<double>(l) * std::max(1.0, max_abs_entry(s.basis) * max_abs_entry(bi));
    const bool ok = u_dev <= 1e-7 * scale && v_dev <= 1e-7 * scale;
    code = ok ? pass : verification_failure;
    j["M"] = matrix_to_json(s.transform);
    j["basis"] = matrix_to_json(s.basis);
    j["mu"] = Json::array({s.mu.real(), s.mu.imag()});
    j["U_deviation"] = u_dev;
    j["V_deviation"] = v_dev;
    j["pass"] = ok;
    text << "M (U' = M^-1 U M, V' = mu M^-1 V M) =\n" << detail::pretty_matrix(s.transform)
         << "mu = " << detail::fmt(s.mu) << "\n"
         << "|B^-1 U' B - U| = " << detail::fmt(u_dev) << ", |B^-1 V' B - mu V| = " << detail::fmt(v_dev) << "\n"
         << "verdict: " << (ok ? "pass" : "FAIL") << "\n";
  } catch (const RelationViolated &e) {
    code = verification_failure;
    j["pass"] = false;
    j["error"] = Json{{"kind", "relation_violated"}, {"message", e.what()}};
    text << "FAIL: " << e.what() << "\n";
  } catch (const ReducibleRepresentation &e) {
    code = verification_failure;
    j["pass"] = false;
    j["error"] = Json{{"kind", "reducible"}, {"message", e.what()}};
    text << "FAIL (reducible): " << e.what() << "\n";
  }
  detail::emit(cfg, {detail::pretty_json(j), text.str()}, out);
  return code;
}

// ---------------------------------------------------------------------------

inline int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"Weyl-Clifford algebra toolkit: representations, exact identity checks, forms"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&](CLI::App *sub) {
    sub->add_option("--tol", cfg.tol, "Tolerance override (else $WEYLCLIFFORD_TOL, else 1e-10)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--out", cfg.out, "Write output to a file instead of stdout");
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  };

  auto *gen = app.add_subcommand("gen", "Build tensor-product generators and verify their relations");
  gen->add_option("--n", cfg.n, "Number of generators");
  gen->add_option("--l", cfg.l, "Order of zeta");
  gen->add_option("--variant", cfg.variant, "Triple used at each site")->check(CLI::IsMember({"tau", "taw", "pauli"}));
  gen->add_option("--odd", cfg.odd, "Odd-count embedding")->check(CLI::IsMember({"diagonal", "truncated"}));
  common(gen);

  auto *verify = app.add_subcommand("verify", "Check the relations of a generator-set JSON file");
  verify->add_option("file", cfg.input, "Generator set produced by `gen`")->required();
  common(verify);

  auto *lame = app.add_subcommand("verify-lame", "Check (sum a_k t_k)^l exactly and numerically");
  lame->add_option("--n", cfg.n, "Number of generators");
  lame->add_option("--l", cfg.l, "Order of zeta");
  lame->add_option("--trials", cfg.trials, "Random coefficient vectors");
  lame->add_option("--seed", cfg.seed, "Seed for the coefficient stream");
  lame->add_option("--mode", cfg.mode, "Algebra mode")->check(CLI::IsMember({"strict", "weak"}));
  common(lame);

  auto *qb = app.add_subcommand("qbinom", "Deformed binomial coefficient [l k]_lambda");
  qb->add_option("l", cfg.l, "Upper index")->required();
  qb->add_option("k", cfg.k, "Lower index")->required();
  qb->add_option("--root", cfg.root, "lambda = e^{2 pi i / order}");
  qb->add_flag("--unit", cfg.unit, "lambda = 1");
  common(qb);

  auto *forms = app.add_subcommand("forms", "Commutator forms h_c, h+-, and the transports L, L'");
  forms->add_option("--n", cfg.n, "Even dimension")->required();
  common(forms);

  auto *four = app.add_subcommand("fourier", "Discrete Fourier transform and its Weyl-pair action");
  four->add_option("--l", cfg.l, "Dimension")->required();
  common(four);

  auto *equiv = app.add_subcommand("equiv", "Standardize a Weyl pair read from JSON");
  equiv->add_option("file", cfg.input, "JSON {\"l\":..., \"U\":matrix, \"V\":matrix}")->required();
  common(equiv);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError &e) {
    app.exit(e, out, err);
    return usage_error;
  }

  try {
    if (*gen) return cmd_gen(cfg, out);
    if (*verify) return cmd_verify(cfg, out);
    if (*lame) return cmd_verify_lame(cfg, out);
    if (*qb) return cmd_qbinom(cfg, out);
    if (*forms) return cmd_forms(cfg, out);
    if (*four) return cmd_fourier(cfg, out);
    if (*equiv) return cmd_equiv(cfg, out);
  } catch (const InvalidArgument &e) {
    err << "usage error: " << e.what() << "\n";
    return usage_error;
  } catch (const ParseError &e) {
    err << "input error: " << e.what() << "\n";
    return usage_error;
  } catch (const Error &e) {
    err << "error: " << e.what() << "\n";
    return verification_failure;
  }
  return usage_error;
}

inline int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  std::vector<const char *> argv{"weylclifford"};
  for (const auto &a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

} // namespace weylclifford::cli
