#include <chrono>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qfock/algebra.hpp"
#include "qfock/characters.hpp"
#include "qfock/fock.hpp"
#include "qfock/matrix_a.hpp"
#include "qfock/modstruct.hpp"
#include "qfock/mpoly.hpp"
#include "qfock/oracle.hpp"
#include "qfock/qtwo.hpp"
#include "qfock/quadscalar.hpp"
#include "qfock/rational.hpp"

namespace {

using nlohmann::json;
using namespace qfock;

constexpr long double kTolerance = 1e-10L;

json json_int(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return v.str();
}

json report_to_json(const QStatReport& r) {
  json out;
  out["ok"] = r.ok;
  out["checks"] = r.checks;
  out["violations"] = r.violations;
  return out;
}

std::string render_tuple(const std::vector<long long>& v) {
  std::string out = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(v[i]);
  }
  return out + ")";
}

std::vector<long long> parse_csv(const std::string& text) {
  std::vector<long long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoll(item));
  return out;
}

std::vector<Rational> parse_csv_rational(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  return out;
}

int run_check_algebra(unsigned n, bool inject_fault, const std::string& format) {
  const QStatReport axioms = verify_superbracket_axioms(n);
  const QStatReport rep = verify_defining_rep(n);
  const QStatReport qstat = verify_q_statistics(n, inject_fault);
  const bool pass = axioms.ok && rep.ok && qstat.ok;

  if (format == "json") {
    json out;
    out["command"] = "check-algebra";
    out["n"] = n;
    out["suites"]["superbracket"] = report_to_json(axioms);
    out["suites"]["defining_rep"] = report_to_json(rep);
    out["suites"]["q_statistics"] = report_to_json(qstat);
    out["pass"] = pass;
    std::cout << out.dump(2) << "\n";
  } else {
    auto line = [](const char* name, const QStatReport& r) {
      std::cout << name << ": " << (r.ok ? "ok" : "FAIL") << " (checks=" << r.checks
                << ", violations=" << r.violations.size() << ")\n";
      for (size_t i = 0; i < r.violations.size() && i < 5; ++i) {
        std::cout << "  violated: " << r.violations[i] << "\n";
      }
    };
    line("superbracket axioms", axioms);
    line("defining representation", rep);
    line("q-statistics", qstat);
    std::cout << "result: " << (pass ? "pass" : "fail") << "\n";
  }
  return pass ? 0 : 1;
}

int run_report(unsigned n, unsigned p, unsigned level_cap,
               const std::optional<std::string>& weight_flag,
               const std::string& format) {
  (void)level_cap;
  bool pass = true;

  const Integer dim = dim_vp(n, p);
  const auto decomposition = gl_decomposition(n, p);
  Integer weyl_sum = 0;
  for (const auto& lambda : decomposition) weyl_sum += weyl_dim_gl(lambda);

  std::vector<std::vector<unsigned>> weights = vp_weights(n, p);
  if (weight_flag.has_value()) {
    Weight w;
    for (long long v : parse_csv(*weight_flag)) w.push_back(v);
    const auto m = weight_m_part(w, n, p);
    if (!m.has_value()) {
      std::cerr << "weight " << render_tuple(w) << " is not a weight of this module\n";
      return 2;
    }
    weights = {*m};
  }

  Integer enumerated = 0;
  for (const auto& m : vp_weights(n, p)) enumerated += vp_mult(m, p);
  if (enumerated != dim || weyl_sum != dim) pass = false;

  const MPoly by_weights = char_from_weights(n, p);
  const MPoly by_formula = char_formula(n, p);
  const MPoly by_schur = char_schur_sum(n, p);
  const bool chars_agree = by_weights == by_formula && by_formula == by_schur;
  const std::vector<Rational> ones(n + 1, Rational(1));
  const bool char_dim = by_weights.eval(ones) == Rational(dim);
  if (!chars_agree || !char_dim) pass = false;

  json jweights = json::array();
  std::vector<std::string> weight_lines;
  for (const auto& m : weights) {
    const WeightSpaceInfo info = weight_space_info(m, n, p);
    json jw;
    jw["weight"] = info.weight;
    jw["level"] = info.level;
    jw["dim_bar"] = info.dim_bar;
    jw["dim_vp"] = info.dim_vp;
    std::ostringstream line;
    line << "weight " << render_tuple(info.weight) << ": level " << info.level
         << " dim_bar " << info.dim_bar << " dim_vp " << info.dim_vp;
    if (info.level <= p && info.dim_vp > 0) {
      const GramMatrix g = gram(m, p);
      const PositivityCertificate cert = is_positive_definite(g);
      if (!cert.positive_definite) pass = false;
      json minors = json::array();
      for (const QuadScalar& minor : cert.minors) {
        minors.push_back(render_quadscalar(minor));
      }
      jw["gram_minors"] = minors;
      jw["positive_definite"] = cert.positive_definite;
      line << " positive_definite " << (cert.positive_definite ? "yes" : "no");
    }
    jweights.push_back(jw);
    weight_lines.push_back(line.str());
  }

  if (format == "json") {
    json out;
    out["command"] = "report";
    out["n"] = n;
    out["p"] = p;
    out["dim_vp"] = json_int(dim);
    json jdec = json::array();
    for (const auto& lambda : decomposition) jdec.push_back(lambda);
    out["gl_decomposition"] = jdec;
    out["weyl_dim_sum"] = json_int(weyl_sum);
    out["weight_enumeration"] = json_int(enumerated);
    out["characters_agree"] = chars_agree;
    out["character_at_ones_matches_dim"] = char_dim;
    out["weights"] = jweights;
    out["pass"] = pass;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "module report n=" << n << " p=" << p << "\n";
    std::cout << "dim_vp: " << dim << "\n";
    std::cout << "gl decomposition:";
    for (const auto& lambda : decomposition) std::cout << " " << render_tuple(lambda);
    std::cout << "\n";
    std::cout << "weyl dimension sum: " << weyl_sum << "\n";
    std::cout << "weight enumeration: " << enumerated << "\n";
    std::cout << "characters agree: " << (chars_agree ? "yes" : "no") << "\n";
    std::cout << "character at ones matches dim: " << (char_dim ? "yes" : "no") << "\n";
    for (const std::string& line : weight_lines) std::cout << line << "\n";
    std::cout << "result: " << (pass ? "pass" : "fail") << "\n";
  }
  return pass ? 0 : 1;
}

int run_lemma3(unsigned r, const std::optional<std::string>& s_flag,
               const std::optional<std::string>& t_flag, unsigned samples,
               std::uint64_t seed, const std::string& format) {
  bool pass = true;
  json out;
  out["command"] = "lemma3";
  out["r"] = r;
  std::vector<std::string> lines;

  if (s_flag.has_value() != t_flag.has_value()) {
    std::cerr << "--s and --t must be given together\n";
    return 2;
  }

  if (s_flag.has_value()) {
    const Rational s = parse_rational(*s_flag);
    const std::vector<Rational> t = parse_csv_rational(*t_flag);
    if (t.size() != r) {
      std::cerr << "--t needs exactly " << r << " entries\n";
      return 2;
    }
    Rational tsum = 0;
    for (const Rational& ti : t) tsum += ti;
    const Rational det = matrix_det(build_A_rational(s, t));
    Rational formula = s * s - tsum;
    Rational power = 1;
    for (size_t i = 0; i < (size_t{1} << (r - 1)); ++i) power *= formula;
    if (det != power) pass = false;
    const unsigned rank = rank_A_rational(s, t);
    const bool critical = (tsum == s * s);
    const size_t expected_rank = critical ? (size_t{1} << (r - 1)) : (size_t{1} << r);
    if (rank != expected_rank) pass = false;
    const bool inverse_ok = check_inverse_identity_rational(s, t);
    if (!inverse_ok) pass = false;

    out["det"] = render_rational(det);
    out["det_matches_formula"] = det == power;
    out["rank"] = rank;
    out["critical"] = critical;
    out["inverse_identity"] = inverse_ok;
    lines.push_back("det: " + render_rational(det));
    lines.push_back(std::string("det matches formula: ") + (det == power ? "yes" : "no"));
    lines.push_back("rank: " + std::to_string(rank));
    lines.push_back(std::string("inverse identity: ") + (inverse_ok ? "ok" : "FAIL"));
  } else if (r <= 3) {
    const MPoly det = det_A_symbolic(r);
    const MPoly formula = det_A_formula(r);
    const bool match = det == formula;
    if (!match) pass = false;
    const bool inverse_ok = check_inverse_identity_symbolic(r);
    if (!inverse_ok) pass = false;
    std::vector<std::string> names = {"s"};
    for (unsigned i = 1; i <= r; ++i) names.push_back("t" + std::to_string(i));
    out["det"] = render_mpoly(det, names);
    out["det_matches_formula"] = match;
    out["inverse_identity"] = inverse_ok;
    lines.push_back("det: " + render_mpoly(det, names));
    lines.push_back(std::string("det matches formula: ") + (match ? "yes" : "no"));
    lines.push_back(std::string("inverse identity: ") + (inverse_ok ? "ok" : "FAIL"));
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 4);
    unsigned matched = 0;
    for (unsigned i = 0; i < samples; ++i) {
      const Rational s(num(rng), den(rng));
      std::vector<Rational> t;
      for (unsigned j = 0; j < r; ++j) t.emplace_back(num(rng), den(rng));
      Rational tsum = 0;
      for (const Rational& ti : t) tsum += ti;
      const Rational det = matrix_det(build_A_rational(s, t));
      Rational power = 1;
      const Rational base = s * s - tsum;
      for (size_t e = 0; e < (size_t{1} << (r - 1)); ++e) power *= base;
      if (det == power) ++matched;
    }
    if (matched != samples) pass = false;
    out["samples"] = samples;
    out["seed"] = seed;
    out["matched"] = matched;
    lines.push_back("samples: " + std::to_string(samples));
    lines.push_back("matched: " + std::to_string(matched));
  }

  out["pass"] = pass;
  if (format == "json") {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "determinant suite r=" << r << "\n";
    for (const std::string& line : lines) std::cout << line << "\n";
    std::cout << "result: " << (pass ? "pass" : "fail") << "\n";
  }
  return pass ? 0 : 1;
}

int run_q2(unsigned p, const std::string& format) {
  bool pass = true;
  json out;
  out["command"] = "q2";
  out["p"] = p;
  std::vector<std::string> lines;

  const Integer dim = dim_vp(1, p);
  if (dim != 2 * Integer(p)) pass = false;
  const auto decomposition = gl_decomposition(1, p);
  lines.push_back("dim: " + dim.str());
  std::string dec;
  for (const auto& lambda : decomposition) {
    if (!dec.empty()) dec += " + ";
    dec += render_tuple(lambda);
  }
  lines.push_back("decomposition: " + dec);
  out["dim"] = json_int(dim);
  json jdec = json::array();
  for (const auto& lambda : decomposition) jdec.push_back(lambda);
  out["gl_decomposition"] = jdec;

  // Level-by-level Gram data of the pair {v_k, w_k}, with the closed-form
  // determinant k!(k-1)![(p)_k]^2 (1 - k/p).
  json jlevels = json::array();
  for (unsigned k = 1; k <= p; ++k) {
    const QuadScalar vv = q2_inner(q2_basis('v', k, p), q2_basis('v', k, p));
    const QuadScalar ww = q2_inner(q2_basis('w', k, p), q2_basis('w', k, p));
    const QuadScalar vw = q2_inner(q2_basis('v', k, p), q2_basis('w', k, p));
    const QuadScalar det = qs_mul(vv, ww) - qs_mul(vw, vw);
    const Integer poch = falling_factorial(Integer(p), k);
    const Rational closed = Rational(factorial(k) * factorial(k - 1) * poch * poch) *
                            (Rational(1) - Rational(k, p));
    const bool det_ok = det == QuadScalar::of(closed, p);
    const int expected_sign = (k < p) ? 1 : 0;
    const bool sign_ok = qs_sign(det) == expected_sign;
    if (!det_ok || !sign_ok) pass = false;
    json jl;
    jl["k"] = k;
    jl["inner_vv"] = render_quadscalar(vv);
    jl["inner_ww"] = render_quadscalar(ww);
    jl["inner_vw"] = render_quadscalar(vw);
    jl["gram_det"] = render_quadscalar(det);
    jl["det_matches_closed_form"] = det_ok;
    jlevels.push_back(jl);
    std::ostringstream line;
    line << "k=" << k << " <v|v>=" << render_quadscalar(vv)
         << " <w|w>=" << render_quadscalar(ww) << " <v|w>=" << render_quadscalar(vw)
         << " det=" << render_quadscalar(det) << (det_ok ? "" : " MISMATCH");
    lines.push_back(line.str());
  }
  out["levels"] = jlevels;

  const std::vector<Q2Primitive> primitives = q2_primitive_scan(p);
  json jprim = json::array();
  for (const Q2Primitive& prim : primitives) {
    json jp;
    jp["k"] = prim.k;
    jp["alpha"] = render_quadscalar(prim.alpha);
    jp["beta"] = render_quadscalar(prim.beta);
    jprim.push_back(jp);
    lines.push_back("primitive: k=" + std::to_string(prim.k) + " alpha=" +
                    render_quadscalar(prim.alpha) + " beta=" +
                    render_quadscalar(prim.beta));
  }
  out["primitives"] = jprim;
  const bool primitive_ok =
      primitives.size() == 1 && primitives[0].k == p &&
      primitives[0].alpha == QuadScalar::one(p) &&
      primitives[0].beta == (QuadScalar::zero(p) - QuadScalar::sqrt_p(p));
  if (!primitive_ok) pass = false;
  out["primitive_unique_at_top"] = primitive_ok;

  const long double gram_residual = q2_ortho_gram_residual(p);
  const long double adjoint_residual = q2_adjointness_residual(p);
  long double element_residual = 0.0L;
  const std::vector<MatrixElementRow> rows = q2_matrix_elements(p);
  json jrows = json::array();
  for (const MatrixElementRow& row : rows) {
    element_residual =
        std::max(element_residual, std::fabs(row.formula - row.transported));
    json jr;
    jr["op"] = std::string(1, row.op_kind) + (row.op_sign > 0 ? "+" : "-");
    jr["src"] = std::string(row.src_kind == 'p' ? "phi" : "psi") + "_" +
                std::to_string(row.src_k);
    jr["dst"] = std::string(row.dst_kind == 'p' ? "phi" : "psi") + "_" +
                std::to_string(row.dst_k);
    jr["formula"] = static_cast<double>(row.formula);
    jr["transported"] = static_cast<double>(row.transported);
    jrows.push_back(jr);
  }
  out["matrix_elements"] = jrows;
  out["orthonormality_residual"] = static_cast<double>(gram_residual);
  out["adjointness_residual"] = static_cast<double>(adjoint_residual);
  out["matrix_element_residual"] = static_cast<double>(element_residual);
  if (gram_residual > kTolerance || adjoint_residual > kTolerance ||
      element_residual > kTolerance) {
    pass = false;
  }
  lines.push_back("orthonormality residual: " + std::to_string((double)gram_residual));
  lines.push_back("adjointness residual: " + std::to_string((double)adjoint_residual));
  lines.push_back("matrix element residual: " +
                  std::to_string((double)element_residual));

  out["pass"] = pass;
  if (format == "json") {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "rank-one module suite p=" << p << "\n";
    for (const std::string& line : lines) std::cout << line << "\n";
    std::cout << "result: " << (pass ? "pass" : "fail") << "\n";
  }
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification suites for the q(n+1) Fock modules"};
  app.require_subcommand(1);

  unsigned ca_n = 2;
  unsigned ca_max_n = 4;
  bool inject_fault = false;
  std::string ca_format = "text";
  auto* ca = app.add_subcommand("check-algebra",
                                "Superbracket axioms, defining representation, "
                                "triple relations");
  ca->add_option("--n", ca_n, "Rank parameter (q(n+1))")->check(CLI::PositiveNumber);
  ca->add_option("--max-n", ca_max_n, "Largest accepted n");
  ca->add_option("--format", ca_format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  ca->add_flag("--inject-fault", inject_fault, "Flip one structure-constant sign")
      ->group("");

  unsigned rp_n = 1;
  unsigned rp_p = 2;
  int rp_level_cap = -1;
  std::string rp_format = "text";
  std::optional<std::string> rp_weight;
  std::string rp_weight_raw;
  auto* rp = app.add_subcommand("report", "Module structure report");
  rp->add_option("--n", rp_n, "Rank parameter")->check(CLI::PositiveNumber);
  rp->add_option("--p", rp_p, "Highest-weight parameter")->check(CLI::PositiveNumber);
  rp->add_option("--level-cap", rp_level_cap, "Largest level inspected");
  rp->add_option("--weight", rp_weight_raw, "Restrict to one weight, e.g. 2,1,0");
  rp->add_option("--format", rp_format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));

  unsigned l3_r = 2;
  std::string l3_s, l3_t;
  unsigned l3_samples = 50;
  std::uint64_t l3_seed = 20240901;
  std::string l3_format = "text";
  auto* l3 = app.add_subcommand("lemma3", "Determinant identity suite");
  l3->add_option("--r", l3_r, "Number of t parameters")->check(CLI::Range(1U, 4U));
  l3->add_option("--s", l3_s, "Diagonal value (rational)");
  l3->add_option("--t", l3_t, "Comma-separated t values");
  l3->add_option("--samples", l3_samples, "Sample count for r=4");
  l3->add_option("--seed", l3_seed, "Sampling seed");
  l3->add_option("--format", l3_format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));

  unsigned q2_p = 3;
  std::string q2_format = "text";
  auto* q2 = app.add_subcommand("q2", "Rank-one module suite");
  q2->add_option("--p", q2_p, "Highest-weight parameter")->check(CLI::PositiveNumber);
  q2->add_option("--format", q2_format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*ca) {
      if (ca_n > ca_max_n) {
        std::cerr << "n exceeds the configured maximum " << ca_max_n << "\n";
        return 2;
      }
      return run_check_algebra(ca_n, inject_fault, ca_format);
    }
    if (*rp) {
      const unsigned cap = rp_level_cap < 0 ? rp_p + 2 : (unsigned)rp_level_cap;
      if (cap < rp_p) {
        std::cerr << "level cap must be at least p\n";
        return 2;
      }
      if (rp->count("--weight") > 0) rp_weight = rp_weight_raw;
      return run_report(rp_n, rp_p, cap, rp_weight, rp_format);
    }
    if (*l3) {
      std::optional<std::string> s_opt, t_opt;
      if (l3->count("--s") > 0) s_opt = l3_s;
      if (l3->count("--t") > 0) t_opt = l3_t;
      return run_lemma3(l3_r, s_opt, t_opt, l3_samples, l3_seed, l3_format);
    }
    if (*q2) return run_q2(q2_p, q2_format);
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
