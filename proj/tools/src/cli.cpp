#include "hrlab_cli/cli.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hrlab/charts.hpp"
#include "hrlab/error.hpp"
#include "hrlab/flows.hpp"
#include "hrlab/hilbert.hpp"
#include "hrlab/periods.hpp"
#include "hrlab/series.hpp"
#include "hrlab_cli/report.hpp"

namespace hrlab::cli {

namespace {

using hrlab::to_json;
using cli::to_json;

struct Globals {
  double tol = 1e-9;
  std::uint64_t seed = 42;
  bool json = false;
  bool timing = false;
};

nlohmann::json read_json_argument(const std::string& text) {
  std::string body = text;
  if (!text.empty() && text[0] == '@') {
    std::ifstream in(text.substr(1));
    if (!in) throw Error(ErrorKind::UsageError, "cannot read " + text.substr(1));
    std::stringstream ss;
    ss << in.rdbuf();
    body = ss.str();
  }
  try {
    return nlohmann::json::parse(body);
  } catch (const nlohmann::json::exception&) {
    throw Error(ErrorKind::UsageError, "malformed JSON argument: " + text);
  }
}

CMatrix matrix_argument(const std::string& text) { return complex_matrix_from_json(read_json_argument(text)); }
Complex complex_argument(const std::string& text) { return complex_from_json(read_json_argument(text)); }

nlohmann::json complex_json(Complex z) { return {z.real(), z.imag()}; }

nlohmann::json matrix2_json(const Matrix2RF& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : m) rows.push_back({row[0].to_string(), row[1].to_string()});
  return rows;
}

bool is_constant_matrix(const Matrix2RF& m, int a, int b, int c, int d) {
  const int want[2][2] = {{a, b}, {c, d}};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const auto& f = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (want[i][j] == 0) {
        if (!f.is_zero()) return false;
      } else if (!(f.numerator().is_constant() && f.denominator().is_constant() &&
                   f.numerator().leading_coefficient() / f.denominator().leading_coefficient() == want[i][j])) {
        return false;
      }
    }
  return true;
}

// --- verify -------------------------------------------------------------

Report verify_series(SeriesCheck check, int order) {
  const auto r = verify_series_solution(check, order);
  Report rep;
  rep.command = "verify " + std::string(to_string(check));
  rep.pass = r.pass;
  rep.payload = to_json(r);
  rep.summary = "order=" + std::to_string(order);
  return rep;
}

Report verify_contract() {
  Report rep;
  rep.command = "verify gm-contract";
  bool ok = true;
  for (Chart c : {Chart::e_chart, Chart::b_chart}) {
    const auto m = connection_contract(gauss_manin_matrix(c), ramanujan_field(c));
    const bool match = is_constant_matrix(m, 0, 0, 1, 0);
    ok = ok && match;
    rep.payload[std::string(to_string(c))] = {{"contraction", matrix2_json(m)}, {"matches", match}};
  }
  rep.pass = ok;
  rep.summary = "Omega(v)/Delta = (0 0; 1 0) on e- and b-charts";
  return rep;
}

Report verify_curvature() {
  Report rep;
  rep.command = "verify gm-curvature";
  bool ok = true;
  for (Chart c : {Chart::weierstrass, Chart::e_chart, Chart::b_chart}) {
    const auto conn = gauss_manin_matrix(c);
    bool trace_free = true;
    for (std::size_t v = 0; v < conn.omega[0][0].size(); ++v)
      trace_free = trace_free && (conn.omega[0][0][v] + conn.omega[1][1][v]).is_zero();
    const auto flat = flatness_report(c);
    ok = ok && trace_free && flat.flat;
    rep.payload[std::string(to_string(c))] = {{"omega22_is_minus_omega11", trace_free}, {"flat", flat.flat}};
  }
  rep.payload["convention"] = flatness_report(Chart::weierstrass).convention == CurvatureSign::plus ? "dA + A^A"
                                                                                                     : "dA - A^A";
  rep.pass = ok;
  rep.summary = "curvature of all three charts";
  return rep;
}

Report verify_delta_transfer() {
  Report rep;
  rep.command = "verify delta-transfer";
  const auto e_to_b = chart_change(ChartDirection::e_to_b);
  const auto b_to_e = chart_change(ChartDirection::b_to_e);
  bool round_e = true, round_b = true;
  for (std::size_t i = 0; i < 3; ++i) {
    round_e = round_e && b_to_e[i].compose(e_to_b) == Polynomial::variable(chart_variables(Chart::e_chart), i);
    round_b = round_b && e_to_b[i].compose(b_to_e) == Polynomial::variable(chart_variables(Chart::b_chart), i);
  }
  Rational c(1, 1728);
  const bool delta = delta_poly(Chart::b_chart).compose(e_to_b) == delta_poly(Chart::e_chart).scaled(c);
  rep.payload = {{"roundtrip_e", round_e},
                 {"roundtrip_b", round_b},
                 {"delta_b_of_e", delta_poly(Chart::b_chart).compose(e_to_b).to_string()},
                 {"delta_matches", delta}};
  rep.pass = round_e && round_b && delta;
  rep.summary = "chart roundtrips and Delta_b(e->b) = (e4^3 - e6^2)/1728";
  return rep;
}

// --- periods / leaf ------------------------------------------------------

// "identity", "J" or a JSON matrix.
CMatrix named_delta(const std::string& text, std::size_t g) {
  if (text.empty() || text == "identity") return CMatrix::Identity(2 * static_cast<Eigen::Index>(g), 2 * static_cast<Eigen::Index>(g));
  if (text == "J") return standard_J(g);
  return matrix_argument(text);
}

Report periods_command(std::size_t g, const std::string& tau_text, const std::string& delta_text, const Globals& gl) {
  const SiegelPoint tau(matrix_argument(tau_text), gl.tol);
  if (tau.g() != g) throw Error(ErrorKind::UsageError, "--g does not match tau");
  const TolerancePolicy policy;
  Report rep;
  rep.command = "periods";
  std::optional<CMatrix> delta;
  if (!delta_text.empty()) delta = named_delta(delta_text, g);
  const auto point = phi_point(tau, delta);
  const auto data = period_matrices(point.basis);
  const double consistency = max_abs(data.pi - point.coset_rep);
  const double nu_err = std::abs(data.nu - kTwoPiI);
  rep.payload = to_json(data);
  rep.payload["coset_rep"] = to_json(point.coset_rep);
  rep.residuals = {{"consistency", consistency}, {"nu", nu_err}, {"Pi_sp", data.pi_residual}};
  rep.pass = consistency <= gl.tol && nu_err <= gl.tol && data.pi_residual <= gl.tol && data.tau_in_siegel;
  if (!delta) {
    const double psi_err = max_abs(data.pi - psi(tau.tau()));
    rep.residuals["Pi_minus_psi"] = psi_err;
    rep.pass = *rep.pass && psi_err <= policy.identity;
  }
  rep.summary = "g=" + std::to_string(g);
  return rep;
}

Report leaf_command(const std::string& tau_text, const std::string& delta_text, const Globals& gl) {
  const SiegelPoint tau(matrix_argument(tau_text), gl.tol);
  const CMatrix delta = named_delta(delta_text, tau.g());
  const SymplecticElement d(delta, gl.tol);
  const auto f = leaf_frame(d.matrix(), tau.tau(), gl.tol);
  Report rep;
  rep.command = "leaf";
  rep.payload = {{"in_U_delta", f.in_u_delta}};
  if (!f.in_u_delta) {
    rep.pass = false;
    rep.summary = "tau is outside U_delta";
    return rep;
  }
  rep.payload["p_delta_tau"] = to_json(*f.p_delta_tau);
  rep.payload["psi_tau"] = to_json(*f.psi_tau);
  rep.payload["psi_delta_tau"] = to_json(*f.psi_delta_tau);
  rep.residuals = {{"transport", f.transport_residual}};
  rep.pass = f.transport_residual <= TolerancePolicy{}.identity;
  rep.summary = "psi_delta(tau) = psi(tau) p'";
  return rep;
}

// --- flows ---------------------------------------------------------------

Report flow_command(const std::string& from, const std::string& to, double step, const std::string& chart_name,
                    double max_rel) {
  const Complex t0 = complex_argument(from), t1 = complex_argument(to);
  const Chart chart = chart_from_string(chart_name);
  auto state_at = [&](Complex t) {
    const auto e = eisenstein_values(t);
    if (chart == Chart::e_chart) return e;
    const Complex te2 = (e[0] * e[0] - e[1]) / 12.0;
    const Complex te4 = (e[0] * e[1] - e[2]) / 3.0;
    return std::array<Complex, 3>{e[0], te2 / 2.0, (2.0 * e[0] * te2 - te4) / 12.0 / 6.0};
  };
  const auto end = integrate_g1(OdeState{chart, state_at(t0), t0}, t1, step);
  const auto oracle = state_at(t1);
  double rel = 0;
  nlohmann::json pts = nlohmann::json::array(), orc = nlohmann::json::array();
  for (std::size_t i = 0; i < 3; ++i) {
    rel = std::max(rel, std::abs(end.point[i] - oracle[i]) / std::abs(oracle[i]));
    pts.push_back(complex_json(end.point[i]));
    orc.push_back(complex_json(oracle[i]));
  }
  Report rep;
  rep.command = "flow";
  rep.payload = {{"inputs", {{"from", complex_json(t0)}, {"to", complex_json(t1)}, {"step", step}, {"chart", chart_name}}},
                 {"endpoint", pts},
                 {"q_series", orc}};
  rep.residuals = {{"relative_error", rel}};
  rep.pass = rel <= max_rel;
  rep.summary = "RK4 endpoint against the q-series";
  return rep;
}

Report twist_command(const std::string& delta_text, const std::string& tau_text, double h, double bound) {
  const CMatrix delta = named_delta(delta_text, 1);
  const Complex tau = complex_argument(tau_text);
  const double r = twisted_ode_residual(delta, tau, h);
  if (bound <= 0) bound = std::abs(delta(1, 0)) == 0.0 ? 1e-6 : 1e-5;
  Report rep;
  rep.command = "twist-check";
  nlohmann::json phi = nlohmann::json::array();
  for (Complex z : eisenstein_twist_g1(tau, delta)) phi.push_back(complex_json(z));
  rep.payload = {{"inputs", {{"delta", to_json(delta)}, {"tau", complex_json(tau)}, {"h", h}, {"bound", bound}}},
                 {"phi_delta", phi}};
  rep.residuals = {{"residual", r}};
  rep.pass = r <= bound;
  rep.summary = "(1/2 pi i) dphi/dtau = (c tau + d)^-2 v(phi)";
  return rep;
}

Report density_command(std::size_t g, const std::string& tau_text, const std::string& delta_text, int degree,
                       int samples, const Globals& gl) {
  const SiegelPoint tau(tau_text.empty() ? CMatrix(Complex(0, 1) * CMatrix::Identity(static_cast<Eigen::Index>(g), static_cast<Eigen::Index>(g)))
                                         : matrix_argument(tau_text),
                        gl.tol);
  const CMatrix delta = named_delta(delta_text, g);
  const SymplecticElement d(delta, gl.tol);
  const auto r = density_probe(d.matrix(), tau, degree, samples, gl.seed);
  Report rep;
  rep.command = "density";
  rep.payload = {{"inputs", {{"g", g}, {"degree", degree}, {"samples", samples}, {"seed", gl.seed}, {"delta", to_json(delta)}}},
                 {"rank", r.rank},
                 {"generic_rank", r.generic_rank},
                 {"monomial_count", r.monomial_count},
                 {"full_rank", r.full_rank},
                 {"singular_values", r.singular_values}};
  rep.pass = r.full_rank;
  rep.summary = "rank " + std::to_string(r.rank) + " of generic " + std::to_string(r.generic_rank);
  return rep;
}

// --- hilbert -------------------------------------------------------------

std::array<Complex, 2> hilbert_tau(const std::string& text) {
  if (text.empty()) return {Complex(0, 1), Complex(0, 1)};
  const auto j = read_json_argument(text);
  if (!j.is_array() || j.size() != 2) throw Error(ErrorKind::UsageError, "hilbert tau is a pair of complex numbers");
  const std::array<Complex, 2> t{complex_from_json(j[0]), complex_from_json(j[1])};
  if (t[0].imag() <= 0 || t[1].imag() <= 0) throw Error(ErrorKind::NotSiegel, "Im tau_j must be positive");
  return t;
}

Report hilbert_command(long d, const std::string& check, const std::string& tau_text, const Globals& gl) {
  const auto ctx = field_context(d);
  const auto tau = hilbert_tau(tau_text);
  Report rep;
  rep.command = "hilbert " + check;
  rep.summary = "d=" + std::to_string(d);
  rep.payload["context"] = to_json(ctx);
  if (check == "dual-bases") {
    bool ok = true;
    nlohmann::json traces = nlohmann::json::array();
    for (std::size_t i = 0; i < 2; ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (std::size_t j = 0; j < 2; ++j) {
        const Rational t = (ctx.r_basis[i] * ctx.x_basis[j]).trace();
        row.push_back(to_string(t));
        ok = ok && t == (i == j ? 1 : 0);
      }
      traces.push_back(row);
    }
    for (const auto& x : ctx.x_basis) ok = ok && is_totally_positive(x);
    const double inv = (ctx.x_embed.inverse() - ctx.r_embed.transpose()).cwiseAbs().maxCoeff();
    rep.payload["traces"] = traces;
    rep.residuals = {{"embed_inverse", inv}};
    rep.pass = ok && inv <= 1e-12;
  } else if (check == "h-map") {
    const CMatrix h = h_map(ctx, tau);
    rep.payload["tau"] = {complex_json(tau[0]), complex_json(tau[1])};
    rep.payload["h"] = to_json(h);
    rep.pass = is_siegel(h, gl.tol);
  } else if (check == "iota") {
    const auto ab = split_tau(ctx, tau);
    NumericQuadMatrix2 s{};
    s[0][0] = s[1][1] = {1.0, 0.0};
    s[0][1] = ab;
    const CMatrix m = iota_embed(ctx, s, gl.tol);
    const double r = max_abs(m - psi(h_map(ctx, tau)));
    rep.payload["iota"] = to_json(m);
    rep.residuals = {{"iota_minus_psi_h", r}};
    rep.pass = r <= TolerancePolicy{}.roundtrip;
  } else if (check == "period-compat") {
    const auto r = hilbert_hodge_check(ctx, tau, 1e-10);
    rep.residuals = {{"clause_i", r.residuals[0]}, {"clause_ii", r.residuals[1]}, {"clause_iii", r.residuals[2]},
                     {"clause_iv", r.residuals[3]}};
    rep.payload["duality_exact"] = r.duality_exact;
    rep.pass = r.pass;
  } else if (check == "qexp-map") {
    const auto m = qexp_exponent_map(ctx);
    const char* names[] = {"q11", "q12", "q22"};
    for (std::size_t p = 0; p < 3; ++p)
      rep.payload["exponents"][names[p]] = {m.exponents[p][0].get_si(), m.exponents[p][1].get_si()};
    rep.pass = true;
  } else {
    throw Error(ErrorKind::UsageError, "unknown hilbert check " + check);
  }
  return rep;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ramanujan-field series, period and flow checks", "hrlab"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals gl;
  app.add_option("--tol", gl.tol, "membership tolerance")->check(CLI::PositiveNumber);
  app.add_option("--seed", gl.seed, "random seed");
  app.add_flag("--json", gl.json, "emit a JSON report");
  app.add_flag("--timing", gl.timing, "include wall time in the report");

  std::function<Report()> action;

  int k = 4, order = 20;
  auto* eis = app.add_subcommand("eisenstein", "q-expansion of E2, E4 or E6");
  eis->add_option("--k", k)->check(CLI::IsMember({2, 4, 6}));
  eis->add_option("--order", order)->check(CLI::NonNegativeNumber);
  eis->callback([&] {
    action = [&] {
      Report r;
      r.command = "eisenstein";
      r.payload = to_json(eisenstein_series(k, order));
      r.summary = "E" + std::to_string(k) + " to order " + std::to_string(order);
      return r;
    };
  });

  std::string check = "all";
  std::optional<int> verify_order;
  auto* ver = app.add_subcommand("verify", "exact identity checks");
  ver->add_option("--check", check)
      ->check(CLI::IsMember({"ramanujan", "chazy", "phihat-b", "j-relation", "gm-contract", "gm-curvature",
                             "delta-transfer", "all"}));
  ver->add_option("--order", verify_order)->check(CLI::NonNegativeNumber);
  ver->callback([&] {
    action = [&] {
      auto one = [&](const std::string& c) -> Report {
        if (c == "gm-contract") return verify_contract();
        if (c == "gm-curvature") return verify_curvature();
        if (c == "delta-transfer") return verify_delta_transfer();
        const auto sc = series_check_from_string(c);
        return verify_series(sc, verify_order.value_or(sc == SeriesCheck::j_relation ? 100 : 200));
      };
      if (check != "all") return one(check);
      Report all;
      all.command = "verify all";
      all.pass = true;
      for (const char* c : {"ramanujan", "chazy", "phihat-b", "j-relation", "gm-contract", "gm-curvature",
                            "delta-transfer"}) {
        const auto r = one(c);
        all.payload[c] = to_json(r);
        all.pass = *all.pass && r.pass.value_or(true);
      }
      all.summary = "7 checks";
      return all;
    };
  });

  std::size_t g = 1;
  std::string tau_text, delta_text;
  auto* per = app.add_subcommand("periods", "period matrices of the standard or a leaf basis");
  per->add_option("--g", g)->check(CLI::Range(1, 8));
  per->add_option("--tau", tau_text, "JSON matrix or @file")->required();
  per->add_option("--delta", delta_text, "JSON matrix or @file");
  per->callback([&] { action = [&] { return periods_command(g, tau_text, delta_text, gl); }; });

  std::string from = "[0,2]", to = "[0,1.5]", chart = "e";
  double step = 1e-3, max_rel = 1e-8;
  auto* flo = app.add_subcommand("flow", "RK4 integration of the Ramanujan system");
  flo->add_option("--from", from);
  flo->add_option("--to", to);
  flo->add_option("--step", step)->check(CLI::PositiveNumber);
  flo->add_option("--chart", chart)->check(CLI::IsMember({"e", "b"}));
  flo->add_option("--max-rel-error", max_rel)->check(CLI::PositiveNumber);
  flo->callback([&] { action = [&] { return flow_command(from, to, step, chart, max_rel); }; });

  double h = 1e-4, bound = 0;
  std::string twist_tau = "[0,2]";
  auto* tw = app.add_subcommand("twist-check", "residual of the twisted Ramanujan system");
  tw->set_help_flag("--help", "Print this help message and exit");
  tw->add_option("--delta", delta_text, "2x2 SL2 matrix");
  tw->add_option("--tau", twist_tau);
  tw->add_option("--h", h)->check(CLI::PositiveNumber);
  tw->add_option("--bound", bound);
  tw->callback([&] { action = [&] { return twist_command(delta_text, twist_tau, h, bound); }; });

  auto* lf = app.add_subcommand("leaf", "leaf frame p_{delta,tau} and psi_delta(tau)");
  lf->add_option("--tau", tau_text)->required();
  lf->add_option("--delta", delta_text)->required();
  lf->callback([&] { action = [&] { return leaf_command(tau_text, delta_text, gl); }; });

  int degree = 2, samples = 60;
  auto* den = app.add_subcommand("density", "rank probe on the parabolic coordinates");
  den->add_option("--g", g)->check(CLI::Range(1, 3));
  den->add_option("--tau", tau_text);
  den->add_option("--delta", delta_text, "identity, J, or a JSON matrix");
  den->add_option("--degree", degree)->check(CLI::PositiveNumber);
  den->add_option("--samples", samples)->check(CLI::PositiveNumber);
  den->callback([&] { action = [&] { return density_command(g, tau_text, delta_text, degree, samples, gl); }; });

  long d = 5;
  std::string hcheck;
  auto* hil = app.add_subcommand("hilbert", "real quadratic field checks");
  hil->add_option("--d", d);
  hil->add_option("--check", hcheck)
      ->required()
      ->check(CLI::IsMember({"dual-bases", "h-map", "iota", "period-compat", "qexp-map"}));
  hil->add_option("--tau", tau_text, "pair of complex numbers");
  hil->callback([&] { action = [&] { return hilbert_command(d, hcheck, tau_text, gl); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  Report rep;
  try {
    const auto t0 = std::chrono::steady_clock::now();
    rep = action();
    if (gl.timing)
      rep.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  if (gl.json) {
    out << emit_json(to_json(rep)) << "\n";
  } else {
    out << summary_line(rep) << "\n";
    if (!rep.pass) out << emit_json(rep.payload) << "\n";
  }
  return rep.pass.value_or(true) ? 0 : 1;
}

}  // namespace hrlab::cli
