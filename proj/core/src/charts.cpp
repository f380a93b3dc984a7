#include "hrlab/charts.hpp"

#include <nlohmann/json.hpp>

#include "hrlab/error.hpp"
#include "hrlab/series.hpp"

namespace hrlab {

namespace {

Rational Q(long n, long d = 1) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::vector<Polynomial> coordinates(Chart chart) {
  const auto vars = chart_variables(chart);
  std::vector<Polynomial> xs;
  for (std::size_t i = 0; i < vars.size(); ++i) xs.push_back(Polynomial::variable(vars, i));
  return xs;
}

OneForm form(std::initializer_list<Polynomial> components) {
  OneForm f;
  for (const auto& p : components) f.emplace_back(p);
  return f;
}

OneForm negated(const OneForm& f) {
  OneForm g;
  for (const auto& c : f) g.push_back(-c);
  return g;
}

Polynomial zero_like(const Polynomial& p) { return Polynomial(p.variables()); }

}  // namespace

std::string_view to_string(Chart chart) {
  switch (chart) {
    case Chart::weierstrass: return "weierstrass";
    case Chart::e_chart: return "e_chart";
    case Chart::b_chart: return "b_chart";
  }
  return "?";
}

Chart chart_from_string(std::string_view name) {
  if (name == "weierstrass") return Chart::weierstrass;
  if (name == "e_chart" || name == "e") return Chart::e_chart;
  if (name == "b_chart" || name == "b") return Chart::b_chart;
  throw Error(ErrorKind::UnsupportedChart, "unknown chart '" + std::string(name) + "'");
}

std::vector<std::string> chart_variables(Chart chart) {
  switch (chart) {
    case Chart::weierstrass: return {"g2", "g3"};
    case Chart::e_chart: return {"e2", "e4", "e6"};
    case Chart::b_chart: return {"b2", "b4", "b6"};
  }
  return {};
}

Polynomial delta_poly(Chart chart) {
  const auto x = coordinates(chart);
  switch (chart) {
    case Chart::weierstrass:
      return x[0].pow(3) - Q(27) * x[1].pow(2);
    case Chart::e_chart:
      return x[1].pow(3) - x[2].pow(2);
    case Chart::b_chart: {
      const auto &b2 = x[0], &b4 = x[1], &b6 = x[2];
      return Q(1, 4) * b2.pow(2) * (b4.pow(2) - b2 * b6) - Q(8) * b4.pow(3) - Q(27) * b6.pow(2) +
             Q(9) * b2 * b4 * b6;
    }
  }
  return {};
}

std::array<Polynomial, 3> chart_change(ChartDirection direction) {
  if (direction == ChartDirection::e_to_b) {
    const auto x = coordinates(Chart::e_chart);
    const auto &e2 = x[0], &e4 = x[1], &e6 = x[2];
    return {e2, Q(1, 24) * (e2.pow(2) - e4),
            Q(1, 1728) * (Q(4) * e2.pow(3) - Q(12) * e2 * e4 + Q(8) * e6)};
  }
  const auto x = coordinates(Chart::b_chart);
  const auto &b2 = x[0], &b4 = x[1], &b6 = x[2];
  return {b2, b2.pow(2) - Q(24) * b4, b2.pow(3) - Q(36) * b2 * b4 + Q(216) * b6};
}

ChartVectorField ramanujan_field(Chart chart) {
  const auto x = coordinates(chart);
  switch (chart) {
    case Chart::weierstrass:
      throw Error(ErrorKind::UnsupportedChart, "no Ramanujan field on the Weierstrass chart");
    case Chart::e_chart: {
      const auto &e2 = x[0], &e4 = x[1], &e6 = x[2];
      return {chart,
              {Q(1, 12) * (e2.pow(2) - e4), Q(1, 3) * (e2 * e4 - e6), Q(1, 2) * (e2 * e6 - e4.pow(2))}};
    }
    case Chart::b_chart: {
      const auto &b2 = x[0], &b4 = x[1], &b6 = x[2];
      return {chart, {Q(2) * b4, Q(3) * b6, b2 * b6 - b4.pow(2)}};
    }
  }
  return {chart, {}};
}

ConnectionMatrix gauss_manin_matrix(Chart chart) {
  const auto x = coordinates(chart);
  const Polynomial delta = delta_poly(chart);
  const Polynomial zero = zero_like(delta);
  ConnectionMatrix c{chart, {}, delta};
  switch (chart) {
    case Chart::weierstrass: {
      const auto &g2 = x[0], &g3 = x[1];
      c.omega[0][0] = form({Q(-1, 4) * g2.pow(2), Q(9, 2) * g3});
      c.omega[0][1] = form({Q(3, 8) * g2 * g3, Q(-1, 4) * g2.pow(2)});
      c.omega[1][0] = form({Q(-9, 2) * g3, Q(3) * g2});
      break;
    }
    case Chart::e_chart: {
      const auto &e2 = x[0], &e4 = x[1], &e6 = x[2];
      c.omega[0][0] = form({zero, Q(1, 4) * (e2 * e6 - e4.pow(2)), Q(1, 6) * (e6 - e2 * e4)});
      c.omega[0][1] = form({Q(-1, 12) * delta,
                            Q(-1, 48) * (e4 * e6 - Q(2) * e2 * e4.pow(2) + e2.pow(2) * e6),
                            Q(1, 72) * (e4.pow(2) - Q(2) * e2 * e6 + e2.pow(2) * e4)});
      c.omega[1][0] = form({zero, Q(3) * e6, Q(-2) * e4});
      break;
    }
    case Chart::b_chart: {
      const auto &b2 = x[0], &b4 = x[1], &b6 = x[2];
      c.omega[0][0] = form({Q(1, 8) * (b2.pow(2) * b6 - Q(6) * b4 * b6 - b2 * b4.pow(2)),
                            Q(1, 2) * (Q(4) * b4.pow(2) - Q(3) * b2 * b6), Q(1, 4) * (Q(18) * b6 - b2 * b4)});
      c.omega[0][1] = form({Q(1, 4) * (Q(2) * b4.pow(3) + Q(9) * b6.pow(2) - Q(2) * b2 * b4 * b6),
                            Q(1, 4) * (b2.pow(2) * b6 - b2 * b4.pow(2) - Q(6) * b4 * b6),
                            Q(1, 4) * (Q(4) * b4.pow(2) - Q(3) * b2 * b6)});
      c.omega[1][0] = form({Q(1, 4) * (Q(3) * b2 * b6 - Q(4) * b4.pow(2)), Q(1, 2) * (b2 * b4 - Q(18) * b6),
                            Q(1, 4) * (Q(24) * b4 - b2.pow(2))});
      break;
    }
  }
  c.omega[1][1] = negated(c.omega[0][0]);
  return c;
}

ConnectionMatrix gauss_manin_b_chart_duplicate_slot_reading() {
  ConnectionMatrix c = gauss_manin_matrix(Chart::b_chart);
  const Polynomial zero = zero_like(c.delta);
  for (auto* f : {&c.omega[0][0], &c.omega[0][1]}) {
    (*f)[2] = (*f)[2] + (*f)[1];
    (*f)[1] = RationalFunction(zero);
  }
  c.omega[1][1] = negated(c.omega[0][0]);
  return c;
}

Matrix2RF connection_contract(const ConnectionMatrix& conn, const ChartVectorField& field) {
  if (conn.chart != field.chart) throw Error(ErrorKind::ChartMismatch, "connection and field charts differ");
  const RationalFunction delta(conn.delta);
  Matrix2RF out;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      RationalFunction sum(zero_like(conn.delta));
      for (std::size_t v = 0; v < field.components.size(); ++v)
        sum = sum + conn.omega[a][b][v] * RationalFunction(field.components[v]);
      out[a][b] = sum / delta;
    }
  return out;
}

bool Curvature::vanishes() const {
  for (const auto& [key, m] : components)
    for (const auto& row : m)
      for (const auto& entry : row)
        if (!entry.is_zero()) return false;
  return true;
}

Curvature connection_curvature(const ConnectionMatrix& conn, CurvatureSign sign) {
  const RationalFunction delta(conn.delta);
  const std::size_t n = conn.omega[0][0].size();
  std::array<std::array<OneForm, 2>, 2> a;
  for (int r = 0; r < 2; ++r)
    for (int s = 0; s < 2; ++s)
      for (std::size_t v = 0; v < n; ++v) a[r][s].push_back(conn.omega[r][s][v] / delta);

  Curvature out{sign, {}};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Matrix2RF f;
      for (int r = 0; r < 2; ++r)
        for (int s = 0; s < 2; ++s) {
          RationalFunction wedge(zero_like(conn.delta));
          for (int c = 0; c < 2; ++c) wedge = wedge + a[r][c][i] * a[c][s][j] - a[r][c][j] * a[c][s][i];
          RationalFunction d = a[r][s][j].derivative(i) - a[r][s][i].derivative(j);
          f[r][s] = sign == CurvatureSign::plus ? d + wedge : d - wedge;
        }
      out.components.emplace(std::make_pair(i, j), std::move(f));
    }
  return out;
}

CurvatureReport flatness_report(Chart chart) {
  const auto weierstrass = gauss_manin_matrix(Chart::weierstrass);
  CurvatureSign convention = CurvatureSign::plus;
  if (!connection_curvature(weierstrass, convention).vanishes() &&
      connection_curvature(weierstrass, CurvatureSign::minus).vanishes()) {
    convention = CurvatureSign::minus;
  }
  return {convention, connection_curvature(gauss_manin_matrix(chart), convention).vanishes()};
}

bool transcription_is_consistent(const ConnectionMatrix& conn) {
  for (std::size_t v = 0; v < conn.omega[0][0].size(); ++v)
    if (!(conn.omega[1][1][v] == -conn.omega[0][0][v])) return false;
  if (conn.chart != Chart::weierstrass) {
    const auto m = connection_contract(conn, ramanujan_field(conn.chart));
    if (!(m[0][0].is_zero() && m[0][1].is_zero() && m[1][1].is_zero())) return false;
    const auto& one = m[1][0];
    if (!(one.numerator().is_constant() && one.denominator().is_constant() &&
          one.numerator().leading_coefficient() == 1 && one.denominator().leading_coefficient() == 1)) {
      return false;
    }
  }
  return connection_curvature(conn, flatness_report(conn.chart).convention).vanishes();
}

std::string_view to_string(SeriesCheck check) {
  switch (check) {
    case SeriesCheck::ramanujan: return "ramanujan";
    case SeriesCheck::chazy: return "chazy";
    case SeriesCheck::phihat_b: return "phihat-b";
    case SeriesCheck::j_relation: return "j-relation";
  }
  return "?";
}

SeriesCheck series_check_from_string(std::string_view name) {
  if (name == "ramanujan") return SeriesCheck::ramanujan;
  if (name == "chazy") return SeriesCheck::chazy;
  if (name == "phihat-b" || name == "phihat_b") return SeriesCheck::phihat_b;
  if (name == "j-relation" || name == "j_relation") return SeriesCheck::j_relation;
  throw Error(ErrorKind::UsageError, "unknown series check '" + std::string(name) + "'");
}

namespace {

struct Comparison {
  std::string identity;
  LaurentSeries lhs;
  LaurentSeries rhs;
};

std::optional<SeriesFailure> first_difference(const std::vector<Comparison>& checks, int from, int upto) {
  for (int n = from; n <= upto; ++n)
    for (const auto& c : checks) {
      const Rational l = c.lhs.coefficient(n);
      const Rational r = c.rhs.coefficient(n);
      if (l != r) return SeriesFailure{c.identity, n, to_string(l), to_string(r)};
    }
  return std::nullopt;
}

std::optional<SeriesFailure> first_non_integer(const std::vector<std::pair<std::string, LaurentSeries>>& series) {
  for (const auto& [name, s] : series)
    for (const auto& [e, c] : s.terms())
      if (!is_integer(c)) return SeriesFailure{"integrality of " + name, e.front(), to_string(c), "integer"};
  return std::nullopt;
}

}  // namespace

SeriesCheckReport verify_series_solution(SeriesCheck check, int order) {
  if (order < 1) throw Error(ErrorKind::DimensionMismatch, "series checks need order >= 1");
  std::optional<SeriesFailure> failure;
  switch (check) {
    case SeriesCheck::ramanujan: {
      const auto e2 = eisenstein_series(2, order);
      const auto e4 = eisenstein_series(4, order);
      const auto e6 = eisenstein_series(6, order);
      failure = first_difference({{"thetaE2 = (E2^2 - E4)/12", theta(e2), Q(1, 12) * (e2 * e2 - e4)},
                                  {"thetaE4 = (E2*E4 - E6)/3", theta(e4), Q(1, 3) * (e2 * e4 - e6)},
                                  {"thetaE6 = (E2*E6 - E4^2)/2", theta(e6), Q(1, 2) * (e2 * e6 - e4 * e4)}},
                                 0, order);
      break;
    }
    case SeriesCheck::chazy: {
      const auto e2 = eisenstein_series(2, order);
      const auto t1 = theta(e2);
      const auto t2 = theta(t1);
      failure = first_difference(
          {{"theta^3 E2 = E2*theta^2 E2 - 3/2 (thetaE2)^2", theta(t2), e2 * t2 - Q(3, 2) * (t1 * t1)}}, 0, order);
      break;
    }
    case SeriesCheck::phihat_b: {
      const auto e2 = eisenstein_series(2, order);
      const auto b2 = e2;
      const auto b4 = Q(1, 2) * theta(e2);
      const auto b6 = Q(1, 6) * theta(e2, 2);
      failure = first_non_integer({{"b2", b2}, {"b4", b4}, {"b6", b6}});
      if (!failure) {
        failure = first_difference({{"theta b2 = 2 b4", theta(b2), Q(2) * b4},
                                    {"theta b4 = 3 b6", theta(b4), Q(3) * b6},
                                    {"theta b6 = b2 b6 - b4^2", theta(b6), b2 * b6 - b4 * b4}},
                                   0, order);
      }
      break;
    }
    case SeriesCheck::j_relation: {
      // Laurent divisions lose a few top coefficients; work with headroom.
      const int work = order + 8;
      const auto e2 = eisenstein_series(2, work);
      const auto e4 = eisenstein_series(4, work);
      const auto e6 = eisenstein_series(6, work);
      const auto e4cubed = e4 * e4 * e4;
      const auto j = Q(1728) * e4cubed / (e4cubed - e6 * e6);
      const auto tj = theta(j);
      const auto t2j = theta(tj);
      const auto jm = j - Q(1728);
      const auto rhs2 = Q(6) * t2j / tj - Q(4) * tj / j - Q(3) * tj / jm;
      const auto rhs4 = tj * tj / (j * jm);
      const auto rhs6 = -(tj * tj * tj) / (j * j * jm);
      failure = first_difference({{"E2 = 6 theta^2 j/theta j - 4 theta j/j - 3 theta j/(j - 1728)", e2, rhs2},
                                  {"E4 = (theta j)^2/(j (j - 1728))", e4, rhs4},
                                  {"E6 = -(theta j)^3/(j^2 (j - 1728))", e6, rhs6}},
                                 -1, order);
      if (!failure) {
        const std::pair<int, long> leading[] = {{-1, 1}, {0, 744}, {1, 196884}};
        for (const auto& [n, c] : leading) {
          if (n > order) break;
          if (j.coefficient(n) != c) {
            failure = SeriesFailure{"j leading coefficients", n, to_string(j.coefficient(n)), std::to_string(c)};
            break;
          }
        }
      }
      break;
    }
  }
  return {check, order, !failure.has_value(), failure};
}

nlohmann::json to_json(const SeriesCheckReport& r) {
  nlohmann::json failure = nullptr;
  if (r.first_failure) {
    failure = {{"identity", r.first_failure->identity},
               {"exponent", r.first_failure->exponent},
               {"lhs", r.first_failure->lhs},
               {"rhs", r.first_failure->rhs}};
  }
  return {{"check", std::string(to_string(r.check))},
          {"order", r.order},
          {"pass", r.pass},
          {"first_failure", std::move(failure)}};
}

nlohmann::json to_json(const ConnectionMatrix& c) {
  const auto vars = chart_variables(c.chart);
  nlohmann::json omega = nlohmann::json::array();
  for (const auto& row : c.omega) {
    nlohmann::json jr = nlohmann::json::array();
    for (const auto& f : row) {
      nlohmann::json jf = nlohmann::json::object();
      for (std::size_t v = 0; v < f.size(); ++v)
        if (!f[v].is_zero()) jf["d" + vars[v]] = f[v].to_string();
      jr.push_back(std::move(jf));
    }
    omega.push_back(std::move(jr));
  }
  return {{"chart", std::string(to_string(c.chart))}, {"delta", c.delta.to_string()}, {"omega", std::move(omega)}};
}

}  // namespace hrlab
