#include "hrlab/series.hpp"

#include <algorithm>
#include <numeric>

#include <nlohmann/json.hpp>

#include "hrlab/error.hpp"

namespace hrlab {

int total_degree(const ExponentTuple& e) { return std::accumulate(e.begin(), e.end(), 0); }

namespace {

void require_same_variables(const SeriesContext& a, const SeriesContext& b) {
  if (a.variables != b.variables || a.order != b.order) {
    throw Error(ErrorKind::VariableMismatch, "series contexts differ in variables or order");
  }
}

SeriesContext joined(const SeriesContext& a, const SeriesContext& b, int lower_bound) {
  require_same_variables(a, b);
  SeriesContext c = a;
  c.lower_bound = lower_bound;
  return c;
}

void accumulate(LaurentSeries::TermMap& terms, const ExponentTuple& e, const Rational& c) {
  auto [it, inserted] = terms.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

ExponentTuple add_exponents(const ExponentTuple& a, const ExponentTuple& b) {
  ExponentTuple r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

}  // namespace

LaurentSeries::LaurentSeries(SeriesContext ctx) : ctx_(std::move(ctx)) {}

LaurentSeries LaurentSeries::from_terms(SeriesContext ctx, TermMap terms) {
  const std::size_t n = ctx.variables.size();
  for (auto it = terms.begin(); it != terms.end();) {
    if (it->first.size() != n) {
      throw Error(ErrorKind::VariableMismatch, "exponent tuple length differs from variable count");
    }
    const int deg = total_degree(it->first);
    if (deg < ctx.lower_bound) {
      throw Error(ErrorKind::TruncationUnderflow,
                  "term of total degree " + std::to_string(deg) + " below lower bound");
    }
    if (it->second == 0 || deg > ctx.order) {
      it = terms.erase(it);
    } else {
      ++it;
    }
  }
  return LaurentSeries(std::move(ctx), std::move(terms));
}

LaurentSeries LaurentSeries::constant(SeriesContext ctx, const Rational& c) {
  ExponentTuple zero(ctx.variables.size(), 0);
  TermMap t;
  t.emplace(std::move(zero), c);
  return from_terms(std::move(ctx), std::move(t));
}

LaurentSeries LaurentSeries::monomial(SeriesContext ctx, ExponentTuple e, const Rational& c) {
  TermMap t;
  t.emplace(std::move(e), c);
  return from_terms(std::move(ctx), std::move(t));
}

SeriesContext LaurentSeries::univariate(int order, int lower_bound, std::string name) {
  return SeriesContext{{std::move(name)}, order, lower_bound};
}

Rational LaurentSeries::coefficient(const ExponentTuple& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

LaurentSeries LaurentSeries::truncated(int order) const {
  SeriesContext c = ctx_;
  c.order = order;
  return from_terms(std::move(c), terms_);
}

LaurentSeries LaurentSeries::with_lower_bound(int lower_bound) const {
  SeriesContext c = ctx_;
  c.lower_bound = lower_bound;
  return from_terms(std::move(c), terms_);
}

LaurentSeries LaurentSeries::operator-() const {
  TermMap t = terms_;
  for (auto& [e, c] : t) c = -c;
  return LaurentSeries(ctx_, std::move(t));
}

LaurentSeries LaurentSeries::scaled(const Rational& k) const {
  if (k == 0) return LaurentSeries(ctx_);
  TermMap t = terms_;
  for (auto& [e, c] : t) c *= k;
  return LaurentSeries(ctx_, std::move(t));
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
  SeriesContext c = joined(a.ctx_, b.ctx_, std::min(a.lower_bound(), b.lower_bound()));
  LaurentSeries::TermMap t = a.terms_;
  for (const auto& [e, v] : b.terms_) accumulate(t, e, v);
  return LaurentSeries(std::move(c), std::move(t));
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a + (-b); }

LaurentSeries operator+(const LaurentSeries& a, const Rational& k) {
  return a + LaurentSeries::constant(a.context(), k);
}

LaurentSeries operator-(const LaurentSeries& a, const Rational& k) {
  return a + LaurentSeries::constant(a.context(), -k);
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  const int la = a.lower_bound();
  const int lb = b.lower_bound();
  SeriesContext c = joined(a.ctx_, b.ctx_, std::min({la, lb, la + lb}));
  const int order = c.order;

  // Bucket b by total degree so the inner loop stops at the truncation order.
  std::map<int, std::vector<const LaurentSeries::TermMap::value_type*>> by_degree;
  for (const auto& term : b.terms_) by_degree[total_degree(term.first)].push_back(&term);

  LaurentSeries::TermMap t;
  for (const auto& [ea, ca] : a.terms_) {
    const int da = total_degree(ea);
    for (const auto& [db, bucket] : by_degree) {
      if (da + db > order) break;
      for (const auto* term : bucket) accumulate(t, add_exponents(ea, term->first), ca * term->second);
    }
  }
  return LaurentSeries(std::move(c), std::move(t));
}

LaurentSeries LaurentSeries::inverse() const {
  if (terms_.empty()) throw Error(ErrorKind::NonUnitLeadingTerm, "zero series is not invertible");
  int lead_degree = total_degree(terms_.begin()->first);
  for (const auto& [e, c] : terms_) lead_degree = std::min(lead_degree, total_degree(e));

  const ExponentTuple* lead = nullptr;
  for (const auto& [e, c] : terms_) {
    if (total_degree(e) != lead_degree) continue;
    if (lead != nullptr) {
      throw Error(ErrorKind::NonUnitLeadingTerm, "lowest homogeneous part is not a single monomial");
    }
    lead = &e;
  }
  const Rational lead_inv = 1 / coefficient(*lead);
  ExponentTuple shift(lead->size());
  for (std::size_t i = 0; i < shift.size(); ++i) shift[i] = -(*lead)[i];

  // u = a / (c q^m) = 1 + t, graded by total degree offset from the lead.
  const int order = ctx_.order;
  // Result degrees are -lead_degree + offset, so offsets up to N + lead_degree are needed.
  const int span = order + lead_degree;
  std::vector<TermMap> t_parts(std::max(span, 0) + 1);
  for (const auto& [e, c] : terms_) {
    const int off = total_degree(e) - lead_degree;
    if (off == 0 || off > span) continue;
    t_parts[off].emplace(add_exponents(e, shift), c * lead_inv);
  }

  // s = 1/u via s_d = -Σ_{k=1..d} t_k s_{d-k}.
  std::vector<TermMap> s_parts(std::max(span, 0) + 1);
  s_parts[0].emplace(ExponentTuple(shift.size(), 0), Rational(1));
  for (int d = 1; d <= span; ++d) {
    TermMap& sd = s_parts[d];
    for (int k = 1; k <= d; ++k) {
      for (const auto& [et, ct] : t_parts[k])
        for (const auto& [es, cs] : s_parts[d - k]) accumulate(sd, add_exponents(et, es), -ct * cs);
    }
  }

  SeriesContext c = ctx_;
  c.lower_bound = std::min(ctx_.lower_bound, -lead_degree);
  TermMap r;
  for (const auto& part : s_parts)
    for (const auto& [e, v] : part) r.emplace(add_exponents(e, shift), v * lead_inv);
  return from_terms(std::move(c), std::move(r));
}

LaurentSeries operator/(const LaurentSeries& a, const LaurentSeries& b) { return a * b.inverse(); }

LaurentSeries laurent_arith(const LaurentSeries& a, const LaurentSeries& b, ArithKind kind) {
  switch (kind) {
    case ArithKind::add: return a + b;
    case ArithKind::sub: return a - b;
    case ArithKind::mul: return a * b;
    case ArithKind::invert_first: return a.inverse();
  }
  return a;
}

LaurentSeries theta_derive(const LaurentSeries& s, const std::string& var) {
  const auto& vars = s.variables();
  auto it = std::find(vars.begin(), vars.end(), var);
  if (it == vars.end()) throw Error(ErrorKind::VariableMismatch, "unknown variable '" + var + "'");
  const auto idx = static_cast<std::size_t>(it - vars.begin());
  LaurentSeries::TermMap t;
  for (const auto& [e, c] : s.terms()) {
    if (e[idx] != 0) t.emplace(e, c * e[idx]);
  }
  return LaurentSeries::from_terms(s.context(), std::move(t));
}

LaurentSeries theta(const LaurentSeries& s, int times) {
  LaurentSeries r = s;
  for (int i = 0; i < times; ++i) r = theta_derive(r, r.variables().front());
  return r;
}

std::vector<Integer> divisor_sums(int m, int limit) {
  std::vector<Integer> sigma(static_cast<std::size_t>(std::max(limit, 0)) + 1, 0);
  for (int d = 1; d <= limit; ++d) {
    Integer dm;
    mpz_ui_pow_ui(dm.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(m));
    for (int n = d; n <= limit; n += d) sigma[n] += dm;
  }
  return sigma;
}

LaurentSeries eisenstein_series(int k, int order) {
  int scale = 0;
  switch (k) {
    case 2: scale = -24; break;
    case 4: scale = 240; break;
    case 6: scale = -504; break;
    default: throw Error(ErrorKind::UnsupportedWeight, "weight " + std::to_string(k) + " not in {2,4,6}");
  }
  if (order < 0) throw Error(ErrorKind::DimensionMismatch, "negative order");
  const auto sigma = divisor_sums(k - 1, order);
  LaurentSeries::TermMap t;
  t.emplace(ExponentTuple{0}, Rational(1));
  for (int n = 1; n <= order; ++n) t.emplace(ExponentTuple{n}, Rational(sigma[n] * scale));
  return LaurentSeries::from_terms(LaurentSeries::univariate(order), std::move(t));
}

LaurentSeries monomial_substitute(const LaurentSeries& s, const ExactMatrix<Integer>& m,
                                  const SeriesContext& target) {
  if (m.cols() != s.variables().size() || m.rows() != target.variables.size()) {
    throw Error(ErrorKind::DimensionMismatch, "substitution matrix shape does not match the contexts");
  }
  LaurentSeries::TermMap t;
  for (const auto& [e, c] : s.terms()) {
    ExponentTuple image(m.rows(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      Integer acc = 0;
      for (std::size_t j = 0; j < m.cols(); ++j) acc += m(i, j) * e[j];
      image[i] = static_cast<int>(acc.get_si());
    }
    accumulate(t, image, c);
  }
  return LaurentSeries::from_terms(target, std::move(t));
}

nlohmann::json to_json(const LaurentSeries& s) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : s.terms()) terms.push_back(nlohmann::json::array({e, to_string(c)}));
  return {{"variables", s.variables()},
          {"order", s.order()},
          {"lower_bound", s.lower_bound()},
          {"terms", std::move(terms)}};
}

LaurentSeries series_from_json(const nlohmann::json& j) {
  SeriesContext ctx{j.at("variables").get<std::vector<std::string>>(), j.at("order").get<int>(),
                    j.at("lower_bound").get<int>()};
  LaurentSeries::TermMap t;
  for (const auto& term : j.at("terms")) {
    t.emplace(term.at(0).get<ExponentTuple>(), parse_rational(term.at(1).get<std::string>()));
  }
  return LaurentSeries::from_terms(std::move(ctx), std::move(t));
}

}  // namespace hrlab
