#pragma once

// Truncated multivariate Laurent series with exact rational coefficients.
//
// A series lives in a context (variables, order N, lower bound L): every stored
// monomial has total degree in [L, N] and no stored coefficient is zero. All
// values are immutable; arithmetic returns new series.
//
// Truncation at N bounds storage, not precision. When an operand has a
// negative lower bound, the top coefficients of a product or inverse depend on
// terms beyond N and must be discarded by the caller (work at a higher order).

#include <map>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "hrlab/exact_matrix.hpp"
#include "hrlab/rational.hpp"

namespace hrlab {

using ExponentTuple = std::vector<int>;

int total_degree(const ExponentTuple& e);

struct SeriesContext {
  std::vector<std::string> variables;
  int order = 0;
  int lower_bound = 0;

  friend bool operator==(const SeriesContext&, const SeriesContext&) = default;
};

class LaurentSeries {
 public:
  using TermMap = std::map<ExponentTuple, Rational>;

  /// The zero series of a context.
  explicit LaurentSeries(SeriesContext ctx);

  /// Builds a series from raw terms: zeros and terms above the order are dropped;
  /// a term below the lower bound raises TruncationUnderflow.
  static LaurentSeries from_terms(SeriesContext ctx, TermMap terms);
  static LaurentSeries constant(SeriesContext ctx, const Rational& c);
  static LaurentSeries monomial(SeriesContext ctx, ExponentTuple e, const Rational& c = 1);
  /// Single-variable context with variable "q".
  static SeriesContext univariate(int order, int lower_bound = 0, std::string name = "q");

  const SeriesContext& context() const { return ctx_; }
  const std::vector<std::string>& variables() const { return ctx_.variables; }
  int order() const { return ctx_.order; }
  int lower_bound() const { return ctx_.lower_bound; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const ExponentTuple& e) const;
  /// Univariate convenience accessor.
  Rational coefficient(int n) const { return coefficient(ExponentTuple{n}); }

  /// Same terms, re-truncated to a new order (only lowering drops terms).
  LaurentSeries truncated(int order) const;
  /// Same terms viewed in a context with a smaller (or equal) lower bound.
  LaurentSeries with_lower_bound(int lower_bound) const;

  LaurentSeries operator-() const;
  LaurentSeries scaled(const Rational& c) const;

  friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator*(const Rational& c, const LaurentSeries& a) { return a.scaled(c); }
  friend LaurentSeries operator+(const LaurentSeries& a, const Rational& c);
  friend LaurentSeries operator-(const LaurentSeries& a, const Rational& c);

  /// Multiplicative inverse up to the order; the lowest-degree homogeneous part
  /// must be a single monomial (NonUnitLeadingTerm otherwise).
  LaurentSeries inverse() const;

  friend bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
    return a.ctx_ == b.ctx_ && a.terms_ == b.terms_;
  }

 private:
  LaurentSeries(SeriesContext ctx, TermMap terms) : ctx_(std::move(ctx)), terms_(std::move(terms)) {}

  SeriesContext ctx_;
  TermMap terms_;
};

LaurentSeries operator/(const LaurentSeries& a, const LaurentSeries& b);

enum class ArithKind { add, sub, mul, invert_first };

/// Dispatching form of the ring operations; `b` is ignored for invert_first.
LaurentSeries laurent_arith(const LaurentSeries& a, const LaurentSeries& b, ArithKind kind);

/// θ_var = var·∂/∂var: scales each coefficient by the var-component of its exponent.
LaurentSeries theta_derive(const LaurentSeries& s, const std::string& var);
/// Univariate θ = q d/dq applied `times` times.
LaurentSeries theta(const LaurentSeries& s, int times = 1);

/// E_k(q) for k in {2, 4, 6}, to order N in the variable "q".
LaurentSeries eisenstein_series(int k, int order);

/// Divisor power sums σ_m(n) for n = 0..limit (σ_m(0) = 0).
std::vector<Integer> divisor_sums(int m, int limit);

/// Ring homomorphism sending q^e to the target monomial with exponent M·e.
/// M has one row per target variable and one column per source variable.
LaurentSeries monomial_substitute(const LaurentSeries& s, const ExactMatrix<Integer>& m,
                                  const SeriesContext& target);

nlohmann::json to_json(const LaurentSeries& s);
LaurentSeries series_from_json(const nlohmann::json& j);

}  // namespace hrlab
