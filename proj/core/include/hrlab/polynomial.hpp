#pragma once

#include <complex>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "hrlab/rational.hpp"

namespace hrlab {

using Monomial = std::vector<int>;

// Sparse multivariate polynomial over Q in a fixed variable alphabet.
// Terms are kept in lexicographic monomial order with the first variable most
// significant; the leading term is the lexicographically largest monomial.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational>;

  Polynomial() = default;
  explicit Polynomial(std::vector<std::string> variables) : vars_(std::move(variables)) {}
  Polynomial(std::vector<std::string> variables, TermMap terms);

  static Polynomial constant(std::vector<std::string> variables, const Rational& c);
  static Polynomial variable(std::vector<std::string> variables, std::size_t index);

  const std::vector<std::string>& variables() const { return vars_; }
  std::size_t arity() const { return vars_.size(); }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational coefficient(const Monomial& m) const;

  /// Largest exponent of variable `index` appearing in any term (-1 for zero).
  int degree_in(std::size_t index) const;
  int total_degree() const;
  const Monomial& leading_monomial() const { return terms_.rbegin()->first; }
  const Rational& leading_coefficient() const { return terms_.rbegin()->second; }

  Polynomial operator-() const;
  Polynomial scaled(const Rational& c) const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, const Polynomial& p) { return p.scaled(c); }
  friend Polynomial operator+(const Polynomial& p, const Rational& c) {
    return p + Polynomial::constant(p.variables(), c);
  }
  friend Polynomial operator-(const Polynomial& p, const Rational& c) {
    return p - Polynomial::constant(p.variables(), c);
  }
  Polynomial pow(unsigned n) const;

  Polynomial derivative(std::size_t index) const;

  /// Substitutes polynomials (all over a common target alphabet) for each variable.
  Polynomial compose(std::span<const Polynomial> images) const;

  Rational evaluate(std::span<const Rational> point) const;
  std::complex<double> evaluate(std::span<const std::complex<double>> point) const;

  /// View as a polynomial in variable `index`: coefficient of x_index^k for each k.
  std::map<int, Polynomial> coefficients_in(std::size_t index) const;

  /// Exact quotient; throws if `divisor` does not divide this polynomial.
  Polynomial divide_exact(const Polynomial& divisor) const;

  /// Scales to an integer-coefficient polynomial with coprime coefficients and
  /// positive leading coefficient; returns the scale applied through `factor`.
  Polynomial primitive_integer(Rational* factor = nullptr) const;

  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

 private:
  std::vector<std::string> vars_;
  TermMap terms_;
};

/// Greatest common divisor over Q[x], normalized by primitive_integer.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

// Reduced quotient of polynomials: gcd(num, den) = 1, den is an integer
// primitive polynomial with positive leading coefficient, zero is 0/1.
class RationalFunction {
 public:
  RationalFunction() = default;
  RationalFunction(Polynomial numerator);
  RationalFunction(Polynomial numerator, Polynomial denominator);

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);

  RationalFunction derivative(std::size_t index) const;

  std::string to_string() const;

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  Polynomial num_;
  Polynomial den_;
};

}  // namespace hrlab
