#include "hrlab/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "hrlab/error.hpp"

namespace hrlab {

namespace {

void require_same_alphabet(const Polynomial& a, const Polynomial& b) {
  if (a.variables() != b.variables()) {
    throw Error(ErrorKind::VariableMismatch, "polynomials over different variable alphabets");
  }
}

void accumulate(Polynomial::TermMap& terms, const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

bool divides(const Monomial& d, const Monomial& m) {
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] > m[i]) return false;
  return true;
}

Polynomial monomial_poly(const std::vector<std::string>& vars, Monomial m, const Rational& c) {
  Polynomial::TermMap t;
  t.emplace(std::move(m), c);
  return Polynomial(vars, std::move(t));
}

Polynomial gcd_from(const Polynomial& a, const Polynomial& b, std::size_t k);

// gcd of the coefficients of `p` viewed as a polynomial in x_k.
Polynomial content_in(const Polynomial& p, std::size_t k) {
  Polynomial c(p.variables());
  for (const auto& [deg, coeff] : p.coefficients_in(k)) {
    c = c.is_zero() ? coeff : gcd_from(c, coeff, k + 1);
    if (c.is_constant()) break;
  }
  return c.is_constant() ? Polynomial::constant(p.variables(), 1) : c.primitive_integer();
}

Polynomial primitive_part_in(const Polynomial& p, std::size_t k) {
  if (p.is_zero()) return p;
  return p.divide_exact(content_in(p, k)).primitive_integer();
}

// Pseudo-remainder of a by b with respect to x_k.
Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, std::size_t k) {
  const int db = b.degree_in(k);
  const auto b_coeffs = b.coefficients_in(k);
  const Polynomial& lb = b_coeffs.at(db);
  Polynomial r = a;
  while (!r.is_zero() && r.degree_in(k) >= db) {
    const int dr = r.degree_in(k);
    Polynomial lr = r.coefficients_in(k).at(dr);
    Monomial shift(a.arity(), 0);
    shift[k] = dr - db;
    r = lb * r - lr * monomial_poly(a.variables(), shift, 1) * b;
  }
  return r;
}

Polynomial gcd_from(const Polynomial& a, const Polynomial& b, std::size_t k) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const auto& vars = a.variables();
  if (k >= a.arity() || (a.is_constant() || b.is_constant())) return Polynomial::constant(vars, 1);
  if (a.degree_in(k) == 0 && b.degree_in(k) == 0) return gcd_from(a, b, k + 1);

  const Polynomial ca = content_in(a, k);
  const Polynomial cb = content_in(b, k);
  const Polynomial c = gcd_from(ca, cb, k + 1);
  Polynomial pa = a.divide_exact(ca).primitive_integer();
  Polynomial pb = b.divide_exact(cb).primitive_integer();
  if (pa.degree_in(k) < pb.degree_in(k)) std::swap(pa, pb);

  while (!pb.is_zero()) {
    if (pb.degree_in(k) == 0) {
      pa = Polynomial::constant(vars, 1);
      break;
    }
    Polynomial r = pseudo_remainder(pa, pb, k);
    pa = std::move(pb);
    pb = primitive_part_in(r, k);
  }
  return c * pa;
}

}  // namespace

Polynomial::Polynomial(std::vector<std::string> variables, TermMap terms) : vars_(std::move(variables)) {
  for (auto& [m, c] : terms) {
    if (m.size() != vars_.size()) throw Error(ErrorKind::VariableMismatch, "monomial length differs from arity");
    if (c != 0) terms_.emplace(m, c);
  }
}

Polynomial Polynomial::constant(std::vector<std::string> variables, const Rational& c) {
  Monomial zero(variables.size(), 0);
  return monomial_poly(variables, std::move(zero), c);
}

Polynomial Polynomial::variable(std::vector<std::string> variables, std::size_t index) {
  Monomial m(variables.size(), 0);
  m.at(index) = 1;
  return monomial_poly(variables, std::move(m), 1);
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && std::all_of(terms_.begin()->first.begin(),
                                                              terms_.begin()->first.end(),
                                                              [](int e) { return e == 0; }));
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::degree_in(std::size_t index) const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m[index]);
  return d;
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) {
    int s = 0;
    for (int e : m) s += e;
    d = std::max(d, s);
  }
  return d;
}

Polynomial Polynomial::operator-() const { return scaled(-1); }

Polynomial Polynomial::scaled(const Rational& k) const {
  Polynomial p(vars_);
  if (k == 0) return p;
  for (const auto& [m, c] : terms_) p.terms_.emplace(m, c * k);
  return p;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  require_same_alphabet(a, b);
  Polynomial p = a;
  for (const auto& [m, c] : b.terms_) accumulate(p.terms_, m, c);
  return p;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_alphabet(a, b);
  Polynomial p(a.vars_);
  Monomial m(a.arity());
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      accumulate(p.terms_, m, ca * cb);
    }
  return p;
}

Polynomial Polynomial::pow(unsigned n) const {
  Polynomial result = constant(vars_, 1);
  Polynomial base = *this;
  while (n > 0) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::derivative(std::size_t index) const {
  Polynomial p(vars_);
  for (const auto& [m, c] : terms_) {
    if (m[index] == 0) continue;
    Monomial d = m;
    d[index] -= 1;
    accumulate(p.terms_, d, c * m[index]);
  }
  return p;
}

Polynomial Polynomial::compose(std::span<const Polynomial> images) const {
  if (images.size() != arity() || images.empty()) {
    throw Error(ErrorKind::DimensionMismatch, "composition needs one image per variable");
  }
  const auto& target = images.front().variables();
  Polynomial result(target);
  for (const auto& [m, c] : terms_) {
    Polynomial term = constant(target, c);
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] > 0) term = term * images[i].pow(static_cast<unsigned>(m[i]));
    result = result + term;
  }
  return result;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != arity()) throw Error(ErrorKind::DimensionMismatch, "evaluation point arity");
  Rational sum = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < m.size(); ++i)
      for (int e = 0; e < m[i]; ++e) t *= point[i];
    sum += t;
  }
  return sum;
}

std::complex<double> Polynomial::evaluate(std::span<const std::complex<double>> point) const {
  if (point.size() != arity()) throw Error(ErrorKind::DimensionMismatch, "evaluation point arity");
  std::complex<double> sum = 0.0;
  for (const auto& [m, c] : terms_) {
    std::complex<double> t = c.get_d();
    for (std::size_t i = 0; i < m.size(); ++i)
      for (int e = 0; e < m[i]; ++e) t *= point[i];
    sum += t;
  }
  return sum;
}

std::map<int, Polynomial> Polynomial::coefficients_in(std::size_t index) const {
  std::map<int, Polynomial> out;
  for (const auto& [m, c] : terms_) {
    Monomial rest = m;
    rest[index] = 0;
    auto [it, inserted] = out.try_emplace(m[index], Polynomial(vars_));
    accumulate(it->second.terms_, rest, c);
  }
  return out;
}

Polynomial Polynomial::divide_exact(const Polynomial& divisor) const {
  require_same_alphabet(*this, divisor);
  if (divisor.is_zero()) throw Error(ErrorKind::DimensionMismatch, "division by the zero polynomial");
  Polynomial quotient(vars_);
  Polynomial rem = *this;
  const Monomial& lm = divisor.leading_monomial();
  const Rational& lc = divisor.leading_coefficient();
  while (!rem.is_zero()) {
    const Monomial& rm = rem.leading_monomial();
    if (!divides(lm, rm)) throw Error(ErrorKind::DimensionMismatch, "inexact polynomial division");
    Monomial q(rm.size());
    for (std::size_t i = 0; i < q.size(); ++i) q[i] = rm[i] - lm[i];
    Polynomial t = monomial_poly(vars_, q, rem.leading_coefficient() / lc);
    quotient = quotient + t;
    rem = rem - t * divisor;
  }
  return quotient;
}

Polynomial Polynomial::primitive_integer(Rational* factor) const {
  if (is_zero()) {
    if (factor != nullptr) *factor = 1;
    return *this;
  }
  Integer num_gcd = 0;
  Integer den_lcm = 1;
  for (const auto& [m, c] : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  Rational k(den_lcm, num_gcd);
  k.canonicalize();
  if (leading_coefficient() < 0) k = -k;
  if (factor != nullptr) *factor = k;
  return scaled(k);
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational mag = abs(c);
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    bool has_var = false;
    for (int e : m) has_var = has_var || e > 0;
    if (mag != 1 || !has_var) os << mag.get_str();
    bool need_star = mag != 1;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (need_star) os << "*";
      os << vars_[i];
      if (m[i] > 1) os << "^" << m[i];
      need_star = true;
    }
  }
  return os.str();
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  require_same_alphabet(a, b);
  return gcd_from(a, b, 0).primitive_integer();
}

RationalFunction::RationalFunction(Polynomial numerator)
    : RationalFunction(numerator, Polynomial::constant(numerator.variables(), 1)) {}

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator) {
  require_same_alphabet(numerator, denominator);
  if (denominator.is_zero()) throw Error(ErrorKind::DimensionMismatch, "zero denominator");
  if (numerator.is_zero()) {
    num_ = std::move(numerator);
    den_ = Polynomial::constant(num_.variables(), 1);
    return;
  }
  const Polynomial g = gcd(numerator, denominator);
  if (!g.is_constant()) {
    numerator = numerator.divide_exact(g);
    denominator = denominator.divide_exact(g);
  }
  Rational k;
  den_ = denominator.primitive_integer(&k);
  num_ = numerator.scaled(k);
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return {a.num_ * b.num_, a.den_ * b.den_};
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw Error(ErrorKind::DimensionMismatch, "division by the zero rational function");
  return {a.num_ * b.den_, a.den_ * b.num_};
}

RationalFunction RationalFunction::derivative(std::size_t index) const {
  return {num_.derivative(index) * den_ - num_ * den_.derivative(index), den_ * den_};
}

std::string RationalFunction::to_string() const {
  if (den_.is_constant()) return den_.leading_coefficient() == 1 ? num_.to_string()
                                                                 : "(" + num_.to_string() + ")/" + den_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace hrlab
