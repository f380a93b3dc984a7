#pragma once

// Real quadratic fields Q(√d): the totally positive Z-basis (x₁, x₂) of the
// inverse different, its trace-dual basis (r₁, r₂) of the integers, and the
// maps into genus two.

#include <array>
#include <cstdint>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "hrlab/rational.hpp"
#include "hrlab/symplectic.hpp"

namespace hrlab {

/// a + b√d with coefficients in T (Rational or GaussRational).
template <typename T>
struct QuadNumber {
  T a;
  T b;
  long d = 0;

  QuadNumber conjugate() const { return {a, -b, d}; }
  T trace() const { return a + a; }

  friend QuadNumber operator+(const QuadNumber& x, const QuadNumber& y) { return {x.a + y.a, x.b + y.b, pick(x, y)}; }
  friend QuadNumber operator-(const QuadNumber& x, const QuadNumber& y) { return {x.a - y.a, x.b - y.b, pick(x, y)}; }
  friend QuadNumber operator-(const QuadNumber& x) { return {-x.a, -x.b, x.d}; }
  friend QuadNumber operator*(const QuadNumber& x, const QuadNumber& y) {
    const long d = pick(x, y);
    return {x.a * y.a + T(Rational(d)) * x.b * y.b, x.a * y.b + x.b * y.a, d};
  }
  friend bool operator==(const QuadNumber& x, const QuadNumber& y) { return x.a == y.a && x.b == y.b; }

 private:
  static long pick(const QuadNumber& x, const QuadNumber& y) {
    if (x.d != 0 && y.d != 0 && x.d != y.d) throw Error(ErrorKind::InvalidField, "elements of different fields");
    return x.d != 0 ? x.d : y.d;
  }
};

using QuadElement = QuadNumber<Rational>;
using ComplexQuad = QuadNumber<GaussRational>;

Rational norm(const QuadElement& x);
bool is_totally_positive(const QuadElement& x);
std::string to_string(const QuadElement& x);
ComplexQuad complexify(const QuadElement& x);

struct QuadFieldContext {
  long d;
  QuadElement omega;
  long disc;
  std::array<QuadElement, 2> x_basis;
  std::array<QuadElement, 2> r_basis;
  Eigen::Matrix2d x_embed;  // (σ_i(x_j))
  Eigen::Matrix2d r_embed;  // (σ_i(r_j))
  double sqrt_d;

  /// σ_k(x), k = 0, 1.
  double embed(const QuadElement& x, int k) const;
};

/// InvalidField unless d is squarefree and d > 1.
QuadFieldContext field_context(long d);

/// (a + bω)/√disc: the natural Z-basis of the inverse different.
QuadElement inverse_different_element(const QuadFieldContext& ctx, long a, long b);

bool in_inverse_different(const QuadFieldContext& ctx, const QuadElement& x);

/// R_embedᵀ diag(τ) R_embed.
CMatrix h_map(const QuadFieldContext& ctx, const std::array<Complex, 2>& tau);

/// Exact h_map for τ = α + β√d with α, β ∈ Q(i), computed through the embeddings.
ExactMatrix<GaussRational> h_map_exact(const QuadFieldContext& ctx, const ComplexQuad& tau);

using QuadMatrix2 = std::array<std::array<ComplexQuad, 2>, 2>;
using NumericQuadMatrix2 = std::array<std::array<std::array<Complex, 2>, 2>, 2>;  // (α, β) per entry

/// Action of s on D⁻¹ ⊕ R in the basis (x₁, x₂, r₁, r₂).
ExactMatrix<GaussRational> iota_embed_exact(const QuadFieldContext& ctx, const QuadMatrix2& s);
CMatrix iota_embed(const QuadFieldContext& ctx, const NumericQuadMatrix2& s, double tol = 1e-9);

/// (σ₁(x), σ₂(x))/2πi; NotInInverseDifferent unless x ∈ D⁻¹.
std::array<Complex, 2> theta_F_coefficients(const QuadFieldContext& ctx, const QuadElement& x);

struct QexpMap {
  // rows: q11, q12, q22; columns: k = 1, 2
  std::array<std::array<Integer, 2>, 3> exponents;

  /// Rows = targets (q^{r_1}, q^{r_2}), columns = sources (q11, q12, q22).
  ExactMatrix<Integer> substitution() const;
};

QexpMap qexp_exponent_map(const QuadFieldContext& ctx);

struct HodgeCheckReport {
  std::array<double, 4> residuals;
  bool duality_exact;
  bool pass;
};

HodgeCheckReport hilbert_hodge_check(const QuadFieldContext& ctx, const std::array<Complex, 2>& tau,
                                     double tol = 1e-10);

/// (α, β) with τ₁ = α + β√d, τ₂ = α − β√d.
std::array<Complex, 2> split_tau(const QuadFieldContext& ctx, const std::array<Complex, 2>& tau);

/// Random product of integral generators of SL(D⁻¹ ⊕ R).
std::array<std::array<QuadElement, 2>, 2> random_integral_sl(const QuadFieldContext& ctx, int word_length,
                                                            std::uint64_t seed);
QuadElement fundamental_unit(const QuadFieldContext& ctx);

nlohmann::json to_json(const QuadFieldContext& ctx);

}  // namespace hrlab
