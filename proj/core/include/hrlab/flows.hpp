#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "hrlab/charts.hpp"
#include "hrlab/symplectic.hpp"

namespace hrlab {

/// s·(1 T; 0 1). The generators are nilpotent, so the exponential is exact.
ExactMatrix<Rational> exact_flow(const ExactMatrix<Rational>& s, const ExactMatrix<Rational>& t);
CMatrix exact_flow(const CMatrix& s, const CMatrix& t, double tol = 1e-9);

struct OdeState {
  Chart chart;
  std::array<Complex, 3> point;
  Complex tau;
};

/// Ramanujan field of the chart evaluated at a complex point.
std::array<Complex, 3> evaluate_field(Chart chart, const std::array<Complex, 3>& point);

/// Fixed-step RK4 for dφ/dτ = 2πi·v(φ) along the straight segment to tau_end.
OdeState integrate_g1(const OdeState& start, Complex tau_end, double step);

/// ‖(1/2πi)φ_δ′(τ) − (cτ+d)⁻²v(φ_δ(τ))‖ with a central difference of width h.
double twisted_ode_residual(const CMatrix& delta, Complex tau, double h);

struct DensityResult {
  int rank;
  int generic_rank;
  int monomial_count;
  int samples;
  bool full_rank;
  std::vector<double> singular_values;
};

/// Evaluates all monomials of degree ≤ d in the entries of (A, A⁻¹, B) of
/// p_{δγ,τ} over M sampled γ ∈ Sp₂g(Z) and compares the numerical rank with
/// the rank reached on random points of the parabolic group itself.
DensityResult density_probe(const CMatrix& delta, const SiegelPoint& tau, int degree, int samples,
                            std::uint64_t seed, int word_length = 6);

}  // namespace hrlab
