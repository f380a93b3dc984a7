#pragma once

// Period data of the principally polarized tori C^g/(Z^g + τZ^g). A de Rham
// class is stored only through its periods on the cycles γ_i = e_i and δ_i = τe_i.

#include <array>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "hrlab/symplectic.hpp"

namespace hrlab {

struct DeRhamClass {
  CVector gamma_periods;
  CVector delta_periods;
};

struct HodgeBasis {
  std::vector<DeRhamClass> omega;
  std::vector<DeRhamClass> eta;

  std::size_t g() const { return omega.size(); }
};

/// Im(v̄ᵀ(Im τ)⁻¹w).
double riemann_form(const SiegelPoint& tau, const CVector& v, const CVector& w);

struct StandardBases {
  HodgeBasis hodge;
  // (i, j) with i ≤ j -> (η_1^{ij}, …, η_g^{ij})
  std::map<std::pair<std::size_t, std::size_t>, std::vector<DeRhamClass>> eta_ij;
};

StandardBases standard_bases(const SiegelPoint& tau);

/// (1/2πi)(a_γ·b_δ − a_δ·b_γ).
Complex deRham_pairing(const DeRhamClass& a, const DeRhamClass& b);

/// Classes E(γ_i, ·) and E(δ_j, ·) read off the integral symplectic form.
DeRhamClass horizontal_gamma_class(std::size_t g, std::size_t i);
DeRhamClass horizontal_delta_class(std::size_t g, std::size_t j);

/// Compares the pairing formula with ⟨E(γ,·), E(δ,·)⟩ = (1/2πi)E(γ,δ) on all
/// horizontal basis pairs; returns the largest discrepancy.
double pairing_oracle_discrepancy(std::size_t g);

/// Largest deviation of the pairing Gram matrix from the symplectic-Hodge pattern.
double hodge_residual(const HodgeBasis& b);

struct PeriodData {
  CMatrix omega1, omega2, n1, n2;
  CMatrix p;
  CMatrix pi;
  Complex nu;
  double p_residual;    // GSp residual of P
  double pi_residual;   // Sp residual of Π
  bool tau_in_siegel;   // Ω₂Ω₁⁻¹ ∈ H_g
};

PeriodData period_matrices(const HodgeBasis& b);

/// b·p = (ωA, ωB + ηA⁻ᵀ) for p = (A B; 0 A⁻ᵀ).
HodgeBasis basis_right_action(const HodgeBasis& b, const CMatrix& p, double tol = 1e-9);

struct PhiPoint {
  HodgeBasis basis;
  CMatrix coset_rep;
};

/// OutsideLeafDomain when δ is given and Cτ + D is singular.
PhiPoint phi_point(const SiegelPoint& tau, const std::optional<CMatrix>& delta = std::nullopt);

/// (E₂, E₄, E₆) at τ by direct q-series summation.
std::array<Complex, 3> eisenstein_values(Complex tau);

/// Partial sum 1 + c_k Σ_{n ≤ terms} σ_{k−1}(n) qⁿ.
Complex eisenstein_partial_sum(int k, Complex tau, int terms);

/// ((cτ+d)²E₂ + (12c/2πi)(cτ+d), (cτ+d)⁴E₄, (cτ+d)⁶E₆).
std::array<Complex, 3> eisenstein_twist_g1(Complex tau, const CMatrix& delta);

nlohmann::json to_json(const PeriodData& d);
nlohmann::json to_json(const DeRhamClass& c);

}  // namespace hrlab
