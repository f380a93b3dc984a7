#pragma once

#include <complex>
#include <cstdint>
#include <optional>

#include <Eigen/Dense>
#include <nlohmann/json_fwd.hpp>

#include "hrlab/exact_matrix.hpp"
#include "hrlab/rational.hpp"

namespace hrlab {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

inline constexpr double kPi = 3.14159265358979323846;
inline const Complex kTwoPiI{0.0, 2.0 * kPi};

struct TolerancePolicy {
  double membership = 1e-9;
  double identity = 1e-10;
  double roundtrip = 1e-12;
};

double max_abs(const CMatrix& m);
CMatrix standard_J(std::size_t g);
bool is_invertible(const CMatrix& m, double tol = 1e-12);

enum class SymplecticGroup { Sp, GSp };

struct SymplecticCheck {
  bool member;
  double residual;
  std::optional<Complex> similitude;
};

/// Sp: residual of MᵀJM − J. GSp: ν fitted from ADᵀ − BCᵀ, residual of MJMᵀ − νJ.
SymplecticCheck symplectic_check(const CMatrix& m, SymplecticGroup group, double tol);

/// ‖MJMᵀ − J‖, the companion of the Sp residual.
double right_sp_residual(const CMatrix& m);

class SymplecticElement {
 public:
  /// NotInGroup unless MᵀJM = J within tol; OddSize for odd dimension.
  SymplecticElement(CMatrix m, double tol);

  std::size_t g() const { return static_cast<std::size_t>(m_.rows()) / 2; }
  const CMatrix& matrix() const { return m_; }
  double residual() const { return residual_; }

 private:
  CMatrix m_;
  double residual_;
};

class SiegelPoint {
 public:
  /// Symmetrizes when ‖τ − τᵀ‖ ≤ tol; NotSiegel otherwise or when Im τ is not positive definite.
  explicit SiegelPoint(const CMatrix& tau, double tol = 1e-9);

  std::size_t g() const { return static_cast<std::size_t>(tau_.rows()); }
  const CMatrix& tau() const { return tau_; }

 private:
  CMatrix tau_;
};

bool is_siegel(const CMatrix& tau, double tol = 1e-9);

struct Blocks {
  CMatrix a, b, c, d;
};
Blocks split_blocks(const CMatrix& m);
CMatrix join_blocks(const CMatrix& a, const CMatrix& b, const CMatrix& c, const CMatrix& d);

struct MobiusResult {
  CMatrix image;
  CMatrix cocycle;
  bool in_siegel;
};

/// γ·τ = (Aτ+B)(Cτ+D)⁻¹ and j(γ,τ) = Cτ+D; SingularCocycle when Cτ+D is singular.
MobiusResult mobius_act(const CMatrix& gamma, const CMatrix& tau);

struct StarFactor {
  Complex nu;
  CMatrix tau_part;
  CMatrix p;
};

StarFactor gsp_star_factor(const CMatrix& s, double tol = 1e-9);
CMatrix gsp_star_assemble(const StarFactor& f);

/// NotParabolic unless p = (A B; 0 A⁻ᵀ) within tol.
void require_parabolic(const CMatrix& p, double tol = 1e-9);
CMatrix parabolic(const CMatrix& a, const CMatrix& b);
CMatrix parabolic_transport(const CMatrix& p, double tol = 1e-9);

struct LagrangianPoint {
  bool affine;
  CMatrix chart_value;  // BD⁻¹ when affine
  CMatrix b, d;
  bool in_siegel;
};

LagrangianPoint grassmann_project(const CMatrix& s, double tol = 1e-9);

CMatrix psi(const CMatrix& tau);

struct LeafFrame {
  bool in_u_delta;
  std::optional<CMatrix> p_delta_tau;
  std::optional<CMatrix> psi_tau;
  std::optional<CMatrix> psi_delta_tau;
  double transport_residual = 0;  // ‖ψ_δ(τ) − ψ(τ)p′_{δ,τ}‖
};

LeafFrame leaf_frame(const CMatrix& delta, const CMatrix& tau, double tol = 1e-9);

/// p_{δ,τ} = ((Cτ+D)⁻¹, −(1/2πi)Cᵀ; 0, (Cτ+D)ᵀ).
CMatrix leaf_parabolic(const CMatrix& delta, const CMatrix& tau);

CMatrix solve_delta(const CMatrix& tau, const CMatrix& p, double tol = 1e-9);

using IntegerMatrix = ExactMatrix<Integer>;

IntegerMatrix random_symplectic_integer(std::size_t g, int word_length, std::uint64_t seed);

CMatrix to_complex(const IntegerMatrix& m);
CMatrix to_complex(const ExactMatrix<Rational>& m);

nlohmann::json to_json(const CMatrix& m);
nlohmann::json to_json(const IntegerMatrix& m);

/// Accepts a number, an [re, im] pair, or nested arrays of either.
CMatrix complex_matrix_from_json(const nlohmann::json& j);
Complex complex_from_json(const nlohmann::json& j);

}  // namespace hrlab
