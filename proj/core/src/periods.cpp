#include "hrlab/periods.hpp"

#include <cmath>

#include <nlohmann/json.hpp>

#include "hrlab/error.hpp"

namespace hrlab {

namespace {

CVector unit(std::size_t g, std::size_t i) {
  CVector e = CVector::Zero(static_cast<Eigen::Index>(g));
  e(static_cast<Eigen::Index>(i)) = 1.0;
  return e;
}

DeRhamClass combine(const std::vector<DeRhamClass>& classes, const CMatrix& coeffs, Eigen::Index col) {
  const auto g = classes.front().gamma_periods.size();
  DeRhamClass out{CVector::Zero(g), CVector::Zero(g)};
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const Complex c = coeffs(static_cast<Eigen::Index>(i), col);
    out.gamma_periods += c * classes[i].gamma_periods;
    out.delta_periods += c * classes[i].delta_periods;
  }
  return out;
}

}  // namespace

double riemann_form(const SiegelPoint& tau, const CVector& v, const CVector& w) {
  const Eigen::MatrixXd im = tau.tau().imag();
  const CMatrix im_inv = im.inverse().cast<Complex>();
  return (v.adjoint() * im_inv * w)(0, 0).imag();
}

StandardBases standard_bases(const SiegelPoint& tau) {
  const std::size_t g = tau.g();
  StandardBases out;
  for (std::size_t k = 0; k < g; ++k) {
    const CVector e = unit(g, k);
    out.hodge.omega.push_back({kTwoPiI * e, kTwoPiI * (tau.tau() * e)});
    out.hodge.eta.push_back({CVector::Zero(static_cast<Eigen::Index>(g)), e});
  }
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = i; j < g; ++j) {
      CMatrix e_ij = CMatrix::Zero(static_cast<Eigen::Index>(g), static_cast<Eigen::Index>(g));
      e_ij(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = 1.0;
      e_ij(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = 1.0;
      auto& family = out.eta_ij[{i, j}];
      for (std::size_t k = 0; k < g; ++k)
        family.push_back({CVector::Zero(static_cast<Eigen::Index>(g)), e_ij.row(static_cast<Eigen::Index>(k)).transpose()});
    }
  return out;
}

Complex deRham_pairing(const DeRhamClass& a, const DeRhamClass& b) {
  const auto g = a.gamma_periods.size();
  if (a.delta_periods.size() != g || b.gamma_periods.size() != g || b.delta_periods.size() != g)
    throw Error(ErrorKind::SizeMismatch, "period tuples of different lengths");
  const Complex s = (a.gamma_periods.transpose() * b.delta_periods)(0, 0) -
                    (a.delta_periods.transpose() * b.gamma_periods)(0, 0);
  return s / kTwoPiI;
}

DeRhamClass horizontal_gamma_class(std::size_t g, std::size_t i) {
  // ∫_{γ_k} E(γ_i,·) = E(γ_i, γ_k) = 0, ∫_{δ_k} E(γ_i,·) = E(γ_i, δ_k) = δ_ik.
  return {CVector::Zero(static_cast<Eigen::Index>(g)), unit(g, i)};
}

DeRhamClass horizontal_delta_class(std::size_t g, std::size_t j) {
  return {-unit(g, j), CVector::Zero(static_cast<Eigen::Index>(g))};
}

double pairing_oracle_discrepancy(std::size_t g) {
  // Integral form on (γ_1..γ_g, δ_1..δ_g): E(γ_i, δ_j) = δ_ij, alternating.
  const CMatrix e = standard_J(g);
  std::vector<DeRhamClass> classes;
  for (std::size_t i = 0; i < g; ++i) classes.push_back(horizontal_gamma_class(g, i));
  for (std::size_t j = 0; j < g; ++j) classes.push_back(horizontal_delta_class(g, j));
  double worst = 0;
  for (std::size_t a = 0; a < 2 * g; ++a)
    for (std::size_t b = 0; b < 2 * g; ++b) {
      const Complex expected = e(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) / kTwoPiI;
      worst = std::max(worst, std::abs(deRham_pairing(classes[a], classes[b]) - expected));
    }
  return worst;
}

double hodge_residual(const HodgeBasis& b) {
  const std::size_t g = b.g();
  double worst = 0;
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < g; ++j) {
      worst = std::max(worst, std::abs(deRham_pairing(b.omega[i], b.omega[j])));
      worst = std::max(worst, std::abs(deRham_pairing(b.eta[i], b.eta[j])));
      worst = std::max(worst, std::abs(deRham_pairing(b.omega[i], b.eta[j]) - (i == j ? 1.0 : 0.0)));
    }
  return worst;
}

PeriodData period_matrices(const HodgeBasis& b) {
  const auto g = static_cast<Eigen::Index>(b.g());
  PeriodData d;
  d.omega1.resize(g, g);
  d.omega2.resize(g, g);
  d.n1.resize(g, g);
  d.n2.resize(g, g);
  for (Eigen::Index j = 0; j < g; ++j) {
    d.omega1.col(j) = b.omega[static_cast<std::size_t>(j)].gamma_periods;
    d.omega2.col(j) = b.omega[static_cast<std::size_t>(j)].delta_periods;
    d.n1.col(j) = b.eta[static_cast<std::size_t>(j)].gamma_periods;
    d.n2.col(j) = b.eta[static_cast<std::size_t>(j)].delta_periods;
  }
  d.p = join_blocks(d.omega1, d.n1, d.omega2, d.n2);
  d.pi = join_blocks(d.n2, d.omega2 / kTwoPiI, d.n1, d.omega1 / kTwoPiI);
  const auto gsp = symplectic_check(d.p, SymplecticGroup::GSp, 1e-9);
  d.nu = *gsp.similitude;
  d.p_residual = gsp.residual;
  d.pi_residual = symplectic_check(d.pi, SymplecticGroup::Sp, 1e-9).residual;
  d.tau_in_siegel = is_invertible(d.omega1) && is_siegel(d.omega2 * d.omega1.inverse());
  return d;
}

HodgeBasis basis_right_action(const HodgeBasis& b, const CMatrix& p, double tol) {
  require_parabolic(p, tol);
  const auto blocks = split_blocks(p);
  const auto g = static_cast<Eigen::Index>(b.g());
  HodgeBasis out;
  for (Eigen::Index j = 0; j < g; ++j) {
    out.omega.push_back(combine(b.omega, blocks.a, j));
    DeRhamClass from_omega = combine(b.omega, blocks.b, j);
    const DeRhamClass from_eta = combine(b.eta, blocks.d, j);
    from_omega.gamma_periods += from_eta.gamma_periods;
    from_omega.delta_periods += from_eta.delta_periods;
    out.eta.push_back(std::move(from_omega));
  }
  return out;
}

PhiPoint phi_point(const SiegelPoint& tau, const std::optional<CMatrix>& delta) {
  const auto standard = standard_bases(tau).hodge;
  if (!delta) return {standard, psi(tau.tau())};
  const auto frame = leaf_frame(*delta, tau.tau());
  if (!frame.in_u_delta) throw Error(ErrorKind::OutsideLeafDomain, "C tau + D is singular");
  return {basis_right_action(standard, *frame.p_delta_tau), *frame.psi_delta_tau};
}

namespace {

int eisenstein_constant(int k) {
  switch (k) {
    case 2: return -24;
    case 4: return 240;
    case 6: return -504;
    default: throw Error(ErrorKind::UnsupportedWeight, "weight must be 2, 4 or 6");
  }
}

double sigma(int power, long n) {
  double s = 0;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    s += std::pow(static_cast<double>(d), power);
    const long e = n / d;
    if (e != d) s += std::pow(static_cast<double>(e), power);
  }
  return s;
}

Complex eisenstein_value(int k, Complex tau) {
  if (tau.imag() <= 0) throw Error(ErrorKind::PathLeavesDomain, "tau must lie in the upper half-plane");
  const Complex q = std::exp(kTwoPiI * tau);
  const double c = eisenstein_constant(k);
  Complex sum = 0;
  Complex qn = 1;
  double previous = 0;
  for (long n = 1;; ++n) {
    qn *= q;
    const Complex term = sigma(k - 1, n) * qn;
    sum += term;
    const double size = std::abs(c * term);
    // Terms rise before they decay when |q| is close to 1.
    if (size < 1e-17 && size <= previous) break;
    if (n > 10'000'000) break;
    previous = size;
  }
  return 1.0 + c * sum;
}

}  // namespace

Complex eisenstein_partial_sum(int k, Complex tau, int terms) {
  const Complex q = std::exp(kTwoPiI * tau);
  Complex sum = 0;
  Complex qn = 1;
  for (int n = 1; n <= terms; ++n) {
    qn *= q;
    sum += sigma(k - 1, n) * qn;
  }
  return 1.0 + static_cast<double>(eisenstein_constant(k)) * sum;
}

std::array<Complex, 3> eisenstein_values(Complex tau) {
  return {eisenstein_value(2, tau), eisenstein_value(4, tau), eisenstein_value(6, tau)};
}

std::array<Complex, 3> eisenstein_twist_g1(Complex tau, const CMatrix& delta) {
  if (delta.rows() != 2 || delta.cols() != 2) throw Error(ErrorKind::DimensionMismatch, "delta must be 2x2");
  if (std::abs(delta.determinant() - 1.0) > 1e-9) throw Error(ErrorKind::NotInGroup, "delta must lie in SL2");
  const Complex c = delta(1, 0);
  const Complex j = c * tau + delta(1, 1);
  if (std::abs(j) < 1e-300) throw Error(ErrorKind::SingularCocycle, "c tau + d vanishes");
  const auto e = eisenstein_values(tau);
  const Complex j2 = j * j;
  return {j2 * e[0] + 12.0 * c / kTwoPiI * j, j2 * j2 * e[1], j2 * j2 * j2 * e[2]};
}

nlohmann::json to_json(const DeRhamClass& c) {
  return {{"gamma_periods", to_json(CMatrix(c.gamma_periods.transpose()))[0]},
          {"delta_periods", to_json(CMatrix(c.delta_periods.transpose()))[0]}};
}

nlohmann::json to_json(const PeriodData& d) {
  return {{"Omega1", to_json(d.omega1)},
          {"Omega2", to_json(d.omega2)},
          {"N1", to_json(d.n1)},
          {"N2", to_json(d.n2)},
          {"P", to_json(d.p)},
          {"Pi", to_json(d.pi)},
          {"nu", {d.nu.real(), d.nu.imag()}},
          {"residuals", {{"P_gsp", d.p_residual}, {"Pi_sp", d.pi_residual}}},
          {"tau_in_siegel", d.tau_in_siegel}};
}

}  // namespace hrlab
