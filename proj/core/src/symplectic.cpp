#include "hrlab/symplectic.hpp"

#include <random>

#include <nlohmann/json.hpp>

#include "hrlab/error.hpp"

namespace hrlab {

double max_abs(const CMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

CMatrix standard_J(std::size_t g) {
  const auto n = static_cast<Eigen::Index>(g);
  CMatrix j = CMatrix::Zero(2 * n, 2 * n);
  j.topRightCorner(n, n).setIdentity();
  j.bottomLeftCorner(n, n) = -CMatrix::Identity(n, n);
  return j;
}

bool is_invertible(const CMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  if (m.size() == 0) return true;
  Eigen::JacobiSVD<CMatrix> svd(m);
  const auto& s = svd.singularValues();
  return s(s.size() - 1) > tol * std::max(1.0, s(0));
}

namespace {

std::size_t half_size(const CMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::DimensionMismatch, "matrix is not square");
  if (m.rows() % 2 != 0) throw Error(ErrorKind::OddSize, "symplectic matrices have even size");
  return static_cast<std::size_t>(m.rows()) / 2;
}

CMatrix solve_right(const CMatrix& lhs, const CMatrix& rhs) {
  // lhs · rhs⁻¹
  return rhs.transpose().partialPivLu().solve(lhs.transpose()).transpose();
}

}  // namespace

SymplecticCheck symplectic_check(const CMatrix& m, SymplecticGroup group, double tol) {
  const auto g = half_size(m);
  const CMatrix j = standard_J(g);
  if (group == SymplecticGroup::Sp) {
    const double r = max_abs(m.transpose() * j * m - j);
    return {r <= tol, r, std::nullopt};
  }
  const auto b = split_blocks(m);
  const CMatrix s = b.a * b.d.transpose() - b.b * b.c.transpose();
  const Complex nu = g == 0 ? Complex(1) : s.trace() / static_cast<double>(g);
  const double r = max_abs(m * j * m.transpose() - nu * j);
  return {r <= tol, r, nu};
}

double right_sp_residual(const CMatrix& m) {
  const CMatrix j = standard_J(half_size(m));
  return max_abs(m * j * m.transpose() - j);
}

SymplecticElement::SymplecticElement(CMatrix m, double tol) : m_(std::move(m)) {
  const auto check = symplectic_check(m_, SymplecticGroup::Sp, tol);
  residual_ = check.residual;
  if (!check.member) throw Error(ErrorKind::NotInGroup, "residual " + std::to_string(residual_));
}

bool is_siegel(const CMatrix& tau, double tol) {
  if (tau.rows() != tau.cols() || tau.rows() == 0) return false;
  if (max_abs(tau - tau.transpose()) > tol) return false;
  const Eigen::MatrixXd im = ((tau + tau.transpose()) / 2.0).imag();
  Eigen::LLT<Eigen::MatrixXd> llt(im);
  return llt.info() == Eigen::Success;
}

SiegelPoint::SiegelPoint(const CMatrix& tau, double tol) {
  if (tau.rows() != tau.cols() || tau.rows() == 0) throw Error(ErrorKind::NotSiegel, "tau must be square");
  if (max_abs(tau - tau.transpose()) > tol) throw Error(ErrorKind::NotSiegel, "tau is not symmetric");
  tau_ = (tau + tau.transpose()) / 2.0;
  Eigen::LLT<Eigen::MatrixXd> llt(tau_.imag());
  if (llt.info() != Eigen::Success) throw Error(ErrorKind::NotSiegel, "Im tau is not positive definite");
}

Blocks split_blocks(const CMatrix& m) {
  const auto n = static_cast<Eigen::Index>(half_size(m));
  return {m.topLeftCorner(n, n), m.topRightCorner(n, n), m.bottomLeftCorner(n, n), m.bottomRightCorner(n, n)};
}

CMatrix join_blocks(const CMatrix& a, const CMatrix& b, const CMatrix& c, const CMatrix& d) {
  const auto n = a.rows();
  CMatrix m(2 * n, 2 * n);
  m << a, b, c, d;
  return m;
}

MobiusResult mobius_act(const CMatrix& gamma, const CMatrix& tau) {
  const auto b = split_blocks(gamma);
  if (tau.rows() != b.a.rows() || tau.cols() != b.a.cols())
    throw Error(ErrorKind::DimensionMismatch, "tau and gamma sizes differ");
  CMatrix j = b.c * tau + b.d;
  if (!is_invertible(j)) throw Error(ErrorKind::SingularCocycle, "C tau + D is singular");
  CMatrix image = solve_right(b.a * tau + b.b, j);
  const bool siegel = is_siegel(image);
  if (max_abs(image - image.transpose()) <= 1e-9) image = (image + image.transpose()) / 2.0;
  return {std::move(image), std::move(j), siegel};
}

StarFactor gsp_star_factor(const CMatrix& s, double tol) {
  const auto check = symplectic_check(s, SymplecticGroup::GSp, tol);
  if (!check.member) throw Error(ErrorKind::NotInGroup, "not a GSp element");
  const auto b = split_blocks(s);
  if (!is_invertible(b.a)) throw Error(ErrorKind::NotInStarCell, "A block is singular");
  const CMatrix a_inv = b.a.inverse();
  const auto n = b.a.rows();
  CMatrix p = CMatrix::Zero(2 * n, 2 * n);
  p.topLeftCorner(n, n) = a_inv;
  p.topRightCorner(n, n) = -b.b.transpose();
  p.bottomRightCorner(n, n) = b.a.transpose();
  return {*check.similitude, b.c * a_inv, std::move(p)};
}

CMatrix gsp_star_assemble(const StarFactor& f) {
  const auto pb = split_blocks(f.p);
  const CMatrix x_inv = pb.a.inverse();
  const auto n = pb.a.rows();
  const CMatrix z_x_inv = f.tau_part * x_inv;
  return join_blocks(x_inv, -pb.b.transpose(), z_x_inv,
                     (f.nu * CMatrix::Identity(n, n) - z_x_inv * pb.b) * pb.a.transpose());
}

void require_parabolic(const CMatrix& p, double tol) {
  if (p.rows() != p.cols() || p.rows() % 2 != 0) throw Error(ErrorKind::NotParabolic, "bad shape");
  const auto b = split_blocks(p);
  if (max_abs(b.c) > tol) throw Error(ErrorKind::NotParabolic, "lower-left block is nonzero");
  if (!is_invertible(b.a)) throw Error(ErrorKind::NotParabolic, "A block is singular");
  const auto n = b.a.rows();
  if (max_abs(b.a.transpose() * b.d - CMatrix::Identity(n, n)) > tol)
    throw Error(ErrorKind::NotParabolic, "D block is not the inverse transpose of A");
  if (max_abs(b.a * b.b.transpose() - b.b * b.a.transpose()) > tol)
    throw Error(ErrorKind::NotParabolic, "A Bᵀ is not symmetric");
}

CMatrix parabolic(const CMatrix& a, const CMatrix& b) {
  return join_blocks(a, b, CMatrix::Zero(a.rows(), a.cols()), a.transpose().inverse());
}

CMatrix parabolic_transport(const CMatrix& p, double tol) {
  require_parabolic(p, tol);
  const auto b = split_blocks(p);
  return join_blocks(b.a.transpose().inverse(), CMatrix::Zero(b.a.rows(), b.a.cols()), kTwoPiI * b.b, b.a);
}

LagrangianPoint grassmann_project(const CMatrix& s, double tol) {
  const auto b = split_blocks(s);
  LagrangianPoint out{false, CMatrix(), b.b, b.d, false};
  if (is_invertible(b.d)) {
    out.affine = true;
    out.chart_value = solve_right(b.b, b.d);
    out.in_siegel = is_siegel(out.chart_value, tol);
  }
  return out;
}

CMatrix psi(const CMatrix& tau) {
  const auto n = tau.rows();
  return join_blocks(CMatrix::Identity(n, n), tau, CMatrix::Zero(n, n), CMatrix::Identity(n, n));
}

CMatrix leaf_parabolic(const CMatrix& delta, const CMatrix& tau) {
  const auto b = split_blocks(delta);
  const CMatrix j = b.c * tau + b.d;
  return join_blocks(j.inverse(), -b.c.transpose() / kTwoPiI, CMatrix::Zero(j.rows(), j.cols()), j.transpose());
}

LeafFrame leaf_frame(const CMatrix& delta, const CMatrix& tau, double tol) {
  LeafFrame f{false, std::nullopt, std::nullopt, std::nullopt};
  const auto b = split_blocks(delta);
  if (!is_invertible(b.c * tau + b.d)) return f;
  f.in_u_delta = true;
  const auto moved = mobius_act(delta, tau);
  f.psi_tau = psi(tau);
  f.psi_delta_tau = delta.partialPivLu().solve(psi(moved.image));
  f.p_delta_tau = leaf_parabolic(delta, tau);
  f.transport_residual = max_abs(*f.psi_delta_tau - *f.psi_tau * parabolic_transport(*f.p_delta_tau, tol));
  return f;
}

CMatrix solve_delta(const CMatrix& tau, const CMatrix& p, double tol) {
  require_parabolic(p, tol);
  const auto b = split_blocks(p);
  const CMatrix at = b.a.transpose();
  const CMatrix bt = b.b.transpose();
  return join_blocks(at, -at * tau, -kTwoPiI * bt, b.a.inverse() + kTwoPiI * bt * tau);
}

IntegerMatrix random_symplectic_integer(std::size_t g, int word_length, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> kind(0, 3);
  std::uniform_int_distribution<int> small(-2, 2);
  std::uniform_int_distribution<std::size_t> index(0, g - 1);
  auto m = IntegerMatrix::identity(2 * g);
  for (int w = 0; w < word_length; ++w) {
    IntegerMatrix gen = IntegerMatrix::identity(2 * g);
    const int k = kind(rng);
    if (k == 0) {
      gen = exact_standard_J<Integer>(g);
    } else if (k == 1 || k == 2) {
      IntegerMatrix n(g, g);
      for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = i; j < g; ++j) n(i, j) = n(j, i) = small(rng);
      gen.set_block(k == 1 ? 0 : g, k == 1 ? g : 0, n);
    } else {
      // U elementary: a sign flip, or 1 + c·E_ij off the diagonal; U⁻ᵀ = 1 − c·E_ji.
      const std::size_t i = index(rng);
      const std::size_t j = index(rng);
      if (i == j) {
        gen(i, i) = -1;
        gen(g + i, g + i) = -1;
      } else {
        int c = small(rng);
        if (c == 0) c = 1;
        gen(i, j) = c;
        gen(g + j, g + i) = -c;
      }
    }
    m = m * gen;
  }
  return m;
}

CMatrix to_complex(const IntegerMatrix& m) {
  CMatrix c(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) c(i, j) = m(i, j).get_d();
  return c;
}

CMatrix to_complex(const ExactMatrix<Rational>& m) {
  CMatrix c(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) c(i, j) = m(i, j).get_d();
  return c;
}

nlohmann::json to_json(const CMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json to_json(const IntegerMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_si());
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

bool is_scalar(const nlohmann::json& j) {
  return j.is_number() || (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number());
}

}  // namespace

Complex complex_from_json(const nlohmann::json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (is_scalar(j)) return {j[0].get<double>(), j[1].get<double>()};
  throw Error(ErrorKind::UsageError, "expected a number or an [re, im] pair");
}

CMatrix complex_matrix_from_json(const nlohmann::json& j) {
  if (is_scalar(j)) return CMatrix::Constant(1, 1, complex_from_json(j));
  if (!j.is_array() || j.empty()) throw Error(ErrorKind::UsageError, "expected a matrix");
  const auto rows = static_cast<Eigen::Index>(j.size());
  if (!j[0].is_array() || j[0].empty()) throw Error(ErrorKind::UsageError, "matrix rows must be arrays");
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  CMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const auto& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols)
      throw Error(ErrorKind::UsageError, "ragged matrix");
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = complex_from_json(row[static_cast<std::size_t>(c)]);
  }
  return m;
}

}  // namespace hrlab
