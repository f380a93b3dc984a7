#include "hrlab/flows.hpp"

#include <cmath>
#include <functional>
#include <random>

#include "hrlab/error.hpp"
#include "hrlab/periods.hpp"

namespace hrlab {

ExactMatrix<Rational> exact_flow(const ExactMatrix<Rational>& s, const ExactMatrix<Rational>& t) {
  if (!t.is_symmetric() || 2 * t.rows() != s.rows()) throw Error(ErrorKind::DimensionMismatch, "flow times");
  return s * exact_unipotent(t);
}

CMatrix exact_flow(const CMatrix& s, const CMatrix& t, double tol) {
  if (t.rows() != t.cols() || 2 * t.rows() != s.rows()) throw Error(ErrorKind::DimensionMismatch, "flow times");
  if (max_abs(t - t.transpose()) > tol) throw Error(ErrorKind::DimensionMismatch, "flow times are not symmetric");
  return s * psi(t);
}

std::array<Complex, 3> evaluate_field(Chart chart, const std::array<Complex, 3>& point) {
  static const auto e_field = ramanujan_field(Chart::e_chart);
  static const auto b_field = ramanujan_field(Chart::b_chart);
  const auto& field = chart == Chart::e_chart ? e_field : b_field;
  if (chart == Chart::weierstrass) throw Error(ErrorKind::UnsupportedChart, "no Ramanujan field");
  std::array<Complex, 3> out;
  for (std::size_t i = 0; i < 3; ++i) out[i] = field.components[i].evaluate(std::span<const Complex>(point));
  return out;
}

OdeState integrate_g1(const OdeState& start, Complex tau_end, double step) {
  if (step <= 0) throw Error(ErrorKind::UsageError, "step must be positive");
  // Im τ is affine along the segment, so the endpoints decide.
  if (start.tau.imag() <= 0 || tau_end.imag() <= 0)
    throw Error(ErrorKind::PathLeavesDomain, "segment leaves the upper half-plane");
  const Complex span = tau_end - start.tau;
  const auto n = static_cast<long>(std::ceil(std::abs(span) / step - 1e-9));
  if (n == 0) return start;
  const Complex h = span / static_cast<double>(n);

  using State = std::array<Complex, 3>;
  auto rhs = [&](const State& y) {
    State v = evaluate_field(start.chart, y);
    for (auto& x : v) x *= kTwoPiI;
    return v;
  };
  auto axpy = [](const State& y, Complex a, const State& k) {
    State r;
    for (std::size_t i = 0; i < 3; ++i) r[i] = y[i] + a * k[i];
    return r;
  };

  State y = start.point;
  for (long s = 0; s < n; ++s) {
    const State k1 = rhs(y);
    const State k2 = rhs(axpy(y, h / 2.0, k1));
    const State k3 = rhs(axpy(y, h / 2.0, k2));
    const State k4 = rhs(axpy(y, h, k3));
    for (std::size_t i = 0; i < 3; ++i) {
      y[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
      if (!std::isfinite(y[i].real()) || !std::isfinite(y[i].imag()))
        throw Error(ErrorKind::StepTooLarge, "non-finite RK4 stage");
    }
  }
  return {start.chart, y, tau_end};
}

double twisted_ode_residual(const CMatrix& delta, Complex tau, double h) {
  const Complex c = delta(1, 0);
  const Complex d = delta(1, 1);
  for (Complex t : {tau - h, tau, tau + h})
    if (std::abs(c * t + d) < 1e-12) throw Error(ErrorKind::SingularCocycle, "c tau + d vanishes on the stencil");
  const auto plus = eisenstein_twist_g1(tau + h, delta);
  const auto minus = eisenstein_twist_g1(tau - h, delta);
  const auto at = eisenstein_twist_g1(tau, delta);
  const auto v = evaluate_field(Chart::e_chart, at);
  const Complex j = c * tau + d;
  double worst = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    const Complex lhs = (plus[i] - minus[i]) / (2.0 * h) / kTwoPiI;
    worst = std::max(worst, std::abs(lhs - v[i] / (j * j)));
  }
  return worst;
}

namespace {

std::vector<std::vector<int>> exponents_up_to(int vars, int degree) {
  std::vector<std::vector<int>> out;
  std::vector<int> e(static_cast<std::size_t>(vars), 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == vars) {
      out.push_back(e);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      e[static_cast<std::size_t>(i)] = k;
      rec(i + 1, left - k);
    }
    e[static_cast<std::size_t>(i)] = 0;
  };
  rec(0, degree);
  return out;
}

std::vector<Complex> coordinates(const CMatrix& p) {
  const auto b = split_blocks(p);
  const CMatrix a_inv = b.a.inverse();
  std::vector<Complex> out;
  for (const CMatrix* m : {&b.a, &a_inv, &b.b})
    for (Eigen::Index i = 0; i < m->rows(); ++i)
      for (Eigen::Index j = 0; j < m->cols(); ++j) out.push_back((*m)(i, j));
  return out;
}

struct RankData {
  int rank;
  std::vector<double> singular_values;
};

RankData numerical_rank(const std::vector<std::vector<Complex>>& points,
                        const std::vector<std::vector<int>>& monomials) {
  CMatrix m(static_cast<Eigen::Index>(points.size()), static_cast<Eigen::Index>(monomials.size()));
  for (std::size_t r = 0; r < points.size(); ++r)
    for (std::size_t c = 0; c < monomials.size(); ++c) {
      Complex v = 1;
      for (std::size_t k = 0; k < points[r].size(); ++k) v *= std::pow(points[r][k], monomials[c][k]);
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = v;
    }
  // Column scaling leaves the exact rank alone and keeps the cutoff meaningful.
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    const double n = m.col(c).norm();
    if (n > 0) m.col(c) /= n;
  }
  Eigen::JacobiSVD<CMatrix> svd(m);
  const auto& s = svd.singularValues();
  RankData out{0, {}};
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    out.singular_values.push_back(s(i));
    if (s(i) > 1e-8 * s(0)) ++out.rank;
  }
  return out;
}

}  // namespace

DensityResult density_probe(const CMatrix& delta, const SiegelPoint& tau, int degree, int samples,
                            std::uint64_t seed, int word_length) {
  if (degree < 1 || samples < 1) throw Error(ErrorKind::UsageError, "degree and samples must be positive");
  const std::size_t g = tau.g();
  if (static_cast<std::size_t>(delta.rows()) != 2 * g) throw Error(ErrorKind::DimensionMismatch, "delta size");
  const auto monomials = exponents_up_to(static_cast<int>(3 * g * g), degree);

  std::mt19937_64 rng(seed);
  std::vector<std::vector<Complex>> points;
  long attempts = 0;
  while (static_cast<int>(points.size()) < samples) {
    if (++attempts > 100L * samples) throw Error(ErrorKind::InsufficientSamples, "U-membership keeps failing");
    const CMatrix gamma = to_complex(random_symplectic_integer(g, word_length, rng()));
    const CMatrix dg = delta * gamma;
    const auto b = split_blocks(dg);
    if (!is_invertible(b.c * tau.tau() + b.d, 1e-9)) continue;
    points.push_back(coordinates(leaf_parabolic(dg, tau.tau())));
  }

  // Reference: generic points (A, S·A⁻ᵀ) of the parabolic group, S symmetric.
  std::normal_distribution<double> normal;
  auto random_complex = [&](Eigen::Index n) {
    CMatrix m(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) m(i, j) = Complex(normal(rng), normal(rng));
    return m;
  };
  std::vector<std::vector<Complex>> generic;
  const auto n = static_cast<Eigen::Index>(g);
  for (std::size_t k = 0; k < 2 * monomials.size(); ++k) {
    const CMatrix a = random_complex(n);
    CMatrix s = random_complex(n);
    s = (s + s.transpose()).eval();
    generic.push_back(coordinates(parabolic(a, s * a.transpose().inverse())));
  }

  const auto probe = numerical_rank(points, monomials);
  const auto reference = numerical_rank(generic, monomials);
  DensityResult out;
  out.rank = probe.rank;
  out.generic_rank = reference.rank;
  out.monomial_count = static_cast<int>(monomials.size());
  out.samples = samples;
  out.full_rank = samples >= out.monomial_count && probe.rank == reference.rank;
  out.singular_values = probe.singular_values;
  return out;
}

}  // namespace hrlab
