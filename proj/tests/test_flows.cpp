#include <doctest.h>

#include "hrlab/error.hpp"
#include "hrlab/flows.hpp"
#include "hrlab/periods.hpp"
#include "test_util.hpp"

using namespace hrlab;
using namespace hrlab::testing;

namespace {

const Complex I{0, 1};

ExactMatrix<Rational> random_symmetric_int(std::mt19937_64& rng, std::size_t g) {
  std::uniform_int_distribution<int> u(-5, 5);
  ExactMatrix<Rational> t(g, g);
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = i; j < g; ++j) t(i, j) = t(j, i) = u(rng);
  return t;
}

double relative_error(const std::array<Complex, 3>& a, const std::array<Complex, 3>& b) {
  double worst = 0;
  for (int i = 0; i < 3; ++i) worst = std::max(worst, std::abs(a[i] - b[i]) / std::abs(b[i]));
  return worst;
}

}  // namespace

TEST_CASE("exact flows commute") {
  std::mt19937_64 rng(21);
  for (std::size_t g : {1u, 2u, 3u})
    for (int trial = 0; trial < 20; ++trial) {
      ExactMatrix<Rational> s(2 * g, 2 * g);
      const auto si = random_symplectic_integer(g, 5, rng());
      for (std::size_t i = 0; i < 2 * g; ++i)
        for (std::size_t j = 0; j < 2 * g; ++j) s(i, j) = Rational(si(i, j));
      const auto t1 = random_symmetric_int(rng, g), t2 = random_symmetric_int(rng, g);
      const auto a = exact_flow(exact_flow(s, t1), t2);
      const auto b = exact_flow(exact_flow(s, t2), t1);
      CHECK(a == b);
      CHECK(a == exact_flow(s, t1 + t2));
      CHECK(exact_flow(s, ExactMatrix<Rational>(g, g)) == s);
    }
  std::mt19937_64 rng2(22);
  const CMatrix tau = random_siegel(rng2, 2);
  CHECK(max_abs(exact_flow(CMatrix::Identity(4, 4), tau) - psi(tau)) == 0.0);
  const CMatrix s = random_sp_complex(rng2, 2);
  const CMatrix t1 = random_symmetric(rng2, 2), t2 = random_symmetric(rng2, 2);
  CHECK(max_abs(exact_flow(exact_flow(s, t1), t2) - exact_flow(s, t1 + t2)) < 1e-12);
}

TEST_CASE("RK4 against the q-series") {
  const Complex t0{0, 2}, t1{0, 1.5};
  const OdeState start{Chart::e_chart, eisenstein_values(t0), t0};
  const auto same = integrate_g1(start, t0, 1e-3);
  CHECK(same.point == start.point);

  const auto end = integrate_g1(start, t1, 1e-3);
  CHECK(relative_error(end.point, eisenstein_values(t1)) < 1e-8);

  const double e1 = relative_error(integrate_g1(start, t1, 0.025).point, eisenstein_values(t1));
  const double e2 = relative_error(integrate_g1(start, t1, 0.0125).point, eisenstein_values(t1));
  const double e3 = relative_error(integrate_g1(start, t1, 0.00625).point, eisenstein_values(t1));
  CHECK(e1 / e2 > 12);
  CHECK(e1 / e2 < 20);
  CHECK(e2 / e3 > 12);
  CHECK(e2 / e3 < 20);

  CHECK_THROWS_AS(integrate_g1(start, Complex(0, -1), 1e-2), Error);
  CHECK_THROWS_AS(integrate_g1(start, t1, 0.0), Error);
}

TEST_CASE("RK4 on the b-chart matches the transported solution") {
  // (b2, b4, b6) = (E2, θE2/2, θ²E2/6) with θE2 = (E2² − E4)/12.
  auto b_of = [](const std::array<Complex, 3>& e) {
    const Complex te2 = (e[0] * e[0] - e[1]) / 12.0;
    const Complex te4 = (e[0] * e[1] - e[2]) / 3.0;
    const Complex second = (2.0 * e[0] * te2 - te4) / 12.0;
    return std::array<Complex, 3>{e[0], te2 / 2.0, second / 6.0};
  };
  const Complex t0{0, 2}, t1{0, 1.5};
  const OdeState start{Chart::b_chart, b_of(eisenstein_values(t0)), t0};
  const auto end = integrate_g1(start, t1, 1e-3);
  CHECK(relative_error(end.point, b_of(eisenstein_values(t1))) < 1e-8);
}

TEST_CASE("twisted ODE residual") {
  CMatrix id = CMatrix::Identity(2, 2);
  CMatrix j(2, 2);
  j << 0.0, 1.0, -1.0, 0.0;
  CHECK(twisted_ode_residual(id, Complex(0, 2), 1e-4) <= 1e-6);
  CHECK(twisted_ode_residual(j, Complex(1, 2), 1e-4) <= 1e-5);
  for (int k = 0; k < 10; ++k) {
    const Complex tau{-0.5 + 0.1 * k, 1.0 + 0.15 * k};
    CHECK(twisted_ode_residual(id, tau, 1e-4) <= 1e-6);
    CHECK(twisted_ode_residual(j, tau, 1e-4) <= 1e-5);
  }
  // O(h²): at larger h the stencil error dominates roundoff.
  const double r1 = twisted_ode_residual(id, Complex(0.1, 1.2), 4e-2);
  const double r2 = twisted_ode_residual(id, Complex(0.1, 1.2), 2e-2);
  CHECK(r1 / r2 > 3.5);
  CHECK(r1 / r2 < 4.5);
  // c = −i/2, d = −1 vanishes at τ = 2i; det = 1.
  CMatrix bad(2, 2);
  bad << -1.0, 0.0, -I / 2.0, -1.0;
  CHECK_THROWS_AS(twisted_ode_residual(bad, Complex(0, 2), 1e-4), Error);
}

TEST_CASE("density probe") {
  CMatrix t(1, 1);
  t(0, 0) = I;
  const SiegelPoint tau(t);
  CMatrix j(2, 2);
  j << 0.0, 1.0, -1.0, 0.0;
  std::mt19937_64 rng(23);
  const CMatrix random_delta = random_sp_complex(rng, 1);
  for (const CMatrix& d : {CMatrix(CMatrix::Identity(2, 2)), j, random_delta}) {
    const auto r = density_probe(d, tau, 2, 60, 42);
    CHECK(r.monomial_count == 10);
    CHECK(r.generic_rank == 9);
    CHECK(r.full_rank);
    CHECK(r.rank >= 1);
  }
  const auto few = density_probe(j, tau, 2, 5, 42);
  CHECK_FALSE(few.full_rank);
  CHECK(few.rank <= 5);
  CHECK(few.rank >= 1);

  const auto again = density_probe(j, tau, 2, 60, 42);
  const auto once = density_probe(j, tau, 2, 60, 42);
  CHECK(again.singular_values == once.singular_values);
}
