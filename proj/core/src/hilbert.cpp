#include "hrlab/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <nlohmann/json.hpp>

#include "hrlab/error.hpp"
#include "hrlab/periods.hpp"

namespace hrlab {

Rational norm(const QuadElement& x) { return x.a * x.a - Rational(x.d) * x.b * x.b; }

bool is_totally_positive(const QuadElement& x) {
  // a ± b√d > 0 ⇔ a > 0 and a² > d b².
  return x.a > 0 && norm(x) > 0;
}

std::string to_string(const QuadElement& x) {
  return to_string(x.a) + (x.b < 0 ? " - " : " + ") + to_string(Rational(abs(x.b))) + "*sqrt(" +
         std::to_string(x.d) + ")";
}

ComplexQuad complexify(const QuadElement& x) { return {GaussRational(x.a), GaussRational(x.b), x.d}; }

double QuadFieldContext::embed(const QuadElement& x, int k) const {
  return x.a.get_d() + (k == 0 ? 1.0 : -1.0) * x.b.get_d() * sqrt_d;
}

namespace {

bool squarefree(long d) {
  for (long p = 2; p * p <= d; ++p)
    if (d % (p * p) == 0) return false;
  return true;
}

Rational trace(const QuadElement& x) { return x.trace(); }

QuadElement scalar(long d, const Rational& a) { return {a, Rational(0), d}; }

}  // namespace

QuadElement inverse_different_element(const QuadFieldContext& ctx, long a, long b) {
  // 1/√disc = √d/(k·d) with k = 1 or 2.
  const long k = ctx.disc == ctx.d ? 1 : 2;
  Rational c(1, k * ctx.d);
  c.canonicalize();
  const QuadElement inv_sqrt{Rational(0), c, ctx.d};
  return (scalar(ctx.d, Rational(a)) + scalar(ctx.d, Rational(b)) * ctx.omega) * inv_sqrt;
}

bool in_inverse_different(const QuadFieldContext& ctx, const QuadElement& x) {
  return is_integer(trace(x * ctx.r_basis[0])) && is_integer(trace(x * ctx.r_basis[1]));
}

QuadFieldContext field_context(long d) {
  if (d <= 1 || !squarefree(d)) throw Error(ErrorKind::InvalidField, "d must be squarefree and > 1");
  QuadFieldContext ctx;
  ctx.d = d;
  ctx.sqrt_d = std::sqrt(static_cast<double>(d));
  if (d % 4 == 1) {
    ctx.omega = {Rational(1, 2), Rational(1, 2), d};
    ctx.disc = d;
  } else {
    ctx.omega = {Rational(0), Rational(1), d};
    ctx.disc = 4 * d;
  }

  struct Candidate {
    long m, n;
    QuadElement x;
  };
  std::vector<Candidate> cands;
  for (long m = -3; m <= 3; ++m)
    for (long n = -3; n <= 3; ++n) {
      auto x = inverse_different_element(ctx, m, n);
      if (is_totally_positive(x)) cands.push_back({m, n, x});
    }
  std::sort(cands.begin(), cands.end(), [](const Candidate& p, const Candidate& q) {
    if (p.x.a != q.x.a) return p.x.a < q.x.a;
    if (p.x.b != q.x.b) return p.x.b > q.x.b;
    return false;
  });
  bool found = false;
  for (std::size_t i = 0; i < cands.size() && !found; ++i)
    for (std::size_t j = i + 1; j < cands.size() && !found; ++j) {
      const long det = cands[i].m * cands[j].n - cands[i].n * cands[j].m;
      if (det == 1 || det == -1) {
        ctx.x_basis = {cands[i].x, cands[j].x};
        found = true;
      }
    }
  if (!found) throw Error(ErrorKind::InvalidField, "no totally positive basis in the search box");

  // Tr(r_i x_j) = δ_ij; for r = a + b√d, Tr(r x) = 2(a·x.a + d·b·x.b).
  const auto& x1 = ctx.x_basis[0];
  const auto& x2 = ctx.x_basis[1];
  const Rational m11 = 2 * x1.a, m12 = 2 * Rational(d) * x1.b;
  const Rational m21 = 2 * x2.a, m22 = 2 * Rational(d) * x2.b;
  const Rational det = m11 * m22 - m12 * m21;
  // rows (x1, x2) · (a, b)ᵀ = e_i
  ctx.r_basis[0] = {m22 / det, -m21 / det, d};
  ctx.r_basis[1] = {-m12 / det, m11 / det, d};
  for (auto& r : ctx.r_basis) {
    r.a.canonicalize();
    r.b.canonicalize();
  }

  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      ctx.x_embed(i, j) = ctx.embed(ctx.x_basis[static_cast<std::size_t>(j)], i);
      ctx.r_embed(i, j) = ctx.embed(ctx.r_basis[static_cast<std::size_t>(j)], i);
    }
  return ctx;
}

CMatrix h_map(const QuadFieldContext& ctx, const std::array<Complex, 2>& tau) {
  const CMatrix r = ctx.r_embed.cast<Complex>();
  CMatrix diag = CMatrix::Zero(2, 2);
  diag(0, 0) = tau[0];
  diag(1, 1) = tau[1];
  return r.transpose() * diag * r;
}

ExactMatrix<GaussRational> h_map_exact(const QuadFieldContext& ctx, const ComplexQuad& tau) {
  ExactMatrix<GaussRational> h(2, 2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      // Σ_k σ_k(r_i)σ_k(r_j)τ_k: the second embedding is the conjugate.
      const ComplexQuad ri = complexify(ctx.r_basis[i]);
      const ComplexQuad rj = complexify(ctx.r_basis[j]);
      const ComplexQuad s = ri * rj * tau + ri.conjugate() * rj.conjugate() * tau.conjugate();
      if (!s.b.is_zero()) throw Error(ErrorKind::InvalidField, "embedding sum left Q(i)");
      h(i, j) = s.a;
    }
  return h;
}

namespace {

template <typename T>
T trace_of(const QuadNumber<T>& x) {
  return x.a + x.a;
}

}  // namespace

ExactMatrix<GaussRational> iota_embed_exact(const QuadFieldContext& ctx, const QuadMatrix2& s) {
  std::array<ComplexQuad, 2> x{complexify(ctx.x_basis[0]), complexify(ctx.x_basis[1])};
  std::array<ComplexQuad, 2> r{complexify(ctx.r_basis[0]), complexify(ctx.r_basis[1])};
  // (u, v) ↦ (a u + b v, c u + d v); D⁻¹-coordinates by Tr(· r_i), R-coordinates by Tr(· x_i).
  ExactMatrix<GaussRational> m(4, 4);
  for (std::size_t j = 0; j < 2; ++j) {
    const ComplexQuad top_x = s[0][0] * x[j], bottom_x = s[1][0] * x[j];
    const ComplexQuad top_r = s[0][1] * r[j], bottom_r = s[1][1] * r[j];
    for (std::size_t i = 0; i < 2; ++i) {
      m(i, j) = trace_of(top_x * r[i]);
      m(2 + i, j) = trace_of(bottom_x * x[i]);
      m(i, 2 + j) = trace_of(top_r * r[i]);
      m(2 + i, 2 + j) = trace_of(bottom_r * x[i]);
    }
  }
  return m;
}

CMatrix iota_embed(const QuadFieldContext& ctx, const NumericQuadMatrix2& s, double tol) {
  // Work in the embeddings: σ_k(α + β√d) = α ± β√d.
  auto sigma = [&](const std::array<Complex, 2>& e, int k) { return e[0] + (k == 0 ? 1.0 : -1.0) * e[1] * ctx.sqrt_d; };
  auto tr = [&](const std::array<Complex, 2>& e, double f0, double f1) { return sigma(e, 0) * f0 + sigma(e, 1) * f1; };
  CMatrix m(4, 4);
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < 2; ++i) {
      m(i, j) = tr(s[0][0], ctx.x_embed(0, j) * ctx.r_embed(0, i), ctx.x_embed(1, j) * ctx.r_embed(1, i));
      m(2 + i, j) = tr(s[1][0], ctx.x_embed(0, j) * ctx.x_embed(0, i), ctx.x_embed(1, j) * ctx.x_embed(1, i));
      m(i, 2 + j) = tr(s[0][1], ctx.r_embed(0, j) * ctx.r_embed(0, i), ctx.r_embed(1, j) * ctx.r_embed(1, i));
      m(2 + i, 2 + j) = tr(s[1][1], ctx.r_embed(0, j) * ctx.x_embed(0, i), ctx.r_embed(1, j) * ctx.x_embed(1, i));
    }
  const auto check = symplectic_check(m, SymplecticGroup::Sp, tol);
  if (!check.member) throw Error(ErrorKind::NotInGroup, "image is not symplectic");
  return m;
}

std::array<Complex, 2> theta_F_coefficients(const QuadFieldContext& ctx, const QuadElement& x) {
  if (!in_inverse_different(ctx, x)) throw Error(ErrorKind::NotInInverseDifferent, to_string(x));
  return {ctx.embed(x, 0) / kTwoPiI, ctx.embed(x, 1) / kTwoPiI};
}

ExactMatrix<Integer> QexpMap::substitution() const {
  ExactMatrix<Integer> m(2, 3);
  for (std::size_t src = 0; src < 3; ++src)
    for (std::size_t k = 0; k < 2; ++k) m(k, src) = exponents[src][k];
  return m;
}

QexpMap qexp_exponent_map(const QuadFieldContext& ctx) {
  QexpMap out;
  const std::array<std::pair<std::size_t, std::size_t>, 3> pairs{{{0, 0}, {0, 1}, {1, 1}}};
  for (std::size_t p = 0; p < 3; ++p)
    for (std::size_t k = 0; k < 2; ++k) {
      const Rational t = trace(ctx.r_basis[pairs[p].first] * ctx.r_basis[pairs[p].second] * ctx.x_basis[k]);
      if (!is_integer(t)) throw Error(ErrorKind::InvalidField, "non-integral trace");
      out.exponents[p][k] = t.get_num();
    }
  return out;
}

std::array<Complex, 2> split_tau(const QuadFieldContext& ctx, const std::array<Complex, 2>& tau) {
  return {(tau[0] + tau[1]) / 2.0, (tau[0] - tau[1]) / (2.0 * ctx.sqrt_d)};
}

HodgeCheckReport hilbert_hodge_check(const QuadFieldContext& ctx, const std::array<Complex, 2>& tau, double tol) {
  HodgeCheckReport rep{{0, 0, 0, 0}, true, false};
  const CMatrix h = h_map(ctx, tau);
  const CMatrix rt = ctx.r_embed.transpose().cast<Complex>();

  // (i) z ↦ R_embedᵀz sends x_j to e_j and τ·r_j to h e_j.
  for (int j = 0; j < 2; ++j) {
    CVector x(2), tr(2);
    for (int k = 0; k < 2; ++k) {
      x(k) = ctx.x_embed(k, j);
      tr(k) = tau[static_cast<std::size_t>(k)] * ctx.r_embed(k, j);
    }
    const CVector ex = CMatrix::Identity(2, 2).col(j);
    rep.residuals[0] = std::max(rep.residuals[0], (rt * x - ex).cwiseAbs().maxCoeff());
    rep.residuals[0] = std::max(rep.residuals[0], (rt * tr - h.col(j)).cwiseAbs().maxCoeff());
  }

  // (ii) ω_F·r_i = 2πi Σ_k σ_k(r_i) dz_k against the standard ω_i of h.
  const auto standard = standard_bases(SiegelPoint(h));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Complex on_x = 0, on_tr = 0;
      for (int k = 0; k < 2; ++k) {
        on_x += kTwoPiI * ctx.r_embed(k, i) * ctx.x_embed(k, j);
        on_tr += kTwoPiI * ctx.r_embed(k, i) * tau[static_cast<std::size_t>(k)] * ctx.r_embed(k, j);
      }
      const auto& w = standard.hodge.omega[static_cast<std::size_t>(i)];
      rep.residuals[1] = std::max(rep.residuals[1], std::abs(on_x - w.gamma_periods(j)));
      rep.residuals[1] = std::max(rep.residuals[1], std::abs(on_tr - w.delta_periods(j)));
    }

  // (iii) θ_F(1⊗x_i) applied to ∫_{τr_j} ω_F = 2πiΣ_k τ_kσ_k(r_j) gives Tr(x_i r_j).
  for (std::size_t i = 0; i < 2; ++i) {
    const auto coeff = theta_F_coefficients(ctx, ctx.x_basis[i]);
    for (std::size_t j = 0; j < 2; ++j) {
      Complex derivative = 0;
      for (int k = 0; k < 2; ++k)
        derivative += coeff[static_cast<std::size_t>(k)] * kTwoPiI * ctx.r_embed(k, static_cast<int>(j));
      rep.residuals[2] = std::max(rep.residuals[2], std::abs(derivative - (i == j ? 1.0 : 0.0)));
      if (trace(ctx.x_basis[i] * ctx.r_basis[j]) != (i == j ? 1 : 0)) rep.duality_exact = false;
    }
  }

  // (iv) ι((1 τ; 0 1)) = ψ(h_t(τ)).
  const auto ab = split_tau(ctx, tau);
  NumericQuadMatrix2 s{};
  s[0][0] = {1.0, 0.0};
  s[1][1] = {1.0, 0.0};
  s[0][1] = ab;
  s[1][0] = {0.0, 0.0};
  rep.residuals[3] = max_abs(iota_embed(ctx, s, 1e-6) - psi(h));

  rep.pass = rep.duality_exact && std::all_of(rep.residuals.begin(), rep.residuals.end(),
                                              [&](double r) { return r <= tol; });
  return rep;
}

QuadElement fundamental_unit(const QuadFieldContext& ctx) {
  // Smallest a + bω > 1 of norm ±1, searching b upward.
  for (long b = 1; b < 100000; ++b)
    for (long a = -10 * b; a <= 10 * b; ++a) {
      const QuadElement u = scalar(ctx.d, Rational(a)) + scalar(ctx.d, Rational(b)) * ctx.omega;
      const Rational n = norm(u);
      if ((n == 1 || n == -1) && ctx.embed(u, 0) > 1) return u;
    }
  throw Error(ErrorKind::InvalidField, "unit search exhausted");
}

std::array<std::array<QuadElement, 2>, 2> random_integral_sl(const QuadFieldContext& ctx, int word_length,
                                                            std::uint64_t seed) {
  using M = std::array<std::array<QuadElement, 2>, 2>;
  const long d = ctx.d;
  auto mul = [](const M& p, const M& q) {
    M r;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) r[i][j] = p[i][0] * q[0][j] + p[i][1] * q[1][j];
    return r;
  };
  const QuadElement one = scalar(d, Rational(1)), zero = scalar(d, Rational(0));
  const QuadElement unit = fundamental_unit(ctx);
  const QuadElement unit_inv = unit.conjugate() * scalar(d, Rational(1) / norm(unit));
  // D = √disc·R.
  const long k = ctx.disc == d ? 1 : 2;
  const QuadElement sqrt_disc{Rational(0), Rational(k), d};

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> kind(0, 2);
  std::uniform_int_distribution<long> small(-2, 2);
  M m{{{one, zero}, {zero, one}}};
  for (int w = 0; w < word_length; ++w) {
    M gen{{{one, zero}, {zero, one}}};
    const int kd = kind(rng);
    const long p = small(rng), q = small(rng);
    if (kd == 0) {
      gen[0][1] = scalar(d, Rational(p)) * ctx.x_basis[0] + scalar(d, Rational(q)) * ctx.x_basis[1];
    } else if (kd == 1) {
      gen[1][0] = sqrt_disc * (scalar(d, Rational(p)) + scalar(d, Rational(q)) * ctx.omega);
    } else {
      const bool invert = p < 0;
      gen[0][0] = invert ? unit_inv : unit;
      gen[1][1] = invert ? unit : unit_inv;
    }
    m = mul(m, gen);
  }
  return m;
}

nlohmann::json to_json(const QuadFieldContext& ctx) {
  auto element = [&](const QuadElement& x) {
    return nlohmann::json{{"a", to_string(x.a)}, {"b", to_string(x.b)}, {"embeddings", {ctx.embed(x, 0), ctx.embed(x, 1)}}};
  };
  return {{"d", ctx.d},
          {"disc", ctx.disc},
          {"omega", element(ctx.omega)},
          {"x_basis", {element(ctx.x_basis[0]), element(ctx.x_basis[1])}},
          {"r_basis", {element(ctx.r_basis[0]), element(ctx.r_basis[1])}}};
}

}  // namespace hrlab
