#pragma once

// Genus-one charts: the Weierstrass chart (g2, g3), the Eisenstein chart
// (e2, e4, e6) and the b-chart (b2, b4, b6). Each carries its discriminant,
// the Gauss-Manin connection matrix of the basis (ω, η) written as
// ∇(ω η) = (ω η) ⊗ Ω/Δ, and (except Weierstrass) the Ramanujan vector field.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "hrlab/polynomial.hpp"

namespace hrlab {

enum class Chart { weierstrass, e_chart, b_chart };

std::string_view to_string(Chart chart);
Chart chart_from_string(std::string_view name);
std::vector<std::string> chart_variables(Chart chart);

/// Discriminant Δ of the chart.
Polynomial delta_poly(Chart chart);

enum class ChartDirection { e_to_b, b_to_e };

/// Images of the target coordinates, as polynomials in the source coordinates.
std::array<Polynomial, 3> chart_change(ChartDirection direction);

struct ChartVectorField {
  Chart chart;
  std::vector<Polynomial> components;
};

/// The Ramanujan field; UnsupportedChart for the Weierstrass chart.
ChartVectorField ramanujan_field(Chart chart);

// Ω as a 2×2 array of 1-forms; omega[a][b][v] is the dv-component.
using OneForm = std::vector<RationalFunction>;

struct ConnectionMatrix {
  Chart chart;
  std::array<std::array<OneForm, 2>, 2> omega;
  Polynomial delta;
};

ConnectionMatrix gauss_manin_matrix(Chart chart);

/// The b-chart matrix as read with both middle slots of Ω11 and Ω12 on db6
/// (the duplicated-slot reading); exists to show it is rejected.
ConnectionMatrix gauss_manin_b_chart_duplicate_slot_reading();

using Matrix2RF = std::array<std::array<RationalFunction, 2>, 2>;

/// Entry (a,b) = Σ_v Ω_ab[v]·field[v] / Δ.
Matrix2RF connection_contract(const ConnectionMatrix& conn, const ChartVectorField& field);

enum class CurvatureSign { plus, minus };

struct Curvature {
  CurvatureSign sign;
  // Keyed by (i, j), i < j: coefficient matrix of dv_i ∧ dv_j.
  std::map<std::pair<std::size_t, std::size_t>, Matrix2RF> components;

  bool vanishes() const;
};

/// dA ± A∧A with A = Ω/Δ.
Curvature connection_curvature(const ConnectionMatrix& conn, CurvatureSign sign = CurvatureSign::plus);

struct CurvatureReport {
  CurvatureSign convention;
  bool flat;
};

/// Fixes the exterior-calculus convention on the Weierstrass chart (trying
/// dA + A∧A, then dA − A∧A) and applies it to `chart`.
CurvatureReport flatness_report(Chart chart);

/// Checks Ω22 = −Ω11, Ω(v) = (0 0; 1 0) and flatness; true when all three hold.
bool transcription_is_consistent(const ConnectionMatrix& conn);

enum class SeriesCheck { ramanujan, chazy, phihat_b, j_relation };

std::string_view to_string(SeriesCheck check);
SeriesCheck series_check_from_string(std::string_view name);

struct SeriesFailure {
  std::string identity;
  int exponent;
  std::string lhs;
  std::string rhs;
};

struct SeriesCheckReport {
  SeriesCheck check;
  int order;
  bool pass;
  std::optional<SeriesFailure> first_failure;
};

SeriesCheckReport verify_series_solution(SeriesCheck check, int order);

nlohmann::json to_json(const SeriesCheckReport& r);
nlohmann::json to_json(const ConnectionMatrix& c);

}  // namespace hrlab
