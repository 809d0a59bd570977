#pragma once

// Explicit constants for K-quasiconformally homogeneous ladder surfaces:
// separation of the evenly spaced separating geodesics, the area window and
// the short-pants length propagation.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hypqch/hyp_core.hpp"

namespace hypqch {

struct QCHParams {
  Real K{1};      ///< dilatation, >= 1
  Real L{1};      ///< length of the base separating geodesic
  Real R{0};      ///< fellow-traveling constant
  Real C{};       ///< additive quasi-isometry constant, always K log 4
  Real m_inj{1};  ///< injectivity-radius lower bound (external input)
  RFormula r_formula{RFormula::UserSupplied};
};

/// Validates and completes the parameter set. When `R` is empty it is computed
/// from `formula` with length L; otherwise the explicit value is recorded as user-supplied.
QCHParams make_params(Real K, Real L, std::optional<Real> R, Real m_inj,
                      RFormula formula = RFormula::MorseGouezelShchur);

/// Multiplicative and additive constants (K, K log 4) of a K-quasiconformal map
/// viewed as a quasi-isometry.
std::pair<Real, Real> qi_constants(Real K);

/// Spacing D = 3(R + K L) between consecutive sample points on the minimizing geodesic.
Real spacing(const QCHParams& p);

struct SeparationBounds {
  Real a{};                 ///< R + 2KL, lower bound on ρ(γ_n, γ_m)/|m-n|
  Real rho_upper{};         ///< 5R + 7KL/2, upper bound on ρ(γ_n, γ_m)/|m-n|
  Real hausdorff_factor{};  ///< KL/(2η(L/K)) + 1, bound on H/ρ
  Real b{};                 ///< hausdorff_factor · rho_upper, upper bound on H/|m-n|
};

SeparationBounds separation_bounds(const QCHParams& p);

/// Smallest integer strictly greater than (K/a)(b + C + R).
long long area_window_m(const QCHParams& p);

/// One elementary move of the short-pants argument:
/// M + arccosh(cosh(M/2)/sinh(m_inj/2)). Throws DomainError when the ratio is below 1.
Real shortpants_step(Real M, Real m_inj);

/// shortpants_step iterated `diameter` times from M.
Real shortpants_global(Real M, Real m_inj, int diameter);

struct BoundReport {
  QCHParams inputs;
  Real D{};
  SeparationBounds separation;
  long long m_window{};
  Real pants_bound{};           ///< M fed to the short-pants step (defaults to K L)
  Real pants_bound_per_step{};  ///< shortpants_step(pants_bound, m_inj)
  std::vector<std::string> notes;
};

/// Assembles every constant. `pants_bound` defaults to K·L, the length bound on
/// the separating geodesics.
BoundReport report(const QCHParams& p, std::optional<Real> pants_bound = std::nullopt);

nlohmann::json to_json(const BoundReport& r);
BoundReport bound_report_from_json(const nlohmann::json& doc);

/// Column header and one CSV row per report, for sweeps over K, L or R.
std::string bounds_csv(const std::vector<BoundReport>& reports);

}  // namespace hypqch
