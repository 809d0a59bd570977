#include "hypqch/qch_bounds.hpp"

#include <cmath>
#include <sstream>

#include "hypqch/errors.hpp"
#include "hypqch/format.hpp"

namespace hypqch {

namespace {

constexpr const char* kAreaNote =
    "area bound A of the complementary subsurfaces: surface-dependent, not computed";
constexpr const char* kInjNote = "m_inj: injectivity-radius lower bound supplied by the caller";

Real log4() { return std::log(Real{4}); }

void check(const QCHParams& p) {
  if (!(p.K >= 1)) {
    throw Error(ErrorKind::InvalidDilatation, "K must be >= 1", "quasiconformal dilatation K >= 1");
  }
  if (!(p.L > 0)) throw Error(ErrorKind::NonPositiveLength, "L must be positive");
  if (!(p.R >= 0)) throw Error(ErrorKind::InvalidArgument, "R must be >= 0");
  if (!(p.m_inj > 0)) {
    throw Error(ErrorKind::InvalidArgument, "injectivity radius bound must be positive");
  }
}

}  // namespace

QCHParams make_params(Real K, Real L, std::optional<Real> R, Real m_inj, RFormula formula) {
  QCHParams p;
  p.K = K;
  p.L = L;
  p.m_inj = m_inj;
  if (R) {
    p.R = *R;
    p.r_formula = RFormula::UserSupplied;
  } else {
    if (formula == RFormula::UserSupplied) {
      throw Error(ErrorKind::InvalidArgument, "R formula 'user' needs an explicit R value");
    }
    if (!(K >= 1)) {
      throw Error(ErrorKind::InvalidDilatation, "K must be >= 1", "quasiconformal dilatation K >= 1");
    }
    if (!(L > 0)) throw Error(ErrorKind::NonPositiveLength, "L must be positive");
    p.R = quasi_geodesic_stability_R(K, L, formula);
    p.r_formula = formula;
  }
  p.C = K * log4();
  check(p);
  return p;
}

std::pair<Real, Real> qi_constants(Real K) {
  if (!(K >= 1)) {
    throw Error(ErrorKind::InvalidDilatation, "K must be >= 1", "quasiconformal dilatation K >= 1");
  }
  return {K, K * log4()};
}

Real spacing(const QCHParams& p) { return 3 * (p.R + p.K * p.L); }

SeparationBounds separation_bounds(const QCHParams& p) {
  check(p);
  SeparationBounds s;
  const Real KL = p.K * p.L;
  s.a = p.R + 2 * KL;
  s.rho_upper = 5 * p.R + 7 * KL / 2;
  s.hausdorff_factor = KL / (2 * collar_width(p.L / p.K)) + 1;
  s.b = s.hausdorff_factor * s.rho_upper;
  return s;
}

long long area_window_m(const QCHParams& p) {
  const SeparationBounds s = separation_bounds(p);
  const Real threshold = p.K / s.a * (s.b + p.C + p.R);
  return static_cast<long long>(std::floor(threshold)) + 1;
}

Real shortpants_step(Real M, Real m_inj) {
  if (!(M > 0) || !(m_inj > 0)) {
    throw Error(ErrorKind::DomainError, "short-pants step needs M > 0 and m_inj > 0",
                "short-pants length propagation");
  }
  const Real ratio = std::cosh(M / 2) / std::sinh(m_inj / 2);
  if (!(ratio >= 1)) {
    throw Error(ErrorKind::DomainError,
                "arccosh argument cosh(M/2)/sinh(m/2) = " +
                    std::to_string(static_cast<double>(ratio)) + " is below 1",
                "short-pants length propagation");
  }
  return M + std::acosh(ratio);
}

Real shortpants_global(Real M, Real m_inj, int diameter) {
  if (diameter < 0) throw Error(ErrorKind::InvalidArgument, "diameter must be >= 0");
  Real out = M;
  for (int i = 0; i < diameter; ++i) out = shortpants_step(out, m_inj);
  return out;
}

BoundReport report(const QCHParams& p, std::optional<Real> pants_bound) {
  check(p);
  BoundReport r;
  r.inputs = p;
  r.D = spacing(p);
  r.separation = separation_bounds(p);
  r.m_window = area_window_m(p);
  r.pants_bound = pants_bound.value_or(p.K * p.L);
  r.pants_bound_per_step = shortpants_step(r.pants_bound, p.m_inj);
  r.notes = {std::string("R: ") + std::string(formula_text(p.r_formula)), kAreaNote, kInjNote};
  return r;
}

nlohmann::json to_json(const BoundReport& r) {
  auto d = [](Real v) { return static_cast<double>(v); };
  const QCHParams& p = r.inputs;
  return {{"schema_version", kSchemaVersion},
          {"inputs", {{"K", d(p.K)}, {"L", d(p.L)}, {"R", d(p.R)}, {"C", d(p.C)}, {"m_inj", d(p.m_inj)}}},
          {"constants",
           {{"D", d(r.D)},
            {"a", d(r.separation.a)},
            {"rho_upper", d(r.separation.rho_upper)},
            {"hausdorff_factor", d(r.separation.hausdorff_factor)},
            {"b", d(r.separation.b)},
            {"m_window", r.m_window},
            {"pants_bound", d(r.pants_bound)},
            {"pants_bound_per_step", d(r.pants_bound_per_step)}}},
          {"provenance",
           {{"r_formula", std::string(to_string(p.r_formula))},
            {"r_formula_text", std::string(formula_text(p.r_formula))},
            {"notes", r.notes}}}};
}

BoundReport bound_report_from_json(const nlohmann::json& doc) {
  try {
    BoundReport r;
    const auto& in = doc.at("inputs");
    r.inputs.K = in.at("K").get<double>();
    r.inputs.L = in.at("L").get<double>();
    r.inputs.R = in.at("R").get<double>();
    r.inputs.C = in.at("C").get<double>();
    r.inputs.m_inj = in.at("m_inj").get<double>();
    r.inputs.r_formula = r_formula_from_string(doc.at("provenance").at("r_formula").get<std::string>());
    const auto& c = doc.at("constants");
    r.D = c.at("D").get<double>();
    r.separation.a = c.at("a").get<double>();
    r.separation.rho_upper = c.at("rho_upper").get<double>();
    r.separation.hausdorff_factor = c.at("hausdorff_factor").get<double>();
    r.separation.b = c.at("b").get<double>();
    r.m_window = c.at("m_window").get<long long>();
    r.pants_bound = c.at("pants_bound").get<double>();
    r.pants_bound_per_step = c.at("pants_bound_per_step").get<double>();
    r.notes = doc.at("provenance").at("notes").get<std::vector<std::string>>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, std::string("malformed bound report: ") + e.what());
  }
}

std::string bounds_csv(const std::vector<BoundReport>& reports) {
  std::ostringstream os;
  os << "K,L,R,C,m_inj,D,a,rho_upper,hausdorff_factor,b,m_window,pants_bound,pants_bound_per_step\n";
  for (const auto& r : reports) {
    const auto f = [](Real v) { return format_sig12(static_cast<double>(v)); };
    os << f(r.inputs.K) << ',' << f(r.inputs.L) << ',' << f(r.inputs.R) << ',' << f(r.inputs.C)
       << ',' << f(r.inputs.m_inj) << ',' << f(r.D) << ',' << f(r.separation.a) << ','
       << f(r.separation.rho_upper) << ',' << f(r.separation.hausdorff_factor) << ','
       << f(r.separation.b) << ',' << r.m_window << ',' << f(r.pants_bound) << ','
       << f(r.pants_bound_per_step) << '\n';
  }
  return os.str();
}

}  // namespace hypqch
