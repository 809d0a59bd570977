#include "hypqch/hyp_core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hypqch/errors.hpp"

namespace hypqch {

Real asinh_one() { return std::asinh(Real{1}); }

MobiusMap MobiusMap::translation(Real length) {
  const Real h = length / 2;
  return {std::exp(h), 0, 0, std::exp(-h)};
}

MobiusMap MobiusMap::rotation(Real angle) {
  const Real c = std::cos(angle / 2);
  const Real s = std::sin(angle / 2);
  return {c, s, -s, c};
}

Real MobiusMap::norm() const {
  Real out = 0;
  for (Real v : m_) out = std::max(out, std::fabs(v));
  return out;
}

MobiusMap MobiusMap::normalized() const {
  const Real dt = det();
  if (!(dt > 0)) {
    throw Error(ErrorKind::NumericalInstability, "matrix has non-positive determinant");
  }
  const Real s = (trace() < 0 ? -1 : 1) / std::sqrt(dt);
  return {m_[0] * s, m_[1] * s, m_[2] * s, m_[3] * s};
}

Point MobiusMap::apply(Point z) const {
  return (m_[0] * z + m_[1]) / (m_[2] * z + m_[3]);
}

MobiusMap operator*(const MobiusMap& x, const MobiusMap& y) {
  return {x.m_[0] * y.m_[0] + x.m_[1] * y.m_[2], x.m_[0] * y.m_[1] + x.m_[1] * y.m_[3],
          x.m_[2] * y.m_[0] + x.m_[3] * y.m_[2], x.m_[2] * y.m_[1] + x.m_[3] * y.m_[3]};
}

Real MobiusMap::distance_to_identity() const {
  return projective_distance(*this, MobiusMap::identity());
}

Real MobiusMap::projective_distance(const MobiusMap& x, const MobiusMap& y) {
  Real plus = 0;
  Real minus = 0;
  for (int i = 0; i < 4; ++i) {
    plus = std::max(plus, std::fabs(x.m_[i] - y.m_[i]));
    minus = std::max(minus, std::fabs(x.m_[i] + y.m_[i]));
  }
  return std::min(plus, minus);
}

Real hyperbolic_distance(Point z, Point w) {
  const Real num = std::norm(z - w);
  return std::acosh(1 + num / (2 * z.imag() * w.imag()));
}

MobiusMap polygon_walk(std::span<const Real> sides, Real turn) {
  const MobiusMap rot = MobiusMap::rotation(turn);
  MobiusMap frame;
  for (Real s : sides) frame = frame * MobiusMap::translation(s) * rot;
  return frame;
}

Real right_angled_closure_residual(std::span<const Real> sides) {
  return polygon_walk(sides).distance_to_identity();
}

PentagonSolution solve_pentagon(Real b) {
  if (!(b > asinh_one())) {
    throw Error(ErrorKind::DegeneratePentagon,
                "no right-angled pentagon with two consecutive sides of length " +
                    std::to_string(static_cast<double>(b)) + " (need b > arcsinh(1))",
                "right-angled pentagon: cosh(c) = sinh(b)^2 > 1");
  }
  const Real sb = std::sinh(b);
  const Real c = std::acosh(sb * sb);
  const Real a = std::asinh(std::cosh(b) / std::sinh(c));
  PentagonSolution out{b, a, c};
  const auto sides = out.sides();
  const Real residual = right_angled_closure_residual(sides);
  if (!(residual < 1e-9L)) {
    throw Error(ErrorKind::NumericalInstability,
                "pentagon closure residual " + std::to_string(static_cast<double>(residual)),
                "right-angled pentagon closure");
  }
  return out;
}

std::array<Point, 5> pentagon_vertices(const PentagonSolution& p) {
  const std::array<Real, 5> walk{p.b, p.a, p.c, p.a, p.b};
  const MobiusMap rot = MobiusMap::rotation(kPi / 2);
  std::array<Point, 5> out;
  MobiusMap frame;
  for (std::size_t k = 0; k < walk.size(); ++k) {
    out[k] = frame.apply(Point{0, 1});
    frame = frame * MobiusMap::translation(walk[k]) * rot;
  }
  return out;
}

Real collar_width(Real length) {
  if (!(length > 0)) {
    throw Error(ErrorKind::NonPositiveLength, "collar width needs a positive length",
                "collar lemma");
  }
  return std::asinh(1 / std::sinh(length / 2));
}

Real annulus_modulus(Real r_inner, Real r_outer) {
  if (!(r_inner > 0) || !(r_outer > r_inner)) {
    throw Error(ErrorKind::EmptyAnnulus, "annulus needs 0 < r_inner < r_outer",
                "annulus modulus");
  }
  return std::log(r_outer / r_inner) / kTwoPi;
}

Real geodesic_length_from_trace(Real trace) {
  const Real t = std::fabs(trace);
  if (!(t > 2)) {
    throw Error(ErrorKind::NotHyperbolic,
                "|trace| = " + std::to_string(static_cast<double>(t)) +
                    " is not above 2; the element is not hyperbolic",
                "hyperbolic element: |tr| > 2");
  }
  return 2 * std::acosh(t / 2);
}

std::string_view to_string(RFormula formula) {
  switch (formula) {
    case RFormula::MorseGouezelShchur: return "morse-gouezel-shchur";
    case RFormula::UserSupplied: return "user";
  }
  return "unknown";
}

std::string_view formula_text(RFormula formula) {
  switch (formula) {
    case RFormula::MorseGouezelShchur:
      return "R(K, l) = 0 if K = 1, else 92 K^2 (K log 4 + log 3); quantitative Morse lemma "
             "(Gouezel-Shchur) for a (K, K log 4)-quasi-geodesic in the log 3-hyperbolic "
             "plane, uniform in l";
    case RFormula::UserSupplied:
      return "R supplied explicitly by the caller";
  }
  return "";
}

RFormula r_formula_from_string(std::string_view name) {
  if (name == "morse-gouezel-shchur" || name == "morse") return RFormula::MorseGouezelShchur;
  if (name == "user") return RFormula::UserSupplied;
  throw Error(ErrorKind::InvalidArgument, "unknown R formula '" + std::string(name) + "'");
}

Real h2_hyperbolicity_constant() { return std::log(Real{3}); }

Real quasi_geodesic_stability_R(Real K, Real length, RFormula formula) {
  if (!(K >= 1)) {
    throw Error(ErrorKind::InvalidDilatation, "dilatation K must be >= 1",
                "quasiconformal dilatation K >= 1");
  }
  if (!(length > 0)) {
    throw Error(ErrorKind::NonPositiveLength, "geodesic length must be positive");
  }
  switch (formula) {
    case RFormula::MorseGouezelShchur: {
      if (K == 1) return 0;
      const Real additive = K * std::log(Real{4});
      return 92 * K * K * (additive + h2_hyperbolicity_constant());
    }
    case RFormula::UserSupplied:
      throw Error(ErrorKind::InvalidArgument, "a user-supplied R has no closed form to evaluate");
  }
  return 0;
}

}  // namespace hypqch
