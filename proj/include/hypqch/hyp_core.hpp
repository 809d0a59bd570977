#pragma once

// Hyperbolic trigonometry and PSL(2,R) primitives in the upper half-plane.

#include <array>
#include <complex>
#include <span>
#include <string>
#include <string_view>

namespace hypqch {

/// Scalar for all geometric computation. Extended precision on x86-64.
using Real = long double;
using Point = std::complex<Real>;

inline constexpr Real kPi = 3.141592653589793238462643383279502884L;
inline constexpr Real kTwoPi = 2 * kPi;

/// arcsinh(1): the threshold below which P_b does not exist, and the collar fixed point.
Real asinh_one();

/// An orientation-preserving isometry of the upper half-plane, z -> (az+b)/(cz+d),
/// stored as a unimodular real matrix. Products and inverses stay exact up to rounding;
/// `normalized()` rescales the determinant to 1 and picks the sign with trace >= 0.
class MobiusMap {
 public:
  constexpr MobiusMap() = default;
  constexpr MobiusMap(Real a, Real b, Real c, Real d) : m_{a, b, c, d} {}

  static MobiusMap identity() { return {}; }
  /// Hyperbolic translation of length `length` along the imaginary axis, moving i up.
  static MobiusMap translation(Real length);
  /// Counter-clockwise rotation by `angle` about the point i.
  static MobiusMap rotation(Real angle);

  Real a() const { return m_[0]; }
  Real b() const { return m_[1]; }
  Real c() const { return m_[2]; }
  Real d() const { return m_[3]; }

  Real trace() const { return m_[0] + m_[3]; }
  Real det() const { return m_[0] * m_[3] - m_[1] * m_[2]; }
  /// Largest absolute entry.
  Real norm() const;

  /// Inverse of a unimodular matrix (the adjugate).
  MobiusMap inverse() const { return {m_[3], -m_[1], -m_[2], m_[0]}; }
  MobiusMap normalized() const;
  MobiusMap operator-() const { return {-m_[0], -m_[1], -m_[2], -m_[3]}; }

  Point apply(Point z) const;

  friend MobiusMap operator*(const MobiusMap& x, const MobiusMap& y);

  /// Max-abs distance to the nearest of +I and -I.
  Real distance_to_identity() const;
  /// Max-abs distance between x and ±y (PSL equality).
  static Real projective_distance(const MobiusMap& x, const MobiusMap& y);

 private:
  std::array<Real, 4> m_{1, 0, 0, 1};
};

/// Hyperbolic distance between two points of the upper half-plane.
Real hyperbolic_distance(Point z, Point w);

/// Walks a polygon with the given consecutive side lengths, turning left by
/// `turn` after every side, and returns the final frame. A closed polygon with
/// exterior angles `turn` returns ±I.
MobiusMap polygon_walk(std::span<const Real> sides, Real turn = kPi / 2);

/// ||walk - (±I)|| for a right-angled polygon with the given sides.
Real right_angled_closure_residual(std::span<const Real> sides);

/// Side lengths (b, b, a, c, a) in cyclic order of the unique right-angled
/// pentagon with two consecutive sides of length b.
struct PentagonSolution {
  Real b{};
  Real a{};
  Real c{};

  std::array<Real, 5> sides() const { return {b, b, a, c, a}; }
};

/// Solves cosh(c) = sinh(b)^2 and cosh(b) = sinh(a) sinh(c) and checks closure
/// of the resulting polygon to 1e-9. Throws DegeneratePentagon for b <= arcsinh(1).
PentagonSolution solve_pentagon(Real b);

/// Vertex positions of P_b in the upper half-plane, starting at the corner
/// between the two b-sides and walking sides b, a, c, a, b.
std::array<Point, 5> pentagon_vertices(const PentagonSolution& p);

/// Collar half-width arcsinh(1/sinh(l/2)) of a simple closed geodesic of length l.
Real collar_width(Real length);

/// Modulus log(r_outer/r_inner)/(2π) of a round annulus.
Real annulus_modulus(Real r_inner, Real r_outer);

/// Translation length 2 arccosh(|t|/2) of a hyperbolic element with trace t.
Real geodesic_length_from_trace(Real trace);

enum class RFormula {
  /// 92 K² (K log 4 + log 3): quantitative Morse lemma for a (K, K log 4)
  /// quasi-geodesic in H², which is log 3-hyperbolic for the four-point condition.
  /// Equal to 0 at K = 1, where the quasiconformal map is an isometry.
  MorseGouezelShchur,
  /// An explicit R supplied by the caller.
  UserSupplied,
};

std::string_view to_string(RFormula formula);
/// Human-readable statement of the formula, carried in every bound report.
std::string_view formula_text(RFormula formula);
RFormula r_formula_from_string(std::string_view name);

/// Four-point hyperbolicity constant used for H².
Real h2_hyperbolicity_constant();

/// Fellow-traveling constant for the image of a closed geodesic of length
/// `length` under a K-quasiconformal self-map. Nondecreasing in K, zero at K = 1.
Real quasi_geodesic_stability_R(Real K, Real length,
                                RFormula formula = RFormula::MorseGouezelShchur);

}  // namespace hypqch
