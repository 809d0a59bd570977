#pragma once

// Fenchel–Nielsen coordinates for the ladder surface and their holonomy.
//
// Ladder combinatorics: for every k there are two pants,
//   P_k^1 with cuffs (c_k, a_k, b_k) and P_k^2 with cuffs (a_k, b_k, c_{k+1}).
// The rungs a_k, b_k are glued between P_k^1 and P_k^2; c_k separates the ends.
//
// Twist convention: a twist is an angle θ in [0, 2π); the arc-length shift
// along the cuff is θ·l/(2π), positive to the left, measured from the seam
// feet (the endpoints on each cuff of the orthogeodesics of the pants hexagons).

#include <array>
#include <compare>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hypqch/hyp_core.hpp"

namespace hypqch {

inline constexpr std::string_view kTwistConvention =
    "twist = angle in radians, normalized to [0, 2pi); arc-length shift = theta*l/(2*pi), "
    "left twist positive, origin at the seam feet of the hexagon decomposition";

struct PantsCuffs {
  Real l1{};
  Real l2{};
  Real l3{};
};

/// Throws NonPositiveLength unless all three cuffs are positive.
void validate(const PantsCuffs& cuffs);

/// Lengths of the orthogeodesics between distinct cuffs (the seams).
struct Orthogeodesics {
  Real d12{};
  Real d13{};
  Real d23{};
};

Orthogeodesics pants_orthogeodesics(const PantsCuffs& cuffs);

/// One pair of pants in local coordinates. `foot[i]` is the frame at the seam
/// foot on cuff i, pointing along the cuff with the pants on its left, so that
/// the boundary element is foot[i]·T(l_i)·foot[i]^{-1} and
/// boundary(2)·boundary(1)·boundary(0) = -I.
struct PantsFrames {
  std::array<Real, 3> length{};
  std::array<MobiusMap, 3> foot{};

  MobiusMap boundary(int i) const;
};

PantsFrames pants_frames(const PantsCuffs& cuffs);

/// Residual of the relation between the three boundary elements of a pants.
Real pants_relation_residual(const PantsFrames& pants);

enum class CurveKind { A, B, C };

char to_char(CurveKind kind);

struct CurveLabel {
  CurveKind kind{};
  int k{};

  auto operator<=>(const CurveLabel&) const = default;
  std::string name() const;  // e.g. "a_-1"
};

struct FNRecord {
  int k{};
  Real l_a{}, t_a{};
  Real l_b{}, t_b{};
  Real l_c{}, t_c{};

  Real length(CurveKind kind) const;
  Real twist(CurveKind kind) const;
};

/// Coordinates on the window [-window, window], one record per k, ordered by k.
struct FNCoordinates {
  int window{};
  std::vector<FNRecord> records;

  const FNRecord& at(int k) const;
  bool contains(int k) const { return k >= -window && k <= window; }
};

/// Values (l_a, t_a, l_b, t_b, l_c, t_c) for index k.
using FNGenerator = std::function<std::array<Real, 6>(int k)>;

FNCoordinates build_ladder_fn(int window, const FNGenerator& generator);
/// Uniform coordinates: every curve gets (length, twist).
FNCoordinates build_ladder_fn(int window, Real length, Real twist);

/// Wraps an angle into [0, 2π) and reports how many full turns were removed.
/// Values within 1e-12 of 2π wrap to 0.
std::pair<Real, long long> normalize_angle(Real theta);

struct NormalizedFN {
  FNCoordinates fn;
  /// Full Dehn twists removed per record, in (a, b, c) order.
  std::vector<std::array<long long, 3>> removed;
};

NormalizedFN normalize_twists(const FNCoordinates& fn);

/// One pants placed in the global frame of the developing map.
struct PlacedPants {
  int k{};
  int which{};  // 1 or 2
  std::array<CurveLabel, 3> cuffs{};
  std::array<MobiusMap, 3> foot{};
  std::array<MobiusMap, 3> boundary{};
};

struct HolonomyOptions {
  /// Largest admissible max-abs entry of a holonomy matrix. Beyond this the
  /// trace loses too many digits to recover lengths.
  Real overflow_guard = 1e12L;
};

struct Holonomy {
  /// Boundary element of every curve as seen from P_k^1 (normalized, trace >= 0).
  std::map<CurveLabel, MobiusMap> curves;
  /// For each k in [-N, N-1]: the isometry identifying the b_k cuff of P_k^2
  /// with the b_k cuff of P_k^1 (the non-tree gluing of the 2-holed torus).
  std::map<int, MobiusMap> rung_gluing;
  /// Placement order, starting with the base pants P_0^1.
  std::vector<PlacedPants> pants;
};

/// Develops the window surface: P_0^1 sits in its local frame, every other pants
/// is attached through a shared cuff by h·foot_Q = foot_P·T(twist)·Rot(π),
/// moving outward from k = 0. Throws NumericalInstability when a holonomy
/// matrix exceeds the overflow guard.
Holonomy holonomy_from_fn(const FNCoordinates& fn, const HolonomyOptions& options = {});

/// Largest residual over all gluing relations: tree gluings give inverse
/// boundary elements, rung gluings conjugate b_k correctly.
Real gluing_residual(const Holonomy& holonomy);

/// Length of every curve recovered from the trace of its holonomy.
std::map<CurveLabel, Real> recovered_lengths(const Holonomy& holonomy);

struct QuotientCuff {
  CurveLabel label;
  Real length{};
  Real twist{};
};

struct QuotientPants {
  int k{};
  int which{};
  std::array<int, 3> cuffs{};  // indices into QuotientSurface::cuffs
};

/// Closed surface <τ>\Z for the shift τ: k -> k + period.
struct QuotientSurface {
  int period{};
  std::vector<QuotientCuff> cuffs;
  std::vector<QuotientPants> pants;
  int euler_characteristic{};
  int boundary_components{};
  bool connected{};
  int genus{};
};

/// Requires coordinates at k and k + period to agree within `tolerance` across
/// the window; throws NotShiftInvariant naming the first offending index.
QuotientSurface quotient_by_shift(const FNCoordinates& fn, int period = 2,
                                  Real tolerance = 1e-12L);

// Serialization. CSV rows are `k,l_a,t_a,l_b,t_b,l_c,t_c` after a comment line
// carrying the twist convention; JSON is an object with a `records` array.
std::string fn_to_csv(const FNCoordinates& fn);
FNCoordinates fn_from_csv(std::string_view text);
nlohmann::json fn_to_json(const FNCoordinates& fn);
FNCoordinates fn_from_json(const nlohmann::json& doc);

nlohmann::json to_json(const QuotientSurface& q);

}  // namespace hypqch
