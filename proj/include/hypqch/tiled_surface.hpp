#pragma once

// Finite windows of the pentagon-tiled surfaces T_b and R_b and a discrete
// certificate that the vertical geodesic through the cell corners is
// distance-minimizing.
//
// Cells (r, col) are 1-holed squares built from four copies of the pentagon P_b.
// Row line i is the top of row i; column line j is the left side of column j.
// The vertical geodesic α runs along column line 0.

#include <algorithm>
#include <compare>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "hypqch/errors.hpp"
#include "hypqch/hyp_core.hpp"

namespace hypqch {

enum class VertexKind { Corner, HMid, VMid, Hole };
enum class HoleSide { Top = 0, Right = 1, Bottom = 2, Left = 3 };

/// Corner(i, j): row line i, column line j. HMid(i, col): midpoint of the top
/// side of cell (i, col). VMid(r, j): midpoint of the left side of cell (r, j).
/// Hole(r, col, side): foot of the seam from the midpoint on that side.
struct VertexKey {
  VertexKind kind{};
  int i{};
  int j{};
  int side{};

  auto operator<=>(const VertexKey&) const = default;
  std::string name() const;

  static VertexKey corner(int i, int j) { return {VertexKind::Corner, i, j, 0}; }
  static VertexKey hmid(int i, int col) { return {VertexKind::HMid, i, col, 0}; }
  static VertexKey vmid(int r, int j) { return {VertexKind::VMid, r, j, 0}; }
  static VertexKey hole(int r, int col, HoleSide s) {
    return {VertexKind::Hole, r, col, static_cast<int>(s)};
  }
};

enum class EdgeKind { Side, Diagonal, Injected };

std::string to_string(EdgeKind kind);

struct TileEdge {
  int u{};
  int v{};
  Real length{};
  EdgeKind kind{};
};

struct TilePentagon {
  int row{};
  int col{};
  std::array<int, 5> v{};  // corner, mid, hole, hole, mid
  std::array<int, 5> side{};  // side[k] joins v[k] and v[k+1]; index into TiledComplex::sides
};

struct TiledComplex {
  PentagonSolution pentagon;
  int row_min{}, row_max{}, col_min{}, col_max{};
  int level{};  // n for T^n windows, 0 otherwise
  bool glued{};
  std::vector<VertexKey> vertices;  // representative key per vertex
  std::map<VertexKey, int> index;   // every key, including merged ones
  std::vector<TileEdge> edges;
  std::vector<TilePentagon> faces;
  /// Endpoints of each 1-cell of the surface. After gluing two a-sides may share
  /// endpoints and still be distinct cells, so topology counts these, not `edges`.
  std::vector<std::pair<int, int>> sides;
  /// Glued hole pairs as cells ((r, col), (r, col + 1)).
  std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> hole_pairs;
  /// Largest disagreement between the lengths two pentagons assign a shared side.
  Real max_length_mismatch{};

  int rows() const { return row_max - row_min + 1; }
  int cols() const { return col_max - col_min + 1; }
  int vertex(const VertexKey& key) const;
  int hole_count() const { return rows() * cols(); }
};

struct HoledSquare {
  PentagonSolution pentagon;
  Real outer_length{};  // 8b
  Real inner_length{};  // 4c
  TiledComplex complex;
};

HoledSquare build_holed_square(Real b);

/// Rectangular window of cells [row_min, row_max] x [col_min, col_max].
TiledComplex build_grid(Real b, int row_min, int row_max, int col_min, int col_max);

/// T^n: the centered 3^{n-1} x 3^{n-1} window. Throws ScaleTooLarge for n > 3.
TiledComplex build_Tn(Real b, int n);

/// Identifies the hole of every cell in an even column with the hole of the cell
/// to its right by the reflection across the column line between them. A hole
/// whose partner column lies outside the window stays a boundary circle.
TiledComplex glue_to_Rb(const TiledComplex& t);

/// Adds the five diagonals of every pentagon with their hyperbolic lengths.
void refine_diagonals(TiledComplex& t);

/// Adds an arbitrary edge, e.g. a shortcut for negative tests.
void add_edge(TiledComplex& t, int u, int v, Real length, EdgeKind kind = EdgeKind::Injected);

/// Single-source Dijkstra over all edges; unreachable vertices get +inf.
std::vector<Real> shortest_paths(const TiledComplex& t, int source);

/// Throws Unreachable when x and y lie in different components.
Real discrete_distance(const TiledComplex& t, int x, int y);

int euler_characteristic(const TiledComplex& t);
int boundary_components(const TiledComplex& t);
/// (2 - χ - boundary components) / 2, the genus of the orientable quotient.
int genus(const TiledComplex& t);
int max_degree(const TiledComplex& t);
bool connected(const TiledComplex& t);
/// The hole pairing is a fixed-point-free involution on the glued holes.
bool hole_gluing_is_involution(const TiledComplex& t);

/// Number of cell levels m with 3^{m-1} >= n + 2, so that n rows fit with one ring of margin.
int certificate_level(int n);

struct Certificate {
  Real b{};
  int n{};
  int rows{}, cols{}, level{};
  bool glued{}, refined{};
  int top_line{};  // α-corners are Corner(top_line, 0) and Corner(top_line + n, 0)
  Real distance{};
  Real expected{};  // 2nb
  bool dijkstra_equality{};
  bool bands_consistent{};   // every edge stays inside one row band
  Real min_band_crossing{};  // shortest path across a single band
  bool row_crossing_bound{};
  bool passes{};
};

/// Checks (1) Dijkstra distance between α-corners n rows apart equals 2nb within
/// 1e-9 and (2) every band between consecutive row lines costs at least 2b to
/// cross while no edge spans two bands. Throws WindowTooSmall without one ring of margin.
Certificate certify_vertical_minimizing(const TiledComplex& t, int n);

/// Builds the R_b window for n rows (optionally refined) and certifies it.
Certificate certify(Real b, int n, bool refine_diagonals = false);

nlohmann::json to_json(const Certificate& c);
std::string export_csv(const TiledComplex& t);

/// max(sup_p inf_q d(p, q), sup_q inf_p d(p, q)). Throws EmptySet on empty input.
template <class P, class Metric>
Real hausdorff_distance(const std::vector<P>& ps, const std::vector<P>& qs, Metric metric) {
  if (ps.empty() || qs.empty()) {
    throw Error(ErrorKind::EmptySet, "Hausdorff distance needs two non-empty sets");
  }
  auto directed = [&](const std::vector<P>& from, const std::vector<P>& to) {
    Real worst = 0;
    for (const P& p : from) {
      Real best = std::numeric_limits<Real>::infinity();
      for (const P& q : to) best = std::min(best, static_cast<Real>(metric(p, q)));
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::max(directed(ps, qs), directed(qs, ps));
}

}  // namespace hypqch
