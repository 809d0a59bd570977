#pragma once

// Pants decompositions of low-complexity surfaces up to homeomorphism, as
// trivalent dual graphs, and the modular pants graph built from elementary moves.

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "hypqch/hyp_core.hpp"

namespace hypqch {

/// Dual graph of a pants decomposition, stored as half-edges (stubs).
/// Vertex v owns stubs 3v, 3v+1, 3v+2; partner[s] is the stub glued to s, or -1
/// when s is a boundary leg. A loop pairs two stubs of the same vertex.
struct TrivalentGraph {
  std::vector<int> partner;

  int vertex_count() const { return static_cast<int>(partner.size()) / 3; }
  int leg_count() const;
  int edge_count() const;
  bool connected() const;
  /// First Betti number of the underlying graph, i.e. the genus of the surface.
  int genus() const;
  /// Stub-pairing validity: involutive, no fixed points.
  bool valid() const;

  /// Number of loops at v, multiplicity of edges between u != v, legs at v.
  int loops(int v) const;
  int multiplicity(int u, int v) const;
  int legs(int v) const;

  /// Internal edges as stub pairs (s < partner[s]), ordered by s.
  std::vector<std::pair<int, int>> edges() const;
  /// True when removing the edge disconnects the graph (the cuff separates).
  bool is_separating(int stub) const;
};

/// Builds a graph from vertex-level data: `legs[v]`, loops, and an edge list
/// over distinct vertices. Throws InvalidArgument unless every degree is 3.
TrivalentGraph make_graph(const std::vector<int>& legs, const std::vector<int>& loops,
                          const std::vector<std::pair<int, int>>& links);

/// Isomorphism-invariant key; the comparison order picks which extreme
/// labeling represents the class. Two orders give two independent canonical forms.
enum class CanonOrder { Min, Max };

using CanonicalKey = std::vector<int>;

/// Per vertex (legs, loops), then the upper-triangular multiplicity matrix,
/// optimized over all vertex permutations.
CanonicalKey canonical_key(const TrivalentGraph& g, CanonOrder order = CanonOrder::Min);
/// Graph relabeled into the canonical labeling of `order`.
TrivalentGraph canonical_form(const TrivalentGraph& g, CanonOrder order = CanonOrder::Min);

inline int complexity(int g, int b) { return 3 * g - 3 + b; }

/// Throws ComplexityTooLarge unless 1 <= 3g-3+b <= 4, InvalidArgument for g, b < 0.
void check_complexity(int g, int b);

/// Every (g, b) with 1 <= ξ <= 4.
std::vector<std::pair<int, int>> admissible_topologies();

/// All pants decompositions of Σ_{g,b} up to homeomorphism (boundary components
/// may be permuted), in canonical form, sorted by key.
std::vector<TrivalentGraph> enumerate_decompositions(int g, int b,
                                                     CanonOrder order = CanonOrder::Min);

enum class MoveKind {
  /// The cuff bounds a one-holed torus: the move returns the same class.
  Torus,
  /// The cuff lies in a four-holed sphere with boundary stubs x1 < x2 at one pants
  /// and y1 < y2 at the other. The replacement curve separates {x1, y1} from {x2, y2}.
  Pairing1,
  /// As Pairing1, separating {x1, y2} from {x2, y1}.
  Pairing2,
};

std::string to_string(MoveKind kind);

struct Move {
  int stub{};  // the cuff replaced, identified by its lower stub
  MoveKind kind{};
  TrivalentGraph result;  // canonical form
};

/// Applies every elementary move to every cuff of `g`.
std::vector<Move> elementary_moves(const TrivalentGraph& g, CanonOrder order = CanonOrder::Min);

struct ModularPantsGraph {
  int genus{};
  int boundary{};
  CanonOrder order{};
  std::vector<TrivalentGraph> vertices;
  std::vector<std::vector<int>> adjacency;  // sorted, no self-loops
  std::vector<int> loops;                   // vertices with a move returning to themselves
  bool connected{};
  int diameter{};

  int index_of(const TrivalentGraph& g) const;
};

ModularPantsGraph modular_pants_graph(int g, int b, CanonOrder order = CanonOrder::Min);

/// Hop distances from `start`, ignoring loops. Unreachable vertices get -1.
std::vector<int> bfs_distances(const ModularPantsGraph& mp, int start);

/// bound(w) = shortpants_global(M, m_inj, dist(start, w)).
std::map<int, Real> propagate_bounds(const ModularPantsGraph& mp, int start, Real M, Real m_inj);

/// "v: n1 n2 ..." per line, preceded by a comment line with (g, b).
std::string adjacency_text(const ModularPantsGraph& mp);
nlohmann::json to_json(const TrivalentGraph& g);
nlohmann::json to_json(const ModularPantsGraph& mp);

}  // namespace hypqch
