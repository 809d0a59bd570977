#pragma once

// Decision tables for regular covers of closed surfaces, quasiconformal
// homogeneity admissibility, and existence of distance-minimizing geodesics.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace hypqch {

enum class Ends { Zero, One, Two, Cantor };
enum class NonplanarEnds { None, All };

std::string to_string(Ends e);
Ends ends_from_string(const std::string& s);

/// Topological type in the restricted family that regular covers produce.
/// `genus` empty means infinite genus.
struct SurfaceType {
  std::optional<int> genus;
  Ends ends{Ends::Zero};
  NonplanarEnds nonplanar_ends{NonplanarEnds::None};

  bool infinite_genus() const { return !genus.has_value(); }
  bool compact() const { return ends == Ends::Zero; }
};

/// Throws InconsistentInput unless: ends = 0 exactly for compact finite genus,
/// non-planar ends exactly when the genus is infinite, genus >= 0.
void validate(const SurfaceType& s);

enum class DeckEnds { One, Two, Infinitely };

std::string to_string(DeckEnds e);

struct DeckDescriptor {
  std::optional<int> order;  ///< finite order n, or empty for an infinite deck group
  DeckEnds end_count{DeckEnds::One};  ///< ignored for finite order

  bool finite() const { return order.has_value(); }
};

enum class CoverType {
  Compact,
  Plane,
  PuncturedPlane,
  CantorTree,
  BloomingCantorTree,
  LochNess,
  Ladder,
};

std::string to_string(CoverType t);
/// Topological type of each classification outcome (compact genus needs the cover genus).
SurfaceType surface_of(CoverType t, std::optional<int> compact_genus = std::nullopt);

struct Classification {
  CoverType type{};
  std::string rule;  ///< the statement that decided the outcome
  /// False when the combination is not excluded by any stated constraint but
  /// its realizability over this base is not established either.
  bool validated{};
  std::optional<int> genus;  ///< cover genus for compact outcomes
};

/// Regular cover of a closed surface of genus base_genus >= 1 with the given
/// deck group and planarity. Throws InconsistentInput for impossible inputs.
Classification classify_cover(int base_genus, const DeckDescriptor& deck, bool cover_planar);

/// Genus 1 + n(g - 1) of a degree-n cover of a closed genus-g surface.
int finite_cover_genus(int base_genus, int deck_order);

struct Admissibility {
  bool admissible{};
  std::string reason;
};

Admissibility qch_admissible(const SurfaceType& s);

enum class DistMinStatus { Never, Always, MetricDependent };

std::string to_string(DistMinStatus s);

struct DistMinResult {
  DistMinStatus status{};
  std::string reason;
};

DistMinResult dist_min_geodesic_status(const SurfaceType& s);

/// One row of the cover truth table: deck finiteness x end count x planarity.
struct CoverRow {
  bool finite{};
  DeckEnds end_count{};
  bool planar{};
};

/// The 12 rows (finite, infinite) x (1, 2, infinitely many ends) x (planar, non-planar).
std::vector<CoverRow> cover_truth_table();

nlohmann::json to_json(const SurfaceType& s);
SurfaceType surface_from_json(const nlohmann::json& j);
DeckDescriptor deck_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Classification& c);

}  // namespace hypqch
