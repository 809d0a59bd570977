#include "hypqch/topo_classify.hpp"

#include "hypqch/errors.hpp"

namespace hypqch {

namespace {

constexpr const char* kHopf = "Hopf: a finitely generated group has 0, 1, 2 or a Cantor set of ends";
constexpr const char* kNonplanar = "a non-planar regular cover has every end non-planar";
constexpr const char* kTorus = "the torus is the only closed surface regularly covered by the punctured plane";
constexpr const char* kFiniteGenus = "positive finite genus QCH surfaces are exactly the closed ones";

[[noreturn]] void inconsistent(const std::string& msg, const std::string& rule) {
  throw Error(ErrorKind::InconsistentInput, msg, rule);
}

}  // namespace

std::string to_string(Ends e) {
  switch (e) {
    case Ends::Zero: return "0";
    case Ends::One: return "1";
    case Ends::Two: return "2";
    case Ends::Cantor: return "cantor";
  }
  return "?";
}

Ends ends_from_string(const std::string& s) {
  if (s == "0") return Ends::Zero;
  if (s == "1") return Ends::One;
  if (s == "2") return Ends::Two;
  if (s == "cantor") return Ends::Cantor;
  throw Error(ErrorKind::InvalidArgument, "end space must be one of 0, 1, 2, cantor; got '" + s + "'",
              kHopf);
}

void validate(const SurfaceType& s) {
  if (s.genus && *s.genus < 0) inconsistent("genus must be >= 0", "genus is a natural number");
  if (s.compact() && s.infinite_genus()) {
    inconsistent("a compact surface has finite genus", "a closed surface has finite genus");
  }
  if (s.infinite_genus() && s.nonplanar_ends != NonplanarEnds::All) {
    inconsistent("infinite genus needs non-planar ends", "genus accumulates only at non-planar ends");
  }
  if (!s.infinite_genus() && s.nonplanar_ends == NonplanarEnds::All) {
    inconsistent("non-planar ends need infinite genus", "a non-planar end carries infinite genus");
  }
}

std::string to_string(DeckEnds e) {
  switch (e) {
    case DeckEnds::One: return "1";
    case DeckEnds::Two: return "2";
    case DeckEnds::Infinitely: return "infinite";
  }
  return "?";
}

std::string to_string(CoverType t) {
  switch (t) {
    case CoverType::Compact: return "compact";
    case CoverType::Plane: return "plane";
    case CoverType::PuncturedPlane: return "punctured_plane";
    case CoverType::CantorTree: return "cantor_tree";
    case CoverType::BloomingCantorTree: return "blooming_cantor_tree";
    case CoverType::LochNess: return "loch_ness";
    case CoverType::Ladder: return "ladder";
  }
  return "?";
}

SurfaceType surface_of(CoverType t, std::optional<int> compact_genus) {
  switch (t) {
    case CoverType::Compact: return {compact_genus.value_or(0), Ends::Zero, NonplanarEnds::None};
    case CoverType::Plane: return {0, Ends::One, NonplanarEnds::None};
    case CoverType::PuncturedPlane: return {0, Ends::Two, NonplanarEnds::None};
    case CoverType::CantorTree: return {0, Ends::Cantor, NonplanarEnds::None};
    case CoverType::BloomingCantorTree: return {std::nullopt, Ends::Cantor, NonplanarEnds::All};
    case CoverType::LochNess: return {std::nullopt, Ends::One, NonplanarEnds::All};
    case CoverType::Ladder: return {std::nullopt, Ends::Two, NonplanarEnds::All};
  }
  return {};
}

int finite_cover_genus(int base_genus, int deck_order) {
  if (base_genus < 1) throw Error(ErrorKind::InvalidArgument, "base genus must be >= 1");
  if (deck_order < 1) throw Error(ErrorKind::InvalidArgument, "deck order must be >= 1");
  return 1 + deck_order * (base_genus - 1);
}

Classification classify_cover(int base_genus, const DeckDescriptor& deck, bool cover_planar) {
  if (base_genus < 1) {
    inconsistent("base genus must be >= 1", "the base is a closed surface of positive genus");
  }
  Classification c;
  if (deck.finite()) {
    if (*deck.order < 1) inconsistent("deck order must be >= 1", "deck group order");
    if (cover_planar) {
      inconsistent("a finite cover of a positive-genus closed surface has positive genus",
                   "Euler characteristic is multiplicative in finite covers");
    }
    c.type = CoverType::Compact;
    c.genus = finite_cover_genus(base_genus, *deck.order);
    c.rule = "finite deck group: the cover is compact";
    c.validated = true;
    return c;
  }
  c.validated = true;
  switch (deck.end_count) {
    case DeckEnds::One:
      c.type = cover_planar ? CoverType::Plane : CoverType::LochNess;
      break;
    case DeckEnds::Two:
      if (cover_planar && base_genus != 1) {
        inconsistent("a planar two-ended cover is the punctured plane, which covers only the torus",
                     kTorus);
      }
      c.type = cover_planar ? CoverType::PuncturedPlane : CoverType::Ladder;
      break;
    case DeckEnds::Infinitely:
      c.type = cover_planar ? CoverType::CantorTree : CoverType::BloomingCantorTree;
      break;
  }
  if (cover_planar) {
    c.rule = std::string(kHopf) + "; planar cover";
  } else {
    c.rule = std::string(kHopf) + "; " + kNonplanar;
  }
  if (c.type == CoverType::PuncturedPlane) c.rule = kTorus;
  // Over the torus only the universal cover and the punctured plane are stated.
  if (base_genus == 1 && c.type != CoverType::Plane && c.type != CoverType::PuncturedPlane) {
    c.validated = false;
  }
  return c;
}

Admissibility qch_admissible(const SurfaceType& s) {
  validate(s);
  if (s.compact()) return {true, "closed surface"};
  if (s.genus && *s.genus > 0) return {false, kFiniteGenus};
  return {true, "non-compact type in the list of six topological QCH types"};
}

std::string to_string(DistMinStatus s) {
  switch (s) {
    case DistMinStatus::Never: return "never";
    case DistMinStatus::Always: return "always";
    case DistMinStatus::MetricDependent: return "metric_dependent";
  }
  return "?";
}

DistMinResult dist_min_geodesic_status(const SurfaceType& s) {
  validate(s);
  switch (s.ends) {
    case Ends::Zero:
      return {DistMinStatus::Never, "distance-minimizing geodesics are proper; a compact surface has none"};
    case Ends::Two:
    case Ends::Cantor:
      return {DistMinStatus::Always, "at least two ends: a distance-minimizing geodesic exists"};
    case Ends::One:
      if (s.genus && *s.genus == 0) {
        return {DistMinStatus::Always,
                "the only complete hyperbolic plane is the disk, where every geodesic minimizes"};
      }
      return {DistMinStatus::MetricDependent,
              "one non-planar surface end: some complete hyperbolic structures have such a "
              "geodesic and some do not"};
  }
  return {};
}

std::vector<CoverRow> cover_truth_table() {
  std::vector<CoverRow> rows;
  for (bool finite : {true, false}) {
    for (DeckEnds e : {DeckEnds::One, DeckEnds::Two, DeckEnds::Infinitely}) {
      for (bool planar : {true, false}) rows.push_back({finite, e, planar});
    }
  }
  return rows;
}

nlohmann::json to_json(const SurfaceType& s) {
  nlohmann::json g = s.genus ? nlohmann::json(*s.genus) : nlohmann::json("infinite");
  return {{"genus", g},
          {"ends", to_string(s.ends)},
          {"nonplanar_ends", s.nonplanar_ends == NonplanarEnds::All ? "all" : "none"}};
}

SurfaceType surface_from_json(const nlohmann::json& j) {
  try {
    SurfaceType s;
    const auto& g = j.at("genus");
    if (g.is_string()) {
      if (g.get<std::string>() != "infinite") {
        throw Error(ErrorKind::InvalidArgument, "genus must be an integer or \"infinite\"");
      }
    } else {
      s.genus = g.get<int>();
    }
    const auto& e = j.at("ends");
    s.ends = ends_from_string(e.is_number() ? std::to_string(e.get<int>()) : e.get<std::string>());
    const std::string np = j.value("nonplanar_ends", s.genus ? "none" : "all");
    if (np == "all") {
      s.nonplanar_ends = NonplanarEnds::All;
    } else if (np == "none") {
      s.nonplanar_ends = NonplanarEnds::None;
    } else {
      throw Error(ErrorKind::InvalidArgument, "nonplanar_ends must be \"none\" or \"all\"");
    }
    validate(s);
    return s;
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorKind::InvalidArgument, std::string("malformed surface descriptor: ") + ex.what());
  }
}

DeckDescriptor deck_from_json(const nlohmann::json& j) {
  try {
    DeckDescriptor d;
    const auto& order = j.at("order");
    if (order.is_string()) {
      if (order.get<std::string>() != "infinite") {
        throw Error(ErrorKind::InvalidArgument, "deck order must be an integer or \"infinite\"");
      }
      const auto& e = j.at("end_count");
      const std::string ends = e.is_number() ? std::to_string(e.get<int>()) : e.get<std::string>();
      if (ends == "1") {
        d.end_count = DeckEnds::One;
      } else if (ends == "2") {
        d.end_count = DeckEnds::Two;
      } else if (ends == "infinite" || ends == "cantor") {
        d.end_count = DeckEnds::Infinitely;
      } else {
        throw Error(ErrorKind::InvalidArgument, "end_count must be 1, 2 or \"infinite\"", kHopf);
      }
    } else {
      d.order = order.get<int>();
    }
    return d;
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorKind::InvalidArgument, std::string("malformed deck descriptor: ") + ex.what());
  }
}

nlohmann::json to_json(const Classification& c) {
  nlohmann::json out = {{"type", to_string(c.type)}, {"rule", c.rule}, {"validated", c.validated}};
  if (c.genus) out["genus"] = *c.genus;
  return out;
}

}  // namespace hypqch
