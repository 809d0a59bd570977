#include <doctest.h>

#include <optional>

#include "hypqch/errors.hpp"
#include "hypqch/topo_classify.hpp"

using namespace hypqch;

namespace {

template <class F>
std::optional<ErrorKind> error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

DeckDescriptor infinite(DeckEnds e) { return {std::nullopt, e}; }

// Expected outcome per base genus for the 12 rows, in cover_truth_table() order.
// Empty means InconsistentInput.
using Expect = std::optional<CoverType>;

std::vector<Expect> expected_rows(int base_genus) {
  const Expect none;
  return {none,
          CoverType::Compact,
          none,
          CoverType::Compact,
          none,
          CoverType::Compact,
          CoverType::Plane,
          CoverType::LochNess,
          base_genus == 1 ? Expect{CoverType::PuncturedPlane} : none,
          CoverType::Ladder,
          CoverType::CantorTree,
          CoverType::BloomingCantorTree};
}

}  // namespace

TEST_CASE("surface type validation") {
  CHECK_FALSE(error_of([] { validate({2, Ends::Zero, NonplanarEnds::None}); }));
  CHECK_FALSE(error_of([] { validate({std::nullopt, Ends::Two, NonplanarEnds::All}); }));
  CHECK(error_of([] { validate({std::nullopt, Ends::Zero, NonplanarEnds::All}); }) == ErrorKind::InconsistentInput);
  CHECK(error_of([] { validate({3, Ends::One, NonplanarEnds::All}); }) == ErrorKind::InconsistentInput);
  CHECK(error_of([] { validate({std::nullopt, Ends::One, NonplanarEnds::None}); }) == ErrorKind::InconsistentInput);
  CHECK(error_of([] { validate({-1, Ends::One, NonplanarEnds::None}); }) == ErrorKind::InconsistentInput);
  CHECK(error_of([] { ends_from_string("3"); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("cover classification truth table") {
  const auto rows = cover_truth_table();
  REQUIRE(rows.size() == 12);
  for (int g : {1, 2, 5}) {
    const auto expected = expected_rows(g);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      CAPTURE(g);
      CAPTURE(i);
      const DeckDescriptor deck = rows[i].finite ? DeckDescriptor{3, rows[i].end_count} : infinite(rows[i].end_count);
      if (!expected[i]) {
        CHECK(error_of([&] { classify_cover(g, deck, rows[i].planar); }) == ErrorKind::InconsistentInput);
        continue;
      }
      const Classification c = classify_cover(g, deck, rows[i].planar);
      CHECK(c.type == *expected[i]);
      CHECK_FALSE(c.rule.empty());
      const SurfaceType s = surface_of(c.type, c.genus);
      CHECK_FALSE(error_of([&] { validate(s); }));
      CHECK(qch_admissible(s).admissible);
      if (c.type == CoverType::Compact) CHECK(*c.genus == finite_cover_genus(g, 3));
    }
  }
}

TEST_CASE("named examples") {
  CHECK(classify_cover(1, infinite(DeckEnds::Two), true).type == CoverType::PuncturedPlane);
  CHECK(classify_cover(1, infinite(DeckEnds::Two), true).validated);
  CHECK(classify_cover(2, infinite(DeckEnds::Two), false).type == CoverType::Ladder);
  CHECK(classify_cover(2, infinite(DeckEnds::Infinitely), false).type == CoverType::BloomingCantorTree);
  CHECK_FALSE(classify_cover(1, infinite(DeckEnds::Two), false).validated);
  CHECK(error_of([] { classify_cover(2, infinite(DeckEnds::Two), true); }) == ErrorKind::InconsistentInput);
  try {
    classify_cover(2, infinite(DeckEnds::Two), true);
  } catch (const Error& e) {
    CHECK(e.rule().find("torus") != std::string::npos);
  }
  CHECK(error_of([] { classify_cover(0, DeckDescriptor{1, DeckEnds::One}, false); }) == ErrorKind::InconsistentInput);
}

TEST_CASE("finite cover genus") {
  CHECK(finite_cover_genus(2, 1) == 2);
  for (int n = 1; n < 10; ++n) CHECK(finite_cover_genus(1, n) == 1);
  CHECK(finite_cover_genus(2, 3) == 4);
  CHECK(error_of([] { finite_cover_genus(0, 2); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("QCH admissibility") {
  CHECK_FALSE(qch_admissible({5, Ends::One, NonplanarEnds::None}).admissible);
  CHECK(qch_admissible(surface_of(CoverType::Ladder)).admissible);
  CHECK(qch_admissible({0, Ends::Cantor, NonplanarEnds::None}).admissible);
  for (int g = 0; g < 6; ++g) {
    for (Ends e : {Ends::Zero, Ends::One, Ends::Two, Ends::Cantor}) {
      const SurfaceType s{g, e, NonplanarEnds::None};
      const bool expect = e == Ends::Zero || g == 0;
      CHECK(qch_admissible(s).admissible == expect);
      if (!expect) CHECK(qch_admissible(s).reason.find("closed") != std::string::npos);
    }
  }
}

TEST_CASE("distance-minimizing geodesics") {
  CHECK(dist_min_geodesic_status({2, Ends::Zero, NonplanarEnds::None}).status == DistMinStatus::Never);
  CHECK(dist_min_geodesic_status(surface_of(CoverType::Ladder)).status == DistMinStatus::Always);
  CHECK(dist_min_geodesic_status(surface_of(CoverType::LochNess)).status == DistMinStatus::MetricDependent);
  CHECK(dist_min_geodesic_status({3, Ends::One, NonplanarEnds::None}).status == DistMinStatus::MetricDependent);
  CHECK(dist_min_geodesic_status(surface_of(CoverType::Plane)).status == DistMinStatus::Always);
  std::vector<SurfaceType> all;
  for (int g = 0; g < 4; ++g)
    for (Ends e : {Ends::Zero, Ends::One, Ends::Two, Ends::Cantor}) all.push_back({g, e, NonplanarEnds::None});
  for (Ends e : {Ends::One, Ends::Two, Ends::Cantor}) all.push_back({std::nullopt, e, NonplanarEnds::All});
  for (const auto& s : all) {
    const bool always = dist_min_geodesic_status(s).status == DistMinStatus::Always;
    const bool plane = s.genus == 0 && s.ends == Ends::One;
    CHECK(always == (s.ends == Ends::Two || s.ends == Ends::Cantor || plane));
  }
}

TEST_CASE("JSON descriptors") {
  const auto s = surface_from_json(nlohmann::json::parse(R"({"genus": "infinite", "ends": 2})"));
  CHECK(s.infinite_genus());
  CHECK(s.nonplanar_ends == NonplanarEnds::All);
  const auto d = deck_from_json(nlohmann::json::parse(R"({"order": "infinite", "end_count": "infinite"})"));
  CHECK_FALSE(d.finite());
  CHECK(d.end_count == DeckEnds::Infinitely);
  CHECK(deck_from_json(nlohmann::json::parse(R"({"order": 4})")).order == 4);
  CHECK(error_of([] { surface_from_json(nlohmann::json::parse(R"({"ends": 2})")); }) == ErrorKind::InvalidArgument);
  CHECK(to_json(s).at("genus") == "infinite");
}
