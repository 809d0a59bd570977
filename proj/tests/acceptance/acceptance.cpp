// Acceptance gate: one PASS/FAIL line per criterion. Exit status is nonzero
// when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hypqch/cli.hpp"
#include "hypqch/errors.hpp"
#include "hypqch/fenchel_nielsen.hpp"
#include "hypqch/hyp_core.hpp"
#include "hypqch/pants_graph.hpp"
#include "hypqch/qch_bounds.hpp"
#include "hypqch/tiled_surface.hpp"
#include "hypqch/topo_classify.hpp"
#include "../oracles.hpp"

using namespace hypqch;

namespace {

struct Outcome {
  bool pass{};
  std::string detail;
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

Outcome pentagon_closure() {
  const auto t0 = std::chrono::steady_clock::now();
  long double worst = 0;
  for (int i = 0; i < 50; ++i) {
    const auto s = solve_pentagon(1 + 2 * Real(i) / 49).sides();
    worst = std::max(worst, oracle::hyperboloid_closure({s.begin(), s.end()}));
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return {worst < 1e-9L && secs < 1, fmt("max residual %.3g", double(worst)) + fmt(", %.3f s", secs)};
}

Outcome collar_fixed_point() {
  const Real fixed = std::fabs(collar_width(2 * asinh_one()) - asinh_one());
  // sinh(eta(l)) sinh(l/2) = 1 is symmetric in eta and l/2, so the involution is
  // l -> 2 eta(l). Plain eta(eta(l)) is not the identity; its gap is reported too.
  Real inv = 0;
  Real literal = 0;
  for (int i = 0; i <= 990; ++i) {
    const Real l = 0.1L + Real(i) / 100;
    inv = std::max(inv, std::fabs(2 * collar_width(2 * collar_width(l)) - l));
    literal = std::max(literal, std::fabs(collar_width(collar_width(l)) - l));
  }
  return {fixed < 1e-12L && inv < 1e-10L,
          fmt("fixed-point error %.3g", double(fixed)) +
              fmt(", involution l->2eta(l) error %.3g", double(inv)) +
              fmt(" (eta(eta(l)) - l reaches %.3g, not an identity)", double(literal))};
}

Outcome fn_round_trip() {
  const auto t0 = std::chrono::steady_clock::now();
  const FNCoordinates fn = build_ladder_fn(4, 1, 0);
  Real worst = 0;
  std::size_t count = 0;
  for (const auto& [label, len] : recovered_lengths(holonomy_from_fn(fn))) {
    worst = std::max(worst, std::fabs(len - 1));
    ++count;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return {worst < 1e-6L && count == 27 && secs < 1,
          std::to_string(count) + fmt(" cuffs, max error %.3g", double(worst)) + fmt(", %.3f s", secs)};
}

Outcome genus_three_quotient() {
  std::vector<FNCoordinates> inputs{build_ladder_fn(4, 1, 0)};
  inputs.push_back(build_ladder_fn(4, [](int k) {
    const Real l = k % 2 == 0 ? 1 : 2;
    return std::array<Real, 6>{l, 0, l, 0.5L, l, 1};
  }));
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(0.2, 4.0);
  for (int i = 0; i < 8; ++i) {
    const std::array<Real, 6> e{u(rng), u(rng), u(rng), u(rng), u(rng), u(rng)};
    const std::array<Real, 6> o{u(rng), u(rng), u(rng), u(rng), u(rng), u(rng)};
    inputs.push_back(build_ladder_fn(3, [&](int k) { return k % 2 == 0 ? e : o; }));
  }
  bool ok = true;
  for (const auto& fn : inputs) {
    const QuotientSurface q = quotient_by_shift(fn, 2);
    ok = ok && q.euler_characteristic == -4 && q.genus == 3 && q.boundary_components == 0 && q.connected;
  }
  return {ok, std::to_string(inputs.size()) + " period-2 ladders, chi = -4, genus 3"};
}

Outcome constant_chain() {
  const QCHParams p = make_params(1, 1, Real{0}, 0.37L);
  const SeparationBounds s = separation_bounds(p);
  const Real factor_err = std::fabs(s.hausdorff_factor - (1 / (2 * collar_width(1)) + 1));
  bool ok = s.a == 2 && s.rho_upper == 3.5L && factor_err < 1e-9L && area_window_m(p) == 4;
  int grid = 0;
  for (int i = 0; i < 10; ++i) {
    for (int j = 0; j < 10; ++j) {
      const SeparationBounds g =
          separation_bounds(make_params(1 + 3 * Real(i) / 9, 0.25L + 3.75L * Real(j) / 9, std::nullopt, 1));
      grid += g.a <= g.rho_upper && g.rho_upper <= g.b;
    }
  }
  ok = ok && grid == 100;
  return {ok, "a = 2, rho_upper = 3.5, m = " + std::to_string(area_window_m(p)) +
                  fmt(", factor error %.3g", double(factor_err)) + ", grid " + std::to_string(grid) + "/100"};
}

Outcome shortpants_collapse() {
  Real worst = 0;
  for (Real M : {0.5L, 1.0L, 2.0L, 4.0L}) {
    worst = std::max(worst, std::fabs(shortpants_step(M, 2 * asinh_one()) - 1.5L * M));
  }
  return {worst < 1e-12L, fmt("max error %.3g", double(worst))};
}

Outcome pants_graph_enumeration() {
  bool ok = true;
  std::string detail;
  for (auto [g, b] : std::vector<std::pair<int, int>>{{1, 1}, {0, 4}, {2, 0}}) {
    const int ours = static_cast<int>(enumerate_decompositions(g, b).size());
    const int theirs = oracle::count_classes(g, b);
    ok = ok && ours == theirs;
    detail += "(" + std::to_string(g) + "," + std::to_string(b) + "): " + std::to_string(ours) + "/" +
              std::to_string(theirs) + "; ";
  }
  int connected = 0;
  const auto tops = admissible_topologies();
  for (auto [g, b] : tops) connected += modular_pants_graph(g, b).connected;
  ok = ok && connected == static_cast<int>(tops.size());
  const int dmin = modular_pants_graph(2, 0, CanonOrder::Min).diameter;
  const int dmax = modular_pants_graph(2, 0, CanonOrder::Max).diameter;
  ok = ok && dmin == dmax && dmin >= 0;
  detail += "connected " + std::to_string(connected) + "/" + std::to_string(tops.size()) +
            ", genus-2 diameter " + std::to_string(dmin) + "/" + std::to_string(dmax);
  return {ok, detail};
}

Outcome tiled_certificate() {
  bool ok = true;
  double secs_n5 = 0;
  Real worst = 0;
  for (int n = 1; n <= 5; ++n) {
    const auto t0 = std::chrono::steady_clock::now();
    const Certificate plain = certify(1, n, false);
    const Certificate refined = certify(1, n, true);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (n == 5) secs_n5 = secs;
    worst = std::max({worst, std::fabs(plain.distance - 2 * n), std::fabs(refined.distance - 2 * n)});
    ok = ok && plain.passes && refined.passes;
  }
  TiledComplex t = glue_to_Rb(build_Tn(1, 3));
  const Certificate clean = certify_vertical_minimizing(t, 3);
  add_edge(t, t.vertex(VertexKey::corner(clean.top_line, 0)), t.vertex(VertexKey::corner(clean.top_line + 3, 0)),
           1);
  const bool negative_fails = !certify_vertical_minimizing(t, 3).passes;
  ok = ok && worst < 1e-9L && negative_fails && secs_n5 < 10;
  return {ok, fmt("max |d - 2n| %.3g", double(worst)) + (negative_fails ? ", shortcut rejected" : ", shortcut accepted") +
                  fmt(", n = 5 in %.3f s", secs_n5)};
}

Outcome classification_table() {
  int matched = 0;
  int total = 0;
  for (int g : {1, 2}) {
    for (const CoverRow& row : cover_truth_table()) {
      ++total;
      std::optional<CoverType> want;
      if (!row.finite && row.end_count == DeckEnds::One) want = row.planar ? CoverType::Plane : CoverType::LochNess;
      if (!row.finite && row.end_count == DeckEnds::Two) {
        if (!row.planar) want = CoverType::Ladder;
        if (row.planar && g == 1) want = CoverType::PuncturedPlane;
      }
      if (!row.finite && row.end_count == DeckEnds::Infinitely) {
        want = row.planar ? CoverType::CantorTree : CoverType::BloomingCantorTree;
      }
      if (row.finite && !row.planar) want = CoverType::Compact;
      const DeckDescriptor deck{row.finite ? std::optional<int>(2) : std::nullopt, row.end_count};
      try {
        const Classification c = classify_cover(g, deck, row.planar);
        matched += want && c.type == *want && qch_admissible(surface_of(c.type, c.genus)).admissible;
      } catch (const Error& e) {
        matched += !want && e.kind() == ErrorKind::InconsistentInput;
      }
    }
  }
  int rejected = 0;
  int finite_cases = 0;
  for (int g = 1; g <= 10; ++g) {
    for (Ends e : {Ends::One, Ends::Two, Ends::Cantor}) {
      ++finite_cases;
      rejected += !qch_admissible({g, e, NonplanarEnds::None}).admissible;
    }
  }
  return {matched == total && rejected == finite_cases,
          std::to_string(matched) + "/" + std::to_string(total) + " rows over base genus 1 and 2, " +
              std::to_string(rejected) + "/" + std::to_string(finite_cases) + " finite-genus non-compact rejected"};
}

Outcome cli_determinism() {
  const std::vector<std::vector<std::string>> cmds{
      {"pentagon", "--b", "1"},
      {"collar", "--l", "1"},
      {"fn", "--window", "4"},
      {"quotient", "--window", "4"},
      {"bounds", "--k", "1", "--l", "1", "--r", "0", "--inj-radius", "1"},
      {"bounds", "--inj-radius", "1", "--sweep", "k=1:4:0.5", "--format", "csv"},
      {"pants-graph", "--g", "2", "--b", "0", "--M", "2", "--inj-radius", "1"},
      {"tiled", "certify", "--b", "1", "--n", "3"},
      {"tiled", "export", "--n", "2", "--format", "csv"},
      {"classify", "--descriptor", R"({"base_genus": 2, "deck": {"order": "infinite", "end_count": 2}, "planar": false})"},
  };
  int identical = 0;
  for (const auto& c : cmds) {
    std::ostringstream a, b, ea, eb;
    const int ca = cli::run(c, a, ea);
    const int cb = cli::run(c, b, eb);
    identical += ca == 0 && cb == 0 && a.str() == b.str() && !a.str().empty();
  }
  return {identical == static_cast<int>(cmds.size()),
          std::to_string(identical) + "/" + std::to_string(cmds.size()) + " invocations byte-identical"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"pentagon closure", pentagon_closure},
      {"collar fixed point and involution", collar_fixed_point},
      {"FN round trip", fn_round_trip},
      {"genus-3 quotient", genus_three_quotient},
      {"constant chain", constant_chain},
      {"short-pants collapse", shortpants_collapse},
      {"pants-graph enumeration vs oracle", pants_graph_enumeration},
      {"tiled certificate", tiled_certificate},
      {"classification truth table", classification_table},
      {"CLI determinism", cli_determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::printf("%s %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str());
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
