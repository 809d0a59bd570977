#include <doctest.h>

#include <cmath>
#include <random>

#include "hypqch/errors.hpp"
#include "hypqch/fenchel_nielsen.hpp"

using namespace hypqch;

namespace {

constexpr Real kSeam111 = 2.86869514161982188L;  // mpmath, 30 digits

template <class F>
ErrorKind error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::InvalidArgument;
}

Real rel_gap(const MobiusMap& x, const MobiusMap& y) {
  return MobiusMap::projective_distance(x, y) / std::max<Real>(1, std::max(x.norm(), y.norm()));
}

Real max_length_error(const FNCoordinates& fn, const Holonomy& h) {
  Real worst = 0;
  for (const auto& [label, len] : recovered_lengths(h)) {
    worst = std::max(worst, std::fabs(len - fn.at(label.k).length(label.kind)));
  }
  return worst;
}

}  // namespace

TEST_CASE("pants orthogeodesics") {
  const Orthogeodesics d = pants_orthogeodesics({1, 1, 1});
  CHECK(std::fabs(d.d12 - kSeam111) < 1e-15L);
  CHECK(std::fabs(d.d13 - kSeam111) < 1e-15L);
  CHECK(std::fabs(d.d23 - kSeam111) < 1e-15L);
  const Orthogeodesics e = pants_orthogeodesics({0.7L, 2.2L, 2.2L});
  CHECK(std::fabs(e.d12 - e.d13) < 1e-15L);
  // The seam opposite cuff 1 grows with l1: cosh d23 is affine in cosh(l1/2).
  Real prev = pants_orthogeodesics({0.5L, 1, 1.5L}).d23;
  for (Real l1 = 1; l1 <= 12; l1 += 0.5L) {
    const Real cur = pants_orthogeodesics({l1, 1, 1.5L}).d23;
    CHECK(cur > prev);
    prev = cur;
  }
  CHECK(error_of([] { pants_orthogeodesics({1, 0, 1}); }) == ErrorKind::NonPositiveLength);
}

TEST_CASE("pants frames close up as a hexagon") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> len(0.2, 4.0);
  for (int i = 0; i < 100; ++i) {
    const PantsCuffs c{len(rng), len(rng), len(rng)};
    const PantsFrames f = pants_frames(c);
    CHECK(pants_relation_residual(f) < 1e-8L);
    for (int j = 0; j < 3; ++j) {
      CHECK(std::fabs(geodesic_length_from_trace(f.boundary(j).trace()) - f.length[j]) < 1e-12L);
    }
  }
}

TEST_CASE("twist normalization") {
  auto [w0, n0] = normalize_angle(5 * kPi);
  CHECK(std::fabs(w0 - kPi) < 1e-15L);
  CHECK(n0 == 2);
  auto [w1, n1] = normalize_angle(0);
  CHECK(w1 == 0);
  CHECK(n1 == 0);
  auto [w2, n2] = normalize_angle(7);
  CHECK(std::fabs(w2 - 0.716814692820413523L) < 1e-15L);
  CHECK(n2 == 1);
  auto [w3, n3] = normalize_angle(-kPi / 2);
  CHECK(std::fabs(w3 - 3 * kPi / 2) < 1e-15L);
  CHECK(n3 == -1);
  CHECK(normalize_angle(kTwoPi).first == 0);

  const FNCoordinates fn = build_ladder_fn(2, 1, kTwoPi);
  for (const auto& r : fn.records) CHECK(r.t_a == 0);
  const FNCoordinates neg = build_ladder_fn(1, 1, -kPi / 2);
  CHECK(std::fabs(neg.at(0).t_c - 3 * kPi / 2) < 1e-15L);

  const FNCoordinates raw = build_ladder_fn(2, [](int k) {
    return std::array<Real, 6>{1, Real(k), 1, 0.5L, 2, 9};
  });
  const NormalizedFN once = normalize_twists(raw);
  const NormalizedFN twice = normalize_twists(once.fn);
  for (std::size_t i = 0; i < raw.records.size(); ++i) {
    CHECK(once.fn.records[i].t_a == twice.fn.records[i].t_a);
    CHECK(once.fn.records[i].t_c == twice.fn.records[i].t_c);
    CHECK(twice.removed[i] == std::array<long long, 3>{0, 0, 0});
  }
}

TEST_CASE("ladder validation") {
  CHECK(error_of([] { build_ladder_fn(0, 1, 0); }) == ErrorKind::InvalidArgument);
  CHECK(error_of([] { build_ladder_fn(2, -1, 0); }) == ErrorKind::NonPositiveLength);
  const FNCoordinates fn = build_ladder_fn(2, 1, 0);
  CHECK(error_of([&] { fn.at(3); }) == ErrorKind::WindowTooSmall);
  CHECK(fn.records.size() == 5);
}

TEST_CASE("holonomy recovers the cuff lengths") {
  SUBCASE("model surface, window 2") {
    const FNCoordinates fn = build_ladder_fn(2, 1, 0);
    const Holonomy h = holonomy_from_fn(fn);
    CHECK(h.curves.size() == 15);
    CHECK(max_length_error(fn, h) < 1e-6L);
    CHECK(gluing_residual(h) < 1e-8L);
  }
  SUBCASE("doubling c_0") {
    const FNCoordinates fn = build_ladder_fn(2, [](int k) {
      return std::array<Real, 6>{1, 0, 1, 0, k == 0 ? 2.0L : 1.0L, 0};
    });
    const auto lengths = recovered_lengths(holonomy_from_fn(fn));
    for (const auto& [label, len] : lengths) {
      const Real expected = (label.kind == CurveKind::C && label.k == 0) ? 2 : 1;
      CHECK(std::fabs(len - expected) < 1e-9L);
    }
  }
  SUBCASE("twisting c_0 keeps lengths") {
    const FNCoordinates fn = build_ladder_fn(2, [](int k) {
      return std::array<Real, 6>{1, 0, 1, 0, 1, k == 0 ? 2.1L : 0.0L};
    });
    CHECK(max_length_error(fn, holonomy_from_fn(fn)) < 1e-9L);
  }
  SUBCASE("random coordinates") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> len(0.2, 4.0);
    std::uniform_real_distribution<double> tw(0.0, 2 * 3.141592653589793);
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<std::array<Real, 6>> table;
      for (int k = -2; k <= 2; ++k) {
        table.push_back({len(rng), tw(rng), len(rng), tw(rng), len(rng), tw(rng)});
      }
      const FNCoordinates fn = build_ladder_fn(2, [&](int k) { return table[k + 2]; });
      const Holonomy h = holonomy_from_fn(fn);
      CHECK(max_length_error(fn, h) < 1e-6L);
      CHECK(gluing_residual(h) < 1e-6L);
      // Placed frames reach entries near 1e10; rounding in the triple product
      // scales with the product of the norms.
      for (const auto& p : h.pants) {
        const Real scale = p.boundary[0].norm() * p.boundary[1].norm() * p.boundary[2].norm();
        CHECK(rel_gap(p.boundary[2] * p.boundary[1] * p.boundary[0], MobiusMap::identity()) <
              1e-16L * scale);
      }
    }
  }
}

// A full left twist about c_1 conjugates everything beyond c_1 by the holonomy of c_1.
// The builder wraps twists, so the twisted record is assembled by hand.
TEST_CASE("a Dehn twist about c_1 conjugates the far side") {
  auto make = [](Real twist_c1) {
    FNCoordinates fn;
    fn.window = 2;
    for (int k = -2; k <= 2; ++k) {
      fn.records.push_back({k, 1.1L, 0.3L, 0.9L, 1.2L, 1.3L, k == 1 ? twist_c1 : 0.4L});
    }
    return fn;
  };
  const Holonomy base = holonomy_from_fn(make(0.4L));
  const FNCoordinates raw = make(0.4L + kTwoPi);
  const Holonomy twisted = holonomy_from_fn(raw);
  const MobiusMap x = base.curves.at({CurveKind::C, 1});
  int far = 0;
  for (const auto& [label, m] : base.curves) {
    const MobiusMap& t = twisted.curves.at(label);
    if (label.k >= 1) {
      const Real gap = std::min(rel_gap(t, x * m * x.inverse()), rel_gap(t, x.inverse() * m * x));
      CHECK(gap < 1e-6L);
      if (label.kind != CurveKind::C || label.k != 1) {
        CHECK(rel_gap(t, m) > 1e-3L);
        ++far;
      }
    } else {
      CHECK(rel_gap(t, m) < 1e-6L);
    }
  }
  CHECK(far == 5);

  // Normalizing removes exactly that twist and gives back the base holonomy.
  const NormalizedFN n = normalize_twists(raw);
  CHECK(n.removed[3][2] == 1);
  const Holonomy undone = holonomy_from_fn(n.fn);
  for (const auto& [label, m] : base.curves) CHECK(rel_gap(undone.curves.at(label), m) < 1e-9L);
}

TEST_CASE("holonomy overflow guard") {
  HolonomyOptions tight;
  tight.overflow_guard = 10;
  CHECK(error_of([&] { holonomy_from_fn(build_ladder_fn(4, 1, 0), tight); }) ==
        ErrorKind::NumericalInstability);
}

TEST_CASE("quotient by the shift") {
  const QuotientSurface q = quotient_by_shift(build_ladder_fn(4, 1, 0));
  CHECK(q.euler_characteristic == -4);
  CHECK(q.genus == 3);
  CHECK(q.boundary_components == 0);
  CHECK(q.connected);
  CHECK(q.pants.size() == 4);
  CHECK(q.cuffs.size() == 6);

  const FNCoordinates alt = build_ladder_fn(4, [](int k) {
    const Real l = (k % 2 == 0) ? 1 : 2;
    return std::array<Real, 6>{l, 0, l, 0, l, 0};
  });
  CHECK(quotient_by_shift(alt).genus == 3);

  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.2, 4.0);
  for (int trial = 0; trial < 10; ++trial) {
    const std::array<Real, 6> even{u(rng), u(rng), u(rng), u(rng), u(rng), u(rng)};
    const std::array<Real, 6> odd{u(rng), u(rng), u(rng), u(rng), u(rng), u(rng)};
    const FNCoordinates fn = build_ladder_fn(3, [&](int k) { return k % 2 == 0 ? even : odd; });
    const QuotientSurface s = quotient_by_shift(fn);
    CHECK(s.genus == 3);
    CHECK(s.euler_characteristic == -4);
  }

  const FNCoordinates p3 = build_ladder_fn(4, [](int k) {
    const Real l = 1 + ((k % 3) + 3) % 3;
    return std::array<Real, 6>{l, 0, l, 0, l, 0};
  });
  CHECK(error_of([&] { quotient_by_shift(p3); }) == ErrorKind::NotShiftInvariant);
  CHECK(quotient_by_shift(p3, 3).genus == 4);
}

TEST_CASE("serialization round trips") {
  const FNCoordinates fn = build_ladder_fn(2, [](int k) {
    return std::array<Real, 6>{1 + 0.1L * k + 0.3L, 0.25L, 2, 1, 0.5L, 6};
  });
  const FNCoordinates from_csv = fn_from_csv(fn_to_csv(fn));
  const FNCoordinates from_json = fn_from_json(fn_to_json(fn));
  REQUIRE(from_csv.records.size() == fn.records.size());
  REQUIRE(from_json.records.size() == fn.records.size());
  for (std::size_t i = 0; i < fn.records.size(); ++i) {
    CHECK(std::fabs(from_csv.records[i].l_a - fn.records[i].l_a) < 1e-15L);
    CHECK(std::fabs(from_csv.records[i].t_c - fn.records[i].t_c) < 1e-15L);
    CHECK(std::fabs(from_json.records[i].l_a - fn.records[i].l_a) < 1e-15L);
    CHECK(from_json.records[i].k == fn.records[i].k);
  }
  CHECK(fn_to_csv(fn).rfind("# ", 0) == 0);
  CHECK(error_of([] { fn_from_csv("k,l_a\n0,1\n"); }) == ErrorKind::InvalidArgument);
}
