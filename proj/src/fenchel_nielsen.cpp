#include "hypqch/fenchel_nielsen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "hypqch/errors.hpp"
#include "hypqch/format.hpp"

namespace hypqch {

namespace {

constexpr Real kTwistSnap = 1e-12L;

Real half_cosh(Real l) { return std::cosh(l / 2); }
Real half_sinh(Real l) { return std::sinh(l / 2); }

// Right-angled hexagon with alternate sides li/2, lj/2, lk/2: the side opposite lk/2.
Real seam_length(Real li, Real lj, Real lk) {
  return std::acosh((half_cosh(lk) + half_cosh(li) * half_cosh(lj)) /
                    (half_sinh(li) * half_sinh(lj)));
}

void check_length(Real l, const CurveLabel& label) {
  if (!(l > 0) || !std::isfinite(static_cast<double>(l))) {
    throw Error(ErrorKind::NonPositiveLength,
                "curve " + label.name() + " has non-positive length", "cuff lengths are positive");
  }
}

Real twist_length(Real theta, Real length) { return theta * length / kTwoPi; }

Real relative_gap(const MobiusMap& x, const MobiusMap& y) {
  return MobiusMap::projective_distance(x, y) / std::max<Real>(1, std::max(x.norm(), y.norm()));
}

Real angle_gap(Real x, Real y) {
  const Real d = std::fabs(x - y);
  return std::min(d, kTwoPi - d);
}

}  // namespace

void validate(const PantsCuffs& cuffs) {
  if (!(cuffs.l1 > 0) || !(cuffs.l2 > 0) || !(cuffs.l3 > 0)) {
    throw Error(ErrorKind::NonPositiveLength, "pants cuffs must have positive length",
                "cuff lengths are positive");
  }
}

Orthogeodesics pants_orthogeodesics(const PantsCuffs& cuffs) {
  validate(cuffs);
  return {seam_length(cuffs.l1, cuffs.l2, cuffs.l3), seam_length(cuffs.l1, cuffs.l3, cuffs.l2),
          seam_length(cuffs.l2, cuffs.l3, cuffs.l1)};
}

MobiusMap PantsFrames::boundary(int i) const {
  return foot[i] * MobiusMap::translation(length[i]) * foot[i].inverse();
}

PantsFrames pants_frames(const PantsCuffs& cuffs) {
  const Orthogeodesics seams = pants_orthogeodesics(cuffs);
  const std::array<Real, 6> walk{cuffs.l1 / 2, seams.d12, cuffs.l2 / 2,
                                 seams.d23,    cuffs.l3 / 2, seams.d13};
  const MobiusMap turn = MobiusMap::rotation(kPi / 2);
  PantsFrames out;
  out.length = {cuffs.l1, cuffs.l2, cuffs.l3};
  MobiusMap frame;
  for (std::size_t s = 0; s < walk.size(); ++s) {
    if (s % 2 == 0) out.foot[s / 2] = frame;
    frame = frame * MobiusMap::translation(walk[s]) * turn;
  }
  return out;
}

Real pants_relation_residual(const PantsFrames& pants) {
  return (pants.boundary(2) * pants.boundary(1) * pants.boundary(0)).distance_to_identity();
}

char to_char(CurveKind kind) {
  switch (kind) {
    case CurveKind::A: return 'a';
    case CurveKind::B: return 'b';
    case CurveKind::C: return 'c';
  }
  return '?';
}

std::string CurveLabel::name() const { return std::string(1, to_char(kind)) + "_" + std::to_string(k); }

Real FNRecord::length(CurveKind kind) const {
  switch (kind) {
    case CurveKind::A: return l_a;
    case CurveKind::B: return l_b;
    case CurveKind::C: return l_c;
  }
  return 0;
}

Real FNRecord::twist(CurveKind kind) const {
  switch (kind) {
    case CurveKind::A: return t_a;
    case CurveKind::B: return t_b;
    case CurveKind::C: return t_c;
  }
  return 0;
}

const FNRecord& FNCoordinates::at(int k) const {
  if (!contains(k)) {
    throw Error(ErrorKind::WindowTooSmall,
                "index " + std::to_string(k) + " outside window [-" + std::to_string(window) +
                    ", " + std::to_string(window) + "]");
  }
  return records[static_cast<std::size_t>(k + window)];
}

std::pair<Real, long long> normalize_angle(Real theta) {
  Real turns = std::floor(theta / kTwoPi);
  Real wrapped = theta - turns * kTwoPi;
  if (wrapped >= kTwoPi - kTwistSnap) {
    wrapped = 0;
    turns += 1;
  } else if (wrapped < kTwistSnap) {
    wrapped = 0;
  }
  return {wrapped, static_cast<long long>(turns)};
}

NormalizedFN normalize_twists(const FNCoordinates& fn) {
  NormalizedFN out{fn, {}};
  out.removed.reserve(fn.records.size());
  for (auto& r : out.fn.records) {
    auto [ta, na] = normalize_angle(r.t_a);
    auto [tb, nb] = normalize_angle(r.t_b);
    auto [tc, nc] = normalize_angle(r.t_c);
    r.t_a = ta;
    r.t_b = tb;
    r.t_c = tc;
    out.removed.push_back({na, nb, nc});
  }
  return out;
}

FNCoordinates build_ladder_fn(int window, const FNGenerator& generator) {
  if (window < 1) {
    throw Error(ErrorKind::InvalidArgument, "ladder window size must be >= 1");
  }
  FNCoordinates fn;
  fn.window = window;
  for (int k = -window; k <= window; ++k) {
    const auto v = generator(k);
    FNRecord r{k, v[0], v[1], v[2], v[3], v[4], v[5]};
    check_length(r.l_a, {CurveKind::A, k});
    check_length(r.l_b, {CurveKind::B, k});
    check_length(r.l_c, {CurveKind::C, k});
    fn.records.push_back(r);
  }
  return normalize_twists(fn).fn;
}

FNCoordinates build_ladder_fn(int window, Real length, Real twist) {
  return build_ladder_fn(window, [=](int) {
    return std::array<Real, 6>{length, twist, length, twist, length, twist};
  });
}

namespace {

Real curve_length(const FNCoordinates& fn, const CurveLabel& c) { return fn.at(c.k).length(c.kind); }
Real curve_twist(const FNCoordinates& fn, const CurveLabel& c) { return fn.at(c.k).twist(c.kind); }

PlacedPants make_local(const FNCoordinates& fn, int k, int which) {
  PlacedPants p;
  p.k = k;
  p.which = which;
  if (which == 1) {
    p.cuffs = {CurveLabel{CurveKind::C, k}, CurveLabel{CurveKind::A, k},
               CurveLabel{CurveKind::B, k}};
  } else {
    p.cuffs = {CurveLabel{CurveKind::A, k}, CurveLabel{CurveKind::B, k},
               CurveLabel{CurveKind::C, k + 1}};
  }
  const PantsFrames frames = pants_frames({curve_length(fn, p.cuffs[0]),
                                           curve_length(fn, p.cuffs[1]),
                                           curve_length(fn, p.cuffs[2])});
  p.foot = frames.foot;
  for (int i = 0; i < 3; ++i) p.boundary[i] = frames.boundary(i);
  return p;
}

void refresh_boundary(const FNCoordinates& fn, PlacedPants& p, const HolonomyOptions& options) {
  for (int i = 0; i < 3; ++i) {
    const Real l = curve_length(fn, p.cuffs[i]);
    p.boundary[i] = p.foot[i] * MobiusMap::translation(l) * p.foot[i].inverse();
    if (!(p.boundary[i].norm() <= options.overflow_guard)) {
      throw Error(ErrorKind::NumericalInstability,
                  "holonomy of " + p.cuffs[i].name() + " exceeds the overflow guard (" +
                      std::to_string(static_cast<double>(options.overflow_guard)) + ")");
    }
  }
}

// The isometry taking q's local frame at slot qs onto p's cuff at slot ps, shifted
// by the twist and turned around so that q lies on the other side of the cuff.
MobiusMap gluing_map(const FNCoordinates& fn, const PlacedPants& p, int ps, const MobiusMap& q_foot) {
  const CurveLabel& cuff = p.cuffs[ps];
  const Real shift = twist_length(curve_twist(fn, cuff), curve_length(fn, cuff));
  return p.foot[ps] * MobiusMap::translation(shift) * MobiusMap::rotation(kPi) * q_foot.inverse();
}

PlacedPants attach(const FNCoordinates& fn, const PlacedPants& p, int ps, int k, int which, int qs,
                   const HolonomyOptions& options) {
  PlacedPants q = make_local(fn, k, which);
  const MobiusMap h = gluing_map(fn, p, ps, q.foot[qs]);
  for (auto& f : q.foot) f = h * f;
  refresh_boundary(fn, q, options);
  return q;
}

}  // namespace

Holonomy holonomy_from_fn(const FNCoordinates& fn, const HolonomyOptions& options) {
  const int n = fn.window;
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "ladder window size must be >= 1");

  Holonomy out;
  std::map<std::pair<int, int>, std::size_t> index;
  auto place = [&](PlacedPants p) -> const PlacedPants& {
    index[{p.k, p.which}] = out.pants.size();
    out.pants.push_back(std::move(p));
    return out.pants.back();
  };
  auto get = [&](int k, int which) -> const PlacedPants& { return out.pants[index.at({k, which})]; };

  {
    PlacedPants base = make_local(fn, 0, 1);
    refresh_boundary(fn, base, options);
    place(std::move(base));
  }
  for (int k = 0; k < n; ++k) {
    place(attach(fn, get(k, 1), 1, k, 2, 0, options));          // along a_k
    place(attach(fn, get(k, 2), 2, k + 1, 1, 0, options));      // along c_{k+1}
  }
  for (int k = -1; k >= -n; --k) {
    place(attach(fn, get(k + 1, 1), 0, k, 2, 2, options));      // along c_{k+1}
    place(attach(fn, get(k, 2), 0, k, 1, 1, options));          // along a_k
  }

  for (int k = -n; k < n; ++k) {
    const PlacedPants& p1 = get(k, 1);
    const PlacedPants& p2 = get(k, 2);
    out.rung_gluing[k] = gluing_map(fn, p1, 2, p2.foot[1]);
  }
  for (int k = -n; k <= n; ++k) {
    const PlacedPants& p1 = get(k, 1);
    // det is 1 by construction; recomputing it from entries near the guard
    // cancels catastrophically, so only the sign is fixed here.
    for (int i = 0; i < 3; ++i) {
      const MobiusMap& m = p1.boundary[i];
      out.curves[p1.cuffs[i]] = m.trace() < 0 ? -m : m;
    }
  }
  return out;
}

Real gluing_residual(const Holonomy& holonomy) {
  std::map<CurveLabel, std::vector<std::pair<const PlacedPants*, int>>> sides;
  for (const auto& p : holonomy.pants) {
    for (int i = 0; i < 3; ++i) sides[p.cuffs[i]].push_back({&p, i});
  }
  Real worst = 0;
  for (const auto& [label, occ] : sides) {
    if (occ.size() != 2) continue;
    auto [first, fs] = occ[0];
    auto [second, ss] = occ[1];
    if (label.kind == CurveKind::B) {
      if (first->which != 1) std::swap(first, second), std::swap(fs, ss);
      const MobiusMap& s = holonomy.rung_gluing.at(label.k);
      const MobiusMap moved = s * second->boundary[ss] * s.inverse();
      worst = std::max(worst, relative_gap(moved, first->boundary[fs].inverse()));
    } else {
      worst = std::max(worst, relative_gap(second->boundary[ss], first->boundary[fs].inverse()));
    }
  }
  return worst;
}

std::map<CurveLabel, Real> recovered_lengths(const Holonomy& holonomy) {
  std::map<CurveLabel, Real> out;
  for (const auto& [label, m] : holonomy.curves) out[label] = geodesic_length_from_trace(m.trace());
  return out;
}

QuotientSurface quotient_by_shift(const FNCoordinates& fn, int period, Real tolerance) {
  if (period < 1) throw Error(ErrorKind::InvalidArgument, "shift period must be >= 1");
  if (2 * fn.window < period || fn.window < period - 1) {
    throw Error(ErrorKind::WindowTooSmall,
                "window [-" + std::to_string(fn.window) + ", " + std::to_string(fn.window) +
                    "] cannot witness invariance under a shift by " + std::to_string(period));
  }
  for (int k = -fn.window; k + period <= fn.window; ++k) {
    const FNRecord& x = fn.at(k);
    const FNRecord& y = fn.at(k + period);
    for (CurveKind kind : {CurveKind::A, CurveKind::B, CurveKind::C}) {
      const Real dl = std::fabs(x.length(kind) - y.length(kind));
      const Real dt = angle_gap(x.twist(kind), y.twist(kind));
      if (dl > tolerance || dt > tolerance) {
        throw Error(ErrorKind::NotShiftInvariant,
                    "coordinates of " + CurveLabel{kind, k}.name() + " and " +
                        CurveLabel{kind, k + period}.name() + " differ (first offending index k = " +
                        std::to_string(k) + ")",
                    "shift invariance of the Fenchel-Nielsen coordinates");
      }
    }
  }

  QuotientSurface q;
  q.period = period;
  auto cuff_index = [&](CurveKind kind, int k) {
    const int r = ((k % period) + period) % period;
    return 3 * r + static_cast<int>(kind);
  };
  for (int k = 0; k < period; ++k) {
    const FNRecord& r = fn.at(k);
    for (CurveKind kind : {CurveKind::A, CurveKind::B, CurveKind::C}) {
      q.cuffs.push_back({CurveLabel{kind, k}, r.length(kind), r.twist(kind)});
    }
  }
  for (int k = 0; k < period; ++k) {
    q.pants.push_back({k, 1, {cuff_index(CurveKind::C, k), cuff_index(CurveKind::A, k),
                              cuff_index(CurveKind::B, k)}});
    q.pants.push_back({k, 2, {cuff_index(CurveKind::A, k), cuff_index(CurveKind::B, k),
                              cuff_index(CurveKind::C, k + 1)}});
  }

  // Each pants contributes χ = -1; gluing along circles adds nothing.
  q.euler_characteristic = -static_cast<int>(q.pants.size());
  std::vector<int> incidence(q.cuffs.size(), 0);
  std::vector<int> parent(q.pants.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<int> first_owner(q.cuffs.size(), -1);
  for (std::size_t p = 0; p < q.pants.size(); ++p) {
    for (int c : q.pants[p].cuffs) {
      ++incidence[c];
      if (first_owner[c] < 0) {
        first_owner[c] = static_cast<int>(p);
      } else {
        parent[find(static_cast<int>(p))] = find(first_owner[c]);
      }
    }
  }
  q.boundary_components = static_cast<int>(std::count(incidence.begin(), incidence.end(), 1));
  q.connected = true;
  for (std::size_t p = 0; p < q.pants.size(); ++p) q.connected &= find(static_cast<int>(p)) == find(0);
  q.genus = (2 - q.euler_characteristic - q.boundary_components) / 2;
  return q;
}

namespace {

FNCoordinates assemble(std::vector<FNRecord> records) {
  if (records.empty()) throw Error(ErrorKind::InvalidArgument, "no Fenchel-Nielsen records");
  std::sort(records.begin(), records.end(),
            [](const FNRecord& x, const FNRecord& y) { return x.k < y.k; });
  const int window = -records.front().k;
  if (window < 1 || records.back().k != window ||
      records.size() != static_cast<std::size_t>(2 * window + 1)) {
    throw Error(ErrorKind::InvalidArgument,
                "records must cover a symmetric window [-N, N] with N >= 1 and no gaps");
  }
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (records[i].k != -window + static_cast<int>(i)) {
      throw Error(ErrorKind::InvalidArgument, "duplicate or missing index in records");
    }
  }
  return build_ladder_fn(window, [&](int k) {
    const FNRecord& r = records[static_cast<std::size_t>(k + window)];
    return std::array<Real, 6>{r.l_a, r.t_a, r.l_b, r.t_b, r.l_c, r.t_c};
  });
}

std::string real_text(Real v) {
  std::ostringstream os;
  os.precision(17);
  os << static_cast<double>(v);
  return os.str();
}

}  // namespace

std::string fn_to_csv(const FNCoordinates& fn) {
  std::ostringstream os;
  os << "# " << kTwistConvention << "\n";
  os << "k,l_a,t_a,l_b,t_b,l_c,t_c\n";
  for (const auto& r : fn.records) {
    os << r.k << ',' << real_text(r.l_a) << ',' << real_text(r.t_a) << ',' << real_text(r.l_b)
       << ',' << real_text(r.t_b) << ',' << real_text(r.l_c) << ',' << real_text(r.t_c) << '\n';
  }
  return os.str();
}

FNCoordinates fn_from_csv(std::string_view text) {
  std::vector<FNRecord> records;
  std::istringstream is{std::string(text)};
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#' || line.rfind("k,", 0) == 0) continue;
    std::istringstream row(line);
    std::array<double, 6> v{};
    int k = 0;
    char sep = 0;
    row >> k;
    for (double& x : v) {
      if (!(row >> sep >> x) || sep != ',') {
        throw Error(ErrorKind::InvalidArgument, "malformed CSV record: '" + line + "'");
      }
    }
    records.push_back({k, v[0], v[1], v[2], v[3], v[4], v[5]});
  }
  return assemble(std::move(records));
}

nlohmann::json fn_to_json(const FNCoordinates& fn) {
  nlohmann::json records = nlohmann::json::array();
  for (const auto& r : fn.records) {
    records.push_back({{"k", r.k},
                       {"l_a", static_cast<double>(r.l_a)},
                       {"t_a", static_cast<double>(r.t_a)},
                       {"l_b", static_cast<double>(r.l_b)},
                       {"t_b", static_cast<double>(r.t_b)},
                       {"l_c", static_cast<double>(r.l_c)},
                       {"t_c", static_cast<double>(r.t_c)}});
  }
  return {{"schema_version", kSchemaVersion},
          {"twist_convention", std::string(kTwistConvention)},
          {"window", fn.window},
          {"records", records}};
}

FNCoordinates fn_from_json(const nlohmann::json& doc) {
  const nlohmann::json& arr = doc.is_array() ? doc : doc.at("records");
  std::vector<FNRecord> records;
  try {
    for (const auto& r : arr) {
      records.push_back({r.at("k").get<int>(), r.at("l_a").get<double>(), r.at("t_a").get<double>(),
                         r.at("l_b").get<double>(), r.at("t_b").get<double>(),
                         r.at("l_c").get<double>(), r.at("t_c").get<double>()});
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, std::string("malformed JSON record: ") + e.what());
  }
  return assemble(std::move(records));
}

nlohmann::json to_json(const QuotientSurface& q) {
  nlohmann::json cuffs = nlohmann::json::array();
  for (const auto& c : q.cuffs) {
    cuffs.push_back({{"curve", c.label.name()},
                     {"length", static_cast<double>(c.length)},
                     {"twist", static_cast<double>(c.twist)}});
  }
  nlohmann::json pants = nlohmann::json::array();
  for (const auto& p : q.pants) {
    nlohmann::json names = nlohmann::json::array();
    for (int c : p.cuffs) names.push_back(q.cuffs[static_cast<std::size_t>(c)].label.name());
    pants.push_back({{"pants", "P_" + std::to_string(p.k) + "^" + std::to_string(p.which)},
                     {"cuffs", names}});
  }
  return {{"period", q.period},
          {"cuffs", cuffs},
          {"pants", pants},
          {"euler_characteristic", q.euler_characteristic},
          {"boundary_components", q.boundary_components},
          {"connected", q.connected},
          {"genus", q.genus},
          {"twist_convention", std::string(kTwistConvention)}};
}

}  // namespace hypqch
