#include "hypqch/tiled_surface.hpp"

#include <cmath>
#include <functional>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <tuple>

#include "hypqch/format.hpp"

namespace hypqch {

namespace {

constexpr const char* kSideNames = "TRBL";
constexpr Real kCertTol = 1e-9L;

}  // namespace

std::string VertexKey::name() const {
  const std::string ij = std::to_string(i) + "," + std::to_string(j);
  switch (kind) {
    case VertexKind::Corner: return "corner(" + ij + ")";
    case VertexKind::HMid: return "hmid(" + ij + ")";
    case VertexKind::VMid: return "vmid(" + ij + ")";
    case VertexKind::Hole: return "hole(" + ij + "," + kSideNames[side] + ")";
  }
  return "?";
}

std::string to_string(EdgeKind kind) {
  switch (kind) {
    case EdgeKind::Side: return "side";
    case EdgeKind::Diagonal: return "diagonal";
    case EdgeKind::Injected: return "injected";
  }
  return "?";
}

int TiledComplex::vertex(const VertexKey& key) const {
  auto it = index.find(key);
  if (it == index.end()) {
    throw Error(ErrorKind::InvalidArgument, "vertex " + key.name() + " is not in the complex");
  }
  return it->second;
}

namespace {

// Edge insertion with deduplication by (endpoints, kind).
class EdgeSet {
 public:
  explicit EdgeSet(TiledComplex& t) : t_(t) {
    for (std::size_t e = 0; e < t.edges.size(); ++e) remember(static_cast<int>(e));
  }

  void add(int u, int v, Real length, EdgeKind kind) {
    const auto key = std::make_tuple(std::min(u, v), std::max(u, v), static_cast<int>(kind));
    auto it = seen_.find(key);
    if (it != seen_.end()) {
      const Real gap = std::fabs(t_.edges[it->second].length - length);
      t_.max_length_mismatch = std::max(t_.max_length_mismatch, gap);
      return;
    }
    t_.edges.push_back({std::min(u, v), std::max(u, v), length, kind});
    remember(static_cast<int>(t_.edges.size()) - 1);
  }

 private:
  void remember(int e) {
    const TileEdge& ed = t_.edges[e];
    seen_[std::make_tuple(ed.u, ed.v, static_cast<int>(ed.kind))] = e;
  }

  TiledComplex& t_;
  std::map<std::tuple<int, int, int>, int> seen_;
};

int intern(TiledComplex& t, const VertexKey& key) {
  auto [it, inserted] = t.index.emplace(key, static_cast<int>(t.vertices.size()));
  if (inserted) t.vertices.push_back(key);
  return it->second;
}

std::array<std::array<VertexKey, 5>, 4> cell_pentagons(int r, int col) {
  const VertexKey tl = VertexKey::corner(r, col), tr = VertexKey::corner(r, col + 1);
  const VertexKey bl = VertexKey::corner(r + 1, col), br = VertexKey::corner(r + 1, col + 1);
  const VertexKey mt = VertexKey::hmid(r, col), mb = VertexKey::hmid(r + 1, col);
  const VertexKey ml = VertexKey::vmid(r, col), mr = VertexKey::vmid(r, col + 1);
  const VertexKey ht = VertexKey::hole(r, col, HoleSide::Top);
  const VertexKey hr = VertexKey::hole(r, col, HoleSide::Right);
  const VertexKey hb = VertexKey::hole(r, col, HoleSide::Bottom);
  const VertexKey hl = VertexKey::hole(r, col, HoleSide::Left);
  return {{{tl, mt, ht, hl, ml}, {tr, mr, hr, ht, mt}, {br, mb, hb, hr, mr}, {bl, ml, hl, hb, mb}}};
}

void add_face_sides(TiledComplex& t, EdgeSet& es, const TilePentagon& f) {
  const auto sides = t.pentagon.sides();
  // Vertex order corner, mid, hole, hole, mid walks sides b, a, c, a, b.
  const std::array<Real, 5> walk{sides[0], sides[2], sides[3], sides[4], sides[1]};
  for (int k = 0; k < 5; ++k) es.add(f.v[k], f.v[(k + 1) % 5], walk[k], EdgeKind::Side);
}

}  // namespace

TiledComplex build_grid(Real b, int row_min, int row_max, int col_min, int col_max) {
  if (row_max < row_min || col_max < col_min) {
    throw Error(ErrorKind::InvalidArgument, "empty cell window");
  }
  TiledComplex t;
  t.pentagon = solve_pentagon(b);
  t.row_min = row_min;
  t.row_max = row_max;
  t.col_min = col_min;
  t.col_max = col_max;
  EdgeSet es(t);
  std::map<std::pair<int, int>, int> side_ids;
  for (int r = row_min; r <= row_max; ++r) {
    for (int col = col_min; col <= col_max; ++col) {
      for (const auto& keys : cell_pentagons(r, col)) {
        TilePentagon f{r, col, {}, {}};
        for (int k = 0; k < 5; ++k) f.v[k] = intern(t, keys[k]);
        for (int k = 0; k < 5; ++k) {
          const std::pair<int, int> uv = std::minmax(f.v[k], f.v[(k + 1) % 5]);
          auto [it, fresh] = side_ids.emplace(uv, static_cast<int>(t.sides.size()));
          if (fresh) t.sides.push_back(uv);
          f.side[k] = it->second;
        }
        t.faces.push_back(f);
        add_face_sides(t, es, f);
      }
    }
  }
  return t;
}

HoledSquare build_holed_square(Real b) {
  HoledSquare h;
  h.complex = build_grid(b, 0, 0, 0, 0);
  h.pentagon = h.complex.pentagon;
  // Outer boundary: two b-sides per pentagon. Hole: one c-side per pentagon.
  h.outer_length = 4 * (2 * h.pentagon.b);
  h.inner_length = 4 * h.pentagon.c;
  return h;
}

TiledComplex build_Tn(Real b, int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "level n must be >= 1");
  if (n > 3) {
    throw Error(ErrorKind::ScaleTooLarge,
                "T^" + std::to_string(n) + " has " + std::to_string(n) + " levels; at most 3 are built");
  }
  int side = 1;
  for (int k = 1; k < n; ++k) side *= 3;
  const int h = (side - 1) / 2;
  TiledComplex t = build_grid(b, -h, h, -h, h);
  t.level = n;
  return t;
}

namespace {

HoleSide mirror(HoleSide s) {
  switch (s) {
    case HoleSide::Left: return HoleSide::Right;
    case HoleSide::Right: return HoleSide::Left;
    default: return s;
  }
}

int find(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

TiledComplex glue_to_Rb(const TiledComplex& t) {
  if (t.glued) throw Error(ErrorKind::InvalidArgument, "complex is already glued");
  const int n = static_cast<int>(t.vertices.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto unite = [&](int x, int y) {
    x = find(parent, x);
    y = find(parent, y);
    if (x != y) parent[std::max(x, y)] = std::min(x, y);
  };

  TiledComplex out;
  out.pentagon = t.pentagon;
  out.row_min = t.row_min;
  out.row_max = t.row_max;
  out.col_min = t.col_min;
  out.col_max = t.col_max;
  out.level = t.level;
  out.glued = true;
  out.max_length_mismatch = t.max_length_mismatch;

  for (int r = t.row_min; r <= t.row_max; ++r) {
    for (int col = t.col_min; col < t.col_max; ++col) {
      if (col % 2 != 0) continue;
      for (int s = 0; s < 4; ++s) {
        const auto side = static_cast<HoleSide>(s);
        unite(t.vertex(VertexKey::hole(r, col, side)), t.vertex(VertexKey::hole(r, col + 1, mirror(side))));
      }
      out.hole_pairs.push_back({{r, col}, {r, col + 1}});
    }
  }

  // Representatives keep their original order, so numbering stays deterministic.
  std::vector<int> remap(n, -1);
  for (int v = 0; v < n; ++v) {
    const int root = find(parent, v);
    if (root == v) {
      remap[v] = static_cast<int>(out.vertices.size());
      out.vertices.push_back(t.vertices[v]);
    }
  }
  for (int v = 0; v < n; ++v) remap[v] = remap[find(parent, v)];
  for (const auto& [key, v] : t.index) out.index[key] = remap[v];

  // Only c-sides on the hole circles are identified; everything else keeps its cell.
  std::vector<int> side_remap(t.sides.size(), -1);
  std::map<std::pair<int, int>, int> circle_ids;
  for (std::size_t e = 0; e < t.sides.size(); ++e) {
    const auto [u, v] = t.sides[e];
    const std::pair<int, int> uv = std::minmax(remap[u], remap[v]);
    if (t.vertices[u].kind == VertexKind::Hole && t.vertices[v].kind == VertexKind::Hole) {
      auto [it, fresh] = circle_ids.emplace(uv, static_cast<int>(out.sides.size()));
      if (fresh) out.sides.push_back(uv);
      side_remap[e] = it->second;
    } else {
      side_remap[e] = static_cast<int>(out.sides.size());
      out.sides.push_back(uv);
    }
  }

  EdgeSet es(out);
  for (const TilePentagon& f : t.faces) {
    TilePentagon g = f;
    for (int& v : g.v) v = remap[v];
    for (int& e : g.side) e = side_remap[e];
    out.faces.push_back(g);
  }
  for (const TileEdge& e : t.edges) es.add(remap[e.u], remap[e.v], e.length, e.kind);
  return out;
}

void refine_diagonals(TiledComplex& t) {
  const auto pos = pentagon_vertices(t.pentagon);
  EdgeSet es(t);
  for (const TilePentagon& f : t.faces) {
    for (int i = 0; i < 5; ++i) {
      for (int j = i + 2; j < 5; ++j) {
        if (i == 0 && j == 4) continue;  // adjacent
        es.add(f.v[i], f.v[j], hyperbolic_distance(pos[i], pos[j]), EdgeKind::Diagonal);
      }
    }
  }
}

void add_edge(TiledComplex& t, int u, int v, Real length, EdgeKind kind) {
  const int n = static_cast<int>(t.vertices.size());
  if (u < 0 || v < 0 || u >= n || v >= n) throw Error(ErrorKind::InvalidArgument, "vertex out of range");
  if (!(length >= 0)) throw Error(ErrorKind::NonPositiveLength, "edge length must be >= 0");
  t.edges.push_back({std::min(u, v), std::max(u, v), length, kind});
}

namespace {

std::vector<std::vector<std::pair<int, Real>>> adjacency(const TiledComplex& t) {
  std::vector<std::vector<std::pair<int, Real>>> adj(t.vertices.size());
  for (const TileEdge& e : t.edges) {
    adj[e.u].emplace_back(e.v, e.length);
    adj[e.v].emplace_back(e.u, e.length);
  }
  return adj;
}

// Multi-source Dijkstra restricted to vertices where `allowed` holds.
std::vector<Real> dijkstra(const std::vector<std::vector<std::pair<int, Real>>>& adj,
                           const std::vector<int>& sources,
                           const std::function<bool(int)>& allowed) {
  const Real inf = std::numeric_limits<Real>::infinity();
  std::vector<Real> dist(adj.size(), inf);
  using Item = std::pair<Real, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  for (int s : sources) {
    dist[s] = 0;
    pq.push({0, s});
  }
  while (!pq.empty()) {
    auto [d, v] = pq.top();
    pq.pop();
    if (d > dist[v]) continue;
    for (auto [w, len] : adj[v]) {
      if (!allowed(w)) continue;
      const Real nd = d + len;
      if (nd < dist[w]) {
        dist[w] = nd;
        pq.push({nd, w});
      }
    }
  }
  return dist;
}

}  // namespace

std::vector<Real> shortest_paths(const TiledComplex& t, int source) {
  if (source < 0 || source >= static_cast<int>(t.vertices.size())) {
    throw Error(ErrorKind::InvalidArgument, "vertex out of range");
  }
  return dijkstra(adjacency(t), {source}, [](int) { return true; });
}

Real discrete_distance(const TiledComplex& t, int x, int y) {
  const auto dist = shortest_paths(t, x);
  if (y < 0 || y >= static_cast<int>(dist.size())) {
    throw Error(ErrorKind::InvalidArgument, "vertex out of range");
  }
  if (std::isinf(dist[y])) {
    throw Error(ErrorKind::Unreachable,
                t.vertices[x].name() + " and " + t.vertices[y].name() + " lie in different components");
  }
  return dist[y];
}

namespace {

std::vector<int> side_face_counts(const TiledComplex& t) {
  std::vector<int> count(t.sides.size(), 0);
  for (const TilePentagon& f : t.faces) {
    for (int e : f.side) ++count[e];
  }
  return count;
}

}  // namespace

int euler_characteristic(const TiledComplex& t) {
  const int sides = static_cast<int>(t.sides.size());
  return static_cast<int>(t.vertices.size()) - sides + static_cast<int>(t.faces.size());
}

int boundary_components(const TiledComplex& t) {
  std::vector<int> parent(t.vertices.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::set<int> on_boundary;
  const auto counts = side_face_counts(t);
  for (std::size_t e = 0; e < counts.size(); ++e) {
    if (counts[e] != 1) continue;
    const auto [u, v] = t.sides[e];
    on_boundary.insert(u);
    on_boundary.insert(v);
    const int x = find(parent, u), y = find(parent, v);
    if (x != y) parent[std::max(x, y)] = std::min(x, y);
  }
  std::set<int> roots;
  for (int v : on_boundary) roots.insert(find(parent, v));
  return static_cast<int>(roots.size());
}

int genus(const TiledComplex& t) {
  return (2 - euler_characteristic(t) - boundary_components(t)) / 2;
}

int max_degree(const TiledComplex& t) {
  std::vector<int> deg(t.vertices.size(), 0);
  for (const TileEdge& e : t.edges) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

bool connected(const TiledComplex& t) {
  if (t.vertices.empty()) return false;
  const auto dist = shortest_paths(t, 0);
  return std::none_of(dist.begin(), dist.end(), [](Real d) { return std::isinf(d); });
}

bool hole_gluing_is_involution(const TiledComplex& t) {
  std::map<std::pair<int, int>, std::pair<int, int>> partner;
  for (const auto& [p, q] : t.hole_pairs) {
    if (p == q || partner.count(p) || partner.count(q)) return false;
    partner[p] = q;
    partner[q] = p;
  }
  for (const auto& [p, q] : partner) {
    if (partner.at(q) != p) return false;
  }
  return true;
}

int certificate_level(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "row count n must be >= 1");
  int level = 1;
  int side = 1;
  // n+2 rows, and columns -2..1 so the cells beside the line have a ring
  while (side < n + 2 || side < 4) {
    side *= 3;
    ++level;
  }
  return level;
}

namespace {

// Row bands touched by a vertex: a vertex on row line i borders bands i-1 and i;
// midpoints of vertical sides and hole vertices lie inside band r.
std::pair<int, int> bands(const VertexKey& k) {
  switch (k.kind) {
    case VertexKind::Corner:
    case VertexKind::HMid: return {k.i - 1, k.i};
    case VertexKind::VMid:
    case VertexKind::Hole: return {k.i, k.i};
  }
  return {0, 0};
}

bool on_line(const VertexKey& k, int line) {
  return (k.kind == VertexKind::Corner || k.kind == VertexKind::HMid) && k.i == line;
}

bool in_band(const VertexKey& k, int band) {
  const auto [lo, hi] = bands(k);
  return band == lo || band == hi;
}

}  // namespace

Certificate certify_vertical_minimizing(const TiledComplex& t, int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "row count n must be >= 1");
  if (t.rows() < n + 2 || t.col_min > -2 || t.col_max < 1) {
    throw Error(ErrorKind::WindowTooSmall,
                "window of " + std::to_string(t.rows()) + "x" + std::to_string(t.cols()) +
                    " cells lacks a one-cell margin around " + std::to_string(n) + " rows of α",
                "certificate valid only inside a one-ring safety margin");
  }
  Certificate c;
  c.b = t.pentagon.b;
  c.n = n;
  c.rows = t.rows();
  c.cols = t.cols();
  c.level = t.level;
  c.glued = t.glued;
  c.refined = std::any_of(t.edges.begin(), t.edges.end(),
                          [](const TileEdge& e) { return e.kind == EdgeKind::Diagonal; });
  c.top_line = t.row_min + 1 + (t.rows() - n - 2) / 2;
  c.expected = 2 * n * t.pentagon.b;

  const int x = t.vertex(VertexKey::corner(c.top_line, 0));
  const int y = t.vertex(VertexKey::corner(c.top_line + n, 0));
  c.distance = discrete_distance(t, x, y);
  c.dijkstra_equality = std::fabs(c.distance - c.expected) < kCertTol;

  c.bands_consistent = std::all_of(t.edges.begin(), t.edges.end(), [&](const TileEdge& e) {
    const auto [a0, a1] = bands(t.vertices[e.u]);
    const auto [b0, b1] = bands(t.vertices[e.v]);
    return a0 == b0 || a0 == b1 || a1 == b0 || a1 == b1;
  });

  const auto adj = adjacency(t);
  c.min_band_crossing = std::numeric_limits<Real>::infinity();
  for (int band = c.top_line; band < c.top_line + n; ++band) {
    std::vector<int> sources;
    for (int v = 0; v < static_cast<int>(t.vertices.size()); ++v) {
      if (on_line(t.vertices[v], band)) sources.push_back(v);
    }
    const auto dist = dijkstra(adj, sources, [&](int w) { return in_band(t.vertices[w], band); });
    for (int v = 0; v < static_cast<int>(t.vertices.size()); ++v) {
      if (on_line(t.vertices[v], band + 1)) c.min_band_crossing = std::min(c.min_band_crossing, dist[v]);
    }
  }
  c.row_crossing_bound = c.bands_consistent && c.min_band_crossing >= 2 * t.pentagon.b - kCertTol;
  c.passes = c.dijkstra_equality && c.row_crossing_bound;
  return c;
}

Certificate certify(Real b, int n, bool refine) {
  TiledComplex t = glue_to_Rb(build_Tn(b, certificate_level(n)));
  if (refine) refine_diagonals(t);
  return certify_vertical_minimizing(t, n);
}

nlohmann::json to_json(const Certificate& c) {
  auto d = [](Real v) { return std::isinf(v) ? -1.0 : static_cast<double>(v); };
  return {{"schema_version", kSchemaVersion},
          {"b", d(c.b)},
          {"n", c.n},
          {"window", {{"rows", c.rows}, {"cols", c.cols}, {"level", c.level}, {"glued", c.glued},
                      {"refined", c.refined}, {"top_line", c.top_line}}},
          {"distance", d(c.distance)},
          {"expected", d(c.expected)},
          {"dijkstra_equality", c.dijkstra_equality},
          {"bands_consistent", c.bands_consistent},
          {"min_band_crossing", d(c.min_band_crossing)},
          {"row_crossing_bound", c.row_crossing_bound},
          {"passes", c.passes}};
}

std::string export_csv(const TiledComplex& t) {
  std::ostringstream os;
  os << "# vertices\nid,name\n";
  for (std::size_t v = 0; v < t.vertices.size(); ++v) os << v << ",\"" << t.vertices[v].name() << "\"\n";
  os << "# edges\nu,v,length,kind\n";
  for (const TileEdge& e : t.edges) {
    os << e.u << ',' << e.v << ',' << format_sig12(static_cast<double>(e.length)) << ','
       << to_string(e.kind) << '\n';
  }
  return os.str();
}

}  // namespace hypqch
