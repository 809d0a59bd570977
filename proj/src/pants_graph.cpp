#include "hypqch/pants_graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "hypqch/errors.hpp"
#include "hypqch/format.hpp"
#include "hypqch/qch_bounds.hpp"

namespace hypqch {

int TrivalentGraph::leg_count() const {
  return static_cast<int>(std::count(partner.begin(), partner.end(), -1));
}

int TrivalentGraph::edge_count() const {
  return (static_cast<int>(partner.size()) - leg_count()) / 2;
}

bool TrivalentGraph::valid() const {
  if (partner.size() % 3 != 0) return false;
  const int n = static_cast<int>(partner.size());
  for (int s = 0; s < n; ++s) {
    const int t = partner[s];
    if (t == -1) continue;
    if (t < 0 || t >= n || t == s || partner[t] != s) return false;
  }
  return true;
}

int TrivalentGraph::loops(int v) const {
  int out = 0;
  for (int s = 3 * v; s < 3 * v + 3; ++s) {
    if (partner[s] > s && partner[s] / 3 == v) ++out;
  }
  return out;
}

int TrivalentGraph::multiplicity(int u, int v) const {
  int out = 0;
  for (int s = 3 * u; s < 3 * u + 3; ++s) {
    if (partner[s] >= 0 && partner[s] / 3 == v) ++out;
  }
  return u == v ? out / 2 : out;
}

int TrivalentGraph::legs(int v) const {
  int out = 0;
  for (int s = 3 * v; s < 3 * v + 3; ++s) out += partner[s] == -1;
  return out;
}

std::vector<std::pair<int, int>> TrivalentGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int s = 0; s < static_cast<int>(partner.size()); ++s) {
    if (partner[s] > s) out.emplace_back(s, partner[s]);
  }
  return out;
}

namespace {

// Vertices reachable from `from` without crossing the edge through stub `cut`.
std::vector<bool> reach(const TrivalentGraph& g, int from, int cut) {
  const int cut_partner = cut >= 0 ? g.partner[cut] : -2;
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<int> stack{from};
  seen[from] = true;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int s = 3 * v; s < 3 * v + 3; ++s) {
      if (s == cut || s == cut_partner || g.partner[s] < 0) continue;
      const int w = g.partner[s] / 3;
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

}  // namespace

bool TrivalentGraph::connected() const {
  if (vertex_count() == 0) return false;
  const auto seen = reach(*this, 0, -1);
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

int TrivalentGraph::genus() const { return edge_count() - vertex_count() + 1; }

bool TrivalentGraph::is_separating(int stub) const {
  const int other = partner[stub];
  if (other < 0) throw Error(ErrorKind::InvalidArgument, "stub is a boundary leg");
  if (other / 3 == stub / 3) return false;
  return !reach(*this, stub / 3, stub)[other / 3];
}

TrivalentGraph make_graph(const std::vector<int>& legs, const std::vector<int>& loops,
                          const std::vector<std::pair<int, int>>& links) {
  const int n = static_cast<int>(legs.size());
  if (static_cast<int>(loops.size()) != n) {
    throw Error(ErrorKind::InvalidArgument, "legs and loops must have one entry per vertex");
  }
  std::vector<int> degree(n, 0);
  for (int v = 0; v < n; ++v) degree[v] = legs[v] + 2 * loops[v];
  for (auto [u, v] : links) {
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) {
      throw Error(ErrorKind::InvalidArgument, "link must join two distinct vertices");
    }
    ++degree[u];
    ++degree[v];
  }
  for (int v = 0; v < n; ++v) {
    if (degree[v] != 3) {
      throw Error(ErrorKind::InvalidArgument,
                  "vertex " + std::to_string(v) + " has degree " + std::to_string(degree[v]));
    }
  }
  TrivalentGraph g;
  g.partner.assign(3 * n, -1);
  std::vector<int> next(n);
  for (int v = 0; v < n; ++v) next[v] = 3 * v + legs[v];
  for (int v = 0; v < n; ++v) {
    for (int i = 0; i < loops[v]; ++i) {
      const int s = next[v]++;
      const int t = next[v]++;
      g.partner[s] = t;
      g.partner[t] = s;
    }
  }
  for (auto [u, v] : links) {
    const int s = next[u]++;
    const int t = next[v]++;
    g.partner[s] = t;
    g.partner[t] = s;
  }
  return g;
}

namespace {

CanonicalKey key_for(const TrivalentGraph& g, const std::vector<int>& perm) {
  const int n = g.vertex_count();
  CanonicalKey key;
  key.reserve(1 + 2 * n + n * (n - 1) / 2);
  key.push_back(n);
  for (int i = 0; i < n; ++i) {
    key.push_back(g.legs(perm[i]));
    key.push_back(g.loops(perm[i]));
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) key.push_back(g.multiplicity(perm[i], perm[j]));
  }
  return key;
}

std::vector<int> best_permutation(const TrivalentGraph& g, CanonOrder order) {
  std::vector<int> perm(g.vertex_count());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best = perm;
  CanonicalKey best_key = key_for(g, perm);
  while (std::next_permutation(perm.begin(), perm.end())) {
    CanonicalKey k = key_for(g, perm);
    const bool better = order == CanonOrder::Min ? k < best_key : k > best_key;
    if (better) {
      best_key = std::move(k);
      best = perm;
    }
  }
  return best;
}

TrivalentGraph relabel(const TrivalentGraph& g, const std::vector<int>& perm) {
  const int n = g.vertex_count();
  std::vector<int> legs(n), loops(n);
  std::vector<std::pair<int, int>> links;
  for (int i = 0; i < n; ++i) {
    legs[i] = g.legs(perm[i]);
    loops[i] = g.loops(perm[i]);
    for (int j = i + 1; j < n; ++j) {
      for (int m = g.multiplicity(perm[i], perm[j]); m > 0; --m) links.emplace_back(i, j);
    }
  }
  return make_graph(legs, loops, links);
}

}  // namespace

CanonicalKey canonical_key(const TrivalentGraph& g, CanonOrder order) {
  return key_for(g, best_permutation(g, order));
}

TrivalentGraph canonical_form(const TrivalentGraph& g, CanonOrder order) {
  return relabel(g, best_permutation(g, order));
}

void check_complexity(int g, int b) {
  if (g < 0 || b < 0) throw Error(ErrorKind::InvalidArgument, "genus and boundary count must be >= 0");
  const int xi = complexity(g, b);
  if (xi < 1 || xi > 4) {
    throw Error(ErrorKind::ComplexityTooLarge,
                "complexity 3g-3+b = " + std::to_string(xi) + " outside the supported range [1, 4]",
                "topological complexity xi = 3g-3+b");
  }
}

std::vector<std::pair<int, int>> admissible_topologies() {
  std::vector<std::pair<int, int>> out;
  for (int g = 0; g <= 2; ++g) {
    for (int b = 0; b <= 7; ++b) {
      const int xi = complexity(g, b);
      if (xi >= 1 && xi <= 4) out.emplace_back(g, b);
    }
  }
  return out;
}

namespace {

// All perfect matchings of the free stubs, extending `partner` in place.
void match_stubs(std::vector<int>& partner, std::vector<int>& free_stubs,
                 const std::function<void()>& emit) {
  auto first = std::find_if(free_stubs.begin(), free_stubs.end(), [&](int s) { return partner[s] == -2; });
  if (first == free_stubs.end()) {
    emit();
    return;
  }
  const int s = *first;
  for (auto it = std::next(first); it != free_stubs.end(); ++it) {
    const int t = *it;
    if (partner[t] != -2) continue;
    partner[s] = t;
    partner[t] = s;
    match_stubs(partner, free_stubs, emit);
    partner[s] = -2;
    partner[t] = -2;
  }
}

// Non-increasing leg counts per vertex, each in [0, 3], summing to b.
void leg_distributions(int vertices, int remaining, int cap, std::vector<int>& cur,
                       std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == vertices) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  for (int l = std::min(cap, remaining); l >= 0; --l) {
    cur.push_back(l);
    leg_distributions(vertices, remaining - l, l, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<TrivalentGraph> enumerate_decompositions(int g, int b, CanonOrder order) {
  check_complexity(g, b);
  const int n = 2 * g - 2 + b;
  std::vector<std::vector<int>> dists;
  std::vector<int> cur;
  leg_distributions(n, b, 3, cur, dists);

  std::map<CanonicalKey, TrivalentGraph> classes;
  for (const auto& legs : dists) {
    std::vector<int> partner(3 * n, -2);
    std::vector<int> free_stubs;
    for (int v = 0; v < n; ++v) {
      for (int i = 0; i < 3; ++i) {
        if (i < legs[v]) {
          partner[3 * v + i] = -1;
        } else {
          free_stubs.push_back(3 * v + i);
        }
      }
    }
    match_stubs(partner, free_stubs, [&] {
      TrivalentGraph graph{partner};
      if (!graph.connected() || graph.genus() != g) return;
      CanonicalKey key = canonical_key(graph, order);
      if (!classes.count(key)) classes.emplace(std::move(key), canonical_form(graph, order));
    });
  }
  std::vector<TrivalentGraph> out;
  out.reserve(classes.size());
  for (auto& [key, graph] : classes) out.push_back(std::move(graph));
  return out;
}

std::string to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::Torus: return "torus";
    case MoveKind::Pairing1: return "pairing1";
    case MoveKind::Pairing2: return "pairing2";
  }
  return "unknown";
}

namespace {

// Rewires the two pants on either side of the cuff (s, t) so that the new pants
// hold stubs (p0, p1, s) and (q0, q1, t).
TrivalentGraph rewire(const TrivalentGraph& g, int s, int t, int p0, int p1, int q0, int q1) {
  const int u = s / 3;
  const int v = t / 3;
  std::vector<int> pos(g.partner.size());
  std::iota(pos.begin(), pos.end(), 0);
  pos[p0] = 3 * u;
  pos[p1] = 3 * u + 1;
  pos[s] = 3 * u + 2;
  pos[q0] = 3 * v;
  pos[q1] = 3 * v + 1;
  pos[t] = 3 * v + 2;
  TrivalentGraph out;
  out.partner.assign(g.partner.size(), -1);
  for (std::size_t a = 0; a < g.partner.size(); ++a) {
    out.partner[pos[a]] = g.partner[a] < 0 ? -1 : pos[g.partner[a]];
  }
  return out;
}

}  // namespace

std::vector<Move> elementary_moves(const TrivalentGraph& g, CanonOrder order) {
  std::vector<Move> out;
  for (auto [s, t] : g.edges()) {
    const int u = s / 3;
    const int v = t / 3;
    if (u == v) {
      out.push_back({s, MoveKind::Torus, canonical_form(g, order)});
      continue;
    }
    std::vector<int> xs, ys;
    for (int i = 3 * u; i < 3 * u + 3; ++i) {
      if (i != s) xs.push_back(i);
    }
    for (int i = 3 * v; i < 3 * v + 3; ++i) {
      if (i != t) ys.push_back(i);
    }
    out.push_back({s, MoveKind::Pairing1,
                   canonical_form(rewire(g, s, t, xs[0], ys[0], xs[1], ys[1]), order)});
    out.push_back({s, MoveKind::Pairing2,
                   canonical_form(rewire(g, s, t, xs[0], ys[1], xs[1], ys[0]), order)});
  }
  return out;
}

int ModularPantsGraph::index_of(const TrivalentGraph& g) const {
  const CanonicalKey key = canonical_key(g, order);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (canonical_key(vertices[i], order) == key) return static_cast<int>(i);
  }
  return -1;
}

std::vector<int> bfs_distances(const ModularPantsGraph& mp, int start) {
  if (start < 0 || start >= static_cast<int>(mp.vertices.size())) {
    throw Error(ErrorKind::InvalidArgument, "start vertex out of range");
  }
  std::vector<int> dist(mp.vertices.size(), -1);
  std::queue<int> q;
  dist[start] = 0;
  q.push(start);
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    for (int w : mp.adjacency[v]) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
    }
  }
  return dist;
}

ModularPantsGraph modular_pants_graph(int g, int b, CanonOrder order) {
  ModularPantsGraph mp;
  mp.genus = g;
  mp.boundary = b;
  mp.order = order;
  mp.vertices = enumerate_decompositions(g, b, order);
  std::map<CanonicalKey, int> index;
  for (std::size_t i = 0; i < mp.vertices.size(); ++i) {
    index[canonical_key(mp.vertices[i], order)] = static_cast<int>(i);
  }
  mp.adjacency.resize(mp.vertices.size());
  for (std::size_t i = 0; i < mp.vertices.size(); ++i) {
    std::set<int> nbrs;
    bool loop = false;
    for (const Move& m : elementary_moves(mp.vertices[i], order)) {
      auto it = index.find(canonical_key(m.result, order));
      if (it == index.end()) {
        throw Error(ErrorKind::InvalidArgument, "elementary move left the enumerated class set");
      }
      if (it->second == static_cast<int>(i)) {
        loop = true;
      } else {
        nbrs.insert(it->second);
      }
    }
    mp.adjacency[i].assign(nbrs.begin(), nbrs.end());
    if (loop) mp.loops.push_back(static_cast<int>(i));
  }
  mp.connected = true;
  mp.diameter = 0;
  for (std::size_t i = 0; i < mp.vertices.size(); ++i) {
    for (int d : bfs_distances(mp, static_cast<int>(i))) {
      if (d < 0) {
        mp.connected = false;
      } else {
        mp.diameter = std::max(mp.diameter, d);
      }
    }
  }
  if (!mp.connected) mp.diameter = -1;
  return mp;
}

std::map<int, Real> propagate_bounds(const ModularPantsGraph& mp, int start, Real M, Real m_inj) {
  const std::vector<int> dist = bfs_distances(mp, start);
  std::map<int, Real> out;
  for (std::size_t w = 0; w < dist.size(); ++w) {
    if (dist[w] >= 0) out[static_cast<int>(w)] = shortpants_global(M, m_inj, dist[w]);
  }
  return out;
}

std::string adjacency_text(const ModularPantsGraph& mp) {
  std::ostringstream os;
  os << "# modular pants graph g=" << mp.genus << " b=" << mp.boundary
     << " vertices=" << mp.vertices.size() << '\n';
  for (std::size_t v = 0; v < mp.adjacency.size(); ++v) {
    os << v << ':';
    for (int w : mp.adjacency[v]) os << ' ' << w;
    os << '\n';
  }
  return os.str();
}

nlohmann::json to_json(const TrivalentGraph& g) {
  nlohmann::json legs = nlohmann::json::array();
  nlohmann::json loops = nlohmann::json::array();
  for (int v = 0; v < g.vertex_count(); ++v) {
    legs.push_back(g.legs(v));
    loops.push_back(g.loops(v));
  }
  nlohmann::json cuffs = nlohmann::json::array();
  for (auto [s, t] : g.edges()) {
    cuffs.push_back({{"pants", {s / 3, t / 3}}, {"separating", g.is_separating(s)}});
  }
  return {{"pants", g.vertex_count()}, {"legs", legs}, {"loops", loops}, {"cuffs", cuffs}};
}

nlohmann::json to_json(const ModularPantsGraph& mp) {
  nlohmann::json verts = nlohmann::json::array();
  for (const auto& v : mp.vertices) verts.push_back(to_json(v));
  return {{"schema_version", kSchemaVersion},
          {"genus", mp.genus},
          {"boundary", mp.boundary},
          {"complexity", complexity(mp.genus, mp.boundary)},
          {"vertices", verts},
          {"adjacency", mp.adjacency},
          {"loops", mp.loops},
          {"connected", mp.connected},
          {"diameter", mp.diameter}};
}

}  // namespace hypqch
