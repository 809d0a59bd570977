#pragma once

// Independent reference implementations used by the unit and acceptance tests.
// None of these call into the library's geometry code.

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numeric>
#include <vector>

namespace oracle {

// --- SO(2,1) frames on the hyperboloid --------------------------------------
// Coordinates (x, y, t) with form x^2 + y^2 - t^2; the base frame sits at (0, 0, 1)
// facing +x.

using Mat3 = std::array<std::array<long double, 3>, 3>;

inline Mat3 mul(const Mat3& a, const Mat3& b) {
  Mat3 c{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) c[i][j] += a[i][k] * b[k][j];
  return c;
}

inline Mat3 eye() { return {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}; }

inline Mat3 boost(long double s) {
  return {{{std::cosh(s), 0, std::sinh(s)}, {0, 1, 0}, {std::sinh(s), 0, std::cosh(s)}}};
}

inline Mat3 turn(long double th) {
  return {{{std::cos(th), -std::sin(th), 0}, {std::sin(th), std::cos(th), 0}, {0, 0, 1}}};
}

/// Max-abs deviation from the identity after walking the sides with right-angle turns.
inline long double hyperboloid_closure(const std::vector<long double>& sides) {
  const long double half_pi = std::acos(-1.0L) / 2;
  Mat3 f = eye();
  for (long double s : sides) f = mul(mul(f, boost(s)), turn(half_pi));
  long double worst = 0;
  const Mat3 id = eye();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) worst = std::max(worst, std::fabs(f[i][j] - id[i][j]));
  return worst;
}

// --- Trivalent multigraphs by symmetric matrices ------------------------------
// A class is (legs[v], M) with M symmetric, M[v][v] = loops at v, and
// legs[v] + 2 M[v][v] + sum_{w != v} M[v][w] = 3.

struct Multigraph {
  std::vector<int> legs;
  std::vector<std::vector<int>> m;
};

inline bool connected(const Multigraph& g) {
  const int n = static_cast<int>(g.legs.size());
  std::vector<bool> seen(n, false);
  std::vector<int> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w = 0; w < n; ++w) {
      if (w != v && g.m[v][w] > 0 && !seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

inline bool isomorphic(const Multigraph& a, const Multigraph& b) {
  const int n = static_cast<int>(a.legs.size());
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool same = true;
    for (int i = 0; i < n && same; ++i) {
      if (a.legs[i] != b.legs[p[i]]) same = false;
      for (int j = 0; j < n && same; ++j) same = a.m[i][j] == b.m[p[i]][p[j]];
    }
    if (same) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

/// Number of isomorphism classes of connected trivalent multigraphs realizing Σ_{g,b}.
inline int count_classes(int g, int b) {
  const int n = 2 * g - 2 + b;
  std::vector<Multigraph> classes;
  // Cells of the upper triangle including the diagonal, filled in order.
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) cells.emplace_back(i, j);

  Multigraph cur{std::vector<int>(n, 0), std::vector<std::vector<int>>(n, std::vector<int>(n, 0))};
  std::function<void(int)> legs_rec;
  std::function<void(std::size_t)> cell_rec;

  auto degree = [&](int v) {
    int d = cur.legs[v] + 2 * cur.m[v][v];
    for (int w = 0; w < n; ++w)
      if (w != v) d += cur.m[v][w];
    return d;
  };

  cell_rec = [&](std::size_t idx) {
    if (idx == cells.size()) {
      for (int v = 0; v < n; ++v)
        if (degree(v) != 3) return;
      if (!connected(cur)) return;
      int edges = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) edges += cur.m[i][j];
      if (edges - n + 1 != g) return;
      for (const auto& c : classes)
        if (isomorphic(c, cur)) return;
      classes.push_back(cur);
      return;
    }
    const auto [i, j] = cells[idx];
    for (int k = 0; k <= 3; ++k) {
      cur.m[i][j] = cur.m[j][i] = k;
      if (degree(i) <= 3 && degree(j) <= 3) cell_rec(idx + 1);
    }
    cur.m[i][j] = cur.m[j][i] = 0;
  };

  legs_rec = [&](int v) {
    if (v == n) {
      if (std::accumulate(cur.legs.begin(), cur.legs.end(), 0) == b) cell_rec(0);
      return;
    }
    for (int l = 0; l <= 3; ++l) {
      cur.legs[v] = l;
      legs_rec(v + 1);
    }
    cur.legs[v] = 0;
  };
  legs_rec(0);
  return static_cast<int>(classes.size());
}

}  // namespace oracle
