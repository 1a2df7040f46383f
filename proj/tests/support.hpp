#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "arcdiag/coloring.hpp"
#include "arcdiag/diagram.hpp"
#include "arcdiag/layout.hpp"
#include "arcdiag/geometry.hpp"
#include "arcdiag/graph.hpp"

namespace testsupport {

using namespace arcdiag;

inline constexpr double kPi = std::numbers::pi;

inline std::vector<std::string> numbered_ids(std::size_t n, const std::string& prefix = "v") {
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < n; ++i) ids.push_back(prefix + std::to_string(i));
  return ids;
}

inline Graph make_graph(std::size_t n, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<Edge> edges;
  for (auto [u, v] : pairs) edges.push_back({static_cast<VertexIndex>(u), static_cast<VertexIndex>(v)});
  return Graph::from_indices(numbered_ids(n), edges);
}

inline Graph complete_graph(std::size_t n) {
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
  }
  return make_graph(n, pairs);
}

inline Graph cube_graph() {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < 8; ++i) {
    for (int bit = 1; bit < 8; bit <<= 1) {
      if ((i & bit) == 0) pairs.emplace_back(i, i | bit);
    }
  }
  return make_graph(8, pairs);
}

inline Graph star_graph(int k) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= k; ++i) pairs.emplace_back(0, i);
  return make_graph(static_cast<std::size_t>(k) + 1, pairs);
}

inline Drawing2D regular_star_drawing(const Graph& g, int k, double phase = 0.0) {
  std::vector<Point2> pos{{0.0, 0.0}};
  for (int i = 0; i < k; ++i) {
    const double a = phase + 2.0 * kPi * i / k;
    pos.push_back({std::cos(a), std::sin(a)});
  }
  return Drawing2D(g, pos);
}

/// Random simple graph with max degree <= dmax, trying for `target` edges.
inline Graph random_graph(std::mt19937_64& rng, std::size_t n, int dmax, std::size_t target) {
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::vector<int> deg(n, 0);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  std::vector<Edge> edges;
  for (std::size_t tries = 0; tries < 50 * target + 50 && edges.size() < target; ++tries) {
    auto u = pick(rng), v = pick(rng);
    if (u == v || deg[u] >= dmax || deg[v] >= dmax) continue;
    if (!seen.emplace(std::min(u, v), std::max(u, v)).second) continue;
    edges.push_back({u, v});
    ++deg[u];
    ++deg[v];
  }
  return Graph::from_indices(numbered_ids(n), edges);
}

inline Drawing2D random_drawing(std::mt19937_64& rng, const Graph& g) {
  std::uniform_real_distribution<double> coord(-1.0, 1.0);
  std::vector<Point2> pos;
  std::set<std::pair<double, double>> used;
  while (pos.size() < g.vertex_count()) {
    Point2 p{coord(rng), coord(rng)};
    if (used.emplace(p.x, p.y).second) pos.push_back(p);
  }
  return Drawing2D(g, pos);
}

/// Vertices on the x-axis with tiny vertical noise.
inline Drawing2D near_collinear_drawing(std::mt19937_64& rng, const Graph& g, double jitter) {
  std::uniform_real_distribution<double> noise(-jitter, jitter);
  std::vector<Point2> pos;
  for (std::size_t i = 0; i < g.vertex_count(); ++i) pos.push_back({static_cast<double>(i), noise(rng)});
  return Drawing2D(g, pos);
}

inline RotationSystem random_rotation(std::mt19937_64& rng, const Graph& g) {
  std::vector<std::vector<EdgeIndex>> order;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    auto inc = g.incident(v);
    std::vector<EdgeIndex> list(inc.begin(), inc.end());
    std::shuffle(list.begin(), list.end(), rng);
    order.push_back(list);
  }
  return RotationSystem(g, order);
}

/// Six-vertex, twelve-edge drawing with a hand-picked five-color slanted palette.
struct SlantedShowcase {
  Graph graph;
  Drawing2D drawing;
  std::vector<SlantedColor> colors;
};

inline SlantedShowcase slanted_showcase() {
  const double q = kPi / 8;  // 22.5 degrees
  const SlantedColor blue{0, 0}, magenta{q, 0}, sepia{2 * q, 0}, orange{q, q}, green{2 * q, 2 * q};
  auto g = Graph::build({"a", "b", "c", "d", "e", "f"},
                        {{"a", "b"}, {"a", "d"}, {"a", "e"}, {"a", "f"}, {"b", "c"}, {"b", "d"},
                         {"b", "e"}, {"c", "d"}, {"c", "e"}, {"d", "e"}, {"d", "f"}, {"e", "f"}});
  Drawing2D dr(g, {{0, 0}, {1, 0.4}, {1.5, -0.4}, {1.7, 1.1}, {1.8, -1.1}, {2.1, -1.6}});
  return {g, dr,
          {orange, blue, green, magenta, blue, magenta, sepia, green, magenta, orange, sepia, blue}};
}

// ---------------------------------------------------------------------------
// Coloring oracles

/// Edges within L/2 positions of e in the cyclic order at v.
inline std::set<EdgeIndex> window_oracle(const RotationSystem& rot, VertexIndex v, EdgeIndex e, int L) {
  auto around = rot.around(v);
  const int k = static_cast<int>(around.size());
  int p = 0;
  while (around[p] != e) ++p;
  std::set<EdgeIndex> out;
  if (k - 1 <= L) {
    for (auto f : around) {
      if (f != e) out.insert(f);
    }
    return out;
  }
  for (int j = -L / 2; j <= L / 2; ++j) {
    if (j != 0) out.insert(around[((p + j) % k + k) % k]);
  }
  return out;
}

inline bool localized_oracle(const Graph& g, const RotationSystem& rot, int L,
                             const std::vector<Color>& col) {
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    for (VertexIndex end : {g.edge(e).u, g.edge(e).v}) {
      for (EdgeIndex f : window_oracle(rot, end, e, L)) {
        if (col[f] == col[e]) return false;
      }
    }
  }
  return true;
}

inline bool proper_oracle(const Graph& g, const std::vector<Color>& col) {
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    for (EdgeIndex f = e + 1; f < g.edge_count(); ++f) {
      const auto& a = g.edge(e);
      const auto& b = g.edge(f);
      if ((b.touches(a.u) || b.touches(a.v)) && col[e] == col[f]) return false;
    }
  }
  return true;
}

/// Smallest palette admitting a coloring accepted by `conflict` (exhaustive).
inline int brute_force_min_colors(std::size_t m,
                                  const std::function<bool(EdgeIndex, EdgeIndex)>& conflict) {
  if (m == 0) return 0;
  std::vector<std::vector<EdgeIndex>> earlier(m);
  for (EdgeIndex e = 0; e < m; ++e) {
    for (EdgeIndex f = 0; f < e; ++f) {
      if (conflict(e, f)) earlier[e].push_back(f);
    }
  }
  for (int c = 1;; ++c) {
    std::vector<int> col(m, -1);
    std::function<bool(EdgeIndex)> place = [&](EdgeIndex e) {
      if (e == m) return true;
      // Symmetry: the first edge always takes color 0.
      const int top = e == 0 ? 1 : c;
      for (int x = 0; x < top; ++x) {
        bool ok = true;
        for (EdgeIndex f : earlier[e]) ok = ok && col[f] != x;
        if (!ok) continue;
        col[e] = x;
        if (place(e + 1)) return true;
      }
      col[e] = -1;
      return false;
    };
    if (place(0)) return c;
  }
}

inline int brute_force_chromatic_index(const Graph& g) {
  return brute_force_min_colors(g.edge_count(), [&](EdgeIndex e, EdgeIndex f) {
    const auto& a = g.edge(e);
    return g.edge(f).touches(a.u) || g.edge(f).touches(a.v);
  });
}

inline int brute_force_localized_index(const Graph& g, const RotationSystem& rot, int L) {
  return brute_force_min_colors(g.edge_count(), [&](EdgeIndex e, EdgeIndex f) {
    for (VertexIndex end : {g.edge(e).u, g.edge(e).v}) {
      if (g.edge(f).touches(end)) {
        if (window_oracle(rot, end, e, L).count(f) || window_oracle(rot, end, f, L).count(e)) {
          return true;
        }
      }
    }
    return false;
  });
}

// ---------------------------------------------------------------------------
// Geometry oracles

inline double ray_angle(Vec3 a, Vec3 b) { return std::atan2(norm(cross(a, b)), dot(a, b)); }

inline Vec3 unit_at(double azimuth, double elevation) {
  return {std::cos(elevation) * std::cos(azimuth), std::cos(elevation) * std::sin(azimuth),
          std::sin(elevation)};
}

}  // namespace testsupport
