#include "arcdiag/graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>

namespace arcdiag {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::DuplicateVertex: return "DuplicateVertex";
    case ErrorCode::InvalidDrawing: return "InvalidDrawing";
    case ErrorCode::CoincidentDirections: return "CoincidentDirections";
    case ErrorCode::NoAngles: return "NoAngles";
    case ErrorCode::OddL: return "OddL";
    case ErrorCode::MissingRotation: return "MissingRotation";
    case ErrorCode::InvalidColoring: return "InvalidColoring";
    case ErrorCode::DegenerateChord: return "DegenerateChord";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::TooManyColors: return "TooManyColors";
    case ErrorCode::ZeroResolutionDrawing: return "ZeroResolutionDrawing";
    case ErrorCode::BoundViolation: return "BoundViolation";
    case ErrorCode::PerturbationFailed: return "PerturbationFailed";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
  }
  return "Unknown";
}

Graph Graph::build(std::vector<std::string> vertexIds,
                   const std::vector<std::pair<std::string, std::string>>& edgePairs) {
  std::unordered_map<std::string, VertexIndex> index;
  for (VertexIndex i = 0; i < vertexIds.size(); ++i) {
    if (!index.emplace(vertexIds[i], i).second) {
      throw Error(ErrorCode::DuplicateVertex, "vertex '" + vertexIds[i] + "' listed twice");
    }
  }
  std::vector<Edge> edges;
  edges.reserve(edgePairs.size());
  for (const auto& [a, b] : edgePairs) {
    auto ia = index.find(a);
    if (ia == index.end()) throw Error(ErrorCode::UnknownVertex, "unknown vertex '" + a + "'");
    auto ib = index.find(b);
    if (ib == index.end()) throw Error(ErrorCode::UnknownVertex, "unknown vertex '" + b + "'");
    edges.push_back({ia->second, ib->second});
  }
  return from_indices(std::move(vertexIds), edges);
}

Graph Graph::from_indices(std::vector<std::string> vertexIds, const std::vector<Edge>& edges) {
  Graph g;
  g.ids_ = std::move(vertexIds);
  for (VertexIndex i = 0; i < g.ids_.size(); ++i) {
    if (!g.index_.emplace(g.ids_[i], i).second) {
      throw Error(ErrorCode::DuplicateVertex, "vertex '" + g.ids_[i] + "' listed twice");
    }
  }
  g.adjacency_.resize(g.ids_.size());
  std::set<std::pair<VertexIndex, VertexIndex>> seen;
  const auto n = g.ids_.size();
  for (const auto& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw Error(ErrorCode::UnknownVertex, "edge references vertex index out of range");
    }
    if (e.u == e.v) throw Error(ErrorCode::SelfLoop, "self-loop at '" + g.ids_[e.u] + "'");
    if (!seen.emplace(std::min(e.u, e.v), std::max(e.u, e.v)).second) {
      throw Error(ErrorCode::DuplicateEdge,
                  "edge (" + g.ids_[e.u] + "," + g.ids_[e.v] + ") listed twice");
    }
    const EdgeIndex idx = g.edges_.size();
    g.edges_.push_back(e);
    g.adjacency_[e.u].push_back(idx);
    g.adjacency_[e.v].push_back(idx);
  }
  for (const auto& adj : g.adjacency_) g.max_degree_ = std::max(g.max_degree_, adj.size());
  return g;
}

std::optional<VertexIndex> Graph::find(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<VertexIndex> Graph::neighbors(VertexIndex v) const {
  std::vector<VertexIndex> out;
  out.reserve(degree(v));
  for (EdgeIndex e : incident(v)) out.push_back(edges_[e].other(v));
  return out;
}

bool Graph::has_edge(VertexIndex a, VertexIndex b) const {
  const VertexIndex probe = degree(a) <= degree(b) ? a : b;
  const VertexIndex target = probe == a ? b : a;
  for (EdgeIndex e : incident(probe)) {
    if (edges_[e].other(probe) == target) return true;
  }
  return false;
}

std::string Graph::describe_edge(EdgeIndex e) const {
  const auto& ed = edge(e);
  return "(" + ids_[ed.u] + "," + ids_[ed.v] + ")";
}

Drawing2D::Drawing2D(const Graph& g, std::vector<Point2> positions)
    : positions_(std::move(positions)) {
  if (positions_.size() != g.vertex_count()) {
    throw Error(ErrorCode::InvalidDrawing, "drawing has " + std::to_string(positions_.size()) +
                                               " positions for " +
                                               std::to_string(g.vertex_count()) + " vertices");
  }
  std::set<std::pair<double, double>> seen;
  for (VertexIndex v = 0; v < positions_.size(); ++v) {
    const auto& p = positions_[v];
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw Error(ErrorCode::InvalidDrawing, "non-finite position for '" + g.id(v) + "'");
    }
    if (!seen.emplace(p.x, p.y).second) {
      throw Error(ErrorCode::InvalidDrawing, "position of '" + g.id(v) + "' is not distinct");
    }
  }
}

double Drawing2D::direction(const Graph& g, EdgeIndex e, VertexIndex from) const {
  const auto& p = positions_.at(from);
  const auto& q = positions_.at(g.edge(e).other(from));
  return std::atan2(q.y - p.y, q.x - p.x);
}

RotationSystem::RotationSystem(const Graph& g, std::vector<std::vector<EdgeIndex>> order)
    : order_(std::move(order)) {
  if (order_.size() != g.vertex_count()) {
    throw Error(ErrorCode::MissingRotation, "rotation does not cover every vertex");
  }
  for (VertexIndex v = 0; v < order_.size(); ++v) {
    std::vector<EdgeIndex> got = order_[v];
    std::vector<EdgeIndex> want(g.incident(v).begin(), g.incident(v).end());
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    if (got != want) {
      throw Error(ErrorCode::MissingRotation,
                  "rotation at '" + g.id(v) + "' is not a permutation of its incident edges");
    }
  }
}

Graph square_graph(const Graph& g) {
  const auto n = g.vertex_count();
  std::vector<Edge> edges;
  std::vector<std::size_t> mark(n, n);
  for (VertexIndex u = 0; u < n; ++u) {
    std::vector<VertexIndex> reach;
    mark[u] = u;
    for (VertexIndex w : g.neighbors(u)) {
      if (mark[w] != u) {
        mark[w] = u;
        reach.push_back(w);
      }
      for (VertexIndex x : g.neighbors(w)) {
        if (mark[x] != u) {
          mark[x] = u;
          reach.push_back(x);
        }
      }
    }
    std::sort(reach.begin(), reach.end());
    for (VertexIndex w : reach) {
      if (w > u) edges.push_back({u, w});
    }
  }
  return Graph::from_indices(g.ids(), edges);
}

RotationSystem rotation_from_drawing(const Graph& g, const Drawing2D& drawing) {
  if (drawing.size() != g.vertex_count()) {
    throw Error(ErrorCode::InvalidDrawing, "drawing does not match graph");
  }
  std::vector<std::vector<EdgeIndex>> order(g.vertex_count());
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    std::vector<std::pair<double, EdgeIndex>> dirs;
    for (EdgeIndex e : g.incident(v)) dirs.emplace_back(drawing.direction(g, e, v), e);
    std::sort(dirs.begin(), dirs.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    for (std::size_t i = 1; i < dirs.size(); ++i) {
      if (dirs[i].first == dirs[i - 1].first) {
        throw Error(ErrorCode::CoincidentDirections,
                    "edges " + g.describe_edge(dirs[i - 1].second) + " and " +
                        g.describe_edge(dirs[i].second) + " leave '" + g.id(v) +
                        "' in the same direction");
      }
    }
    for (const auto& [angle, e] : dirs) order[v].push_back(e);
  }
  return RotationSystem(g, std::move(order));
}

double direction_gap(double a, double b) {
  double diff = std::fmod(std::abs(a - b), 2.0 * std::numbers::pi);
  return diff > std::numbers::pi ? 2.0 * std::numbers::pi - diff : diff;
}

double angular_resolution_2d(const Graph& g, const Drawing2D& drawing) {
  double best = std::numeric_limits<double>::infinity();
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) < 2) continue;
    std::vector<double> dirs;
    for (EdgeIndex e : g.incident(v)) dirs.push_back(drawing.direction(g, e, v));
    std::sort(dirs.begin(), dirs.end());
    for (std::size_t i = 0; i < dirs.size(); ++i) {
      const double next = i + 1 < dirs.size() ? dirs[i + 1] : dirs[0] + 2.0 * std::numbers::pi;
      best = std::min(best, std::min(next - dirs[i], direction_gap(next, dirs[i])));
    }
  }
  if (!std::isfinite(best)) {
    throw Error(ErrorCode::NoAngles, "no vertex has two incident edges");
  }
  return best;
}

}  // namespace arcdiag
