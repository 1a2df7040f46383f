#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "arcdiag/error.hpp"

namespace arcdiag {

using VertexIndex = std::size_t;
using EdgeIndex = std::size_t;

struct Edge {
  VertexIndex u;
  VertexIndex v;

  VertexIndex other(VertexIndex w) const { return w == u ? v : u; }
  bool touches(VertexIndex w) const { return w == u || w == v; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Simple undirected graph. Vertices carry opaque string ids; vertex and edge
/// identity is the position in the construction input and never changes.
class Graph {
 public:
  Graph() = default;

  /// Throws Error{DuplicateVertex, UnknownVertex, SelfLoop, DuplicateEdge}.
  static Graph build(std::vector<std::string> vertexIds,
                     const std::vector<std::pair<std::string, std::string>>& edgePairs);
  static Graph from_indices(std::vector<std::string> vertexIds,
                            const std::vector<Edge>& edges);

  std::size_t vertex_count() const { return ids_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::string& id(VertexIndex v) const { return ids_.at(v); }
  const std::vector<std::string>& ids() const { return ids_; }
  std::optional<VertexIndex> find(const std::string& id) const;

  const Edge& edge(EdgeIndex e) const { return edges_.at(e); }
  const std::vector<Edge>& edges() const { return edges_; }

  /// Incident edge indices of `v`, in edge input order.
  std::span<const EdgeIndex> incident(VertexIndex v) const { return adjacency_.at(v); }
  std::size_t degree(VertexIndex v) const { return adjacency_.at(v).size(); }
  std::size_t max_degree() const { return max_degree_; }

  /// Neighbor vertices of `v`, in edge input order.
  std::vector<VertexIndex> neighbors(VertexIndex v) const;
  bool has_edge(VertexIndex a, VertexIndex b) const;
  /// Endpoint pair of `e` rendered with vertex ids, e.g. "(a,b)".
  std::string describe_edge(EdgeIndex e) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.ids_ == b.ids_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<std::string> ids_;
  std::unordered_map<std::string, VertexIndex> index_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeIndex>> adjacency_;
  std::size_t max_degree_ = 0;
};

struct Point2 {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const Point2&, const Point2&) = default;
};

/// Straight-line drawing in the base plane; one position per vertex index.
class Drawing2D {
 public:
  Drawing2D() = default;
  /// Throws Error{InvalidDrawing} on a size mismatch, non-finite or repeated position.
  Drawing2D(const Graph& g, std::vector<Point2> positions);

  const Point2& at(VertexIndex v) const { return positions_.at(v); }
  const std::vector<Point2>& positions() const { return positions_; }
  std::size_t size() const { return positions_.size(); }

  /// Direction angle (atan2, radians) of edge `e` leaving vertex `from`.
  double direction(const Graph& g, EdgeIndex e, VertexIndex from) const;

 private:
  std::vector<Point2> positions_;
};

/// Clockwise cyclic order of incident edges around each vertex.
class RotationSystem {
 public:
  RotationSystem() = default;
  /// Throws Error{MissingRotation} unless each list permutes the incident edges.
  RotationSystem(const Graph& g, std::vector<std::vector<EdgeIndex>> order);

  std::span<const EdgeIndex> around(VertexIndex v) const { return order_.at(v); }
  const std::vector<std::vector<EdgeIndex>>& order() const { return order_; }

 private:
  std::vector<std::vector<EdgeIndex>> order_;
};

/// Edges join vertices at distance 1 or 2 in `g`.
Graph square_graph(const Graph& g);

/// Clockwise means decreasing atan2 angle (x right, y up). Each list starts at
/// the edge with the largest direction angle in (-pi, pi].
RotationSystem rotation_from_drawing(const Graph& g, const Drawing2D& drawing);

/// Smallest angle between two incident edge directions over all vertices.
double angular_resolution_2d(const Graph& g, const Drawing2D& drawing);

/// Unsigned angle in [0, pi] between two direction angles.
double direction_gap(double a, double b);

}  // namespace arcdiag
