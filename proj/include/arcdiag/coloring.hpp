#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "arcdiag/graph.hpp"

namespace arcdiag {

using Color = int;

struct VertexColoring {
  std::vector<Color> color;  // indexed by vertex
  int paletteSize = 0;
};

struct EdgeColoring {
  std::vector<Color> color;  // indexed by edge
  int paletteSize = 0;
  friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;
};

/// A pair of edges that share a vertex (and, for localized checks, a window)
/// while carrying the same color.
struct ColoringViolation {
  VertexIndex at;
  EdgeIndex first;
  EdgeIndex second;
};

struct VerifyResult {
  bool ok = true;
  std::vector<ColoringViolation> violations;
  explicit operator bool() const { return ok; }
};

/// Greedy in vertex input order, smallest free color. Uses at most d+1 colors.
VertexColoring greedy_vertex_coloring(const Graph& g);

/// Misra-Gries fan recoloring; at most d+1 colors.
EdgeColoring edge_coloring_vizing(const Graph& g);

/// Edges within L/2 positions of `e` (before and after, cyclically) in the
/// rotation at `v`. When deg(v) <= L + 1 the window is every other incident edge.
std::vector<EdgeIndex> localized_window(const RotationSystem& rot, VertexIndex v, EdgeIndex e,
                                        int L);

/// Greedy L-localized coloring in edge input order. With `requireProper` the
/// colors of all incident edges are avoided, not only those in the windows.
/// Runs in O(mL) without `requireProper`; palette <= 2L + 1.
EdgeColoring greedy_localized_coloring(const Graph& g, const RotationSystem& rot, int L,
                                       bool requireProper = false);

/// Smaller palette of the window greedy and Vizing (ties go to the greedy), so
/// paletteSize <= min{d, 2L} + 1. Throws OddL or MissingRotation.
EdgeColoring localized_edge_coloring(const Graph& g, const RotationSystem& rot, int L);

VerifyResult verify_vertex_coloring(const Graph& g, const VertexColoring& col);
VerifyResult verify_edge_coloring(const Graph& g, const EdgeColoring& col);
VerifyResult verify_localized(const Graph& g, const RotationSystem& rot, int L,
                              const EdgeColoring& col);

}  // namespace arcdiag
