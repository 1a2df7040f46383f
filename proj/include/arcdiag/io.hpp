#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "arcdiag/diagram.hpp"
#include "arcdiag/layout.hpp"

namespace arcdiag {

/// Contents of a graph document:
///
///   {"vertices": [{"id": "a", "x": 0, "y": 0}, ...],
///    "edges": [["a", "b"], ...],
///    "rotation": {"a": [0, 2, 1], ...}}      // optional, edge indices
///
/// Coordinates are all-or-nothing. An explicit rotation overrides the one read
/// off the coordinates.
struct GraphInput {
  Graph graph;
  std::optional<Drawing2D> drawing;
  std::optional<RotationSystem> rotation;

  /// Explicit rotation if present, else the drawing's.
  RotationSystem effective_rotation() const;
};

/// Throws ParseError (with line and column) or ValidationError (with the
/// offending field path).
GraphInput parse_graph(std::string_view text);

/// `resolution2d` and `family` are written to a "meta" block when present.
std::string emit_graph(const GraphInput& in, std::optional<double> resolution2d = std::nullopt,
                       std::string_view family = {});

/// The report block stored alongside a scene.
struct ReportSummary {
  double minAngle = 0.0;
  std::string argminVertex;
  EdgeIndex argminFirst = 0;
  EdgeIndex argminSecond = 0;
  std::size_t checks = 0;
  std::size_t failures = 0;
  double paletteFloor = 0.0;
  std::size_t belowPaletteFloor = 0;
  friend bool operator==(const ReportSummary&, const ReportSummary&) = default;
};

ReportSummary summarize(const ArcDiagram3D& d, const ResolutionReport& r);

struct SceneDocument {
  ArcDiagram3D diagram;
  std::optional<ReportSummary> report;
  friend bool operator==(const SceneDocument&, const SceneDocument&) = default;
};

/// JSON scene; numbers use the shortest decimal that round-trips, so
/// emit_scene(parse_scene(emit_scene(x))) is byte-identical.
std::string emit_scene(const SceneDocument& doc);
SceneDocument parse_scene(std::string_view text);

/// Wavefront OBJ: `samples` vertex records per arc (shared endpoints are not
/// merged), then one polyline `l` record per arc in edge order.
std::string export_obj(const ArcDiagram3D& d, int samples);

std::string emit_edge_coloring(const Graph& g, const EdgeColoring& col, std::string_view method,
                               int L = 0);

/// Shortest round-trip decimal, locale independent.
std::string format_double(double x);

enum class GraphFamily { Star, Fan, Grid, Random, Complete };
std::optional<GraphFamily> parse_family(std::string_view s);

enum class DrawingMode { Uniform, Collinear };

struct GenerateParams {
  GraphFamily family = GraphFamily::Star;
  int k = 6;              // star, fan: leaves; complete: vertices
  double spread = 0.5;    // fan: angle covered by the leaves
  int width = 3;          // grid
  int height = 3;         // grid
  int n = 10;             // random: vertices
  int maxDegree = 3;      // random: degree cap
  DrawingMode drawing = DrawingMode::Uniform;  // random
  double jitter = 1e-9;   // random, collinear drawing: vertical noise
  std::uint64_t seed = 1;
};

struct GeneratedGraph {
  GraphInput input;
  /// Exact for star, fan, grid and complete; measured for random.
  std::optional<double> resolution2d;
  std::string family;
};

/// Deterministic for a given seed. Throws BadParams.
GeneratedGraph generate(const GenerateParams& params);

}  // namespace arcdiag
