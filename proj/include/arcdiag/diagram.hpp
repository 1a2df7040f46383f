#pragma once

#include <limits>
#include <optional>
#include <string_view>
#include <vector>

#include "arcdiag/coloring.hpp"
#include "arcdiag/geometry.hpp"
#include "arcdiag/graph.hpp"

namespace arcdiag {

enum class LayoutMethod { Sphere, Stationary, Slanted, Free, Custom };

/// How the second component of a slanted palette color is applied.
/// InPlane: it is the tangent's angle with the chord inside the tilted plane.
/// Elevation: it is the tangent's angle above the base plane.
enum class SlantedInterpretation { InPlane, Elevation };

std::string_view to_string(LayoutMethod m);
std::string_view to_string(SlantedInterpretation s);
std::optional<LayoutMethod> parse_layout_method(std::string_view s);
std::optional<SlantedInterpretation> parse_slanted_interpretation(std::string_view s);

struct SlantedColor {
  double tilt = 0.0;    // dihedral angle of the arc plane with the base plane
  double second = 0.0;  // in-plane angle or elevation, per SlantedInterpretation
  friend bool operator==(const SlantedColor&, const SlantedColor&) = default;
  friend auto operator<=>(const SlantedColor&, const SlantedColor&) = default;
};

/// Everything a certifier needs to recompute a layout's per-pair guarantees.
struct LayoutMeta {
  LayoutMethod method = LayoutMethod::Custom;
  std::vector<Color> edgeColors;    // stationary, slanted, free
  std::vector<Color> vertexColors;  // sphere: cluster index per vertex
  int paletteSize = 0;
  int L = 0;                        // free
  SlantedInterpretation interpretation = SlantedInterpretation::InPlane;
  std::vector<SlantedColor> palette;  // slanted: color index -> (tilt, second)
  double angleGap = 0.0;  // nominal separation of adjacent palette levels
  double sphereH = 0.0;
  double sphereEpsilon = 0.0;
  double clusterMinDistance = 0.0;
  friend bool operator==(const LayoutMeta&, const LayoutMeta&) = default;
};

/// Vertex positions plus one arc per edge; arc endpoints equal the positions.
struct ArcDiagram3D {
  Graph graph;
  std::vector<Vec3> positions;
  std::vector<CircularArc> arcs;
  LayoutMeta meta;

  /// Outgoing tangent of edge `e` at its endpoint `v`.
  Vec3 tangent_at_vertex(EdgeIndex e, VertexIndex v) const {
    return arcs.at(e).tangent(graph.edge(e).u == v ? ArcEnd::A : ArcEnd::B);
  }

  friend bool operator==(const ArcDiagram3D&, const ArcDiagram3D&) = default;
};

/// Throws ValidationError when arcs and positions disagree.
void validate_diagram(const ArcDiagram3D& d);

struct ClearanceOptions {
  int samples = 16;
  double threshold = 1e-6;
  bool interiorOnly = false;  // ignore the two endpoint samples of every arc
};

struct ClearancePair {
  EdgeIndex first = 0;
  EdgeIndex second = 0;
  double distance = 0.0;
};

struct ClearanceReport {
  double minDistance = std::numeric_limits<double>::infinity();
  std::optional<ClearancePair> closest;
  std::vector<ClearancePair> flagged;  // distance < threshold, first < second
  std::size_t pairsChecked = 0;
};

/// Sampled minimum distance between every pair of arcs without a shared vertex.
ClearanceReport arc_clearance(const ArcDiagram3D& d, const ClearanceOptions& opts = {});

/// Repeatedly nudges the in-plane angle of the higher-indexed arc of every
/// flagged pair by epsilonFraction * meta.angleGap until nothing is flagged.
/// Throws PerturbationFailed when the retry budget runs out.
ArcDiagram3D perturb(const ArcDiagram3D& d, double epsilonFraction,
                     const ClearanceOptions& opts = {}, int maxRounds = 8);

}  // namespace arcdiag
