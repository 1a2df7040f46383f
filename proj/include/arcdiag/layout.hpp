#pragma once

#include <optional>
#include <vector>

#include "arcdiag/diagram.hpp"

namespace arcdiag {

// ---------------------------------------------------------------------------
// Vertices on the unit sphere
// ---------------------------------------------------------------------------

/// Half-height of the band of cutting planes: pi / sqrt(1 + pi^2).
double sphere_band_height();

/// d+1 circles cut by planes uniformly spaced over [-h, h], d points per
/// circle; circle i is rotated by i times the golden angle. Level-major order.
std::vector<Vec3> cluster_positions(int d);

double min_pairwise_distance(const std::vector<Vec3>& pts);

/// Straight chords between vertices placed near cluster positions chosen by a
/// greedy coloring of the square graph. Requires max degree >= 1.
ArcDiagram3D sphere_layout(const Graph& g);

// ---------------------------------------------------------------------------
// Vertices fixed in the base plane
// ---------------------------------------------------------------------------

/// i * pi / (4 (c - 1)); 0 when c == 1.
double schedule_angle(int color, int paletteSize);

/// Perpendicular arcs over any drawing; in-plane angle by Vizing color.
ArcDiagram3D stationary_layout(const Graph& g, const Drawing2D& drawing);

struct SlantedOptions {
  SlantedInterpretation interpretation = SlantedInterpretation::InPlane;
  int side = 1;
  /// Per-edge colors to use instead of a computed coloring.
  std::optional<std::vector<SlantedColor>> edgeColors;
};

/// ceil(sqrt(d)) + 1 angles evenly spaced over [0, pi/4].
std::vector<double> slanted_angle_set(int d);

/// Palette with at least d+1 colors, sorted by (tilt, second). Under the
/// Elevation reading only pairs with second <= tilt are realizable, and the
/// angle set grows until the palette is large enough.
std::vector<SlantedColor> slanted_palette(int d, SlantedInterpretation interpretation);

/// In-plane angle that realizes `c` under `interpretation`.
double slanted_in_plane_angle(const SlantedColor& c, SlantedInterpretation interpretation);

ArcDiagram3D slanted_layout(const Graph& g, const Drawing2D& drawing,
                            const SlantedOptions& opts = {});

/// 2 * ceil(sqrt(d) / 2), at least 2.
int default_free_L(std::size_t d);

struct FreeOptions {
  std::optional<int> L;
  /// Overrides the rotation read off the drawing.
  std::optional<RotationSystem> rotation;
};

/// Perpendicular arcs colored by an L-localized edge coloring. The drawing
/// must have positive angular resolution.
ArcDiagram3D free_layout(const Graph& g, const Drawing2D& drawing, const FreeOptions& opts = {});

// ---------------------------------------------------------------------------
// Measurement and certification
// ---------------------------------------------------------------------------

struct BoundCheck {
  VertexIndex vertex = 0;
  EdgeIndex first = 0;
  EdgeIndex second = 0;
  double measured = 0.0;
  double guaranteed = 0.0;
  bool pass = true;
};

struct ResolutionReport {
  double minAngle = 0.0;
  VertexIndex argminVertex = 0;
  EdgeIndex argminFirst = 0;
  EdgeIndex argminSecond = 0;
  /// +inf for vertices with fewer than two incident edges.
  std::vector<double> perVertexMin;
  std::vector<BoundCheck> boundChecks;
  std::size_t failures = 0;
  /// Separation the palette is designed for and the number of pairs below it.
  /// Informational: only boundChecks decide pass/fail.
  double paletteFloor = 0.0;
  std::size_t belowPaletteFloor = 0;

  bool all_pass() const { return failures == 0; }
};

inline constexpr double kBoundTolerance = 1e-9;

/// Angle between outgoing tangents for every incident pair. Throws NoAngles.
ResolutionReport angular_resolution_3d(const ArcDiagram3D& d);

/// Per-pair lower bound from the diagram's construction, recomputed from its
/// parameters without going through the arc tangents.
std::vector<BoundCheck> guarantee_check(const ArcDiagram3D& d);

/// angular_resolution_3d plus guarantee_check.
ResolutionReport certify(const ArcDiagram3D& d);

/// Throws BoundViolation naming the first failing pair.
void require_guarantees(const ArcDiagram3D& d, const ResolutionReport& report);

}  // namespace arcdiag
