#include "arcdiag/layout.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <string>

namespace arcdiag {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

Vec3 lift(const Point2& p) { return {p.x, p.y, 0.0}; }

void check_drawing(const Graph& g, const Drawing2D& drawing) {
  if (drawing.size() != g.vertex_count()) {
    throw Error(ErrorCode::InvalidDrawing, "drawing has " + std::to_string(drawing.size()) +
                                               " positions for " +
                                               std::to_string(g.vertex_count()) + " vertices");
  }
}

std::vector<Vec3> lift_all(const Drawing2D& drawing) {
  std::vector<Vec3> out;
  out.reserve(drawing.size());
  for (const auto& p : drawing.positions()) out.push_back(lift(p));
  return out;
}

double schedule_gap(int paletteSize) {
  return paletteSize > 1 ? kPi / (4.0 * (paletteSize - 1)) : kPi / 4.0;
}

// Perpendicular arcs with the color schedule; shared by stationary and free.
ArcDiagram3D perpendicular_diagram(const Graph& g, const Drawing2D& drawing,
                                   const EdgeColoring& col, LayoutMethod method) {
  ArcDiagram3D d;
  d.graph = g;
  d.positions = lift_all(drawing);
  d.arcs.reserve(g.edge_count());
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const auto& ed = g.edge(e);
    d.arcs.push_back(make_arc(d.positions[ed.u], d.positions[ed.v],
                              schedule_angle(col.color[e], col.paletteSize), kPi / 2, 1));
  }
  d.meta.method = method;
  d.meta.edgeColors = col.color;
  d.meta.paletteSize = col.paletteSize;
  d.meta.angleGap = schedule_gap(col.paletteSize);
  return d;
}

}  // namespace

// ---------------------------------------------------------------------------

double sphere_band_height() { return kPi / std::sqrt(1.0 + kPi * kPi); }

std::vector<Vec3> cluster_positions(int d) {
  if (d < 1) throw Error(ErrorCode::BadParams, "cluster_positions needs d >= 1");
  const double h = sphere_band_height();
  const double golden = kPi * (3.0 - std::sqrt(5.0));
  std::vector<Vec3> out;
  out.reserve(static_cast<std::size_t>(d) * (d + 1));
  for (int i = 0; i <= d; ++i) {
    const double z = -h + i * (2.0 * h / d);
    const double r = std::sqrt(1.0 - z * z);
    for (int j = 0; j < d; ++j) {
      const double theta = 2.0 * kPi * j / d + i * golden;
      out.push_back({r * std::cos(theta), r * std::sin(theta), z});
    }
  }
  return out;
}

double min_pairwise_distance(const std::vector<Vec3>& pts) {
  double best = kInf;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) best = std::min(best, distance(pts[i], pts[j]));
  }
  return best;
}

ArcDiagram3D sphere_layout(const Graph& g) {
  const auto d = static_cast<int>(g.max_degree());
  if (d < 1) throw Error(ErrorCode::BadParams, "sphere layout needs at least one edge");
  const auto clusters = cluster_positions(d);
  const double deltaMin = min_pairwise_distance(clusters);
  const double epsilon = deltaMin / 8.0;

  const auto coloring = greedy_vertex_coloring(square_graph(g));
  if (static_cast<std::size_t>(coloring.paletteSize) > clusters.size()) {
    throw Error(ErrorCode::TooManyColors,
                std::to_string(coloring.paletteSize) + " colors for " +
                    std::to_string(clusters.size()) + " cluster positions");
  }

  std::vector<int> classSize(coloring.paletteSize, 0);
  for (Color c : coloring.color) ++classSize[c];
  std::vector<int> seen(coloring.paletteSize, 0);

  // Chord length epsilon from the cluster center, measured on the sphere.
  const double rho = 2.0 * std::asin(epsilon / 2.0);
  ArcDiagram3D out;
  out.graph = g;
  out.positions.resize(g.vertex_count());
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    const Color c = coloring.color[v];
    const Vec3 p = clusters[c];
    const Vec3 e1 = normalized(cross(p, Vec3{0, 0, 1}));
    const Vec3 e2 = cross(p, e1);
    const double theta = 2.0 * kPi * seen[c]++ / classSize[c];
    const Vec3 q = std::cos(rho) * p + std::sin(rho) * (std::cos(theta) * e1 + std::sin(theta) * e2);
    out.positions[v] = normalized(q);
  }
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const auto& ed = g.edge(e);
    out.arcs.push_back(make_arc(out.positions[ed.u], out.positions[ed.v], 0.0, kPi / 2, 1));
  }
  out.meta.method = LayoutMethod::Sphere;
  out.meta.vertexColors = coloring.color;
  out.meta.paletteSize = coloring.paletteSize;
  out.meta.sphereH = sphere_band_height();
  out.meta.sphereEpsilon = epsilon;
  out.meta.clusterMinDistance = deltaMin;
  out.meta.angleGap = std::asin(std::min(1.0, (deltaMin - 2.0 * epsilon) / 2.0));
  return out;
}

// ---------------------------------------------------------------------------

double schedule_angle(int color, int paletteSize) {
  if (paletteSize <= 1) return 0.0;
  return color * kPi / (4.0 * (paletteSize - 1));
}

ArcDiagram3D stationary_layout(const Graph& g, const Drawing2D& drawing) {
  check_drawing(g, drawing);
  return perpendicular_diagram(g, drawing, edge_coloring_vizing(g), LayoutMethod::Stationary);
}

namespace {

std::vector<double> even_angles(int count) {
  std::vector<double> out;
  for (int i = 0; i < count; ++i) out.push_back(count == 1 ? 0.0 : i * (kPi / 4.0) / (count - 1));
  return out;
}

std::vector<SlantedColor> pair_palette(const std::vector<double>& angles,
                                       SlantedInterpretation interpretation) {
  std::vector<SlantedColor> out;
  for (double tilt : angles) {
    for (double second : angles) {
      if (interpretation == SlantedInterpretation::Elevation && second > tilt) continue;
      out.push_back({tilt, second});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

double smallest_positive_gap(const std::vector<SlantedColor>& palette) {
  std::set<double> values;
  for (const auto& c : palette) {
    values.insert(c.tilt);
    values.insert(c.second);
  }
  double gap = kInf;
  for (auto it = values.begin(); std::next(it) != values.end(); ++it) {
    gap = std::min(gap, *std::next(it) - *it);
  }
  return std::isfinite(gap) ? gap : kPi / 4.0;
}

}  // namespace

std::vector<double> slanted_angle_set(int d) {
  const double root = std::sqrt(static_cast<double>(std::max(d, 0)));
  return even_angles(static_cast<int>(std::ceil(root)) + 1);
}

std::vector<SlantedColor> slanted_palette(int d, SlantedInterpretation interpretation) {
  auto count = static_cast<int>(slanted_angle_set(d).size());
  auto palette = pair_palette(even_angles(count), interpretation);
  while (palette.size() < static_cast<std::size_t>(d) + 1) {
    palette = pair_palette(even_angles(++count), interpretation);
  }
  return palette;
}

double slanted_in_plane_angle(const SlantedColor& c, SlantedInterpretation interpretation) {
  if (interpretation == SlantedInterpretation::InPlane) return c.second;
  if (c.tilt == 0.0) return 0.0;
  // Tangent elevation is asin(sin(inPlane) sin(tilt)).
  return std::asin(std::min(1.0, std::sin(c.second) / std::sin(c.tilt)));
}

ArcDiagram3D slanted_layout(const Graph& g, const Drawing2D& drawing, const SlantedOptions& opts) {
  check_drawing(g, drawing);
  std::vector<SlantedColor> palette;
  std::vector<Color> colors(g.edge_count());
  if (opts.edgeColors) {
    const auto& given = *opts.edgeColors;
    if (given.size() != g.edge_count()) {
      throw Error(ErrorCode::InvalidColoring, "need one slanted color per edge");
    }
    for (const auto& c : given) {
      if (!(c.tilt >= 0.0 && c.tilt <= kPi / 2 && c.second >= 0.0 && c.second <= kPi / 2)) {
        throw Error(ErrorCode::InvalidColoring, "slanted color angles must lie in [0, pi/2]");
      }
      if (opts.interpretation == SlantedInterpretation::Elevation &&
          (c.second > c.tilt || (c.tilt == 0.0 && c.second != 0.0))) {
        throw Error(ErrorCode::InvalidColoring, "elevation exceeds the plane tilt");
      }
    }
    palette = given;
    std::sort(palette.begin(), palette.end());
    palette.erase(std::unique(palette.begin(), palette.end()), palette.end());
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
      colors[e] = static_cast<Color>(
          std::lower_bound(palette.begin(), palette.end(), given[e]) - palette.begin());
    }
    EdgeColoring check{colors, static_cast<int>(palette.size())};
    const auto verdict = verify_edge_coloring(g, check);
    if (!verdict) {
      const auto& v = verdict.violations.front();
      throw Error(ErrorCode::InvalidColoring, "edges " + g.describe_edge(v.first) + " and " +
                                                  g.describe_edge(v.second) + " share a color at '" +
                                                  g.id(v.at) + "'");
    }
  } else {
    palette = slanted_palette(static_cast<int>(g.max_degree()), opts.interpretation);
    const auto col = edge_coloring_vizing(g);
    if (static_cast<std::size_t>(col.paletteSize) > palette.size()) {
      throw Error(ErrorCode::TooManyColors, "edge coloring exceeds the slanted palette");
    }
    colors = col.color;
  }

  ArcDiagram3D d;
  d.graph = g;
  d.positions = lift_all(drawing);
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const auto& ed = g.edge(e);
    const auto& c = palette[colors[e]];
    d.arcs.push_back(make_arc(d.positions[ed.u], d.positions[ed.v],
                              slanted_in_plane_angle(c, opts.interpretation), c.tilt, opts.side));
  }
  d.meta.method = LayoutMethod::Slanted;
  d.meta.edgeColors = std::move(colors);
  d.meta.paletteSize = static_cast<int>(palette.size());
  d.meta.palette = std::move(palette);
  d.meta.interpretation = opts.interpretation;
  d.meta.angleGap = smallest_positive_gap(d.meta.palette);
  return d;
}

int default_free_L(std::size_t d) {
  const int half = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(d)) / 2.0));
  return std::max(2, 2 * half);
}

ArcDiagram3D free_layout(const Graph& g, const Drawing2D& drawing, const FreeOptions& opts) {
  check_drawing(g, drawing);
  RotationSystem rot;
  try {
    rot = opts.rotation ? *opts.rotation : rotation_from_drawing(g, drawing);
  } catch (const Error& err) {
    if (err.code() != ErrorCode::CoincidentDirections) throw;
    throw Error(ErrorCode::ZeroResolutionDrawing, err.what());
  }
  try {
    if (angular_resolution_2d(g, drawing) <= 0.0) {
      throw Error(ErrorCode::ZeroResolutionDrawing, "drawing has zero angular resolution");
    }
  } catch (const Error& err) {
    if (err.code() != ErrorCode::NoAngles) throw;
  }
  const int L = opts.L.value_or(default_free_L(g.max_degree()));
  const auto col = localized_edge_coloring(g, rot, L);
  auto d = perpendicular_diagram(g, drawing, col, LayoutMethod::Free);
  d.meta.L = L;
  return d;
}

// ---------------------------------------------------------------------------

ResolutionReport angular_resolution_3d(const ArcDiagram3D& d) {
  const auto& g = d.graph;
  ResolutionReport r;
  r.minAngle = kInf;
  r.perVertexMin.assign(g.vertex_count(), kInf);
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    const auto inc = g.incident(v);
    for (std::size_t i = 0; i < inc.size(); ++i) {
      const Vec3 ti = d.tangent_at_vertex(inc[i], v);
      for (std::size_t j = i + 1; j < inc.size(); ++j) {
        const double a = angle_between(ti, d.tangent_at_vertex(inc[j], v));
        r.perVertexMin[v] = std::min(r.perVertexMin[v], a);
        if (a < r.minAngle) {
          r.minAngle = a;
          r.argminVertex = v;
          r.argminFirst = inc[i];
          r.argminSecond = inc[j];
        }
      }
    }
  }
  if (!std::isfinite(r.minAngle)) {
    throw Error(ErrorCode::NoAngles, "no vertex has two incident arcs");
  }
  return r;
}

namespace {

// Outgoing tangent of an arc with the given parameters at a base-plane vertex,
// built directly from the 2D direction. `atStart` selects whether the vertex
// is the arc's first endpoint; that flips the lateral tilt.
Vec3 planar_tangent(double dirAngle, double inPlane, double tilt, int side, bool atStart) {
  const Vec3 u{std::cos(dirAngle), std::sin(dirAngle), 0.0};
  const Vec3 left{-u.y, u.x, 0.0};
  const double lateral = (atStart ? 1.0 : -1.0) * side * std::cos(tilt);
  const Vec3 bulge = std::sin(tilt) * Vec3{0, 0, 1} + lateral * left;
  return std::cos(inPlane) * u + std::sin(inPlane) * bulge;
}

double planar_direction(const ArcDiagram3D& d, EdgeIndex e, VertexIndex v) {
  const Vec3 p = d.positions[v];
  const Vec3 q = d.positions[d.graph.edge(e).other(v)];
  return std::atan2(q.y - p.y, q.x - p.x);
}

double pair_bound(const ArcDiagram3D& d, VertexIndex v, EdgeIndex e, EdgeIndex f) {
  const auto& meta = d.meta;
  const auto& ae = d.arcs[e];
  const auto& af = d.arcs[f];
  switch (meta.method) {
    case LayoutMethod::Stationary:
      return std::abs(ae.in_plane_angle() - af.in_plane_angle());
    case LayoutMethod::Free: {
      const double diff = std::abs(ae.in_plane_angle() - af.in_plane_angle());
      if (meta.edgeColors.at(e) != meta.edgeColors.at(f)) return diff;
      const double planar =
          direction_gap(planar_direction(d, e, v), planar_direction(d, f, v));
      return std::max(diff, planar / 2.0 - diff);
    }
    case LayoutMethod::Slanted: {
      const double de = planar_direction(d, e, v);
      const double df = planar_direction(d, f, v);
      double best = kInf;
      for (bool se : {true, false}) {
        for (bool sf : {true, false}) {
          const Vec3 te = planar_tangent(de, ae.in_plane_angle(), ae.plane_tilt(), ae.side(), se);
          const Vec3 tf = planar_tangent(df, af.in_plane_angle(), af.plane_tilt(), af.side(), sf);
          best = std::min(best, std::atan2(norm(cross(te, tf)), dot(te, tf)));
        }
      }
      return best;
    }
    case LayoutMethod::Sphere: {
      // The angle at v is inscribed in a circle of radius <= 1 through the
      // far endpoints a and c, so it is at least asin(|ac| / 2).
      const Vec3 a = d.positions[d.graph.edge(e).other(v)];
      const Vec3 c = d.positions[d.graph.edge(f).other(v)];
      return std::asin(std::min(1.0, distance(a, c) / 2.0));
    }
    case LayoutMethod::Custom:
      return 0.0;
  }
  return 0.0;
}

double palette_floor(const ArcDiagram3D& d) {
  switch (d.meta.method) {
    case LayoutMethod::Stationary:
    case LayoutMethod::Free:
      return d.meta.paletteSize > 1 ? kPi / (4.0 * (d.meta.paletteSize - 1)) : 0.0;
    case LayoutMethod::Slanted:
    case LayoutMethod::Sphere:
      return d.meta.angleGap;
    case LayoutMethod::Custom:
      return 0.0;
  }
  return 0.0;
}

}  // namespace

std::vector<BoundCheck> guarantee_check(const ArcDiagram3D& d) {
  const auto& g = d.graph;
  std::vector<BoundCheck> checks;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    const auto inc = g.incident(v);
    for (std::size_t i = 0; i < inc.size(); ++i) {
      const Vec3 ti = d.tangent_at_vertex(inc[i], v);
      for (std::size_t j = i + 1; j < inc.size(); ++j) {
        BoundCheck c;
        c.vertex = v;
        c.first = inc[i];
        c.second = inc[j];
        c.measured = angle_between(ti, d.tangent_at_vertex(inc[j], v));
        c.guaranteed = pair_bound(d, v, inc[i], inc[j]);
        c.pass = c.measured >= c.guaranteed - kBoundTolerance;
        checks.push_back(c);
      }
    }
  }
  return checks;
}

ResolutionReport certify(const ArcDiagram3D& d) {
  auto r = angular_resolution_3d(d);
  r.boundChecks = guarantee_check(d);
  r.paletteFloor = palette_floor(d);
  for (const auto& c : r.boundChecks) {
    if (!c.pass) ++r.failures;
    if (c.measured < r.paletteFloor - kBoundTolerance) ++r.belowPaletteFloor;
  }
  return r;
}

void require_guarantees(const ArcDiagram3D& d, const ResolutionReport& report) {
  for (const auto& c : report.boundChecks) {
    if (c.pass) continue;
    throw Error(ErrorCode::BoundViolation,
                "at '" + d.graph.id(c.vertex) + "' edges " + d.graph.describe_edge(c.first) +
                    " and " + d.graph.describe_edge(c.second) + " meet at " +
                    std::to_string(c.measured) + " < guaranteed " + std::to_string(c.guaranteed));
  }
}

}  // namespace arcdiag
