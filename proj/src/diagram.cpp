#include "arcdiag/diagram.hpp"

#include <algorithm>
#include <string>

namespace arcdiag {

std::string_view to_string(LayoutMethod m) {
  switch (m) {
    case LayoutMethod::Sphere: return "sphere";
    case LayoutMethod::Stationary: return "stationary";
    case LayoutMethod::Slanted: return "slanted";
    case LayoutMethod::Free: return "free";
    case LayoutMethod::Custom: return "custom";
  }
  return "custom";
}

std::string_view to_string(SlantedInterpretation s) {
  return s == SlantedInterpretation::InPlane ? "inplane" : "elevation";
}

std::optional<LayoutMethod> parse_layout_method(std::string_view s) {
  for (auto m : {LayoutMethod::Sphere, LayoutMethod::Stationary, LayoutMethod::Slanted,
                 LayoutMethod::Free, LayoutMethod::Custom}) {
    if (to_string(m) == s) return m;
  }
  return std::nullopt;
}

std::optional<SlantedInterpretation> parse_slanted_interpretation(std::string_view s) {
  if (s == "inplane") return SlantedInterpretation::InPlane;
  if (s == "elevation") return SlantedInterpretation::Elevation;
  return std::nullopt;
}

void validate_diagram(const ArcDiagram3D& d) {
  if (d.positions.size() != d.graph.vertex_count() || d.arcs.size() != d.graph.edge_count()) {
    throw Error(ErrorCode::ValidationError, "diagram needs one position per vertex and one arc per edge");
  }
  for (EdgeIndex e = 0; e < d.arcs.size(); ++e) {
    const auto& ed = d.graph.edge(e);
    if (!(d.arcs[e].a() == d.positions[ed.u]) || !(d.arcs[e].b() == d.positions[ed.v])) {
      throw Error(ErrorCode::ValidationError,
                  "arc of edge " + d.graph.describe_edge(e) + " does not meet its vertices");
    }
  }
}

namespace {

struct SampledArc {
  std::vector<Vec3> pts;
  Vec3 center;
  double radius = 0.0;
};

SampledArc sample_for_clearance(const CircularArc& arc, const ClearanceOptions& opts) {
  SampledArc s;
  s.pts = sample_arc(arc, opts.samples);
  if (opts.interiorOnly) {
    s.pts.erase(s.pts.begin());
    if (!s.pts.empty()) s.pts.pop_back();
  }
  if (s.pts.empty()) return s;
  Vec3 lo = s.pts.front(), hi = s.pts.front();
  for (const auto& p : s.pts) {
    lo = {std::min(lo.x, p.x), std::min(lo.y, p.y), std::min(lo.z, p.z)};
    hi = {std::max(hi.x, p.x), std::max(hi.y, p.y), std::max(hi.z, p.z)};
  }
  s.center = 0.5 * (lo + hi);
  for (const auto& p : s.pts) s.radius = std::max(s.radius, distance(p, s.center));
  return s;
}

bool share_vertex(const Edge& a, const Edge& b) {
  return a.touches(b.u) || a.touches(b.v);
}

}  // namespace

ClearanceReport arc_clearance(const ArcDiagram3D& d, const ClearanceOptions& opts) {
  if (opts.samples < 2) throw Error(ErrorCode::DomainError, "clearance needs >= 2 samples");
  std::vector<SampledArc> sampled;
  sampled.reserve(d.arcs.size());
  for (const auto& arc : d.arcs) sampled.push_back(sample_for_clearance(arc, opts));

  ClearanceReport report;
  const auto m = d.arcs.size();
  for (EdgeIndex e = 0; e < m; ++e) {
    for (EdgeIndex f = e + 1; f < m; ++f) {
      if (share_vertex(d.graph.edge(e), d.graph.edge(f))) continue;
      const auto& se = sampled[e];
      const auto& sf = sampled[f];
      if (se.pts.empty() || sf.pts.empty()) continue;
      ++report.pairsChecked;
      const double lowerBound = distance(se.center, sf.center) - se.radius - sf.radius;
      if (lowerBound >= report.minDistance && lowerBound >= opts.threshold) continue;
      double best = std::numeric_limits<double>::infinity();
      for (const auto& p : se.pts) {
        for (const auto& q : sf.pts) best = std::min(best, distance(p, q));
      }
      if (best < report.minDistance) {
        report.minDistance = best;
        report.closest = ClearancePair{e, f, best};
      }
      if (best < opts.threshold) report.flagged.push_back({e, f, best});
    }
  }
  return report;
}

ArcDiagram3D perturb(const ArcDiagram3D& d, double epsilonFraction,
                     const ClearanceOptions& opts, int maxRounds) {
  ArcDiagram3D out = d;
  const double step = epsilonFraction * d.meta.angleGap;
  for (int round = 0; round <= maxRounds; ++round) {
    const auto report = arc_clearance(out, opts);
    if (report.flagged.empty()) return out;
    if (round == maxRounds || !(step > 0.0)) break;
    std::vector<char> nudged(out.arcs.size(), 0);
    for (const auto& pair : report.flagged) {
      const EdgeIndex later = std::max(pair.first, pair.second);
      if (nudged[later]) continue;
      nudged[later] = 1;
      const auto& arc = out.arcs[later];
      double angle = arc.in_plane_angle() + step;
      if (angle > std::numbers::pi / 2) angle = std::max(0.0, arc.in_plane_angle() - step);
      out.arcs[later] = make_arc(arc.a(), arc.b(), angle, arc.plane_tilt(), arc.side());
    }
  }
  throw Error(ErrorCode::PerturbationFailed,
              "arcs still closer than " + std::to_string(opts.threshold) + " after perturbation");
}

}  // namespace arcdiag
