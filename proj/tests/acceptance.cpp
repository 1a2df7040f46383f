#include <chrono>
#include <cstdio>
#include <sstream>

#include "arcdiag/io.hpp"
#include "arcdiag/layout.hpp"
#include "support.hpp"

using namespace arcdiag;
using namespace testsupport;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = "first failure: " + what;
    pass = pass && ok;
  }
};

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

// Two unit segments at elevation beta, projections alpha apart.
double lemma1_construction(double alpha, double beta) {
  return ray_angle(unit_at(0.0, beta), unit_at(alpha, beta));
}

double lemma2_construction(double alpha, double beta) {
  return ray_angle(unit_at(0.0, 0.0), unit_at(alpha, beta));
}

Outcome lemma_grid() {
  Outcome o;
  const int n = 50;
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double a1 = kPi * i / (n - 1);
      const double b1 = (kPi / 4) * j / (n - 1);
      const double d1 = lemma1_delta(a1, b1);
      worst = std::max(worst, std::abs(d1 - lemma1_construction(a1, b1)));
      o.require(d1 >= a1 / 2 - 1e-12, "lemma1 bound at " + fmt(a1) + "," + fmt(b1));

      const double a2 = (kPi / 2) * i / (n - 1);
      const double b2 = (kPi / 4) * j / n;
      const double d2 = lemma2_delta(a2, b2);
      worst = std::max(worst, std::abs(d2 - lemma2_construction(a2, b2)));
      o.require(d2 >= b2 - 1e-12, "lemma2 bound at " + fmt(a2) + "," + fmt(b2));
    }
  }
  o.require(worst <= 1e-9, "max deviation " + fmt(worst));
  if (o.pass) o.detail = "2x2500 grid points, max |formula - construction| = " + fmt(worst);
  return o;
}

Outcome localized_coloring() {
  Outcome o;
  // Every edge subset of K7 with at most six edges.
  std::vector<std::pair<int, int>> all;
  for (int i = 0; i < 7; ++i) {
    for (int j = i + 1; j < 7; ++j) all.emplace_back(i, j);
  }
  std::vector<Point2> heptagon;
  for (int i = 0; i < 7; ++i) heptagon.push_back({std::cos(2 * kPi * i / 7), std::sin(2 * kPi * i / 7)});

  std::mt19937_64 rng(2024);
  std::size_t graphs = 0, instances = 0, optimal = 0;
  std::vector<int> pick;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (!pick.empty()) {
      std::vector<std::pair<int, int>> pairs;
      for (int k : pick) pairs.push_back(all[k]);
      auto g = make_graph(7, pairs);
      ++graphs;
      const int d = static_cast<int>(g.max_degree());
      const RotationSystem rots[2] = {rotation_from_drawing(g, Drawing2D(g, heptagon)),
                                      random_rotation(rng, g)};
      for (const auto& rot : rots) {
        for (int L : {2, 4, 6}) {
          ++instances;
          const auto c = localized_edge_coloring(g, rot, L);
          const bool verified = verify_localized(g, rot, L, c).ok;
          o.require(verified && localized_oracle(g, rot, L, c.color), "verify on small graph");
          o.require(c.paletteSize <= std::min(d, 2 * L) + 1, "palette bound on small graph");
          const int best = brute_force_localized_index(g, rot, L);
          o.require(c.paletteSize >= best, "greedy beat the exhaustive optimum");
          optimal += c.paletteSize == best;
        }
      }
    }
    if (pick.size() == 6) return;
    for (std::size_t k = start; k < all.size(); ++k) {
      pick.push_back(static_cast<int>(k));
      rec(k + 1);
      pick.pop_back();
    }
  };
  rec(0);

  std::size_t randomInstances = 0;
  for (int t = 0; t < 200; ++t) {
    std::uniform_int_distribution<int> nPick(2, 30), dPick(1, 8);
    const int n = nPick(rng), dmax = dPick(rng);
    auto g = random_graph(rng, n, dmax, static_cast<std::size_t>(n * dmax / 2));
    auto rot = rotation_from_drawing(g, random_drawing(rng, g));
    const int d = static_cast<int>(g.max_degree());
    for (int L : {2, 4, 6}) {
      ++randomInstances;
      const auto c = localized_edge_coloring(g, rot, L);
      o.require(verify_localized(g, rot, L, c).ok && localized_oracle(g, rot, L, c.color),
                "verify on random graph");
      o.require(c.paletteSize <= std::min(d, 2 * L) + 1, "palette bound on random graph");
    }
  }
  if (o.pass) {
    o.detail = std::to_string(graphs) + " small graphs x " + std::to_string(instances / graphs) +
               " settings (" + std::to_string(optimal) + "/" + std::to_string(instances) +
               " at the exhaustive optimum), " + std::to_string(randomInstances) + " random instances";
  }
  return o;
}

Outcome vizing() {
  Outcome o;
  std::mt19937_64 rng(303);
  int worstSlack = 99;
  for (int t = 0; t < 200; ++t) {
    std::uniform_int_distribution<int> nPick(2, 40), dPick(1, 10);
    const int n = nPick(rng), dmax = dPick(rng);
    auto g = random_graph(rng, n, dmax, static_cast<std::size_t>(n * dmax / 2));
    const auto c = edge_coloring_vizing(g);
    const int d = static_cast<int>(g.max_degree());
    o.require(verify_edge_coloring(g, c).ok && proper_oracle(g, c.color), "improper coloring");
    o.require(c.paletteSize <= d + 1, "more than d+1 colors");
    worstSlack = std::min(worstSlack, d + 1 - c.paletteSize);
  }
  if (o.pass) o.detail = "200 graphs, all within d+1 colors";
  return o;
}

Outcome stationary() {
  Outcome o;
  std::mt19937_64 rng(404);
  int graphs = 0, extreme = 0;
  double worstRatio = std::numeric_limits<double>::infinity();
  while (graphs < 100) {
    std::uniform_int_distribution<int> nPick(3, 40), dPick(2, 10);
    const int n = nPick(rng), dmax = dPick(rng);
    auto g = random_graph(rng, n, dmax, static_cast<std::size_t>(n * dmax / 2));
    if (g.max_degree() < 2) continue;
    const double jitter = graphs % 2 ? 1e-4 : 1e-8;
    auto dr = near_collinear_drawing(rng, g, jitter);
    double res2d = 0.0;
    try {
      res2d = angular_resolution_2d(g, dr);
    } catch (const Error&) {
      continue;
    }
    if (res2d > 1e-3) continue;
    ++graphs;
    const auto d = stationary_layout(g, dr);
    const int c = d.meta.paletteSize;
    o.require(c <= static_cast<int>(g.max_degree()) + 1, "palette above d+1");
    const auto r = certify(d);
    o.require(r.all_pass(), "per-pair bound failed");
    o.require(r.minAngle >= kPi / (4 * (c - 1)) - 1e-9, "resolution below pi/(4(c-1))");
    if (res2d > 0.0) worstRatio = std::min(worstRatio, r.minAngle / res2d);
    if (res2d == 0.0 || r.minAngle / res2d >= 1e4) ++extreme;
    for (const auto& arc : d.arcs) o.require(arc.plane_tilt() == kPi / 2, "non-perpendicular arc");
  }
  o.require(extreme > 0, "no drawing 4 orders of magnitude below the 3D resolution");
  if (o.pass) {
    o.detail = "100 near-collinear drawings, " + std::to_string(extreme) +
               " with 3D/2D resolution ratio >= 1e4";
  }
  return o;
}

Outcome free_vertices() {
  Outcome o;
  int pairs = 0;
  for (int k = 4; k <= 16; ++k) {
    auto g = star_graph(k);
    auto dr = regular_star_drawing(g, k, 0.2);
    for (std::optional<int> L : {std::optional<int>{}, std::optional<int>{2}, std::optional<int>{4}}) {
      FreeOptions opts;
      opts.L = L;
      const auto d = free_layout(g, dr, opts);
      const auto r = certify(d);
      pairs += static_cast<int>(r.boundChecks.size());
      o.require(r.all_pass(), "star k=" + std::to_string(k) + " pair bound");
      const int c = d.meta.paletteSize;
      const double schedule = c > 1 ? kPi / (4 * (c - 1)) : kPi;
      const double window = (d.meta.L / 2.0) * (2 * kPi / k) / 2;
      o.require(r.minAngle >= std::min(schedule, window) - 1e-9,
                "star k=" + std::to_string(k) + " below min{pi/(4(c-1)), (L/2)(2pi/k)/2}");
    }
  }
  for (int w = 2; w <= 6; ++w) {
    GenerateParams p;
    p.family = GraphFamily::Grid;
    p.width = w;
    p.height = w + 1;
    const auto gen = generate(p);
    for (int L : {2, 4}) {
      FreeOptions opts;
      opts.L = L;
      const auto r = certify(free_layout(gen.input.graph, *gen.input.drawing, opts));
      pairs += static_cast<int>(r.boundChecks.size());
      o.require(r.all_pass(), "grid pair bound");
    }
  }
  if (o.pass) o.detail = std::to_string(pairs) + " incident pairs on stars k=4..16 and grids";
  return o;
}

Outcome sphere() {
  Outcome o;
  std::vector<Graph> graphs{complete_graph(4), cube_graph()};
  std::mt19937_64 rng(606);
  while (graphs.size() < 52) {
    std::uniform_int_distribution<int> nPick(4, 40), dPick(2, 6);
    const int n = nPick(rng), dmax = dPick(rng);
    auto g = random_graph(rng, n, dmax, static_cast<std::size_t>(n * dmax / 2));
    if (g.max_degree() >= 2) graphs.push_back(g);
  }
  for (const auto& g : graphs) {
    const auto d = sphere_layout(g);
    for (const auto& p : d.positions) o.require(std::abs(norm(p) - 1.0) <= 1e-12, "off the sphere");
    const auto g2 = square_graph(g);
    for (const auto& e : g2.edges()) {
      o.require(d.meta.vertexColors[e.u] != d.meta.vertexColors[e.v], "shared cluster");
    }
    const auto r = certify(d);
    o.require(r.all_pass(), "inscribed-angle bound");
  }
  double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
  for (int d = 2; d <= 12; ++d) {
    const double scaled = min_pairwise_distance(cluster_positions(d)) * d;
    lo = std::min(lo, scaled);
    hi = std::max(hi, scaled);
  }
  const double constant = 0.5;
  o.require(lo >= constant, "d * min distance = " + fmt(lo) + " below " + fmt(constant));
  if (o.pass) {
    o.detail = "K4, cube and 50 random graphs; d * min cluster distance in [" + fmt(lo) + ", " +
               fmt(hi) + "] for d=2..12 (constant " + fmt(constant) + ")";
  }
  return o;
}

// Slide samples along `dir` to z = 0 and measure their distance from chord ab.
double projection_error(const CircularArc& arc, Vec3 dir) {
  const Vec3 a = arc.a();
  const double len = distance(arc.a(), arc.b());
  const Vec3 u = normalized(arc.b() - a);
  double worst = 0.0;
  for (const auto& p : sample_arc(arc, 64)) {
    const Vec3 q = p - (p.z / dir.z) * dir;
    const double s = std::clamp(dot(q - a, u), 0.0, len);
    worst = std::max(worst, distance(q, a + s * u));
  }
  return worst;
}

Outcome projection() {
  Outcome o;
  std::mt19937_64 rng(707);
  double worst = 0.0;
  int arcs = 0;
  for (int t = 0; t < 60; ++t) {
    auto g = random_graph(rng, 15, 2 + t % 7, 35);
    auto dr = random_drawing(rng, g);
    std::vector<ArcDiagram3D> scenes{stationary_layout(g, dr), free_layout(g, dr)};
    for (const auto& d : scenes) {
      for (const auto& arc : d.arcs) {
        worst = std::max(worst, projection_error(arc, {0, 0, 1}));
        ++arcs;
      }
    }
    SlantedOptions opts;
    opts.interpretation = t % 2 ? SlantedInterpretation::Elevation : SlantedInterpretation::InPlane;
    for (const auto& arc : slanted_layout(g, dr, opts).arcs) {
      ++arcs;
      if (arc.is_segment()) {
        for (const auto& p : sample_arc(arc, 64)) worst = std::max(worst, std::abs(p.z));
        continue;
      }
      worst = std::max(worst, projection_error(arc, arc.bulge_direction()));
    }
  }
  o.require(worst <= 1e-12, "max deviation " + fmt(worst));
  if (o.pass) o.detail = std::to_string(arcs) + " arcs x 64 samples, max deviation " + fmt(worst);
  return o;
}

Outcome showcase() {
  Outcome o;
  const auto s = slanted_showcase();
  SlantedOptions opts;
  opts.edgeColors = s.colors;
  ArcDiagram3D d;
  try {
    d = slanted_layout(s.graph, s.drawing, opts);
  } catch (const Error& e) {
    o.require(false, e.what());
    return o;
  }
  o.require(d.meta.paletteSize == 5, "palette size");
  o.require(verify_edge_coloring(s.graph, {d.meta.edgeColors, d.meta.paletteSize}).ok, "not proper");
  double lowest = std::numeric_limits<double>::infinity();
  int curved = 0;
  for (const auto& arc : d.arcs) {
    auto pts = sample_arc(arc, 64);
    for (std::size_t i = 1; i + 1 < pts.size(); ++i) lowest = std::min(lowest, pts[i].z);
    curved += arc.is_segment() ? 0 : 1;
  }
  o.require(lowest >= 0.0, "interior sample below the base plane");
  const auto r = certify(d);
  o.require(r.all_pass(), "pair bound");
  if (o.pass) {
    o.detail = "6 vertices, 12 edges, 5 colors; " + std::to_string(curved) +
               " raised arcs, lowest interior z = " + fmt(lowest) + ", min angle " + fmt(r.minAngle);
  }
  return o;
}

std::string pipeline(std::uint64_t seed, LayoutMethod method) {
  GenerateParams p;
  p.family = GraphFamily::Random;
  p.n = 25;
  p.maxDegree = 6;
  p.seed = seed;
  const auto gen = generate(p);
  const auto in = parse_graph(emit_graph(gen.input, gen.resolution2d, gen.family));
  ArcDiagram3D d;
  switch (method) {
    case LayoutMethod::Sphere: d = sphere_layout(in.graph); break;
    case LayoutMethod::Slanted: d = slanted_layout(in.graph, *in.drawing); break;
    case LayoutMethod::Free: d = free_layout(in.graph, *in.drawing); break;
    default: d = stationary_layout(in.graph, *in.drawing); break;
  }
  return emit_scene({d, summarize(d, certify(d))}) + export_obj(d, 8);
}

Outcome determinism() {
  Outcome o;
  for (auto m : {LayoutMethod::Sphere, LayoutMethod::Stationary, LayoutMethod::Slanted, LayoutMethod::Free}) {
    for (std::uint64_t seed : {1u, 2u, 3u}) {
      o.require(pipeline(seed, m) == pipeline(seed, m), "repeat run differs");
    }
  }
  std::mt19937_64 rng(909);
  int trips = 0;
  for (int t = 0; t < 100; ++t) {
    auto g = random_graph(rng, 6 + t % 15, 2 + t % 5, 30);
    if (g.max_degree() == 0) continue;
    auto dr = random_drawing(rng, g);
    ArcDiagram3D d;
    switch (t % 4) {
      case 0: d = sphere_layout(g); break;
      case 1: d = stationary_layout(g, dr); break;
      case 2: d = slanted_layout(g, dr); break;
      default: d = free_layout(g, dr); break;
    }
    SceneDocument doc{d, std::nullopt};
    try {
      doc.report = summarize(d, certify(d));
    } catch (const Error&) {
    }
    const auto text = emit_scene(doc);
    const auto back = parse_scene(text);
    o.require(back == doc, "parse(emit(x)) != x");
    o.require(emit_scene(back) == text, "emit(parse(text)) != text");
    ++trips;
  }
  if (o.pass) o.detail = "12 repeated pipelines identical; " + std::to_string(trips) + " scene round-trips exact";
  return o;
}

Outcome scaling() {
  Outcome o;
  const int L = 4;
  std::mt19937_64 rng(1010);
  std::vector<double> times;
  std::string detail;
  for (std::size_t m : {10000u, 20000u, 40000u}) {
    const std::size_t n = m / 3;
    auto g = random_graph(rng, n, 8, m);
    auto rot = random_rotation(rng, g);
    const int reps = 10;
    double best = std::numeric_limits<double>::infinity();
    for (int trial = 0; trial < 7; ++trial) {
      const auto start = std::chrono::steady_clock::now();
      int sink = 0;
      for (int r = 0; r < reps; ++r) sink += greedy_localized_coloring(g, rot, L).paletteSize;
      const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
      best = std::min(best, dt.count() / reps);
      o.require(sink > 0, "empty coloring");
    }
    times.push_back(best);
    detail += (detail.empty() ? "" : ", ") + std::string("m=") + std::to_string(g.edge_count()) + ": " +
              fmt(best * 1e3) + " ms";
  }
  for (std::size_t i = 1; i < times.size(); ++i) {
    const double growth = times[i] / times[i - 1];
    o.require(growth <= 4.0, "doubling m grew time by " + fmt(growth));
    detail += i == 1 ? "; growth " : ", ";
    detail += fmt(growth) + "x";
  }
  if (o.pass) o.detail = detail + " (limit 4x per doubling)";
  else o.detail += " [" + detail + "]";
  return o;
}

}  // namespace

int main() {
  const std::pair<const char*, Outcome (*)()> criteria[] = {
      {"tangent formula agreement", lemma_grid},
      {"localized coloring", localized_coloring},
      {"Vizing edge coloring", vizing},
      {"stationary guarantee", stationary},
      {"free-vertex guarantee", free_vertices},
      {"sphere guarantee", sphere},
      {"projection fidelity", projection},
      {"five-color slanted example", showcase},
      {"determinism and round-trip", determinism},
      {"localized coloring scaling", scaling},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::printf("%s criterion %d (%s): %s\n", o.pass ? "PASS" : "FAIL", index, name, o.detail.c_str());
    std::fflush(stdout);
    failures += o.pass ? 0 : 1;
  }
  std::printf("%d/%d criteria passed\n", index - failures, index);
  return failures == 0 ? 0 : 1;
}
