#include "arcdiag/io.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <sstream>

#include "json.hpp"

namespace arcdiag {

using json = nlohmann::ordered_json;

namespace {

constexpr double kPi = std::numbers::pi;

[[noreturn]] void invalid(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::ValidationError, path + ": " + what);
}

json parse_document(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& err) {
    throw Error(ErrorCode::ParseError, err.what());
  }
}

const json& require(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) invalid(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) invalid(path, std::string("missing field '") + key + "'");
  return *it;
}

double number(const json& j, const std::string& path) {
  if (!j.is_number()) invalid(path, "expected a number");
  return j.get<double>();
}

std::string string_field(const json& j, const std::string& path) {
  if (!j.is_string()) invalid(path, "expected a string");
  return j.get<std::string>();
}

std::size_t index_field(const json& j, const std::string& path) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    invalid(path, "expected a non-negative integer");
  }
  return j.get<std::size_t>();
}

int int_field(const json& j, const std::string& path) {
  if (!j.is_number_integer()) invalid(path, "expected an integer");
  return j.get<int>();
}

json vec_json(Vec3 v) { return json::array({v.x, v.y, v.z}); }

Vec3 vec_from(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 3) invalid(path, "expected [x, y, z]");
  return {number(j[0], path + "[0]"), number(j[1], path + "[1]"), number(j[2], path + "[2]")};
}

// Graph from vertex ids and [u, v] id pairs, with field paths in errors.
Graph graph_from(const std::vector<std::string>& ids, const json& edges, const std::string& path) {
  if (!edges.is_array()) invalid(path, "expected an array");
  std::unordered_map<std::string, VertexIndex> index;
  for (VertexIndex i = 0; i < ids.size(); ++i) index.emplace(ids[i], i);
  std::vector<Edge> out;
  std::set<std::pair<VertexIndex, VertexIndex>> seen;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string at = path + "[" + std::to_string(i) + "]";
    const auto& pair = edges[i];
    if (!pair.is_array() || pair.size() != 2) invalid(at, "expected [idU, idV]");
    VertexIndex ends[2];
    for (int k = 0; k < 2; ++k) {
      const auto id = string_field(pair[k], at + "[" + std::to_string(k) + "]");
      auto it = index.find(id);
      if (it == index.end()) invalid(at, "unknown vertex '" + id + "'");
      ends[k] = it->second;
    }
    if (ends[0] == ends[1]) invalid(at, "self-loop at '" + ids[ends[0]] + "'");
    if (!seen.emplace(std::min(ends[0], ends[1]), std::max(ends[0], ends[1])).second) {
      invalid(at, "duplicate edge (" + ids[ends[0]] + "," + ids[ends[1]] + ")");
    }
    out.push_back({ends[0], ends[1]});
  }
  return Graph::from_indices(ids, out);
}

}  // namespace

std::string format_double(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

// ---------------------------------------------------------------------------
// Graph documents

RotationSystem GraphInput::effective_rotation() const {
  if (rotation) return *rotation;
  if (!drawing) {
    throw Error(ErrorCode::MissingRotation, "graph has neither a rotation nor coordinates");
  }
  return rotation_from_drawing(graph, *drawing);
}

GraphInput parse_graph(std::string_view text) {
  const json doc = parse_document(text);
  if (!doc.is_object()) invalid("$", "expected an object");
  const auto& vertices = require(doc, "vertices", "$");
  if (!vertices.is_array()) invalid("vertices", "expected an array");

  std::vector<std::string> ids;
  std::vector<Point2> coords;
  std::set<std::string> seen;
  std::size_t withCoords = 0;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const std::string at = "vertices[" + std::to_string(i) + "]";
    const auto& v = vertices[i];
    const auto id = string_field(require(v, "id", at), at + ".id");
    if (!seen.insert(id).second) invalid(at, "duplicate vertex id '" + id + "'");
    ids.push_back(id);
    const bool hasX = v.contains("x");
    const bool hasY = v.contains("y");
    if (hasX != hasY) invalid(at, "needs both x and y or neither");
    if (hasX) {
      coords.push_back({number(v["x"], at + ".x"), number(v["y"], at + ".y")});
      ++withCoords;
    }
  }
  if (withCoords != 0 && withCoords != ids.size()) {
    invalid("vertices", "coordinates must be given for every vertex or none");
  }

  GraphInput out;
  out.graph = graph_from(ids, require(doc, "edges", "$"), "edges");
  if (withCoords != 0) {
    try {
      out.drawing = Drawing2D(out.graph, std::move(coords));
    } catch (const Error& err) {
      invalid("vertices", err.what());
    }
  }
  if (doc.contains("rotation")) {
    const auto& rot = doc["rotation"];
    if (!rot.is_object()) invalid("rotation", "expected an object keyed by vertex id");
    std::vector<std::vector<EdgeIndex>> order(out.graph.vertex_count());
    std::vector<char> given(out.graph.vertex_count(), 0);
    for (const auto& [id, list] : rot.items()) {
      const std::string at = "rotation." + id;
      auto v = out.graph.find(id);
      if (!v) invalid(at, "unknown vertex '" + id + "'");
      if (!list.is_array()) invalid(at, "expected an array of edge indices");
      for (std::size_t i = 0; i < list.size(); ++i) {
        order[*v].push_back(index_field(list[i], at + "[" + std::to_string(i) + "]"));
      }
      given[*v] = 1;
    }
    for (VertexIndex v = 0; v < out.graph.vertex_count(); ++v) {
      if (!given[v] && out.graph.degree(v) > 0) {
        invalid("rotation", "missing order for vertex '" + out.graph.id(v) + "'");
      }
    }
    try {
      out.rotation = RotationSystem(out.graph, std::move(order));
    } catch (const Error& err) {
      invalid("rotation", err.what());
    }
  }
  return out;
}

std::string emit_graph(const GraphInput& in, std::optional<double> resolution2d,
                       std::string_view family) {
  json doc;
  if (!family.empty() || resolution2d) {
    json meta = json::object();
    if (!family.empty()) meta["family"] = std::string(family);
    if (resolution2d) meta["resolution2d"] = *resolution2d;
    doc["meta"] = meta;
  }
  json vertices = json::array();
  for (VertexIndex v = 0; v < in.graph.vertex_count(); ++v) {
    json entry{{"id", in.graph.id(v)}};
    if (in.drawing) {
      entry["x"] = in.drawing->at(v).x;
      entry["y"] = in.drawing->at(v).y;
    }
    vertices.push_back(entry);
  }
  doc["vertices"] = vertices;
  json edges = json::array();
  for (const auto& e : in.graph.edges()) {
    edges.push_back(json::array({in.graph.id(e.u), in.graph.id(e.v)}));
  }
  doc["edges"] = edges;
  if (in.rotation) {
    json rot = json::object();
    for (VertexIndex v = 0; v < in.graph.vertex_count(); ++v) {
      const auto around = in.rotation->around(v);
      rot[in.graph.id(v)] = std::vector<EdgeIndex>(around.begin(), around.end());
    }
    doc["rotation"] = rot;
  }
  return doc.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Scenes

ReportSummary summarize(const ArcDiagram3D& d, const ResolutionReport& r) {
  ReportSummary s;
  s.minAngle = r.minAngle;
  s.argminVertex = d.graph.id(r.argminVertex);
  s.argminFirst = r.argminFirst;
  s.argminSecond = r.argminSecond;
  s.checks = r.boundChecks.size();
  s.failures = r.failures;
  s.paletteFloor = r.paletteFloor;
  s.belowPaletteFloor = r.belowPaletteFloor;
  return s;
}

std::string emit_scene(const SceneDocument& doc) {
  const auto& d = doc.diagram;
  const auto& m = d.meta;
  json out;
  out["format"] = "arcdiag-scene";
  out["version"] = 1;

  json method;
  method["name"] = std::string(to_string(m.method));
  method["paletteSize"] = m.paletteSize;
  method["edgeColors"] = m.edgeColors;
  method["vertexColors"] = m.vertexColors;
  method["L"] = m.L;
  method["interpretation"] = std::string(to_string(m.interpretation));
  json palette = json::array();
  for (const auto& c : m.palette) palette.push_back(json::array({c.tilt, c.second}));
  method["palette"] = palette;
  method["angleGap"] = m.angleGap;
  method["sphereH"] = m.sphereH;
  method["sphereEpsilon"] = m.sphereEpsilon;
  method["clusterMinDistance"] = m.clusterMinDistance;
  out["method"] = method;

  json vertices = json::array();
  for (VertexIndex v = 0; v < d.graph.vertex_count(); ++v) {
    vertices.push_back(json{{"id", d.graph.id(v)}, {"position", vec_json(d.positions[v])}});
  }
  out["vertices"] = vertices;

  json arcs = json::array();
  for (EdgeIndex e = 0; e < d.arcs.size(); ++e) {
    const auto& arc = d.arcs[e];
    const auto& ed = d.graph.edge(e);
    json a;
    a["edge"] = e;
    a["u"] = d.graph.id(ed.u);
    a["v"] = d.graph.id(ed.v);
    a["a"] = vec_json(arc.a());
    a["b"] = vec_json(arc.b());
    a["inPlaneAngle"] = arc.in_plane_angle();
    a["planeTilt"] = arc.plane_tilt();
    a["side"] = arc.side();
    a["center"] = arc.is_segment() ? json(nullptr) : vec_json(arc.center());
    a["radius"] = arc.is_segment() ? json(nullptr) : json(arc.radius());
    a["planeNormal"] = vec_json(arc.plane_normal());
    arcs.push_back(a);
  }
  out["arcs"] = arcs;

  if (doc.report) {
    const auto& r = *doc.report;
    out["report"] = json{{"minAngle", r.minAngle},
                         {"argmin", json{{"vertex", r.argminVertex},
                                         {"first", r.argminFirst},
                                         {"second", r.argminSecond}}},
                         {"checks", r.checks},
                         {"failures", r.failures},
                         {"paletteFloor", r.paletteFloor},
                         {"belowPaletteFloor", r.belowPaletteFloor}};
  }
  return out.dump(2) + "\n";
}

SceneDocument parse_scene(std::string_view text) {
  const json doc = parse_document(text);
  if (!doc.is_object()) invalid("$", "expected an object");
  if (require(doc, "format", "$") != "arcdiag-scene") invalid("format", "not an arcdiag scene");

  SceneDocument out;
  auto& d = out.diagram;
  auto& m = d.meta;

  const auto& method = require(doc, "method", "$");
  const auto name = string_field(require(method, "name", "method"), "method.name");
  auto parsedMethod = parse_layout_method(name);
  if (!parsedMethod) invalid("method.name", "unknown method '" + name + "'");
  m.method = *parsedMethod;
  m.paletteSize = int_field(require(method, "paletteSize", "method"), "method.paletteSize");
  for (const auto* key : {"edgeColors", "vertexColors"}) {
    const auto& list = require(method, key, "method");
    if (!list.is_array()) invalid(std::string("method.") + key, "expected an array");
    auto& target = std::string_view(key) == "edgeColors" ? m.edgeColors : m.vertexColors;
    for (std::size_t i = 0; i < list.size(); ++i) {
      target.push_back(int_field(list[i], std::string("method.") + key + "[" + std::to_string(i) + "]"));
    }
  }
  m.L = int_field(require(method, "L", "method"), "method.L");
  const auto interp = string_field(require(method, "interpretation", "method"), "method.interpretation");
  auto parsedInterp = parse_slanted_interpretation(interp);
  if (!parsedInterp) invalid("method.interpretation", "unknown value '" + interp + "'");
  m.interpretation = *parsedInterp;
  const auto& palette = require(method, "palette", "method");
  if (!palette.is_array()) invalid("method.palette", "expected an array");
  for (std::size_t i = 0; i < palette.size(); ++i) {
    const std::string at = "method.palette[" + std::to_string(i) + "]";
    if (!palette[i].is_array() || palette[i].size() != 2) invalid(at, "expected [tilt, second]");
    m.palette.push_back({number(palette[i][0], at), number(palette[i][1], at)});
  }
  m.angleGap = number(require(method, "angleGap", "method"), "method.angleGap");
  m.sphereH = number(require(method, "sphereH", "method"), "method.sphereH");
  m.sphereEpsilon = number(require(method, "sphereEpsilon", "method"), "method.sphereEpsilon");
  m.clusterMinDistance =
      number(require(method, "clusterMinDistance", "method"), "method.clusterMinDistance");

  const auto& vertices = require(doc, "vertices", "$");
  if (!vertices.is_array()) invalid("vertices", "expected an array");
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const std::string at = "vertices[" + std::to_string(i) + "]";
    ids.push_back(string_field(require(vertices[i], "id", at), at + ".id"));
    d.positions.push_back(vec_from(require(vertices[i], "position", at), at + ".position"));
  }

  const auto& arcs = require(doc, "arcs", "$");
  if (!arcs.is_array()) invalid("arcs", "expected an array");
  json pairs = json::array();
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const std::string at = "arcs[" + std::to_string(i) + "]";
    if (index_field(require(arcs[i], "edge", at), at + ".edge") != i) {
      invalid(at + ".edge", "arcs must be listed in edge order");
    }
    pairs.push_back(json::array({require(arcs[i], "u", at), require(arcs[i], "v", at)}));
  }
  try {
    d.graph = graph_from(ids, pairs, "arcs");
  } catch (const Error& err) {
    if (err.code() == ErrorCode::ValidationError) throw;
    invalid("vertices", err.what());
  }

  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const std::string at = "arcs[" + std::to_string(i) + "]";
    const auto& j = arcs[i];
    const Vec3 a = vec_from(require(j, "a", at), at + ".a");
    const Vec3 b = vec_from(require(j, "b", at), at + ".b");
    const double inPlane = number(require(j, "inPlaneAngle", at), at + ".inPlaneAngle");
    const double tilt = number(require(j, "planeTilt", at), at + ".planeTilt");
    const int side = int_field(require(j, "side", at), at + ".side");
    try {
      d.arcs.push_back(make_arc(a, b, inPlane, tilt, side));
    } catch (const Error& err) {
      invalid(at, err.what());
    }
    const auto& arc = d.arcs.back();
    const auto near = [](Vec3 p, Vec3 q) { return distance(p, q) <= 1e-9 * (1.0 + norm(p)); };
    if (!near(vec_from(require(j, "planeNormal", at), at + ".planeNormal"), arc.plane_normal())) {
      invalid(at + ".planeNormal", "inconsistent with the arc parameters");
    }
    const auto& center = require(j, "center", at);
    if (arc.is_segment() != center.is_null()) invalid(at + ".center", "inconsistent with inPlaneAngle");
    if (!arc.is_segment() && !near(vec_from(center, at + ".center"), arc.center())) {
      invalid(at + ".center", "inconsistent with the arc parameters");
    }
  }
  try {
    validate_diagram(d);
  } catch (const Error& err) {
    invalid("arcs", err.what());
  }

  if (doc.contains("report")) {
    const auto& r = doc["report"];
    ReportSummary s;
    s.minAngle = number(require(r, "minAngle", "report"), "report.minAngle");
    const auto& argmin = require(r, "argmin", "report");
    s.argminVertex = string_field(require(argmin, "vertex", "report.argmin"), "report.argmin.vertex");
    s.argminFirst = index_field(require(argmin, "first", "report.argmin"), "report.argmin.first");
    s.argminSecond = index_field(require(argmin, "second", "report.argmin"), "report.argmin.second");
    s.checks = index_field(require(r, "checks", "report"), "report.checks");
    s.failures = index_field(require(r, "failures", "report"), "report.failures");
    s.paletteFloor = number(require(r, "paletteFloor", "report"), "report.paletteFloor");
    s.belowPaletteFloor =
        index_field(require(r, "belowPaletteFloor", "report"), "report.belowPaletteFloor");
    out.report = s;
  }
  return out;
}

std::string export_obj(const ArcDiagram3D& d, int samples) {
  if (samples < 2) throw Error(ErrorCode::BadParams, "OBJ export needs at least 2 samples per arc");
  std::ostringstream os;
  os << "# arcdiag arc polylines\n";
  os << "# " << d.arcs.size() << " arcs, " << samples << " samples each\n";
  for (const auto& arc : d.arcs) {
    for (const auto& p : sample_arc(arc, samples)) {
      os << "v " << format_double(p.x) << ' ' << format_double(p.y) << ' ' << format_double(p.z)
         << '\n';
    }
  }
  std::size_t next = 1;
  for (EdgeIndex e = 0; e < d.arcs.size(); ++e) {
    os << "l";
    for (int i = 0; i < samples; ++i) os << ' ' << next++;
    os << '\n';
  }
  return os.str();
}

std::string emit_edge_coloring(const Graph& g, const EdgeColoring& col, std::string_view method,
                               int L) {
  json out;
  out["method"] = std::string(method);
  if (L > 0) out["L"] = L;
  out["paletteSize"] = col.paletteSize;
  json colors = json::array();
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    colors.push_back(json{{"edge", json::array({g.id(g.edge(e).u), g.id(g.edge(e).v)})},
                          {"color", col.color[e]}});
  }
  out["colors"] = colors;
  return out.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Generators

std::optional<GraphFamily> parse_family(std::string_view s) {
  if (s == "star") return GraphFamily::Star;
  if (s == "fan") return GraphFamily::Fan;
  if (s == "grid") return GraphFamily::Grid;
  if (s == "random") return GraphFamily::Random;
  if (s == "complete") return GraphFamily::Complete;
  return std::nullopt;
}

namespace {

// Distribution helpers over raw mt19937_64 output; the standard distributions
// are implementation-defined and would make files differ across libraries.
double unit_real(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }
std::size_t below(std::mt19937_64& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

GeneratedGraph finish(std::vector<std::string> ids, std::vector<Edge> edges,
                      std::vector<Point2> pos, std::optional<double> res, std::string family) {
  GeneratedGraph out;
  out.input.graph = Graph::from_indices(std::move(ids), edges);
  out.input.drawing = Drawing2D(out.input.graph, std::move(pos));
  out.resolution2d = res;
  out.family = std::move(family);
  return out;
}

void bad(const std::string& msg) { throw Error(ErrorCode::BadParams, msg); }

}  // namespace

GeneratedGraph generate(const GenerateParams& p) {
  std::vector<std::string> ids;
  std::vector<Edge> edges;
  std::vector<Point2> pos;
  switch (p.family) {
    case GraphFamily::Star:
    case GraphFamily::Fan: {
      const bool fan = p.family == GraphFamily::Fan;
      if (p.k < (fan ? 2 : 1)) bad(fan ? "fan needs k >= 2" : "star needs k >= 1");
      if (fan && !(p.spread > 0.0 && p.spread < kPi)) bad("fan spread must lie in (0, pi)");
      ids.push_back("c");
      pos.push_back({0.0, 0.0});
      for (int i = 0; i < p.k; ++i) {
        const double angle = fan ? p.spread * i / (p.k - 1) : 2.0 * kPi * i / p.k;
        ids.push_back("l" + std::to_string(i));
        pos.push_back({std::cos(angle), std::sin(angle)});
        edges.push_back({0, static_cast<VertexIndex>(i + 1)});
      }
      std::optional<double> res;
      if (fan) res = p.spread / (p.k - 1);
      else if (p.k >= 2) res = 2.0 * kPi / p.k;
      return finish(ids, edges, pos, res, fan ? "fan" : "star");
    }
    case GraphFamily::Grid: {
      if (p.width < 1 || p.height < 1 || p.width * p.height < 2) bad("grid needs at least 2 cells");
      const auto at = [&](int x, int y) { return static_cast<VertexIndex>(y * p.width + x); };
      for (int y = 0; y < p.height; ++y) {
        for (int x = 0; x < p.width; ++x) {
          ids.push_back("g" + std::to_string(x) + "_" + std::to_string(y));
          pos.push_back({static_cast<double>(x), static_cast<double>(y)});
          if (x > 0) edges.push_back({at(x - 1, y), at(x, y)});
          if (y > 0) edges.push_back({at(x, y - 1), at(x, y)});
        }
      }
      std::optional<double> res;
      if (p.width >= 2 && p.height >= 2) res = kPi / 2.0;
      else if (p.width * p.height >= 3) res = kPi;
      return finish(ids, edges, pos, res, "grid");
    }
    case GraphFamily::Complete: {
      if (p.k < 2) bad("complete graph needs k >= 2");
      for (int i = 0; i < p.k; ++i) {
        const double angle = 2.0 * kPi * i / p.k;
        ids.push_back("k" + std::to_string(i));
        pos.push_back({std::cos(angle), std::sin(angle)});
        for (int j = 0; j < i; ++j) {
          edges.push_back({static_cast<VertexIndex>(j), static_cast<VertexIndex>(i)});
        }
      }
      std::optional<double> res;
      if (p.k >= 3) res = kPi / p.k;
      return finish(ids, edges, pos, res, "complete");
    }
    case GraphFamily::Random: {
      if (p.n < 2) bad("random graph needs n >= 2");
      if (p.maxDegree < 1) bad("random graph needs d >= 1");
      if (p.drawing == DrawingMode::Collinear && !(p.jitter > 0.0)) bad("jitter must be positive");
      std::mt19937_64 rng(p.seed);
      const auto n = static_cast<std::size_t>(p.n);
      for (std::size_t i = 0; i < n; ++i) ids.push_back("v" + std::to_string(i));
      std::vector<int> degree(n, 0);
      std::set<std::pair<VertexIndex, VertexIndex>> seen;
      const std::size_t target = n * static_cast<std::size_t>(p.maxDegree) / 2;
      for (std::size_t attempt = 0; attempt < 20 * target && edges.size() < target; ++attempt) {
        const auto u = below(rng, n);
        const auto v = below(rng, n);
        if (u == v || degree[u] >= p.maxDegree || degree[v] >= p.maxDegree) continue;
        if (!seen.emplace(std::min(u, v), std::max(u, v)).second) continue;
        edges.push_back({u, v});
        ++degree[u];
        ++degree[v];
      }
      std::set<std::pair<double, double>> used;
      for (std::size_t i = 0; i < n; ++i) {
        Point2 q;
        do {
          if (p.drawing == DrawingMode::Uniform) {
            q = {unit_real(rng), unit_real(rng)};
          } else {
            q = {static_cast<double>(i), p.jitter * (unit_real(rng) - 0.5)};
          }
        } while (!used.emplace(q.x, q.y).second);
        pos.push_back(q);
      }
      auto out = finish(ids, edges, pos, std::nullopt, "random");
      try {
        out.resolution2d = angular_resolution_2d(out.input.graph, *out.input.drawing);
      } catch (const Error&) {
      }
      return out;
    }
  }
  bad("unknown family");
  return {};
}

}  // namespace arcdiag
