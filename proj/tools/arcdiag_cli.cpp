#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "arcdiag/io.hpp"
#include "arcdiag/layout.hpp"
#include "json.hpp"

namespace {

using namespace arcdiag;
using json = nlohmann::ordered_json;

constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitBound = 3;

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ValidationError, "cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::ValidationError, "cannot write '" + path + "'");
  out << text;
}

const Drawing2D& need_drawing(const GraphInput& in, std::string_view method) {
  if (!in.drawing) {
    throw Error(ErrorCode::ValidationError,
                "vertices: layout --method " + std::string(method) + " needs x/y coordinates");
  }
  return *in.drawing;
}

json angle_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

struct GenerateArgs {
  std::string family;
  std::optional<int> size;
  GenerateParams params;
  std::string drawing = "uniform";
  std::string output;
};

int run_generate(GenerateArgs& a) {
  auto family = parse_family(a.family);
  if (!family) throw Error(ErrorCode::BadParams, "unknown family '" + a.family + "'");
  a.params.family = *family;
  if (a.size) {
    if (*family == GraphFamily::Random) a.params.n = *a.size;
    else if (*family == GraphFamily::Grid) a.params.width = a.params.height = *a.size;
    else a.params.k = *a.size;
  }
  if (a.drawing == "uniform") a.params.drawing = DrawingMode::Uniform;
  else if (a.drawing == "collinear") a.params.drawing = DrawingMode::Collinear;
  else throw Error(ErrorCode::BadParams, "unknown drawing '" + a.drawing + "'");
  const auto gen = generate(a.params);
  write_output(a.output, emit_graph(gen.input, gen.resolution2d, gen.family));
  return 0;
}

struct ColorArgs {
  std::string input;
  std::string output;
  bool localized = false;
  int L = 2;
};

int run_color(const ColorArgs& a) {
  const auto in = parse_graph(read_input(a.input));
  if (!a.localized) {
    write_output(a.output, emit_edge_coloring(in.graph, edge_coloring_vizing(in.graph), "vizing"));
    return 0;
  }
  const auto col = localized_edge_coloring(in.graph, in.effective_rotation(), a.L);
  write_output(a.output, emit_edge_coloring(in.graph, col, "localized", a.L));
  return 0;
}

struct LayoutArgs {
  std::string input;
  std::string output;
  std::string method = "stationary";
  std::optional<int> L;
  std::string interpretation = "inplane";
  int side = 1;
  std::optional<double> epsilonFraction;
  double clearanceThreshold = 1e-6;
  int clearanceSamples = 16;
};

int run_layout(const LayoutArgs& a) {
  const auto in = parse_graph(read_input(a.input));
  auto method = parse_layout_method(a.method);
  if (!method || *method == LayoutMethod::Custom) {
    throw Error(ErrorCode::BadParams, "unknown method '" + a.method + "'");
  }
  ArcDiagram3D d;
  switch (*method) {
    case LayoutMethod::Sphere:
      d = sphere_layout(in.graph);
      break;
    case LayoutMethod::Stationary:
      d = stationary_layout(in.graph, need_drawing(in, a.method));
      break;
    case LayoutMethod::Slanted: {
      SlantedOptions opts;
      auto interp = parse_slanted_interpretation(a.interpretation);
      if (!interp) throw Error(ErrorCode::BadParams, "unknown interpretation '" + a.interpretation + "'");
      opts.interpretation = *interp;
      opts.side = a.side;
      d = slanted_layout(in.graph, need_drawing(in, a.method), opts);
      break;
    }
    case LayoutMethod::Free: {
      FreeOptions opts;
      opts.L = a.L;
      opts.rotation = in.rotation;
      d = free_layout(in.graph, need_drawing(in, a.method), opts);
      break;
    }
    case LayoutMethod::Custom:
      break;
  }
  if (a.epsilonFraction) {
    ClearanceOptions opts;
    opts.samples = a.clearanceSamples;
    opts.threshold = a.clearanceThreshold;
    d = perturb(d, *a.epsilonFraction, opts);
  }
  SceneDocument doc{d, std::nullopt};
  if (d.graph.edge_count() > 0) {
    try {
      doc.report = summarize(d, certify(d));
    } catch (const Error& err) {
      if (err.code() != ErrorCode::NoAngles) throw;
    }
  }
  write_output(a.output, emit_scene(doc));
  return 0;
}

struct SceneArgs {
  std::string input;
  std::string output;
  int samples = 16;
};

int run_measure(const SceneArgs& a) {
  const auto scene = parse_scene(read_input(a.input));
  const auto& d = scene.diagram;
  const auto r = angular_resolution_3d(d);
  json out;
  out["minAngle"] = r.minAngle;
  out["argmin"] = json{{"vertex", d.graph.id(r.argminVertex)},
                       {"first", r.argminFirst},
                       {"second", r.argminSecond}};
  json per = json::object();
  for (VertexIndex v = 0; v < d.graph.vertex_count(); ++v) {
    per[d.graph.id(v)] = angle_or_null(r.perVertexMin[v]);
  }
  out["perVertexMin"] = per;
  write_output(a.output, out.dump(2) + "\n");
  return 0;
}

int run_check(const SceneArgs& a) {
  const auto scene = parse_scene(read_input(a.input));
  const auto& d = scene.diagram;
  const auto r = certify(d);
  json out;
  out["method"] = std::string(to_string(d.meta.method));
  out["minAngle"] = r.minAngle;
  out["checks"] = r.boundChecks.size();
  out["failures"] = r.failures;
  out["paletteFloor"] = r.paletteFloor;
  out["belowPaletteFloor"] = r.belowPaletteFloor;
  json failing = json::array();
  for (const auto& c : r.boundChecks) {
    if (c.pass) continue;
    failing.push_back(json{{"vertex", d.graph.id(c.vertex)},
                           {"first", d.graph.describe_edge(c.first)},
                           {"second", d.graph.describe_edge(c.second)},
                           {"measured", c.measured},
                           {"guaranteed", c.guaranteed}});
  }
  out["failing"] = failing;
  write_output(a.output, out.dump(2) + "\n");
  if (!r.all_pass()) {
    std::cerr << "check: " << r.failures << " bound violation(s)\n";
    return kExitBound;
  }
  return 0;
}

int run_export(const SceneArgs& a) {
  const auto scene = parse_scene(read_input(a.input));
  write_output(a.output, export_obj(scene.diagram, a.samples));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"3D arc diagram layouts with angular resolution guarantees"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* genCmd = app.add_subcommand("generate", "Generate a graph with a straight-line drawing");
  genCmd->add_option("family", gen.family, "star | fan | grid | random | complete")->required();
  genCmd->add_option("size", gen.size, "leaves (star, fan), vertices (random, complete), side (grid)");
  genCmd->add_option("--k", gen.params.k, "Leaves or vertices");
  genCmd->add_option("--spread", gen.params.spread, "Fan opening angle in radians");
  genCmd->add_option("--width", gen.params.width, "Grid width");
  genCmd->add_option("--height", gen.params.height, "Grid height");
  genCmd->add_option("--n", gen.params.n, "Random: vertex count");
  genCmd->add_option("--d", gen.params.maxDegree, "Random: maximum degree");
  genCmd->add_option("--drawing", gen.drawing, "Random: uniform | collinear");
  genCmd->add_option("--jitter", gen.params.jitter, "Random collinear: vertical noise");
  genCmd->add_option("--seed", gen.params.seed, "Random seed");
  genCmd->add_option("-o,--output", gen.output, "Output file (default stdout)");

  ColorArgs color;
  auto* colorCmd = app.add_subcommand("color-edges", "Edge-color a graph");
  colorCmd->add_option("input", color.input, "Graph file (default stdin)");
  colorCmd->add_flag("--localized", color.localized, "L-localized coloring");
  colorCmd->add_option("--L", color.L, "Window size (even, >= 2)");
  colorCmd->add_option("-o,--output", color.output, "Output file (default stdout)");

  LayoutArgs layout;
  auto* layoutCmd = app.add_subcommand("layout", "Compute a 3D arc diagram scene");
  layoutCmd->add_option("input", layout.input, "Graph file (default stdin)");
  layoutCmd->add_option("--method", layout.method, "sphere | stationary | slanted | free")
      ->check(CLI::IsMember({"sphere", "stationary", "slanted", "free"}));
  layoutCmd->add_option("--L", layout.L, "Free method: window size");
  layoutCmd->add_option("--slanted-interpretation", layout.interpretation, "inplane | elevation")
      ->check(CLI::IsMember({"inplane", "elevation"}));
  layoutCmd->add_option("--side", layout.side, "Slanted method: +1 or -1");
  layoutCmd->add_option("--epsilon-fraction", layout.epsilonFraction,
                        "Perturb near-touching arcs by this fraction of the angle gap");
  layoutCmd->add_option("--clearance-threshold", layout.clearanceThreshold,
                        "Distance below which arcs count as touching");
  layoutCmd->add_option("--clearance-samples", layout.clearanceSamples, "Samples per arc");
  layoutCmd->add_option("-o,--output", layout.output, "Output file (default stdout)");

  SceneArgs measure;
  auto* measureCmd = app.add_subcommand("measure", "Measure the 3D angular resolution of a scene");
  measureCmd->add_option("input", measure.input, "Scene file (default stdin)");
  measureCmd->add_option("-o,--output", measure.output, "Output file (default stdout)");

  SceneArgs check;
  auto* checkCmd = app.add_subcommand("check", "Certify a scene against its per-pair bounds");
  checkCmd->add_option("input", check.input, "Scene file (default stdin)");
  checkCmd->add_option("-o,--output", check.output, "Output file (default stdout)");

  SceneArgs exportArgs;
  bool obj = true;
  auto* exportCmd = app.add_subcommand("export", "Export scene arcs as polylines");
  exportCmd->add_option("input", exportArgs.input, "Scene file (default stdin)");
  exportCmd->add_flag("--obj", obj, "Wavefront OBJ (the only format)");
  exportCmd->add_option("--samples", exportArgs.samples, "Points per arc (>= 2)");
  exportCmd->add_option("-o,--output", exportArgs.output, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*genCmd) return run_generate(gen);
    if (*colorCmd) return run_color(color);
    if (*layoutCmd) return run_layout(layout);
    if (*measureCmd) return run_measure(measure);
    if (*checkCmd) return run_check(check);
    if (*exportCmd) return run_export(exportArgs);
  } catch (const Error& err) {
    std::cerr << "error: " << err.what() << '\n';
    return err.code() == ErrorCode::BoundViolation ? kExitBound : kExitValidation;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kExitValidation;
  }
  return kExitUsage;
}
