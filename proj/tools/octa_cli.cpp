// octa: command-line front end over the octa C API.
//
// Every command prints one JSON response envelope on stdout
//   {"status": "ok"|"error", "command": ..., "payload": ..., "diagnostics": [...]}
// except `sweep`, which prints one JSON object per grid point (JSON Lines).
// Exit codes: 0 success, 1 input validation error, 2 internal numeric failure.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "angle_parse.hpp"
#include "octa/octa.h"

namespace {

using json = nlohmann::ordered_json;
using octa::cli::ParseError;

constexpr const char* kSeedVariable = "OCTA_SEED";
constexpr std::uint64_t kFallbackSeed = 20240611;
constexpr double kPi = 3.14159265358979323846;

struct CommandError {
  std::string code;
  std::string message;
  int exit_code;
};

[[noreturn]] void invalid(const std::string& message) { throw CommandError{"InvalidInput", message, 1}; }

void check(octa_status s) {
  if (s == OCTA_OK) return;
  throw CommandError{octa_status_name(s), octa_last_error_message(),
                     octa_status_is_validation_error(s) ? 1 : 2};
}

using DeficitsPtr = std::unique_ptr<octa_deficits, decltype(&octa_deficits_destroy)>;
using OctahedronPtr = std::unique_ptr<octa_octahedron, decltype(&octa_octahedron_destroy)>;
using ComplexPtr = std::unique_ptr<octa_complex, decltype(&octa_complex_destroy)>;

json array_of(const double* v, int n) {
  json a = json::array();
  for (int i = 0; i < n; ++i) a.push_back(v[i]);
  return a;
}

struct Context {
  json request;
  json diagnostics = json::array();

  const json& options() const {
    static const json empty = json::object();
    const auto it = request.find("options");
    return it != request.end() && it->is_object() ? *it : empty;
  }

  bool degrees() const { return options().value("degrees", false); }

  template <class T>
  std::optional<T> option(const char* key) const {
    const auto& o = options();
    const auto it = o.find(key);
    if (it == o.end() || it->is_null()) return std::nullopt;
    try {
      return it->get<T>();
    } catch (const json::exception&) {
      invalid(std::string("option '") + key + "' has the wrong type");
    }
  }

  const json& field(const char* key) const {
    const auto it = request.find(key);
    if (it == request.end() || it->is_null()) invalid(std::string("missing field '") + key + "'");
    return *it;
  }
};

double angle_value(const json& v, bool degrees) {
  if (v.is_number()) return degrees ? v.get<double>() * kPi / 180.0 : v.get<double>();
  if (v.is_string()) return octa::cli::parse_angle(v.get<std::string>(), degrees);
  invalid("angles must be numbers or strings");
}

DeficitsPtr make_deficits(Context& ctx) {
  const json& raw = ctx.field("deficits");
  std::vector<double> d;
  if (raw.is_string()) {
    d = octa::cli::parse_angle_list(raw.get<std::string>(), ctx.degrees());
  } else if (raw.is_array()) {
    for (const auto& v : raw) d.push_back(angle_value(v, ctx.degrees()));
  } else {
    invalid("deficits must be a string or an array");
  }
  if (d.size() != 3) invalid("expected exactly three deficits");
  octa_deficits* out = nullptr;
  check(octa_deficits_create(d[0], d[1], d[2], &out));
  DeficitsPtr ptr(out, octa_deficits_destroy);
  const double excess = d[0] + d[1] + d[2] - 2.0 * kPi;
  if (std::abs(excess) > 1e-12) {
    ctx.diagnostics.push_back("deficit sum differed from 2pi by " + json(excess).dump() +
                              "; renormalized");
  }
  return ptr;
}

json deficit_values(const octa_deficits* d) {
  double v[3];
  check(octa_deficits_values(d, v));
  return array_of(v, 3);
}

std::vector<double> numbers(const json& raw, std::size_t expected, const char* what) {
  std::vector<double> out;
  if (raw.is_string()) {
    out = octa::cli::parse_number_list(raw.get<std::string>());
  } else if (raw.is_array()) {
    for (const auto& v : raw) {
      if (v.is_array()) {
        for (const auto& w : v) {
          if (!w.is_number()) invalid(std::string(what) + " entries must be numbers");
          out.push_back(w.get<double>());
        }
      } else if (v.is_number()) {
        out.push_back(v.get<double>());
      } else {
        invalid(std::string(what) + " entries must be numbers");
      }
    }
  } else {
    invalid(std::string(what) + " must be a string or an array");
  }
  if (out.size() != expected) {
    invalid(std::string(what) + " needs " + std::to_string(expected) + " numbers");
  }
  return out;
}

std::array<double, 4> chart_field(const Context& ctx, const char* key) {
  const auto v = numbers(ctx.field(key), 4, key);
  return {v[0], v[1], v[2], v[3]};
}

const char* coord_name(int i) {
  static constexpr const char* kNames[] = {"a", "b", "c", "d"};
  return kNames[i];
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv(kSeedVariable)) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      invalid(std::string(kSeedVariable) + " is not an unsigned integer");
    }
  }
  return kFallbackSeed;
}

// ---- commands -----------------------------------------------------------------

json cmd_gram(Context& ctx) {
  auto d = make_deficits(ctx);
  double m[16];
  check(octa_gram_matrix(d.get(), m));
  json rows = json::array();
  for (int i = 0; i < 4; ++i) rows.push_back(array_of(m + 4 * i, 4));
  return {{"deficits", deficit_values(d.get())}, {"matrix", rows}};
}

json cmd_spectrum(Context& ctx) {
  auto d = make_deficits(ctx);
  double x[4];
  check(octa_spectrum(d.get(), x));
  int pos = 0, neg = 0;
  check(octa_signature(d.get(), &pos, &neg));
  return {{"deficits", deficit_values(d.get())},
          {"eigenvalues", array_of(x, 4)},
          {"signature", {{"positive", pos}, {"negative", neg}}}};
}

json dihedral_angles(const octa_deficits* d) {
  static constexpr std::pair<int, int> kPairs[] = {{0, 1}, {2, 3}, {0, 2}, {1, 3}, {0, 3}, {1, 2}};
  json angles = json::object();
  for (const auto& [i, j] : kPairs) {
    double a = 0.0;
    check(octa_dihedral_angle(d, i, j, &a));
    angles[std::string(coord_name(i)) + coord_name(j)] = a;
  }
  return angles;
}

json cmd_dihedral(Context& ctx) {
  auto d = make_deficits(ctx);
  return {{"deficits", deficit_values(d.get())}, {"angles", dihedral_angles(d.get())}};
}

json cmd_volume(Context& ctx) {
  auto d = make_deficits(ctx);
  double v = 0.0;
  check(octa_tetrahedron_volume(d.get(), &v));
  json payload = {{"deficits", deficit_values(d.get())}, {"volume", v}};
  if (const auto samples = ctx.option<std::uint64_t>("mc")) {
    octa_mc_options opts{};
    opts.samples = *samples;
    opts.seed = ctx.option<std::uint64_t>("seed").value_or(default_seed());
    opts.truncation = ctx.option<double>("truncation").value_or(1e-3);
    opts.workers = ctx.option<unsigned>("workers").value_or(1u);
    octa_volume_estimate est{};
    check(octa_monte_carlo_volume(d.get(), &opts, &est));
    payload["monte_carlo"] = {{"samples", est.samples},
                              {"seed", est.seed},
                              {"truncation", est.truncation},
                              {"value", est.value},
                              {"std_error", est.std_error},
                              {"value_half_truncation", est.value_half_truncation},
                              {"std_error_half_truncation", est.std_error_half_truncation},
                              {"relative_error", (est.value - v) / v}};
  }
  return payload;
}

json cmd_embed(Context& ctx) {
  const auto v = numbers(ctx.field("vertices"), 9, "vertices");
  octa_octahedron* raw = nullptr;
  check(octa_octahedron_create(v.data(), &raw));
  OctahedronPtr e(raw, octa_octahedron_destroy);
  double deficits[3], chart[4], alpha = 0.0, beta = 0.0, direct = 0.0, formula = 0.0;
  check(octa_octahedron_deficits(e.get(), deficits));
  check(octa_octahedron_alpha_beta(e.get(), &alpha, &beta));
  check(octa_octahedron_chart(e.get(), chart));
  check(octa_octahedron_surface_area(e.get(), &direct));
  octa_deficits* dr = nullptr;
  check(octa_deficits_create(deficits[0], deficits[1], deficits[2], &dr));
  DeficitsPtr d(dr, octa_deficits_destroy);
  check(octa_area(d.get(), chart, &formula));
  return {{"deficits", array_of(deficits, 3)}, {"alpha", alpha},
          {"beta", beta},                       {"chart", array_of(chart, 4)},
          {"area_direct", direct},              {"area_formula", formula},
          {"residual", std::abs(direct - formula) / direct}};
}

json cmd_chart(Context& ctx) {
  auto d = make_deficits(ctx);
  const auto chart = chart_field(ctx, "chart");
  octa_complex* raw = nullptr;
  check(octa_complex_build(d.get(), chart.data(), &raw));
  ComplexPtr g(raw, octa_complex_destroy);

  json faces = json::array();
  double face_area = 0.0;
  for (int f = 0; f < 12; ++f) {
    octa_face_info info{};
    check(octa_complex_face(g.get(), f, &info));
    face_area += info.side_u * info.side_v * std::sin(info.corner_angle);
    faces.push_back({{"label", info.label},
                     {"corners", {info.corners[0], info.corners[1], info.corners[2], info.corners[3]}},
                     {"sides", {info.side_u, info.side_v}},
                     {"side_coords", {coord_name(info.side_coords[0]), coord_name(info.side_coords[1])}},
                     {"corner_angle", info.corner_angle},
                     {"deficit", info.deficit_index + 1}});
  }
  static constexpr const char* kVertices[] = {"v1", "v2", "v3", "v1'", "v2'", "v3'", "O1",
                                              "O2", "O3", "O4", "O1'", "O2'", "O3'", "O4'"};
  json cone = json::object();
  for (const char* v : kVertices) {
    double a = 0.0;
    check(octa_complex_cone_angle(g.get(), v, &a));
    cone[v] = a;
  }
  int nv = 0, ne = 0, nf = 0, euler = 0, automorphism = 0;
  check(octa_complex_counts(g.get(), &nv, &ne, &nf));
  check(octa_complex_euler_characteristic(g.get(), &euler));
  check(octa_complex_antipodal_automorphism(g.get(), &automorphism));
  double area = 0.0;
  check(octa_area(d.get(), chart.data(), &area));

  json payload = {{"deficits", deficit_values(d.get())},
                  {"chart", array_of(chart.data(), 4)},
                  {"parallelograms", faces},
                  {"cone_angles", cone},
                  {"vertex_count", nv},
                  {"edge_count", ne},
                  {"face_count", nf},
                  {"euler_characteristic", euler},
                  {"antipodal_automorphism", automorphism != 0},
                  {"area", area},
                  {"face_area_sum", face_area}};

  if (const auto path = ctx.option<std::string>("svg")) {
    octa_svg_options opts{0.0, -1.0, 1};
    std::size_t needed = 0;
    octa_svg_net(d.get(), chart.data(), &opts, nullptr, 0, &needed);
    std::string buf(needed, '\0');
    check(octa_svg_net(d.get(), chart.data(), &opts, buf.data(), buf.size(), &needed));
    buf.resize(needed - 1);
    std::ofstream out(*path, std::ios::binary);
    if (!(out << buf)) invalid("cannot write SVG to '" + *path + "'");
    payload["svg"] = *path;
  }
  return payload;
}

json cmd_distance(Context& ctx) {
  auto d = make_deficits(ctx);
  const auto c1 = chart_field(ctx, "chart1");
  const auto c2 = chart_field(ctx, "chart2");
  double p[4], q[4], dist = 0.0, kp[3], kq[3];
  check(octa_normalize(d.get(), c1.data(), p));
  check(octa_normalize(d.get(), c2.data(), q));
  check(octa_distance(d.get(), p, q, &dist));
  check(octa_klein_coordinates(d.get(), p, kp));
  check(octa_klein_coordinates(d.get(), q, kq));
  return {{"deficits", deficit_values(d.get())},
          {"distance", dist},
          {"normalized", {array_of(p, 4), array_of(q, 4)}},
          {"klein_points", {array_of(kp, 3), array_of(kq, 3)}}};
}

json cmd_canon(Context& ctx) {
  auto d = make_deficits(ctx);
  const auto chart = chart_field(ctx, "chart");
  const double tol = ctx.option<double>("tol").value_or(1e-9);
  if (!(tol >= 0.0)) invalid("tol must be non-negative");
  octa_symmetry_info info{};
  check(octa_symmetry_group(d.get(), tol, &info));
  double canon[4];
  check(octa_canonical_form(d.get(), tol, chart.data(), canon));
  static constexpr const char* kKinds[] = {"trivial", "dihedral_D2", "full_S4"};
  json gens = json::array();
  for (int k = 0; k < info.generator_count; ++k) {
    gens.push_back({info.generators[k][0], info.generators[k][1], info.generators[k][2],
                    info.generators[k][3]});
  }
  return {{"deficits", deficit_values(d.get())},
          {"group_kind", kKinds[info.kind]},
          {"generators", gens},
          {"chart", array_of(chart.data(), 4)},
          {"canonical_chart", array_of(canon, 4)}};
}

json execute(Context& ctx) {
  const std::string command = ctx.field("command").get<std::string>();
  if (command == "gram") return cmd_gram(ctx);
  if (command == "spectrum") return cmd_spectrum(ctx);
  if (command == "dihedral") return cmd_dihedral(ctx);
  if (command == "volume") return cmd_volume(ctx);
  if (command == "embed") return cmd_embed(ctx);
  if (command == "chart") return cmd_chart(ctx);
  if (command == "distance") return cmd_distance(ctx);
  if (command == "canon") return cmd_canon(ctx);
  invalid("unknown command '" + command + "'");
}

json error_envelope(const json& command, const std::string& code, const std::string& message) {
  return {{"status", "error"},
          {"command", command},
          {"error", {{"code", code}, {"message", message}}},
          {"payload", nullptr}};
}

int fail(const json& command, const std::string& code, const std::string& message, int exit_code) {
  json envelope = error_envelope(command, code, message);
  envelope["diagnostics"] = json::array();
  std::cout << envelope.dump(2) << '\n';
  return exit_code;
}

// Runs a request and prints its envelope; returns the process exit code.
int respond(json request) {
  if (!request.is_object()) return fail(nullptr, "InvalidInput", "request must be a JSON object", 1);
  Context ctx{std::move(request)};
  const json command = ctx.request.value("command", json());
  json envelope;
  int code = 0;
  try {
    envelope = {{"status", "ok"}, {"command", command}, {"payload", execute(ctx)}};
  } catch (const CommandError& e) {
    envelope = error_envelope(command, e.code, e.message);
    code = e.exit_code;
  } catch (const ParseError& e) {
    envelope = error_envelope(command, "InvalidInput", e.what());
    code = 1;
  } catch (const json::exception& e) {
    envelope = error_envelope(command, "InvalidInput", e.what());
    code = 1;
  }
  envelope["diagnostics"] = ctx.diagnostics;
  std::cout << envelope.dump(2) << '\n';
  return code;
}

// grid: d1 = 2pi i / n, d2 = 2pi j / n, d3 = 2pi - d1 - d2 for i, j >= 1, i + j < n.
int sweep(int steps) {
  if (steps < 3) return fail("sweep", "InvalidInput", "steps must be at least 3", 1);
  for (int i = 1; i < steps; ++i) {
    for (int j = 1; i + j < steps; ++j) {
      const double d1 = 2.0 * kPi * i / steps;
      const double d2 = 2.0 * kPi * j / steps;
      const double d3 = 2.0 * kPi * (steps - i - j) / steps;
      octa_deficits* raw = nullptr;
      if (const auto s = octa_deficits_create(d1, d2, d3, &raw); s != OCTA_OK) {
        return fail("sweep", octa_status_name(s), octa_last_error_message(), 2);
      }
      DeficitsPtr d(raw, octa_deficits_destroy);
      double v = 0.0;
      try {
        check(octa_tetrahedron_volume(d.get(), &v));
        json line = {{"deficits", deficit_values(d.get())}, {"volume", v},
                     {"dihedral", dihedral_angles(d.get())}};
        std::cout << line.dump() << '\n';
      } catch (const CommandError& e) {
        return fail("sweep", e.code, e.message, e.exit_code);
      }
    }
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Centrally symmetric octahedra with prescribed cone-deficits"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(octa_version()));

  std::string deficits, chart, chart1, chart2, vertices, svg_path, request_file;
  bool degrees = false;
  std::optional<std::uint64_t> mc, seed;
  std::optional<unsigned> workers;
  std::optional<double> truncation, tol;
  int steps = 12;

  auto add_deficits = [&](CLI::App* sub) {
    sub->add_option("--deficits", deficits, "Three deficits, e.g. \"2pi/3,2pi/3,2pi/3\"")->required();
    sub->add_flag("--degrees", degrees, "Read plain numbers as degrees");
  };

  auto* gram = app.add_subcommand("gram", "Gram matrix of the area form");
  add_deficits(gram);
  auto* spectrum = app.add_subcommand("spectrum", "Closed-form eigenvalues and signature");
  add_deficits(spectrum);
  auto* dihedral = app.add_subcommand("dihedral", "Dihedral angles between the four walls");
  add_deficits(dihedral);
  auto* volume = app.add_subcommand("volume", "Hyperbolic volume of the moduli tetrahedron");
  add_deficits(volume);
  volume->add_option("--mc", mc, "Also estimate by Monte Carlo with this many samples");
  volume->add_option("--seed", seed, std::string("Monte Carlo seed (default $") + kSeedVariable + ")");
  volume->add_option("--workers", workers, "Monte Carlo worker threads");
  volume->add_option("--truncation", truncation, "Discard samples with r^2 > 1 - truncation");
  auto* embed = app.add_subcommand("embed", "Chart of an octahedron given by v1, v2, v3");
  embed->add_option("--vertices", vertices, "Nine numbers: \"x,y,z; x,y,z; x,y,z\"")->required();
  auto* chart_cmd = app.add_subcommand("chart", "Gluing complex for a chart point");
  add_deficits(chart_cmd);
  chart_cmd->add_option("--chart", chart, "Four numbers a,b,c,d")->required();
  chart_cmd->add_option("--svg", svg_path, "Write the parallelogram net as SVG");
  auto* distance = app.add_subcommand("distance", "Hyperbolic distance between two chart points");
  add_deficits(distance);
  distance->add_option("--chart1", chart1, "First chart point")->required();
  distance->add_option("--chart2", chart2, "Second chart point")->required();
  auto* canon = app.add_subcommand("canon", "Canonical representative under label symmetries");
  add_deficits(canon);
  canon->add_option("--chart", chart, "Four numbers a,b,c,d")->required();
  canon->add_option("--tol", tol, "Deficit equality tolerance");
  auto* sweep_cmd = app.add_subcommand("sweep", "JSON Lines of volume and dihedral angles over a grid");
  sweep_cmd->add_option("--steps", steps, "Grid resolution n (deficits are multiples of 2pi/n)");
  auto* request = app.add_subcommand("request", "Run a JSON request envelope from stdin or a file");
  request->add_option("--file", request_file, "Read the request from this file instead of stdin");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail(nullptr, "InvalidInput", e.what(), 1);
  }

  if (sweep_cmd->parsed()) return sweep(steps);

  if (request->parsed()) {
    std::string text;
    if (request_file.empty()) {
      text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
      std::ifstream in(request_file, std::ios::binary);
      if (!in) return fail(nullptr, "InvalidInput", "cannot read '" + request_file + "'", 1);
      text.assign(std::istreambuf_iterator<char>(in), {});
    }
    json parsed = json::parse(text, nullptr, false);
    if (parsed.is_discarded()) return fail(nullptr, "InvalidInput", "request is not valid JSON", 1);
    return respond(std::move(parsed));
  }

  CLI::App* sub = app.get_subcommands().front();
  json req = {{"command", sub->get_name()}};
  if (!deficits.empty()) req["deficits"] = deficits;
  if (!chart.empty()) req["chart"] = chart;
  if (!chart1.empty()) req["chart1"] = chart1;
  if (!chart2.empty()) req["chart2"] = chart2;
  if (!vertices.empty()) req["vertices"] = vertices;
  json options = json::object();
  if (degrees) options["degrees"] = true;
  if (mc) options["mc"] = *mc;
  if (seed) options["seed"] = *seed;
  if (workers) options["workers"] = *workers;
  if (truncation) options["truncation"] = *truncation;
  if (tol) options["tol"] = *tol;
  if (!svg_path.empty()) options["svg"] = svg_path;
  req["options"] = options;
  return respond(std::move(req));
}
