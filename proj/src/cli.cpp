#include "hypqch/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hypqch/errors.hpp"
#include "hypqch/fenchel_nielsen.hpp"
#include "hypqch/format.hpp"
#include "hypqch/hyp_core.hpp"
#include "hypqch/pants_graph.hpp"
#include "hypqch/qch_bounds.hpp"
#include "hypqch/tiled_surface.hpp"
#include "hypqch/topo_classify.hpp"

namespace hypqch::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string format = "json";
  std::optional<double> tol;
};

void flatten(const json& doc, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  if (doc.is_object()) {
    for (const auto& [k, v] : doc.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (doc.is_array()) {
    for (std::size_t i = 0; i < doc.size(); ++i) flatten(doc[i], prefix + "[" + std::to_string(i) + "]", out);
  } else if (doc.is_number_float()) {
    out.emplace_back(prefix, format_sig12(doc.get<double>()));
  } else if (doc.is_string()) {
    out.emplace_back(prefix, doc.get<std::string>());
  } else {
    out.emplace_back(prefix, doc.dump());
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

void emit(const json& doc, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << rounded(doc).dump(2) << '\n';
    return;
  }
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(doc, "", rows);
  if (format == "csv") {
    out << "key,value\n";
    for (const auto& [k, v] : rows) out << csv_field(k) << ',' << csv_field(v) << '\n';
  } else {
    for (const auto& [k, v] : rows) out << k << " = " << v << '\n';
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw UsageError(std::string("invalid JSON: ") + e.what());
  }
}

double d(Real v) { return static_cast<double>(v); }

// --- fn / quotient -------------------------------------------------------

struct FnArgs {
  int window = 4;
  double length = 1;
  double twist = 0;
  std::string input;
  int period = 2;
};

void add_fn_options(CLI::App* sub, FnArgs& a) {
  sub->add_option("--window", a.window, "ladder window N: records k in [-N, N]")->capture_default_str();
  sub->add_option("--length", a.length, "uniform cuff length")->capture_default_str();
  sub->add_option("--twist", a.twist, "uniform twist angle in radians")->capture_default_str();
  sub->add_option("--input", a.input, "coordinates file (.csv or .json)");
}

FNCoordinates load_fn(const FnArgs& a) {
  if (a.input.empty()) return build_ladder_fn(a.window, a.length, a.twist);
  const std::string text = read_file(a.input);
  if (a.input.size() >= 4 && a.input.substr(a.input.size() - 4) == ".csv") return fn_from_csv(text);
  return fn_from_json(parse_json(text));
}

void run_fn(const FnArgs& a, const Common& c, std::ostream& out) {
  const FNCoordinates fn = load_fn(a);
  if (c.format == "csv") {
    out << fn_to_csv(fn);
    return;
  }
  const Real tol = c.tol.value_or(1e-6);
  const Holonomy h = holonomy_from_fn(fn);
  json lengths = json::object();
  Real worst = 0;
  for (const auto& [label, len] : recovered_lengths(h)) {
    lengths[label.name()] = d(len);
    worst = std::max(worst, std::fabs(len - fn.at(label.k).length(label.kind)));
  }
  json doc = fn_to_json(fn);
  doc["holonomy"] = {{"recovered_lengths", lengths},
                     {"max_length_error", d(worst)},
                     {"gluing_residual", d(gluing_residual(h))},
                     {"tolerance", d(tol)},
                     {"lengths_recovered", worst < tol}};
  emit(doc, c.format, out);
}

void run_quotient(const FnArgs& a, const Common& c, std::ostream& out) {
  const FNCoordinates fn = load_fn(a);
  json doc = to_json(quotient_by_shift(fn, a.period, c.tol.value_or(1e-12)));
  doc["schema_version"] = kSchemaVersion;
  emit(doc, c.format, out);
}

// --- bounds ---------------------------------------------------------------

struct BoundsArgs {
  double K = 1;
  double L = 1;
  std::optional<double> R;
  std::optional<double> inj;
  std::optional<double> pants_bound;
  std::string r_formula = "morse-gouezel-shchur";
  std::string sweep;
};

std::vector<double> sweep_values(const std::string& range, std::string& param) {
  const auto eq = range.find('=');
  if (eq == std::string::npos) throw UsageError("--sweep expects name=start:stop:step");
  param = range.substr(0, eq);
  std::transform(param.begin(), param.end(), param.begin(), [](unsigned char ch) { return std::tolower(ch); });
  if (param != "k" && param != "l" && param != "r") throw UsageError("--sweep parameter must be k, l or r");
  std::vector<double> parts;
  std::stringstream ss(range.substr(eq + 1));
  std::string item;
  while (std::getline(ss, item, ':')) {
    try {
      std::size_t used = 0;
      parts.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("--sweep bound '" + item + "' is not a number");
    }
  }
  if (parts.size() != 3 || !(parts[2] > 0) || parts[1] < parts[0]) {
    throw UsageError("--sweep expects start:stop:step with step > 0 and stop >= start");
  }
  const long steps = static_cast<long>(std::floor((parts[1] - parts[0]) / parts[2] + 1e-9));
  if (steps > 100000) throw UsageError("--sweep has too many points");
  std::vector<double> out;
  for (long i = 0; i <= steps; ++i) out.push_back(parts[0] + static_cast<double>(i) * parts[2]);
  return out;
}

BoundReport bounds_at(const BoundsArgs& a, double K, double L, std::optional<double> R) {
  if (!a.inj) throw UsageError("--inj-radius is required: the injectivity-radius bound is not computed");
  std::optional<Real> r;
  if (R) r = *R;
  std::optional<Real> M;
  if (a.pants_bound) M = *a.pants_bound;
  return report(make_params(K, L, r, *a.inj, r_formula_from_string(a.r_formula)), M);
}

void run_bounds(const BoundsArgs& a, const Common& c, std::ostream& out) {
  if (a.sweep.empty()) {
    emit(to_json(bounds_at(a, a.K, a.L, a.R)), c.format, out);
    return;
  }
  std::string param;
  std::vector<BoundReport> reports;
  for (double v : sweep_values(a.sweep, param)) {
    if (param == "k") reports.push_back(bounds_at(a, v, a.L, a.R));
    if (param == "l") reports.push_back(bounds_at(a, a.K, v, a.R));
    if (param == "r") reports.push_back(bounds_at(a, a.K, a.L, v));
  }
  if (c.format == "csv") {
    out << bounds_csv(reports);
    return;
  }
  json arr = json::array();
  for (const auto& r : reports) arr.push_back(to_json(r));
  emit({{"schema_version", kSchemaVersion}, {"sweep", a.sweep}, {"reports", arr}}, c.format, out);
}

// --- pants-graph ------------------------------------------------------------

struct PantsArgs {
  int g = 2;
  int b = 0;
  std::string order = "min";
  int start = 0;
  std::optional<double> M;
  std::optional<double> inj;
};

void run_pants(const PantsArgs& a, const Common& c, std::ostream& out) {
  const CanonOrder order = a.order == "max" ? CanonOrder::Max : CanonOrder::Min;
  const ModularPantsGraph mp = modular_pants_graph(a.g, a.b, order);
  if (c.format == "text" && !a.M) {
    out << adjacency_text(mp);
    return;
  }
  json doc = to_json(mp);
  if (a.M || a.inj) {
    if (!a.M || !a.inj) throw UsageError("bound propagation needs both --M and --inj-radius");
    json table = json::array();
    for (const auto& [v, bound] : propagate_bounds(mp, a.start, *a.M, *a.inj)) {
      table.push_back({{"vertex", v}, {"bound", d(bound)}});
    }
    doc["bounds"] = {{"start", a.start}, {"M", *a.M}, {"m_inj", *a.inj}, {"table", table}};
  }
  emit(doc, c.format, out);
}

// --- tiled ----------------------------------------------------------------

struct TiledArgs {
  double b = 1;
  int n = 1;
  std::string action = "certify";
  bool refine = false;
  bool inject = false;
};

void run_tiled(const TiledArgs& a, const Common& c, std::ostream& out) {
  if (a.action == "square") {
    const HoledSquare h = build_holed_square(a.b);
    emit({{"schema_version", kSchemaVersion},
          {"b", a.b},
          {"a", d(h.pentagon.a)},
          {"c", d(h.pentagon.c)},
          {"outer_length", d(h.outer_length)},
          {"inner_length", d(h.inner_length)},
          {"euler_characteristic", euler_characteristic(h.complex)},
          {"boundary_components", boundary_components(h.complex)}},
         c.format, out);
    return;
  }
  if (a.action == "export") {
    TiledComplex t = glue_to_Rb(build_Tn(a.b, a.n));
    if (a.refine) refine_diagonals(t);
    if (c.format == "csv") {
      out << export_csv(t);
      return;
    }
    emit({{"schema_version", kSchemaVersion},
          {"b", a.b},
          {"level", a.n},
          {"vertices", t.vertices.size()},
          {"edges", t.edges.size()},
          {"pentagons", t.faces.size()},
          {"holes", t.hole_count()},
          {"glued_pairs", t.hole_pairs.size()},
          {"euler_characteristic", euler_characteristic(t)},
          {"boundary_components", boundary_components(t)},
          {"genus", genus(t)},
          {"max_degree", max_degree(t)},
          {"max_length_mismatch", d(t.max_length_mismatch)}},
         c.format, out);
    return;
  }
  TiledComplex t = glue_to_Rb(build_Tn(a.b, certificate_level(a.n)));
  if (a.refine) refine_diagonals(t);
  if (a.inject) {
    const int top = t.row_min + 1 + (t.rows() - a.n - 2) / 2;
    add_edge(t, t.vertex(VertexKey::corner(top, 0)), t.vertex(VertexKey::corner(top + a.n, 0)), t.pentagon.b);
  }
  json doc = to_json(certify_vertical_minimizing(t, a.n));
  doc["injected_shortcut"] = a.inject;
  emit(doc, c.format, out);
}

// --- classify ---------------------------------------------------------------

struct ClassifyArgs {
  std::string descriptor;
  std::string input;
};

json surface_report(const SurfaceType& s) {
  const Admissibility adm = qch_admissible(s);
  const DistMinResult dm = dist_min_geodesic_status(s);
  return {{"surface", to_json(s)},
          {"qch_admissible", adm.admissible},
          {"qch_reason", adm.reason},
          {"dist_min_geodesic", to_string(dm.status)},
          {"dist_min_reason", dm.reason}};
}

void run_classify(const ClassifyArgs& a, const Common& c, std::ostream& out) {
  if (a.descriptor.empty() == a.input.empty()) throw UsageError("give exactly one of --descriptor or --input");
  const json desc = parse_json(a.descriptor.empty() ? read_file(a.input) : a.descriptor);
  if (!desc.is_object()) throw UsageError("descriptor must be a JSON object");
  json doc;
  if (desc.contains("surface")) {
    doc = surface_report(surface_from_json(desc["surface"]));
  } else {
    if (!desc.contains("base_genus") || !desc.contains("deck") || !desc.contains("planar")) {
      throw UsageError("cover descriptor needs base_genus, deck and planar");
    }
    const Classification cl =
        classify_cover(desc["base_genus"].get<int>(), deck_from_json(desc["deck"]), desc["planar"].get<bool>());
    doc = surface_report(surface_of(cl.type, cl.genus));
    doc["classification"] = to_json(cl);
  }
  doc["schema_version"] = kSchemaVersion;
  emit(doc, c.format, out);
}

json error_doc(const Error& e) {
  json err = {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}};
  err["rule"] = e.rule().empty() ? json(nullptr) : json(e.rule());
  return {{"schema_version", kSchemaVersion}, {"error", err}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Explicit constants and constructions for quasiconformally homogeneous surfaces", "hypqch"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--format", common.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  app.add_option("--tol", common.tol, "tolerance override")->check(CLI::PositiveNumber);
  std::string r_formula = "morse-gouezel-shchur";
  app.add_option("--r-formula", r_formula, "fellow-traveling constant formula")
      ->check(CLI::IsMember({"morse-gouezel-shchur", "morse", "user"}))
      ->capture_default_str();

  double pent_b = 1;
  bool pent_vertices = false;
  auto* pentagon = app.add_subcommand("pentagon", "right-angled pentagon with two sides b")->fallthrough();
  pentagon->add_option("--b", pent_b, "length of the two consecutive equal sides")->required();
  pentagon->add_flag("--vertices", pent_vertices, "include vertex positions in the upper half-plane");

  double collar_l = 1;
  auto* collar = app.add_subcommand("collar", "collar width of a simple closed geodesic")->fallthrough();
  collar->add_option("--l", collar_l, "geodesic length")->required();

  FnArgs fn_args;
  auto* fn = app.add_subcommand("fn", "ladder Fenchel-Nielsen coordinates and holonomy")->fallthrough();
  add_fn_options(fn, fn_args);

  FnArgs q_args;
  auto* quotient = app.add_subcommand("quotient", "closed quotient of a shift-invariant ladder")->fallthrough();
  add_fn_options(quotient, q_args);
  quotient->add_option("--period", q_args.period, "shift period")->capture_default_str();

  BoundsArgs b_args;
  auto* bounds = app.add_subcommand("bounds", "constant chain for K-QCH ladder surfaces")->fallthrough();
  bounds->add_option("--k", b_args.K, "dilatation K >= 1")->capture_default_str();
  bounds->add_option("--l", b_args.L, "length of the base separating geodesic")->capture_default_str();
  bounds->add_option("--r", b_args.R, "explicit fellow-traveling constant R");
  bounds->add_option("--inj-radius", b_args.inj, "injectivity-radius lower bound m");
  bounds->add_option("--pants-bound", b_args.pants_bound, "cuff bound M for the short-pants step (default K*L)");
  bounds->add_option("--sweep", b_args.sweep, "grid sweep, e.g. k=1:4:0.5");

  PantsArgs p_args;
  auto* pants = app.add_subcommand("pants-graph", "modular pants graph of a low-complexity surface")->fallthrough();
  pants->add_option("--g", p_args.g, "genus")->capture_default_str();
  pants->add_option("--b", p_args.b, "boundary components")->capture_default_str();
  pants->add_option("--order", p_args.order, "canonical labeling order")
      ->check(CLI::IsMember({"min", "max"}))
      ->capture_default_str();
  pants->add_option("--start", p_args.start, "start vertex for bound propagation")->capture_default_str();
  pants->add_option("--M", p_args.M, "cuff length bound at the start vertex");
  pants->add_option("--inj-radius", p_args.inj, "injectivity-radius lower bound m");

  TiledArgs t_args;
  auto* tiled = app.add_subcommand("tiled", "pentagon-tiled surfaces and the vertical geodesic certificate")
                    ->fallthrough();
  tiled->add_option("action", t_args.action, "certify, export or square")
      ->check(CLI::IsMember({"certify", "export", "square"}))
      ->capture_default_str();
  tiled->add_option("--b", t_args.b, "pentagon side b > arcsinh(1)")->capture_default_str();
  tiled->add_option("--n", t_args.n, "rows to certify, or level for export")->capture_default_str();
  tiled->add_flag("--refine-diagonals", t_args.refine, "add pentagon diagonals");
  tiled->add_flag("--inject-shortcut", t_args.inject, "add a spurious short edge along α (negative test)");

  ClassifyArgs c_args;
  auto* classify = app.add_subcommand("classify", "regular cover classification and QCH admissibility")
                       ->fallthrough();
  classify->add_option("--descriptor", c_args.descriptor, "inline JSON descriptor");
  classify->add_option("--input", c_args.input, "JSON descriptor file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "hypqch: " << e.what() << '\n';
    return kExitUsage;
  }
  b_args.r_formula = r_formula;

  try {
    if (pentagon->parsed()) {
      const PentagonSolution p = solve_pentagon(pent_b);
      const auto sides = p.sides();
      json doc = {{"schema_version", kSchemaVersion},
                  {"b", d(p.b)},
                  {"a", d(p.a)},
                  {"c", d(p.c)},
                  {"sides", {d(sides[0]), d(sides[1]), d(sides[2]), d(sides[3]), d(sides[4])}},
                  {"closure_residual", d(right_angled_closure_residual(sides))}};
      if (pent_vertices) {
        json vs = json::array();
        for (const Point& z : pentagon_vertices(p)) vs.push_back({d(z.real()), d(z.imag())});
        doc["vertices"] = vs;
      }
      emit(doc, common.format, out);
    } else if (collar->parsed()) {
      const Real eta = collar_width(collar_l);
      emit({{"schema_version", kSchemaVersion},
            {"length", collar_l},
            {"collar_width", d(eta)},
            {"collar_width_of_width", d(collar_width(eta))}},
           common.format, out);
    } else if (fn->parsed()) {
      run_fn(fn_args, common, out);
    } else if (quotient->parsed()) {
      run_quotient(q_args, common, out);
    } else if (bounds->parsed()) {
      run_bounds(b_args, common, out);
    } else if (pants->parsed()) {
      run_pants(p_args, common, out);
    } else if (tiled->parsed()) {
      run_tiled(t_args, common, out);
    } else if (classify->parsed()) {
      run_classify(c_args, common, out);
    }
  } catch (const UsageError& e) {
    err << "hypqch: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    out << rounded(error_doc(e)).dump(2) << '\n';
    return kExitDomain;
  } catch (const nlohmann::json::exception& e) {
    err << "hypqch: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace hypqch::cli
