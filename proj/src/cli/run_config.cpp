#include "lsg/cli/run_config.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <boost/algorithm/string.hpp>
#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "lsg/core/errors.hpp"
#include "lsg/core/norms.hpp"
#include "lsg/levelset/sweep.hpp"

namespace lsg::cli {

namespace pt = boost::property_tree;

RunMode parse_mode(const std::string& name) {
  if (name == "schwarzschild") return RunMode::Schwarzschild;
  if (name == "monopole") return RunMode::Monopole;
  if (name == "multicenter") return RunMode::Multicenter;
  if (name == "grid-solve") return RunMode::GridSolve;
  throw ConfigError("unknown mode '" + name + "'");
}

std::string mode_name(RunMode mode) {
  switch (mode) {
    case RunMode::Schwarzschild: return "schwarzschild";
    case RunMode::Monopole: return "monopole";
    case RunMode::Multicenter: return "multicenter";
    case RunMode::GridSolve: return "grid-solve";
  }
  return "?";
}

namespace {

double parse_number(const std::string& raw, const std::string& key) {
  const std::string text = boost::algorithm::trim_copy(raw);
  if (text == "inf" || text == "infinity") return kInf;
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    throw ConfigError("'" + key + "': expected a number, got '" + text + "'");
  }
  if (used != text.size() || std::isnan(value))
    throw ConfigError("'" + key + "': expected a number, got '" + text + "'");
  return value;
}

int parse_int(const std::string& raw, const std::string& key) {
  const double v = parse_number(raw, key);
  if (!std::isfinite(v) || v != std::floor(v)) throw ConfigError("'" + key + "': expected an integer");
  return static_cast<int>(v);
}

bool parse_bool(const std::string& raw, const std::string& key) {
  const std::string v = boost::algorithm::to_lower_copy(boost::algorithm::trim_copy(raw));
  if (v == "true" || v == "yes" || v == "1" || v == "on") return true;
  if (v == "false" || v == "no" || v == "0" || v == "off") return false;
  throw ConfigError("'" + key + "': expected a boolean, got '" + raw + "'");
}

std::vector<std::string> split_list(const std::string& text, const char* separators) {
  std::vector<std::string> parts;
  boost::algorithm::split(parts, text, boost::algorithm::is_any_of(separators));
  std::vector<std::string> out;
  for (auto& part : parts) {
    boost::algorithm::trim(part);
    if (!part.empty()) out.push_back(part);
  }
  return out;
}

std::vector<PointCharge> parse_centers(const std::string& text, int n) {
  std::vector<PointCharge> centers;
  for (const auto& entry : split_list(text, ";")) {
    const auto coords = split_list(entry, ", \t");
    if (static_cast<int>(coords.size()) != n + 1)
      throw ConfigError("center '" + entry + "' needs " + std::to_string(n) +
                        " coordinates and a weight");
    PointCharge c{Vec::Zero(n), 0.0};
    for (int i = 0; i < n; ++i) c.position[i] = parse_number(coords[i], "run.centers");
    c.weight = parse_number(coords[n], "run.centers");
    centers.push_back(std::move(c));
  }
  if (centers.empty()) throw ConfigError("'run.centers' is empty");
  return centers;
}

// Every recognised key; anything else in the file is rejected.
const std::map<std::string, std::set<std::string>>& known_keys() {
  static const std::map<std::string, std::set<std::string>> keys{
      {"run", {"mode", "n", "m", "centers", "p", "threads"}},
      {"grid", {"t_min", "t_max", "t_count", "spacing"}},
      {"levelset",
       {"backend", "resolution", "polar_order", "azimuth_order", "eps_crit",
        "max_excluded_fraction", "fd_step"}},
      {"inequalities", {"tol", "rigidity_tol", "policy", "levels", "boundary"}},
      {"output", {"dir", "formats"}},
      {"checks", {"assert", "suite", "rhs_scale"}},
      {"grid_solve", {"spacing", "half_width", "excision_radius", "tolerance", "measure_order"}},
  };
  return keys;
}

}  // namespace

std::vector<double> parse_number_list(const std::string& text) {
  std::vector<double> out;
  for (const auto& part : split_list(text, ", \t")) out.push_back(parse_number(part, "list"));
  return out;
}

void parse_formats(const std::string& text, bool& csv, bool& json) {
  csv = json = false;
  for (const auto& f : split_list(text, ", ")) {
    if (f == "csv") csv = true;
    else if (f == "json") json = true;
    else throw ConfigError("unknown output format '" + f + "'");
  }
  if (!csv && !json) throw ConfigError("no output format selected");
}

std::filesystem::path default_out_dir() {
  if (const char* env = std::getenv("LSG_OUT_DIR"); env != nullptr && *env != '\0') return env;
  return "lsg-out";
}

RunConfig parse_config(std::istream& in) {
  pt::ptree tree;
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError(std::string("malformed config: ") + e.message() + " (line " +
                      std::to_string(e.line()) + ")");
  }
  const auto& keys = known_keys();
  for (const auto& [section, body] : tree) {
    auto it = keys.find(section);
    if (it == keys.end()) throw ConfigError("unknown section [" + section + "]");
    if (!body.data().empty()) throw ConfigError("key '" + section + "' outside a section");
    for (const auto& [key, value] : body) {
      if (!it->second.count(key)) throw ConfigError("unknown key '" + section + "." + key + "'");
      (void)value;
    }
  }
  auto get = [&](const std::string& section, const std::string& key) -> std::optional<std::string> {
    auto sec = tree.get_child_optional(section);
    if (!sec) return std::nullopt;
    auto v = sec->get_optional<std::string>(pt::ptree::path_type(key, '\0'));
    if (!v) return std::nullopt;
    return *v;
  };

  RunConfig c;
  c.out_dir = default_out_dir();
  if (auto v = get("run", "mode")) c.mode = parse_mode(boost::algorithm::trim_copy(*v));
  if (auto v = get("run", "n")) c.n = parse_int(*v, "run.n");
  if (auto v = get("run", "m")) c.m = parse_number(*v, "run.m");
  if (auto v = get("run", "centers")) c.centers = parse_centers(*v, c.n);
  if (auto v = get("run", "p")) c.p_values = parse_number_list(*v);
  if (auto v = get("run", "threads")) c.threads = static_cast<unsigned>(parse_int(*v, "run.threads"));

  if (auto v = get("grid", "t_min")) c.t_min = parse_number(*v, "grid.t_min");
  if (auto v = get("grid", "t_max")) c.t_max = parse_number(*v, "grid.t_max");
  if (auto v = get("grid", "t_count")) c.t_count = parse_int(*v, "grid.t_count");
  if (auto v = get("grid", "spacing")) {
    const std::string s = boost::algorithm::trim_copy(*v);
    if (s == "linear") c.tanh_spacing = false;
    else if (s == "tanh" || s == "tanh-uniform") c.tanh_spacing = true;
    else throw ConfigError("'grid.spacing' must be linear or tanh-uniform");
  }

  if (auto v = get("levelset", "backend")) {
    try {
      c.extract.backend = parse_backend(boost::algorithm::trim_copy(*v));
    } catch (const Error& e) {
      throw ConfigError(e.what());
    }
  }
  if (auto v = get("levelset", "resolution")) c.extract.resolution = parse_int(*v, "levelset.resolution");
  if (auto v = get("levelset", "polar_order")) c.extract.polar_order = parse_int(*v, "levelset.polar_order");
  if (auto v = get("levelset", "azimuth_order"))
    c.extract.azimuth_order = parse_int(*v, "levelset.azimuth_order");
  if (auto v = get("levelset", "eps_crit")) c.extract.eps_crit = parse_number(*v, "levelset.eps_crit");
  if (auto v = get("levelset", "max_excluded_fraction"))
    c.extract.max_excluded_fraction = parse_number(*v, "levelset.max_excluded_fraction");
  if (auto v = get("levelset", "fd_step")) c.fd_step = parse_number(*v, "levelset.fd_step");

  if (auto v = get("inequalities", "tol")) c.inequalities.tolerances.tol = parse_number(*v, "inequalities.tol");
  if (auto v = get("inequalities", "rigidity_tol"))
    c.inequalities.tolerances.rigidity_tol = parse_number(*v, "inequalities.rigidity_tol");
  if (auto v = get("inequalities", "policy")) {
    const std::string s = boost::algorithm::trim_copy(*v);
    if (s == "standard") c.inequalities.policy = ExponentPolicy::Standard;
    else if (s == "refined") c.inequalities.policy = ExponentPolicy::Refined;
    else throw ConfigError("'inequalities.policy' must be standard or refined");
  }
  if (auto v = get("inequalities", "levels")) c.report_levels = parse_number_list(*v);
  if (auto v = get("inequalities", "boundary")) c.boundary_reports = parse_bool(*v, "inequalities.boundary");

  if (auto v = get("output", "dir")) c.out_dir = boost::algorithm::trim_copy(*v);
  if (auto v = get("output", "formats")) parse_formats(*v, c.write_csv, c.write_json);

  if (auto v = get("checks", "assert")) c.checks.assertions = split_list(*v, ", ");
  if (auto v = get("checks", "suite")) c.checks.suite = boost::algorithm::trim_copy(*v);
  if (auto v = get("checks", "rhs_scale")) c.checks.rhs_scale = parse_number(*v, "checks.rhs_scale");

  if (auto v = get("grid_solve", "spacing")) c.grid_solve.spacing = parse_number(*v, "grid_solve.spacing");
  if (auto v = get("grid_solve", "half_width"))
    c.grid_solve.half_width = parse_number(*v, "grid_solve.half_width");
  if (auto v = get("grid_solve", "excision_radius"))
    c.grid_solve.excision_radius = parse_number(*v, "grid_solve.excision_radius");
  if (auto v = get("grid_solve", "tolerance"))
    c.grid_solve.tolerance = parse_number(*v, "grid_solve.tolerance");
  if (auto v = get("grid_solve", "measure_order"))
    c.grid_solve.measure_order = parse_bool(*v, "grid_solve.measure_order");

  c.validate();
  return c;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config '" + path.string() + "'");
  return parse_config(in);
}

void RunConfig::validate() const {
  if (n < 3 || n > kMaxDim) throw ConfigError("'run.n' must be between 3 and 8");
  if (!(m > 0.0) || !std::isfinite(m)) throw ConfigError("'run.m' must be positive");
  if (p_values.empty()) throw ConfigError("'run.p' is empty");
  for (double p : p_values)
    if (!(p >= 0.0) || std::isinf(p)) throw ConfigError("'run.p' entries must be finite and nonnegative");
  if (mode == RunMode::Multicenter && centers.empty())
    throw ConfigError("multicenter mode needs 'run.centers'");
  if (mode != RunMode::Multicenter && !centers.empty())
    throw ConfigError("'run.centers' is only used in multicenter mode");
  for (const auto& c : centers)
    if (!(c.weight > 0.0)) throw ConfigError("center weights must be positive");
  if (mode == RunMode::GridSolve && n != 3) throw ConfigError("grid-solve mode is three-dimensional");
  if (t_count < 1) throw ConfigError("'grid.t_count' must be positive");
  if (t_count > 1 && !(t_min < t_max)) throw ConfigError("'grid.t_min' must be below 'grid.t_max'");
  const double u0 = mode == RunMode::GridSolve ? 1.0 - m / grid_solve.excision_radius : 0.0;
  if (!(t_min > u0) || !(t_max < 1.0))
    throw ConfigError("the t grid must lie strictly inside (u0, 1)");
  if (extract.resolution <= 0) throw ConfigError("'levelset.resolution' must be positive");
  if (extract.polar_order < 0 || extract.azimuth_order < 0)
    throw ConfigError("quadrature orders must be nonnegative");
  if (!(extract.eps_crit >= 0.0)) throw ConfigError("'levelset.eps_crit' must be nonnegative");
  if (!(fd_step >= 0.0)) throw ConfigError("'levelset.fd_step' must be nonnegative");
  try {
    inequalities.tolerances.validate();
  } catch (const Error& e) {
    throw ConfigError(e.what());
  }
  for (double t : report_levels)
    if (!(t > u0 && t < 1.0)) throw ConfigError("'inequalities.levels' must lie inside (u0, 1)");
  if (!(checks.rhs_scale > 0.0)) throw ConfigError("'checks.rhs_scale' must be positive");
  if (mode == RunMode::GridSolve) {
    const auto& g = grid_solve;
    if (!(g.spacing > 0.0) || !(g.half_width > 0.0) || !(g.excision_radius > 0.0))
      throw ConfigError("grid_solve sizes must be positive");
    if (!(g.excision_radius + 2.0 * g.spacing < g.half_width))
      throw ConfigError("the excision must lie well inside the grid");
    if (!(m <= g.excision_radius)) throw ConfigError("grid-solve needs m at most the excision radius");
  }
}

std::vector<double> RunConfig::t_grid() const {
  return make_t_grid(t_min, t_max, t_count, tanh_spacing);
}

nlohmann::ordered_json RunConfig::to_json() const {
  nlohmann::ordered_json j;
  j["mode"] = mode_name(mode);
  j["n"] = n;
  j["m"] = m;
  auto centers_json = nlohmann::ordered_json::array();
  for (const auto& c : centers) {
    nlohmann::ordered_json e;
    e["position"] = std::vector<double>(c.position.data(), c.position.data() + c.position.size());
    e["weight"] = c.weight;
    centers_json.push_back(e);
  }
  j["centers"] = centers_json;
  j["p"] = p_values;
  j["grid"] = {{"t_min", t_min}, {"t_max", t_max}, {"t_count", t_count},
               {"spacing", tanh_spacing ? "tanh-uniform" : "linear"}};
  j["levelset"] = {{"backend", backend_name(extract.backend)},
                   {"resolution", extract.resolution},
                   {"polar_order", extract.polar_order},
                   {"azimuth_order", extract.azimuth_order},
                   {"eps_crit", extract.eps_crit},
                   {"max_excluded_fraction", extract.max_excluded_fraction},
                   {"fd_step", fd_step}};
  j["inequalities"] = {
      {"tol", inequalities.tolerances.tol},
      {"rigidity_tol", inequalities.tolerances.rigidity_tol},
      {"policy", inequalities.policy == ExponentPolicy::Standard ? "standard" : "refined"},
      {"levels", report_levels},
      {"boundary", boundary_reports}};
  std::vector<std::string> formats;
  if (write_csv) formats.push_back("csv");
  if (write_json) formats.push_back("json");
  j["output"] = {{"formats", formats}};
  j["checks"] = {{"assert", checks.assertions}, {"suite", checks.suite}, {"rhs_scale", checks.rhs_scale}};
  if (mode == RunMode::GridSolve)
    j["grid_solve"] = {{"spacing", grid_solve.spacing},
                       {"half_width", grid_solve.half_width},
                       {"excision_radius", grid_solve.excision_radius},
                       {"tolerance", grid_solve.tolerance},
                       {"measure_order", grid_solve.measure_order}};
  return j;
}

}  // namespace lsg::cli
