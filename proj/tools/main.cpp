// spinmoment: command-line surface of the spin magnetic moment library.
//
// Subcommands cover the dimensionless interaction constants (dual engines),
// the moment breakdown and its width sweep, plane-slice current export for
// quiver plots, the matching-width solve, the Gordon identity check on exact
// plane waves, the rotating-sphere closed-form oracle, and the two-route
// self-interaction equivalence report.
//
// Exit codes: 0 success, 1 usage/config error, 2 numerical acceptance failure.

#include <cinttypes>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "spinmoment/fields.hpp"
#include "spinmoment/gordon.hpp"
#include "spinmoment/moments.hpp"
#include "spinmoment/pauli.hpp"
#include "spinmoment/quadrature.hpp"
#include "spinmoment/scales.hpp"
#include "spinmoment/selffield.hpp"
#include "spinmoment/states.hpp"

namespace {

using nlohmann::ordered_json;
using namespace spinmoment;

constexpr double kGordonResidualTol = 1e-10;
constexpr double kSphereRelTol = 1e-6;
constexpr double kEquivalenceRelTol = 1e-3;
constexpr double kConstantsSigmaTol = 3.0;

struct RunConfig {
  std::string config_path;
  double d_compton = 5.0;
  std::string method = "det";
  std::uint64_t budget = 0;  // 0 = per-method default
  std::uint64_t seed = quad::kDefaultSeed;
  int threads = 1;
  std::string convention = "paper";
  std::string out_path;  // empty = stdout
  std::string format;    // empty = per-command default
};

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

quad::Options quad_options(const RunConfig& rc) {
  quad::Options opt;
  opt.method = rc.method == "mc" ? quad::Method::MonteCarlo : quad::Method::Deterministic;
  opt.budget = rc.budget;
  opt.seed = rc.seed;
  opt.threads = rc.threads;
  return opt;
}

Convention convention_of(const RunConfig& rc) {
  return rc.convention == "oracle" ? Convention::OracleResolved : Convention::PaperAsPublished;
}

int emit(const RunConfig& rc, const std::string& text) {
  if (rc.out_path.empty()) {
    std::fwrite(text.data(), 1, text.size(), stdout);
    return 0;
  }
  std::ofstream f(rc.out_path, std::ios::binary | std::ios::trunc);
  if (!f) {
    std::cerr << "error: cannot open output file '" << rc.out_path << "'\n";
    return 1;
  }
  f.write(text.data(), static_cast<std::streamsize>(text.size()));
  return f.good() ? 0 : 1;
}

// key,value flattening of a flat report object; 3-vectors become _x/_y/_z rows
std::string report_csv(const ordered_json& j) {
  std::string out = "key,value\n";
  auto cell = [](const ordered_json& v) -> std::string {
    if (v.is_number()) return fmt17(v.get<double>());
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
  };
  static const char* axis[3] = {"_x", "_y", "_z"};
  for (const auto& [key, val] : j.items()) {
    if (val.is_array() && val.size() == 3) {
      for (int k = 0; k < 3; ++k) out += key + axis[k] + "," + cell(val[k]) + "\n";
    } else {
      out += key + "," + cell(val) + "\n";
    }
  }
  return out;
}

std::string table_csv(const std::vector<std::string>& columns,
                      const std::vector<std::vector<double>>& rows) {
  std::string out;
  for (std::size_t i = 0; i < columns.size(); ++i) {
    out += columns[i];
    out += (i + 1 < columns.size()) ? ',' : '\n';
  }
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out += fmt17(row[i]);
      out += (i + 1 < row.size()) ? ',' : '\n';
    }
  }
  return out;
}

std::string table_json(const std::vector<std::string>& columns,
                       const std::vector<std::vector<double>>& rows) {
  ordered_json j;
  j["columns"] = columns;
  j["rows"] = rows;
  return j.dump(2) + "\n";
}

std::string format_or(const RunConfig& rc, const char* fallback) {
  return rc.format.empty() ? fallback : rc.format;
}

// portable uniform doubles so fixed seeds give identical bytes everywhere
double unit_uniform(std::mt19937_64& g) { return static_cast<double>(g() >> 11) * 0x1.0p-53; }
double uniform(std::mt19937_64& g, double a, double b) { return a + (b - a) * unit_uniform(g); }

SpinorState packet_state(const PhysicalScales& s) {
  return SpinorState::gaussian_packet(s, Vec3{0.0, 0.0, 1.0});
}

// ----------------------------------------------------------- subcommands

int cmd_constants(const RunConfig& rc) {
  quad::Options det = quad_options(rc);
  det.method = quad::Method::Deterministic;
  if (rc.method != "det") det.budget = 0;
  quad::Options mc = quad_options(rc);
  mc.method = quad::Method::MonteCarlo;
  if (rc.method != "mc") mc.budget = rc.budget;  // same knob drives the sample count

  struct Row {
    const char* name;
    quad::QuadratureResult a, b;
  };
  const Row rows[] = {
      {"C_E", quad::electric_constant(det), quad::electric_constant(mc)},
      {"C_I", quad::interaction_constant(det), quad::interaction_constant(mc)},
      {"C_B", quad::magnetic_constant(det), quad::magnetic_constant(mc)},
  };

  bool agree = true;
  ordered_json jrows = ordered_json::array();
  std::string csv = "constant,deterministic,det_std_error,monte_carlo,mc_std_error,diff_sigmas\n";
  for (const Row& r : rows) {
    const double combined = std::hypot(r.a.std_error, r.b.std_error);
    const double diff = std::abs(r.a.value - r.b.value);
    const double sigmas = combined > 0.0 ? diff / combined : (diff == 0.0 ? 0.0 : HUGE_VAL);
    agree = agree && sigmas <= kConstantsSigmaTol;
    csv += std::string(r.name) + "," + fmt17(r.a.value) + "," + fmt17(r.a.std_error) + "," +
           fmt17(r.b.value) + "," + fmt17(r.b.std_error) + "," + fmt17(sigmas) + "\n";
    ordered_json o;
    o["name"] = r.name;
    o["deterministic"] = r.a.value;
    o["det_std_error"] = r.a.std_error;
    o["monte_carlo"] = r.b.value;
    o["mc_std_error"] = r.b.std_error;
    o["diff_sigmas"] = sigmas;
    jrows.push_back(o);
  }

  std::string text;
  if (format_or(rc, "csv") == "json") {
    ordered_json j;
    j["constants"] = jrows;
    j["agreement"] = agree;
    j["mc_budget"] = rows[0].b.budget;
    j["seed"] = rc.seed;
    text = j.dump(2) + "\n";
  } else {
    text = csv;
  }
  const int rcode = emit(rc, text);
  if (rcode != 0) return rcode;
  return agree ? 0 : 2;
}

int cmd_moment(const RunConfig& rc, const PhysicalScales& s) {
  const MomentBreakdown b = total_moment(packet_state(s), convention_of(rc), quad_options(rc));
  const ordered_json j = ordered_json::parse(b.to_json());
  const std::string text =
      format_or(rc, "json") == "csv" ? report_csv(j) : j.dump(2) + "\n";
  return emit(rc, text);
}

int cmd_sweep(const RunConfig& rc, const PhysicalScales& s, double d_min, double d_max,
              int steps) {
  if (!(d_min > 0.0) || !(d_max > d_min) || steps < 2) {
    std::cerr << "error: sweep requires 0 < d-min < d-max and steps >= 2\n";
    return 1;
  }
  const std::vector<std::string> columns = {
      "d_over_compton", "mu_over_muB",          "m0_z_erg_per_G",
      "m1_z_erg_per_G", "m_renorm_z_erg_per_G", "total_z_erg_per_G"};
  std::vector<std::vector<double>> rows;
  rows.reserve(static_cast<std::size_t>(steps));
  const quad::Options opt = quad_options(rc);
  const Convention conv = convention_of(rc);
  for (int i = 0; i < steps; ++i) {
    const double dc = d_min + (d_max - d_min) * i / (steps - 1);
    PhysicalScales si = s;
    si.d = dc * si.compton_radius();
    const MomentBreakdown b = total_moment(packet_state(si), conv, opt);
    rows.push_back({b.d_over_compton, b.mu_over_muB, b.m0.z, b.m1_selfinteraction.z,
                    b.m_massrenorm.z, b.total.z});
  }
  const std::string text = format_or(rc, "csv") == "json" ? table_json(columns, rows)
                                                          : table_csv(columns, rows);
  return emit(rc, text);
}

int cmd_fieldslice(const RunConfig& rc, const PhysicalScales& s, int grid_n,
                   const std::string& which, double extent) {
  if (grid_n < 8) {
    std::cerr << "error: fieldslice requires grid-n >= 8\n";
    return 1;
  }
  if (!(extent > 0.0)) {
    std::cerr << "error: fieldslice requires extent > 0\n";
    return 1;
  }
  const SpinorState state = packet_state(s);
  const AzimuthalField field = which == "J1" ? first_order_current_profile(state)
                                             : magnetization_current_profile(state);
  const std::vector<std::string> columns = {"x", "y", "z", "Jx", "Jy", "Jz"};
  std::vector<std::vector<double>> rows;
  rows.reserve(static_cast<std::size_t>(grid_n) * grid_n);
  const double half = extent * s.d;
  for (int i = 0; i < grid_n; ++i) {
    const double x = -half + 2.0 * half * i / (grid_n - 1);
    for (int j = 0; j < grid_n; ++j) {
      const double y = -half + 2.0 * half * j / (grid_n - 1);
      const Vec3 v = field(Vec3{x, y, 0.0});
      rows.push_back({x, y, 0.0, v.x, v.y, v.z});
    }
  }
  const std::string text = format_or(rc, "csv") == "json" ? table_json(columns, rows)
                                                          : table_csv(columns, rows);
  return emit(rc, text);
}

int cmd_dstar(const RunConfig& rc, const PhysicalScales& s, double target, double tol) {
  WidthSolve ws;
  try {
    ws = solve_matching_width(convention_of(rc), s, quad_options(rc), target, tol);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  ordered_json j;
  j["convention"] = rc.convention == "oracle" ? "OracleResolved" : "PaperAsPublished";
  j["d_star_compton"] = ws.d_star_compton;
  j["target_anomaly"] = ws.target_anomaly;
  j["iterations"] = ws.iterations;
  j["width_warning"] = ws.width_warning;
  const std::string text =
      format_or(rc, "json") == "csv" ? report_csv(j) : j.dump(2) + "\n";
  return emit(rc, text);
}

int cmd_gordon_check(const RunConfig& rc, const PhysicalScales& s, int waves) {
  std::mt19937_64 rng(rc.seed);
  const double pscale = s.m * s.c;
  const double ascale = s.m * s.c * s.c / s.e;
  const double tscale = s.hbar / (s.m * s.c * s.c);
  const double xscale = 3.0 * s.compton_radius();

  const std::vector<std::string> columns = {"wave", "p_over_mc", "relative_residual"};
  std::vector<std::vector<double>> rows;
  double worst = 0.0;
  for (int i = 0; i < waves; ++i) {
    const Vec3 p{uniform(rng, -pscale, pscale), uniform(rng, -pscale, pscale),
                 uniform(rng, -pscale, pscale)};
    Vec3 n{uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0)};
    if (norm(n) < 1e-6) n = Vec3{0.0, 0.0, 1.0};
    const Vec3 A0{uniform(rng, -ascale, ascale), uniform(rng, -ascale, ascale),
                  uniform(rng, -ascale, ascale)};
    const Vec3 x{uniform(rng, -xscale, xscale), uniform(rng, -xscale, xscale),
                 uniform(rng, -xscale, xscale)};
    const double t = uniform(rng, 0.0, tscale);

    const SpinorState w = SpinorState::plane_wave_in_uniform_A(s, p, n, A0);
    const VectorField3 A([A0](const Vec3&) { return A0; });
    const Vec3 current = w.current_density(x);
    const Vec3 residual = gordon_terms(w, A, x, t).sum() - current;
    const double rel = norm(residual) / norm(current);
    worst = std::max(worst, rel);
    rows.push_back({static_cast<double>(i), norm(p) / pscale, rel});
  }

  std::string text;
  if (format_or(rc, "csv") == "json") {
    ordered_json j;
    ordered_json jw = ordered_json::array();
    for (const auto& r : rows) {
      ordered_json o;
      o["wave"] = static_cast<int>(r[0]);
      o["p_over_mc"] = r[1];
      o["relative_residual"] = r[2];
      jw.push_back(o);
    }
    j["waves"] = jw;
    j["max_relative_residual"] = worst;
    j["seed"] = rc.seed;
    text = j.dump(2) + "\n";
  } else {
    text = table_csv(columns, rows);
  }
  const int rcode = emit(rc, text);
  if (rcode != 0) return rcode;
  return worst <= kGordonResidualTol ? 0 : 2;
}

int cmd_sphere_oracle(const RunConfig& rc, const PhysicalScales& s, double Q, double R,
                      double omega) {
  SphereSpec spec{Q, R, omega};
  spec.validate();
  const Vec3 numeric = magnetic_moment_from_current(spec, s.c);
  const Vec3 closed = spec.closed_form_moment(s.c);
  const double scale = norm(closed);
  const double rel = scale > 0.0 ? norm(numeric - closed) / scale : norm(numeric);
  ordered_json j;
  j["Q_statC"] = Q;
  j["R_cm"] = R;
  j["omega_rad_per_s"] = omega;
  j["numeric_erg_per_G"] = ordered_json::array({numeric.x, numeric.y, numeric.z});
  j["closed_form_erg_per_G"] = ordered_json::array({closed.x, closed.y, closed.z});
  j["relative_error"] = rel;
  const std::string text =
      format_or(rc, "json") == "csv" ? report_csv(j) : j.dump(2) + "\n";
  const int rcode = emit(rc, text);
  if (rcode != 0) return rcode;
  return rel <= kSphereRelTol ? 0 : 2;
}

int cmd_equivalence(const RunConfig& rc, const PhysicalScales& s) {
  const std::string report = equivalence_report_json(packet_state(s), quad_options(rc), {});
  const ordered_json j = ordered_json::parse(report);
  const std::string text =
      format_or(rc, "json") == "csv" ? report_csv(j) : j.dump(2) + "\n";
  const int rcode = emit(rc, text);
  if (rcode != 0) return rcode;
  return std::abs(j.at("relative_difference").get<double>()) <= kEquivalenceRelTol ? 0 : 2;
}

// ----------------------------------------------------- config resolution

const std::map<std::string, int> kKnownKeys = {
    {"e", 0},      {"m", 0},       {"m_e", 0},     {"c", 0},
    {"hbar", 0},   {"d", 0},       {"d_compton", 0},
    {"method", 1}, {"budget", 1},  {"seed", 1},    {"threads", 1},
    {"convention", 1}, {"format", 1}, {"out", 1},
};

// config file fills in whatever the command line left unset; flags win
void apply_cli_config(const std::map<std::string, std::string>& kv, const CLI::App& app,
                      RunConfig& rc) {
  for (const auto& [key, value] : kv) {
    if (kKnownKeys.find(key) == kKnownKeys.end())
      throw std::runtime_error("unknown config key '" + key + "'");
    (void)value;
  }
  auto unset = [&app](const char* flag) { return app.count(flag) == 0; };
  auto get = [&kv](const char* key) -> const std::string* {
    auto it = kv.find(key);
    return it == kv.end() ? nullptr : &it->second;
  };
  try {
    if (const auto* v = get("method"); v && unset("--method")) rc.method = *v;
    if (const auto* v = get("convention"); v && unset("--convention")) rc.convention = *v;
    if (const auto* v = get("format"); v && unset("--format")) rc.format = *v;
    if (const auto* v = get("out"); v && unset("--out")) rc.out_path = *v;
    if (const auto* v = get("budget"); v && unset("--budget"))
      rc.budget = std::stoull(*v);
    if (const auto* v = get("seed"); v && unset("--seed")) rc.seed = std::stoull(*v);
    if (const auto* v = get("threads"); v && unset("--threads"))
      rc.threads = std::stoi(*v);
  } catch (const std::logic_error&) {
    throw std::runtime_error("malformed numeric value in config file");
  }
  if (rc.method != "det" && rc.method != "mc")
    throw std::runtime_error("config: method must be det or mc");
  if (rc.convention != "paper" && rc.convention != "oracle")
    throw std::runtime_error("config: convention must be paper or oracle");
  if (!rc.format.empty() && rc.format != "csv" && rc.format != "json")
    throw std::runtime_error("config: format must be csv or json");
  if (rc.threads < 1) throw std::runtime_error("config: threads must be >= 1");
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig rc;
  double sweep_min = 2.0, sweep_max = 20.0;
  int sweep_steps = 19;
  int grid_n = 24;
  std::string which = "JM";
  double extent = 3.0;
  double dstar_target = -1.0;  // negative = alpha/2pi
  double dstar_tol = 1e-4;
  int gordon_waves = 20;
  double sphere_Q = 1.0, sphere_R = 1.0, sphere_omega = 1.0;

  CLI::App app{"state-dependent spin magnetic moment toolkit (Gaussian-CGS units)"};
  app.fallthrough();
  app.require_subcommand(1);

  app.add_option("--config", rc.config_path, "key = value config file")
      ->envname("SPINOR_MOMENT_CONFIG");
  app.add_option("--d-compton", rc.d_compton, "packet width in Compton radii")
      ->check(CLI::PositiveNumber);
  app.add_option("--method", rc.method, "quadrature engine")
      ->check(CLI::IsMember({"det", "mc"}));
  app.add_option("--budget", rc.budget, "node count (det) or sample count (mc)")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", rc.seed, "Monte Carlo seed");
  app.add_option("--threads", rc.threads, "worker threads for the quadrature engine")
      ->check(CLI::Range(1, 1024));
  app.add_option("--convention", rc.convention, "mass-renormalization bookkeeping")
      ->check(CLI::IsMember({"paper", "oracle"}));
  app.add_option("--out", rc.out_path, "output file (default stdout)");
  app.add_option("--format", rc.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));

  CLI::App* c_constants =
      app.add_subcommand("constants", "dimensionless self-interaction constants, both engines");
  CLI::App* c_moment = app.add_subcommand("moment", "moment breakdown at one width");
  CLI::App* c_sweep = app.add_subcommand("sweep", "moment breakdown across widths");
  c_sweep->add_option("--d-min", sweep_min, "smallest width, Compton radii");
  c_sweep->add_option("--d-max", sweep_max, "largest width, Compton radii");
  c_sweep->add_option("--steps", sweep_steps, "row count");
  CLI::App* c_slice =
      app.add_subcommand("fieldslice", "current vectors on the z = 0 plane");
  c_slice->add_option("--grid-n", grid_n, "points per axis (>= 8)");
  c_slice->add_option("--which", which, "field to sample")
      ->check(CLI::IsMember({"JM", "J1"}));
  c_slice->add_option("--extent", extent, "half-width of the slice in units of d");
  CLI::App* c_dstar = app.add_subcommand("dstar", "width matching the target anomaly");
  c_dstar->add_option("--target", dstar_target,
                      "target anomaly (negative = alpha/2pi)");
  c_dstar->add_option("--tol", dstar_tol, "bisection tolerance, Compton radii")
      ->check(CLI::PositiveNumber);
  CLI::App* c_gordon =
      app.add_subcommand("gordon-check", "decomposition identity on random plane waves");
  c_gordon->add_option("--waves", gordon_waves, "number of plane waves")
      ->check(CLI::Range(1, 10000));
  CLI::App* c_sphere =
      app.add_subcommand("sphere-oracle", "rotating sphere moment vs closed form");
  c_sphere->add_option("--Q", sphere_Q, "total charge, statC");
  c_sphere->add_option("--R", sphere_R, "radius, cm")->check(CLI::PositiveNumber);
  c_sphere->add_option("--omega", sphere_omega, "angular velocity, rad/s");
  CLI::App* c_equiv =
      app.add_subcommand("equivalence", "two-route self-interaction moment report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  PhysicalScales s;
  try {
    bool width_from_config = false;
    if (!rc.config_path.empty()) {
      const auto kv = load_key_value_file(rc.config_path);
      apply_cli_config(kv, app, rc);
      apply_config(s, kv);
      width_from_config = kv.count("d") > 0 || kv.count("d_compton") > 0;
    }
    if (app.count("--d-compton") > 0 || !width_from_config) {
      s.d = rc.d_compton * s.compton_radius();
    }
    s.validate();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (c_constants->parsed()) return cmd_constants(rc);
    if (c_moment->parsed()) return cmd_moment(rc, s);
    if (c_sweep->parsed()) return cmd_sweep(rc, s, sweep_min, sweep_max, sweep_steps);
    if (c_slice->parsed()) return cmd_fieldslice(rc, s, grid_n, which, extent);
    if (c_dstar->parsed()) return cmd_dstar(rc, s, dstar_target, dstar_tol);
    if (c_gordon->parsed()) return cmd_gordon_check(rc, s, gordon_waves);
    if (c_sphere->parsed()) return cmd_sphere_oracle(rc, s, sphere_Q, sphere_R, sphere_omega);
    if (c_equiv->parsed()) return cmd_equivalence(rc, s);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
