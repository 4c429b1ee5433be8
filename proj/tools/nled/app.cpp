#include "app.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "config.hpp"
#include "nled/dirac.hpp"
#include "nled/energetics.hpp"
#include "nled/errors.hpp"
#include "nled/radial_soliton.hpp"
#include "nled/series_expansion.hpp"
#include "nled/units.hpp"
#include "nled/verification.hpp"

namespace nled::app {

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Configuration:
    case ErrorKind::Unsupported:
      return kExitConfig;
    default:
      return kExitNumerical;
  }
}

void write_error(std::ostream& err, std::string_view kind, const std::string& message, const Diagnostics& diag = {}) {
  json d = json::object();
  for (const auto& [name, value] : diag) d[name] = value;  // non-finite values serialize as null
  json j;
  j["error"] = {{"kind", kind}, {"message", message}, {"diagnostics", d}};
  err << j.dump() << '\n';
}

/// Raw flag values; each is applied only when the user gave it.
struct Flags {
  std::string config;
  std::string model;
  std::string preset;
  double E0 = 0.0;
  double rmin = 0.0;
  double rmax = 0.0;
  std::size_t points = 0;
  std::string spacing;
  std::string out;
  std::string format;
  std::string convention;
  double cutoff = 0.0;
  double scale = 0.0;
  bool higher_order = false;
  std::size_t draws = 0;
  std::size_t boosts = 0;
  std::uint64_t seed = 0;
  double rel_tol = 0.0;
  double abs_tol = 0.0;
  std::size_t max_subdiv = 0;
  double alpha = 0.0, beta = 0.0, gamma = 0.0, xi = 0.0, zeta = 0.0;
  int mie_sign = 1;
};

/// Model plus the length and field scales the subcommands report against.
struct Resolved {
  RunConfig cfg;
  PhysicalConstants k;
  LagrangianModel model = LagrangianModel::maxwell();
  double r_ref = 0.0;  ///< r0 of the model, or the convention radius when the model has none
  std::optional<double> E0;
};

Resolved resolve(const RunConfig& cfg) {
  Resolved r{cfg, constants(cfg.preset), LagrangianModel::maxwell(), 0.0, std::nullopt};
  const double e = r.k.e;
  const double r_conv = effective_radius(cfg.convention, r.k);
  switch (cfg.model.kind) {
    case ModelKind::BornInfeld:
    case ModelKind::LogSchroedinger: {
      const double E0 = cfg.model.E0.value_or(e / (r_conv * r_conv));
      r.model = cfg.model.kind == ModelKind::BornInfeld ? LagrangianModel::born_infeld(E0)
                                                        : LagrangianModel::log_schroedinger(E0);
      r.E0 = E0;
      break;
    }
    case ModelKind::Maxwell:
      r.model = LagrangianModel::maxwell();
      break;
    case ModelKind::Polynomial:
      r.model = LagrangianModel::polynomial(cfg.model.coeffs);
      break;
    case ModelKind::MieSqrt:
      r.model = LagrangianModel::mie_sqrt(cfg.model.mie_sign);
      break;
  }
  r.r_ref = soliton_radius(r.model, e).value_or(r_conv);
  return r;
}

json provenance(const Resolved& r) {
  const auto& c = r.cfg;
  return {{"config_hash", "fnv1a64:" + fnv1a_hex(config_to_json(c).dump())},
          {"constants_preset", r.k.preset_name},
          {"constants", {{"e_esu", r.k.e}, {"m_e_g", r.k.m_e}, {"c_cm_per_s", r.k.c}}},
          {"grid",
           {{"r_min_over_r0", c.grid.r_min_over_r0},
            {"r_max_over_r0", c.grid.r_max_over_r0},
            {"points", c.grid.points},
            {"spacing", std::string(to_string(c.grid.spacing))},
            {"r0_cm", r.r_ref}}},
          {"tolerances",
           {{"rel_tol", c.quad.rel_tol}, {"abs_tol", c.quad.abs_tol}, {"max_subdiv", c.quad.max_subdiv}}}};
}

json scales(const Resolved& r) {
  json j;
  j["model"] = std::string(r.model.name());
  j["convention"] = std::string(to_string(r.cfg.convention));
  j["r0_cm"] = r.r_ref;
  j["E0_statvolt_per_cm"] = r.E0 ? json(*r.E0) : json(nullptr);
  j["E0_volt_per_m"] = r.E0 ? json(statvolt_per_cm_to_volt_per_m(*r.E0)) : json(nullptr);
  return j;
}

json central(const CentralValue& v) {
  return {{"value", v.value ? json(*v.value) : json(nullptr)}, {"kind", v.kind}};
}

std::optional<double> cutoff_cm(const Resolved& r) {
  if (!r.cfg.cutoff_over_r0) return std::nullopt;
  return *r.cfg.cutoff_over_r0 * r.r_ref;
}

OutputFormat format_for(const RunConfig& cfg, OutputFormat fallback, std::initializer_list<OutputFormat> allowed,
                        std::string_view command) {
  const OutputFormat f = cfg.output.format.value_or(fallback);
  for (auto a : allowed) {
    if (a == f) return f;
  }
  throw Error(ErrorKind::Configuration,
              "format '" + std::string(to_string(f)) + "' is not available for '" + std::string(command) + "'");
}

void print_csv_number(std::ostream& os, double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  os << buf;
}

std::string profile_command(const Resolved& r, std::ostream& err) {
  const auto fmt = format_for(r.cfg, OutputFormat::Csv, {OutputFormat::Csv, OutputFormat::Json}, "profile");
  const double lo = r.cfg.grid.r_min_over_r0 * r.r_ref;
  const double hi = r.cfg.grid.r_max_over_r0 * r.r_ref;
  const auto grid = r.cfg.grid.spacing == GridSpacing::Log ? RadialGrid::log_spaced(lo, hi, r.cfg.grid.points)
                                                           : RadialGrid::linear(lo, hi, r.cfg.grid.points);
  const auto p = solve_soliton(r.model, r.k.e, grid, r.cfg.quad);

  json summary = scales(r);
  summary["command"] = "profile";
  summary["points"] = p.grid.size();
  summary["inversion_failed_below_r"] = p.inversion_failed_below_r ? json(*p.inversion_failed_below_r) : json(nullptr);
  summary["inversion_failed_below_r_over_r0"] =
      p.inversion_failed_below_r ? json(*p.inversion_failed_below_r / r.r_ref) : json(nullptr);
  summary["center"] = {{"E_statvolt_per_cm", central(p.E_center)}, {"phi_statvolt", central(p.phi_center)}};
  summary["stress_divergence_residual"] = check_stress_divergence(p);
  summary["provenance"] = provenance(r);

  std::ostringstream os;
  if (fmt == OutputFormat::Json) {
    summary["columns"] = {{"r_cm", p.grid.r()}, {"D_statvolt_per_cm", p.D}, {"E_statvolt_per_cm", p.E},
                          {"rho_esu_per_cm3", p.rho}, {"epsilon", p.eps}, {"u_erg_per_cm3", p.u},
                          {"phi_statvolt", p.phi}};
    os << summary.dump(2) << '\n';
    return os.str();
  }
  os << "r_cm,D_statvolt_per_cm,E_statvolt_per_cm,rho_esu_per_cm3,epsilon,u_erg_per_cm3,phi_statvolt\n";
  for (std::size_t i = 0; i < p.grid.size(); ++i) {
    print_csv_number(os, p.grid.r()[i]);
    for (const double v : {p.D[i], p.E[i], p.rho[i], p.eps[i], p.u[i], p.phi[i]}) {
      os << ',';
      print_csv_number(os, v);
    }
    os << '\n';
  }
  // CSV has no room for scalars; the summary goes to the diagnostic stream.
  err << json{{"summary", summary}}.dump() << '\n';
  return os.str();
}

json energy_fields(const Resolved& r, const StressSummary& s) {
  const double unit = r.k.e * r.k.e / r.r_ref;
  json j = scales(r);
  j["U_erg"] = s.U_total;
  j["U_in_units_of_e2_over_r0"] = s.U_total / unit;
  j["laue_trace_over_U"] = s.laue_trace / s.U_total;
  j["quad_error"] = s.quad_error;
  j["quad_error_over_U"] = s.quad_error / s.U_total;
  j["mass_g"] = mass_from_energy(s.U_total, r.k);
  j["mass_over_m_e"] = mass_from_energy(s.U_total, r.k) / r.k.m_e;
  j["cutoff_r_cm"] = s.cutoff_r ? json(*s.cutoff_r) : json(nullptr);
  j["richardson"] = {{"fine", s.energy_scaled.value},
                     {"coarse", s.energy_scaled.coarse_value},
                     {"coarse_error", s.energy_scaled.coarse_error},
                     {"bounded", std::abs(s.energy_scaled.value - s.energy_scaled.coarse_value) <=
                                     s.energy_scaled.coarse_error}};
  return j;
}

std::string energy_command(const Resolved& r) {
  format_for(r.cfg, OutputFormat::Json, {OutputFormat::Json}, "energy");
  const auto s = stress_integrals(r.model, r.k.e, r.cfg.quad, cutoff_cm(r));
  json j = energy_fields(r, s);
  j["command"] = "energy";
  j["provenance"] = provenance(r);
  return j.dump(2) + "\n";
}

std::string laue_command(const Resolved& r) {
  format_for(r.cfg, OutputFormat::Json, {OutputFormat::Json}, "laue");
  const auto s = stress_integrals(r.model, r.k.e, r.cfg.quad, cutoff_cm(r));
  json j = energy_fields(r, s);
  j["command"] = "laue";
  j["laue_trace_erg"] = s.laue_trace;
  j["laue_quad_error"] = s.laue_quad_error;
  j["per_axis_trace_erg"] = s.per_axis_trace();
  j["momentum_g_cm_per_s"] = {s.momentum.x(), s.momentum.y(), s.momentum.z()};
  j["provenance"] = provenance(r);
  return j.dump(2) + "\n";
}

std::string expand_command(const Resolved& r) {
  format_for(r.cfg, OutputFormat::Json, {OutputFormat::Json}, "expand");
  const auto est = estimate_taylor_coefficients(r.model, r.cfg.expand_scale, r.cfg.expand_higher_order);
  json j;
  j["command"] = "expand";
  j["model"] = std::string(r.model.name());
  j["c1"] = est.c1_hat;
  j["c20"] = est.c20_hat;
  j["c02"] = est.c02_hat;
  j["ratio_c02_c20"] = est.c20_hat != 0.0 ? json(est.c02_hat / est.c20_hat) : json(nullptr);
  j["condition"] = est.condition;
  j["residual"] = est.residual;
  j["sample_scale"] = r.cfg.expand_scale;
  j["sampled_L_scale"] = est.sample_scale;
  if (est.gamma_hat) {
    j["gamma"] = *est.gamma_hat;
    j["xi"] = *est.xi_hat;
    j["zeta"] = *est.zeta_hat;
  }
  const auto ref = taylor_reference(r.model);
  j["reference"] = {{"c1", ref.c1}, {"c20", ref.c20}, {"c02", ref.c02}};
  j["E0_statvolt_per_cm"] = r.E0 ? json(*r.E0) : json(nullptr);
  j["provenance"] = provenance(r);
  return j.dump(2) + "\n";
}

std::string invariants_command(const Resolved& r) {
  format_for(r.cfg, OutputFormat::Json, {OutputFormat::Json}, "invariants");
  const auto f = run_invariant_suite(r.cfg.draws, r.cfg.boosts, r.cfg.seed);
  const auto i = run_interaction_suite(r.cfg.interaction_draws, r.cfg.seed, r.k.c, r.cfg.interaction_beta);
  json j;
  j["command"] = "invariants";
  j["draws"] = f.draws;
  j["boosts"] = f.boosts;
  j["seed"] = r.cfg.seed;
  j["max_rel_err_fierz"] = f.max_rel_err_fierz;
  j["max_rel_err_energy_momentum"] = f.max_rel_err_energy_momentum;
  j["max_rel_err_boost"] = f.max_rel_err_boost;
  j["interaction"] = {{"draws", i.draws},
                      {"beta", r.cfg.interaction_beta},
                      {"max_form_discrepancy", i.max_form_discrepancy},
                      {"max_identity_residual", i.max_identity_residual},
                      {"max_boost_discrepancy", i.max_boost_discrepancy}};
  j["provenance"] = provenance(r);
  return j.dump(2) + "\n";
}

std::string dirac_command(const Resolved& r, bool& all_pass) {
  const auto fmt = format_for(r.cfg, OutputFormat::Table, {OutputFormat::Table, OutputFormat::Json}, "dirac");
  const auto checks = verify_dirac_identities(r.k.c, r.k.m_e);
  all_pass = true;
  for (const auto& c : checks) all_pass = all_pass && (c.informational || c.pass);
  const auto fixture = slash_square(3.0, Vec3(1.0, 2.0, 3.0), 1.0);

  if (fmt == OutputFormat::Json) {
    json list = json::array();
    for (const auto& c : checks) {
      list.push_back({{"name", c.name},
                      {"residual", c.residual},
                      {"tolerance", c.tolerance},
                      {"pass", c.pass},
                      {"informational", c.informational}});
    }
    json j;
    j["command"] = "dirac";
    j["checks"] = list;
    j["all_pass"] = all_pass;
    j["fixture"] = {{"eps", 3.0},
                    {"p", {1.0, 2.0, 3.0}},
                    {"c", 1.0},
                    {"M_diagonal", fixture.M(0, 0).real()},
                    {"residual_anticommutation", fixture.residual_anticommutation},
                    {"residual_square_root_reading", fixture.residual_square_root_reading}};
    j["provenance"] = provenance(r);
    return j.dump(2) + "\n";
  }

  std::ostringstream os;
  os << "status  residual                 tolerance                identity\n";
  for (const auto& c : checks) {
    char line[96];
    std::snprintf(line, sizeof line, "%-6s  %-23.16e  %-23.16e  ", c.informational ? "INFO" : (c.pass ? "PASS" : "FAIL"),
                  c.residual, c.tolerance);
    os << line << c.name << '\n';
  }
  os << "fixture eps=3 p=(1,2,3) c=1: M = " << fixture.M(0, 0).real() << " I\n";
  os << "constants preset " << r.k.preset_name << " (c = " << std::setprecision(17) << r.k.c << " cm/s)\n";
  return os.str();
}

std::string radius_command(const Resolved& r) {
  format_for(r.cfg, OutputFormat::Json, {OutputFormat::Json}, "radius");
  const auto& k = r.k;
  const double C = born_infeld_energy_coefficient(r.cfg.quad);
  json conv = json::object();
  for (auto c : {RadiusConvention::Paper, RadiusConvention::EnergyConsistent}) {
    const double r0 = effective_radius(c, k, ModelKind::BornInfeld, r.cfg.quad);
    const double E0 = k.e / (r0 * r0);
    conv[std::string(to_string(c))] = {
        {"r0_cm", r0}, {"E0_statvolt_per_cm", E0}, {"E0_volt_per_m", statvolt_per_cm_to_volt_per_m(E0)}};
  }
  const std::string chosen(to_string(r.cfg.convention));
  json j;
  j["command"] = "radius";
  j["convention"] = chosen;
  j["r0_cm"] = conv[chosen]["r0_cm"];
  j["E0_statvolt_per_cm"] = conv[chosen]["E0_statvolt_per_cm"];
  j["E0_volt_per_m"] = conv[chosen]["E0_volt_per_m"];
  j["conventions"] = conv;
  j["classical_electron_radius_cm"] = classical_electron_radius(k);
  j["energy_coefficient_C"] = C;
  j["ratio_energy_consistent_over_paper"] =
      conv["energy-consistent"]["r0_cm"].get<double>() / conv["paper"]["r0_cm"].get<double>();
  j["provenance"] = provenance(r);
  return j.dump(2) + "\n";
}

void emit(const RunConfig& cfg, const std::string& body, std::ostream& out) {
  if (!cfg.output.path) {
    out << body;
    out.flush();
    return;
  }
  std::ofstream f(*cfg.output.path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error(ErrorKind::Configuration, "cannot write output file '" + *cfg.output.path + "'");
  f << body;
  if (!f) throw Error(ErrorKind::Configuration, "failed writing output file '" + *cfg.output.path + "'");
}

}  // namespace

Environment environment_from_process() {
  Environment env;
  if (const char* v = std::getenv("NLED_CONSTANTS_PRESET"); v && *v) env.constants_preset = v;
  return env;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Environment& env) {
  CLI::App cli{"Spherical solitons of nonlinear electrodynamics and related identity checks", "nled"};
  cli.require_subcommand(1, 1);
  Flags f;
  auto* o_config = cli.add_option("--config", f.config, "JSON run configuration");
  auto* o_model = cli.add_option("--model", f.model, "maxwell | born-infeld | log-schroedinger | polynomial | mie-sqrt");
  auto* o_preset = cli.add_option("--preset", f.preset, "constants preset: modern | historical1934");
  auto* o_E0 = cli.add_option("--E0", f.E0, "limiting field, statvolt/cm (default e / r0^2 of the convention)");
  auto* o_rmin = cli.add_option("--rmin", f.rmin, "innermost radius in units of r0");
  auto* o_rmax = cli.add_option("--rmax", f.rmax, "outermost radius in units of r0");
  auto* o_points = cli.add_option("--points", f.points, "grid points");
  auto* o_spacing = cli.add_option("--spacing", f.spacing, "log | linear");
  auto* o_out = cli.add_option("--out", f.out, "output file (default stdout)");
  auto* o_format = cli.add_option("--format", f.format, "csv | json | table");
  auto* o_conv = cli.add_option("--convention", f.convention, "radius convention: paper | energy-consistent");
  auto* o_cutoff = cli.add_option("--cutoff", f.cutoff, "inner cutoff radius in units of r0");
  auto* o_scale = cli.add_option("--scale", f.scale, "expand: sample field as a fraction of E0");
  auto* o_higher = cli.add_flag("--higher-order", f.higher_order, "expand: also fit the sixth-order terms");
  auto* o_draws = cli.add_option("--draws", f.draws, "invariants: random field draws");
  auto* o_boosts = cli.add_option("--boosts", f.boosts, "invariants: random boosts");
  auto* o_seed = cli.add_option("--seed", f.seed, "invariants: RNG seed");
  auto* o_rel = cli.add_option("--rel-tol", f.rel_tol, "quadrature relative tolerance");
  auto* o_abs = cli.add_option("--abs-tol", f.abs_tol, "quadrature absolute tolerance");
  auto* o_subdiv = cli.add_option("--max-subdiv", f.max_subdiv, "quadrature subdivision cap");
  auto* o_alpha = cli.add_option("--alpha", f.alpha, "polynomial coefficient of I1^2");
  auto* o_beta = cli.add_option("--beta", f.beta, "polynomial coefficient of I2^2");
  auto* o_gamma = cli.add_option("--gamma", f.gamma, "polynomial coefficient of I1 I2");
  auto* o_xi = cli.add_option("--xi", f.xi, "polynomial coefficient of I1^3");
  auto* o_zeta = cli.add_option("--zeta", f.zeta, "polynomial coefficient of I1 I2^2");
  auto* o_sign = cli.add_option("--mie-sign", f.mie_sign, "mie-sqrt sign branch, +1 or -1");

  const std::pair<const char*, const char*> commands[] = {
      {"profile", "radial profiles D, E, rho, epsilon, u, phi (CSV or JSON)"},
      {"energy", "total field energy and mass"},
      {"laue", "von Laue stress integrals"},
      {"expand", "small-field Taylor coefficients"},
      {"invariants", "random-draw field and interaction identity suites"},
      {"dirac", "Dirac matrix identity table"},
      {"radius", "effective radius under both conventions"},
  };
  for (const auto& [name, help] : commands) cli.add_subcommand(name, help)->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    cli.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << cli.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << cli.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    write_error(err, "Configuration", e.what());
    return kExitConfig;
  }

  const std::string command = cli.get_subcommands().front()->get_name();
  try {
    RunConfig cfg = *o_config ? load_config_file(f.config) : RunConfig{};
    if (env.constants_preset) cfg.preset = *env.constants_preset;
    if (*o_preset) cfg.preset = f.preset;
    if (*o_model) cfg.model.kind = parse_model_kind(f.model);
    if (*o_E0) cfg.model.E0 = f.E0;
    if (*o_rmin) cfg.grid.r_min_over_r0 = f.rmin;
    if (*o_rmax) cfg.grid.r_max_over_r0 = f.rmax;
    if (*o_points) cfg.grid.points = f.points;
    if (*o_spacing) cfg.grid.spacing = parse_grid_spacing(f.spacing);
    if (*o_out) cfg.output.path = f.out;
    if (*o_format) cfg.output.format = parse_output_format(f.format);
    if (*o_conv) cfg.convention = parse_radius_convention(f.convention);
    if (*o_cutoff) cfg.cutoff_over_r0 = f.cutoff;
    if (*o_scale) cfg.expand_scale = f.scale;
    if (*o_higher) cfg.expand_higher_order = f.higher_order;
    if (*o_draws) cfg.draws = cfg.interaction_draws = f.draws;
    if (*o_boosts) cfg.boosts = f.boosts;
    if (*o_seed) cfg.seed = f.seed;
    if (*o_rel) cfg.quad.rel_tol = f.rel_tol;
    if (*o_abs) cfg.quad.abs_tol = f.abs_tol;
    if (*o_subdiv) cfg.quad.max_subdiv = f.max_subdiv;
    if (*o_alpha) cfg.model.coeffs.alpha = f.alpha;
    if (*o_beta) cfg.model.coeffs.beta = f.beta;
    if (*o_gamma) cfg.model.coeffs.gamma = f.gamma;
    if (*o_xi) cfg.model.coeffs.xi = f.xi;
    if (*o_zeta) cfg.model.coeffs.zeta = f.zeta;
    if (*o_sign) cfg.model.mie_sign = f.mie_sign;
    validate(cfg);

    const Resolved r = resolve(cfg);
    std::string body;
    int code = kExitOk;
    if (command == "profile") {
      body = profile_command(r, err);
    } else if (command == "energy") {
      body = energy_command(r);
    } else if (command == "laue") {
      body = laue_command(r);
    } else if (command == "expand") {
      body = expand_command(r);
    } else if (command == "invariants") {
      body = invariants_command(r);
    } else if (command == "dirac") {
      bool all_pass = true;
      body = dirac_command(r, all_pass);
      if (!all_pass) code = kExitNumerical;
    } else {
      body = radius_command(r);
    }
    emit(cfg, body, out);
    return code;
  } catch (const Error& e) {
    write_error(err, to_string(e.kind()), e.what(), e.diagnostics());
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    write_error(err, "Internal", e.what());
    return 1;
  }
}

}  // namespace nled::app
