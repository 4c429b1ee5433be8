#include "config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>

#include "nled/errors.hpp"

namespace nled::app {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::Configuration, "config: " + what); }

void only_keys(const json& j, const std::string& where, std::initializer_list<const char*> allowed) {
  if (!j.is_object()) bad(where + " must be an object");
  const std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [key, _] : j.items()) {
    if (!ok.count(key)) bad("unknown key '" + key + "' in " + where);
  }
}

template <class T>
T get(const json& j, const char* key, const std::string& where) {
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    bad(where + "." + key + " has the wrong type");
  }
}

}  // namespace

std::string_view to_string(OutputFormat f) noexcept {
  switch (f) {
    case OutputFormat::Csv: return "csv";
    case OutputFormat::Json: return "json";
    case OutputFormat::Table: return "table";
  }
  return "?";
}

OutputFormat parse_output_format(std::string_view name) {
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  if (name == "table") return OutputFormat::Table;
  throw Error(ErrorKind::Configuration, "output format must be csv, json or table, got '" + std::string(name) + "'");
}

RunConfig config_from_json(const json& j) {
  only_keys(j, "config",
            {"model", "preset", "grid", "quad", "output", "convention", "cutoff_over_r0", "expand", "invariants"});
  RunConfig c;
  if (j.contains("model")) {
    const auto& m = j["model"];
    only_keys(m, "model", {"kind", "E0", "coeffs", "sign"});
    if (m.contains("kind")) c.model.kind = parse_model_kind(get<std::string>(m, "kind", "model"));
    if (m.contains("E0")) c.model.E0 = get<double>(m, "E0", "model");
    if (m.contains("sign")) c.model.mie_sign = get<int>(m, "sign", "model");
    if (m.contains("coeffs")) {
      const auto& k = m["coeffs"];
      only_keys(k, "model.coeffs", {"alpha", "beta", "gamma", "xi", "zeta"});
      auto& p = c.model.coeffs;
      if (k.contains("alpha")) p.alpha = get<double>(k, "alpha", "model.coeffs");
      if (k.contains("beta")) p.beta = get<double>(k, "beta", "model.coeffs");
      if (k.contains("gamma")) p.gamma = get<double>(k, "gamma", "model.coeffs");
      if (k.contains("xi")) p.xi = get<double>(k, "xi", "model.coeffs");
      if (k.contains("zeta")) p.zeta = get<double>(k, "zeta", "model.coeffs");
    }
  }
  if (j.contains("preset")) c.preset = get<std::string>(j, "preset", "config");
  if (j.contains("grid")) {
    const auto& g = j["grid"];
    only_keys(g, "grid", {"r_min_over_r0", "r_max_over_r0", "points", "spacing"});
    if (g.contains("r_min_over_r0")) c.grid.r_min_over_r0 = get<double>(g, "r_min_over_r0", "grid");
    if (g.contains("r_max_over_r0")) c.grid.r_max_over_r0 = get<double>(g, "r_max_over_r0", "grid");
    if (g.contains("points")) c.grid.points = get<std::size_t>(g, "points", "grid");
    if (g.contains("spacing")) c.grid.spacing = parse_grid_spacing(get<std::string>(g, "spacing", "grid"));
  }
  if (j.contains("quad")) {
    const auto& q = j["quad"];
    only_keys(q, "quad", {"rel_tol", "abs_tol", "max_subdiv"});
    if (q.contains("rel_tol")) c.quad.rel_tol = get<double>(q, "rel_tol", "quad");
    if (q.contains("abs_tol")) c.quad.abs_tol = get<double>(q, "abs_tol", "quad");
    if (q.contains("max_subdiv")) c.quad.max_subdiv = get<std::size_t>(q, "max_subdiv", "quad");
  }
  if (j.contains("output")) {
    const auto& o = j["output"];
    only_keys(o, "output", {"path", "format"});
    if (o.contains("path")) c.output.path = get<std::string>(o, "path", "output");
    if (o.contains("format")) c.output.format = parse_output_format(get<std::string>(o, "format", "output"));
  }
  if (j.contains("convention")) c.convention = parse_radius_convention(get<std::string>(j, "convention", "config"));
  if (j.contains("cutoff_over_r0") && !j["cutoff_over_r0"].is_null()) {
    c.cutoff_over_r0 = get<double>(j, "cutoff_over_r0", "config");
  }
  if (j.contains("expand")) {
    const auto& e = j["expand"];
    only_keys(e, "expand", {"scale", "higher_order"});
    if (e.contains("scale")) c.expand_scale = get<double>(e, "scale", "expand");
    if (e.contains("higher_order")) c.expand_higher_order = get<bool>(e, "higher_order", "expand");
  }
  if (j.contains("invariants")) {
    const auto& v = j["invariants"];
    only_keys(v, "invariants", {"draws", "boosts", "interaction_draws", "interaction_beta", "seed"});
    if (v.contains("draws")) c.draws = get<std::size_t>(v, "draws", "invariants");
    if (v.contains("boosts")) c.boosts = get<std::size_t>(v, "boosts", "invariants");
    if (v.contains("interaction_draws")) c.interaction_draws = get<std::size_t>(v, "interaction_draws", "invariants");
    if (v.contains("interaction_beta")) c.interaction_beta = get<double>(v, "interaction_beta", "invariants");
    if (v.contains("seed")) c.seed = get<std::uint64_t>(v, "seed", "invariants");
  }
  return c;
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    bad("'" + path + "' is not valid JSON: " + e.what());
  }
  return config_from_json(j);
}

json config_to_json(const RunConfig& c) {
  json j;
  j["model"]["kind"] = std::string(to_string(c.model.kind));
  j["model"]["E0"] = c.model.E0 ? json(*c.model.E0) : json(nullptr);
  j["model"]["coeffs"] = {{"alpha", c.model.coeffs.alpha}, {"beta", c.model.coeffs.beta},
                          {"gamma", c.model.coeffs.gamma}, {"xi", c.model.coeffs.xi},
                          {"zeta", c.model.coeffs.zeta}};
  j["model"]["sign"] = c.model.mie_sign;
  j["preset"] = c.preset;
  j["grid"] = {{"r_min_over_r0", c.grid.r_min_over_r0},
               {"r_max_over_r0", c.grid.r_max_over_r0},
               {"points", c.grid.points},
               {"spacing", std::string(to_string(c.grid.spacing))}};
  j["quad"] = {{"rel_tol", c.quad.rel_tol}, {"abs_tol", c.quad.abs_tol}, {"max_subdiv", c.quad.max_subdiv}};
  j["convention"] = std::string(to_string(c.convention));
  j["cutoff_over_r0"] = c.cutoff_over_r0 ? json(*c.cutoff_over_r0) : json(nullptr);
  j["expand"] = {{"scale", c.expand_scale}, {"higher_order", c.expand_higher_order}};
  j["invariants"] = {{"draws", c.draws},
                     {"boosts", c.boosts},
                     {"interaction_draws", c.interaction_draws},
                     {"interaction_beta", c.interaction_beta},
                     {"seed", c.seed}};
  // The output destination does not change results and is left out of the hash input.
  return j;
}

void validate(const RunConfig& c) {
  const auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
  if (c.grid.points < 5) bad("grid.points must be >= 5");
  if (!positive(c.grid.r_min_over_r0) || !positive(c.grid.r_max_over_r0) ||
      !(c.grid.r_min_over_r0 < c.grid.r_max_over_r0)) {
    bad("grid needs 0 < r_min_over_r0 < r_max_over_r0");
  }
  if (!positive(c.quad.rel_tol) || !positive(c.quad.abs_tol) || c.quad.max_subdiv == 0) {
    bad("quadrature tolerances must be > 0");
  }
  if (c.model.E0 && !positive(*c.model.E0)) bad("model.E0 must be > 0");
  if (c.cutoff_over_r0 && !positive(*c.cutoff_over_r0)) bad("cutoff_over_r0 must be > 0");
  if (!(c.interaction_beta >= 0.0 && c.interaction_beta < 1.0)) bad("interaction_beta must lie in [0, 1)");
}

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace nled::app
