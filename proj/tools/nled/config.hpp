#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "nled/energetics.hpp"
#include "nled/lagrangian.hpp"
#include "nled/quadrature.hpp"
#include "nled/radial_soliton.hpp"

namespace nled::app {

struct ModelConfig {
  ModelKind kind = ModelKind::BornInfeld;
  std::optional<double> E0;
  PolynomialCoefficients coeffs;
  int mie_sign = 1;
};

struct GridConfig {
  double r_min_over_r0 = 1e-4;
  double r_max_over_r0 = 1e4;
  std::size_t points = 400;
  GridSpacing spacing = GridSpacing::Log;
};

enum class OutputFormat { Csv, Json, Table };

struct OutputConfig {
  std::optional<std::string> path;
  std::optional<OutputFormat> format;  // subcommand default when unset
};

/// Everything a subcommand needs, after config file, environment and flags are merged.
struct RunConfig {
  ModelConfig model;
  std::string preset = "modern";
  GridConfig grid;
  QuadratureSpec quad;
  OutputConfig output;
  RadiusConvention convention = RadiusConvention::Paper;
  std::optional<double> cutoff_over_r0;
  double expand_scale = 1e-2;
  bool expand_higher_order = false;
  std::size_t draws = 10000;
  std::size_t boosts = 1000;
  std::size_t interaction_draws = 1000;
  double interaction_beta = 0.6;
  std::uint64_t seed = 42;
};

std::string_view to_string(OutputFormat f) noexcept;
OutputFormat parse_output_format(std::string_view name);

/// Reads the JSON config layout; unknown keys are a configuration error.
RunConfig config_from_json(const nlohmann::json& j);
RunConfig load_config_file(const std::string& path);

/// Canonical JSON of the effective configuration (the hash input).
nlohmann::json config_to_json(const RunConfig& c);

/// Throws Error{Configuration} if any field is out of range.
void validate(const RunConfig& c);

/// 64-bit FNV-1a, hex encoded.
std::string fnv1a_hex(std::string_view bytes);

}  // namespace nled::app
