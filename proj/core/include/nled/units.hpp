#pragma once

#include <string>
#include <string_view>

namespace nled {

/// Gaussian CGS constants. Everything in the library is CGS; SI only appears through the
/// explicit conversion helpers below.
struct PhysicalConstants {
  double e;    ///< elementary charge, esu
  double m_e;  ///< electron mass, g
  double c;    ///< speed of light, cm/s
  std::string preset_name;
};

inline constexpr std::string_view kPresetModern = "modern";
inline constexpr std::string_view kPresetHistorical1934 = "historical1934";

/// 1 statvolt/cm expressed in V/m (c / 10^6 in CGS numerics).
inline constexpr double kVoltPerMeterPerStatvoltPerCm = 2.99792458e4;

/// Constant set for a named preset.
///
/// `modern` carries CODATA values. `historical1934` keeps the modern mass and speed of light
/// but uses the 1934-era charge 4.77e-10 esu, under which e / (2.28e-13 cm)^2 = 9.18e15.
/// Throws Error{Configuration} for any other label.
PhysicalConstants constants(std::string_view preset);

double statvolt_per_cm_to_volt_per_m(double field_statvolt_per_cm) noexcept;

/// r_e = e^2 / (m_e c^2), in cm.
double classical_electron_radius(const PhysicalConstants& k) noexcept;

}  // namespace nled
