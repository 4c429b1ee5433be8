#include "nled/units.hpp"

#include "nled/errors.hpp"

namespace nled {

PhysicalConstants constants(std::string_view preset) {
  constexpr double kMass = 9.1093837015e-28;
  constexpr double kLight = 2.99792458e10;
  if (preset == kPresetModern) {
    return {4.80320471e-10, kMass, kLight, std::string(kPresetModern)};
  }
  if (preset == kPresetHistorical1934) {
    return {4.77e-10, kMass, kLight, std::string(kPresetHistorical1934)};
  }
  throw Error(ErrorKind::Configuration,
              "unknown constants preset '" + std::string(preset) +
                  "' (expected 'modern' or 'historical1934')");
}

double statvolt_per_cm_to_volt_per_m(double field_statvolt_per_cm) noexcept {
  return field_statvolt_per_cm * kVoltPerMeterPerStatvoltPerCm;
}

double classical_electron_radius(const PhysicalConstants& k) noexcept {
  return k.e * k.e / (k.m_e * k.c * k.c);
}

}  // namespace nled
