#pragma once

#include <numbers>

namespace exlat {

// CODATA 2018 exact / recommended values (SI).
inline constexpr double kPlanck = 6.62607015e-34;               // J s
inline constexpr double kVacuumPermittivity = 8.8541878128e-12;  // F/m
inline constexpr double kPi = std::numbers::pi;

// Angle at which 1 - 3 cos^2(theta) vanishes.
inline const double kMagicAngleRad = 0.95531661812450927816;  // acos(1/sqrt(3))

}  // namespace exlat
