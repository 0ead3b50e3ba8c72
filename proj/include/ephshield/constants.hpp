#pragma once

// Shared physical constants. Every module takes these from here so the
// propagator, the validation chaincode and the screening pipeline always
// agree on the same Earth model.

namespace ephshield::constants {

inline constexpr double kMuEarthKm3S2  = 398600.4418;    // gravitational parameter, km^3/s^2
inline constexpr double kEarthRadiusKm = 6378.137;       // equatorial radius, km
inline constexpr double kJ2            = 1.08262668e-3;  // second zonal harmonic

inline constexpr double kPi       = 3.14159265358979323846;
inline constexpr double kTwoPi    = 2.0 * kPi;
inline constexpr double kDegToRad = kPi / 180.0;
inline constexpr double kRadToDeg = 180.0 / kPi;

inline constexpr double    kSecondsPerDay = 86400.0;
inline constexpr long long kMicrosPerDay  = 86400LL * 1000000LL;

} // namespace ephshield::constants
