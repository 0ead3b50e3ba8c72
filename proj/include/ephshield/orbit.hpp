#pragma once

#include <array>
#include <cmath>
#include <string>

#include "ephshield/constants.hpp"
#include "ephshield/epoch.hpp"
#include "ephshield/error.hpp"

namespace ephshield {

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    friend Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
    friend Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
    friend Vec3 operator*(double s, const Vec3& v) { return {s * v.x, s * v.y, s * v.z}; }
    friend bool operator==(const Vec3&, const Vec3&) = default;
};

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

// Angle wrapped into [0, 2*pi).
inline double wrap_two_pi(double a) {
    a = std::fmod(a, constants::kTwoPi);
    if (a < 0.0) a += constants::kTwoPi;
    if (a == constants::kTwoPi) a = 0.0; // fmod may round up
    return a;
}

// Shortest angular separation on the circle, in [0, pi].
inline double circular_distance(double a, double b) {
    const double d = std::fabs(wrap_two_pi(a) - wrap_two_pi(b));
    return d > constants::kPi ? constants::kTwoPi - d : d;
}

// Keplerian mean element set. Angles canonical in [0, 2*pi), inclination in
// [0, pi]. The mean-motion first derivative (half, rev/day^2 as printed in
// element sets) rides along for the propagator's optional quadratic term.
struct OrbitalElements {
    double semi_major_axis_km = 0.0;
    double eccentricity = 0.0;
    double inclination_rad = 0.0;
    double raan_rad = 0.0;
    double argp_rad = 0.0;
    double mean_anomaly_rad = 0.0;
    double mean_motion_dot_half = 0.0;

    friend bool operator==(const OrbitalElements&, const OrbitalElements&) = default;
};

inline OrbitalElements canonicalized(OrbitalElements oe) {
    oe.raan_rad = wrap_two_pi(oe.raan_rad);
    oe.argp_rad = wrap_two_pi(oe.argp_rad);
    oe.mean_anomaly_rad = wrap_two_pi(oe.mean_anomaly_rad);
    return oe;
}

inline double perigee_radius_km(const OrbitalElements& oe) {
    return oe.semi_major_axis_km * (1.0 - oe.eccentricity);
}

inline double apogee_radius_km(const OrbitalElements& oe) {
    return oe.semi_major_axis_km * (1.0 + oe.eccentricity);
}

inline bool is_feasible(const OrbitalElements& oe) {
    return std::isfinite(oe.semi_major_axis_km) && oe.semi_major_axis_km > 0.0 &&
           std::isfinite(oe.eccentricity) && oe.eccentricity >= 0.0 && oe.eccentricity < 1.0 &&
           std::isfinite(oe.inclination_rad) &&
           oe.inclination_rad >= 0.0 && oe.inclination_rad <= constants::kPi &&
           std::isfinite(oe.raan_rad) && std::isfinite(oe.argp_rad) &&
           std::isfinite(oe.mean_anomaly_rad) && std::isfinite(oe.mean_motion_dot_half) &&
           perigee_radius_km(oe) > constants::kEarthRadiusKm;
}

inline void require_feasible(const OrbitalElements& oe) {
    if (!is_feasible(oe))
        throw InfeasibleElementsError("orbital elements outside feasibility envelope (perigee " +
                                      std::to_string(perigee_radius_km(oe)) + " km)");
}

// Mean motion in rad/s for a given semi-major axis.
inline double mean_motion_rad_s(double semi_major_axis_km) {
    return std::sqrt(constants::kMuEarthKm3S2 /
                     (semi_major_axis_km * semi_major_axis_km * semi_major_axis_km));
}

// Inertial Cartesian state. Frame is a fixed Earth-centered inertial frame;
// relative geometry between co-propagated objects is what matters here.
struct StateVector {
    Vec3 position_km;
    Vec3 velocity_km_s;
    Epoch epoch;
};

inline double specific_energy(const StateVector& s) {
    const double v2 = dot(s.velocity_km_s, s.velocity_km_s);
    return 0.5 * v2 - constants::kMuEarthKm3S2 / norm(s.position_km);
}

} // namespace ephshield
