#pragma once

#include <cmath>
#include <compare>
#include <cstdint>
#include <cstdio>
#include <string>

#include "ephshield/constants.hpp"
#include "ephshield/error.hpp"

namespace ephshield {

// Instant in UTC, counted from 1970-01-01T00:00:00. Microsecond resolution,
// normalized so 0 <= micros < 1'000'000 (seconds may be negative for the
// pre-1970 part of the catalog era). Days are uniform 86400 s; leap seconds
// are not modeled, matching element-set practice.
struct Epoch {
    std::int64_t  seconds = 0;
    std::uint32_t micros  = 0;

    friend auto operator<=>(const Epoch&, const Epoch&) = default;

    static Epoch from_unix_micros(std::int64_t us) {
        std::int64_t s = us / 1000000;
        std::int64_t r = us % 1000000;
        if (r < 0) { r += 1000000; s -= 1; }
        return Epoch{s, static_cast<std::uint32_t>(r)};
    }

    std::int64_t to_unix_micros() const {
        return seconds * 1000000 + static_cast<std::int64_t>(micros);
    }

    Epoch plus_seconds(double dt) const {
        const double us = std::round(dt * 1e6);
        if (!(us >= -9.0e18 && us <= 9.0e18))
            throw RangeError("epoch offset out of range");
        return from_unix_micros(to_unix_micros() + static_cast<std::int64_t>(us));
    }
};

// Signed difference a - b in seconds.
inline double diff_seconds(const Epoch& a, const Epoch& b) {
    return static_cast<double>(a.seconds - b.seconds) +
           (static_cast<double>(a.micros) - static_cast<double>(b.micros)) * 1e-6;
}

namespace detail {

// Howard Hinnant's civil-date algorithm; exact for all proleptic Gregorian dates.
inline std::int64_t days_from_civil(int y, unsigned m, unsigned d) {
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

inline void civil_from_days(std::int64_t z, int& y, unsigned& m, unsigned& d) {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const int yr = static_cast<int>(yoe) + static_cast<int>(era) * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    d = doy - (153 * mp + 2) / 5 + 1;
    m = mp + (mp < 10 ? 3 : -9);
    y = yr + (m <= 2);
}

inline bool is_leap_year(int y) {
    return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0;
}

} // namespace detail

inline Epoch epoch_from_civil(int year, unsigned month, unsigned day,
                              unsigned hour = 0, unsigned minute = 0, double sec = 0.0) {
    const std::int64_t days = detail::days_from_civil(year, month, day);
    const double us = std::round(sec * 1e6);
    return Epoch::from_unix_micros((days * 86400 + hour * 3600 + minute * 60) * 1000000 +
                                   static_cast<std::int64_t>(us));
}

// Element-set epochs: two-digit year (pivot 57: 57-99 -> 19xx, 00-56 -> 20xx),
// integer day-of-year starting at 1, and the day fraction as the printed
// 8-digit integer. One fraction unit is 1e-8 day = exactly 864 us, so the
// conversion is integer-exact in both directions.
inline int resolve_tle_year(int year2) {
    if (year2 < 0 || year2 > 99) throw RangeError("two-digit year out of range");
    return year2 >= 57 ? 1900 + year2 : 2000 + year2;
}

inline Epoch epoch_from_tle(int year2, int day_of_year, int frac8) {
    const int year = resolve_tle_year(year2);
    const int max_day = detail::is_leap_year(year) ? 366 : 365;
    if (day_of_year < 1 || day_of_year > max_day)
        throw RangeError("day-of-year out of range for year " + std::to_string(year));
    if (frac8 < 0 || frac8 > 99999999)
        throw RangeError("day fraction out of range");
    const std::int64_t day0 = detail::days_from_civil(year, 1, 1) + (day_of_year - 1);
    return Epoch::from_unix_micros(day0 * constants::kMicrosPerDay +
                                   static_cast<std::int64_t>(frac8) * 864);
}

struct TleEpochFields {
    int year2;
    int day_of_year;
    int frac8;
};

// Nearest representable element-set epoch; exact when the input came from
// epoch_from_tle. Throws if the year falls outside the 1957-2056 window.
inline TleEpochFields epoch_to_tle(const Epoch& e) {
    std::int64_t total_us = e.to_unix_micros();
    std::int64_t day = total_us / constants::kMicrosPerDay;
    std::int64_t us_of_day = total_us % constants::kMicrosPerDay;
    if (us_of_day < 0) { us_of_day += constants::kMicrosPerDay; day -= 1; }

    int year; unsigned month, dom;
    detail::civil_from_days(day, year, month, dom);
    std::int64_t doy = day - detail::days_from_civil(year, 1, 1) + 1;

    std::int64_t frac8 = (us_of_day * 2 + 864) / (2 * 864); // round half up
    if (frac8 == 100000000) {
        frac8 = 0;
        doy += 1;
        if (doy > (detail::is_leap_year(year) ? 366 : 365)) { doy = 1; year += 1; }
    }
    if (year < 1957 || year > 2056)
        throw RangeError("epoch year " + std::to_string(year) + " not representable in two digits");
    return TleEpochFields{year % 100, static_cast<int>(doy), static_cast<int>(frac8)};
}

// "YYYY-MM-DDTHH:MM:SS.ssssssZ", for logs and JSON output.
inline std::string format_epoch(const Epoch& e) {
    std::int64_t day = e.seconds / 86400;
    std::int64_t sod = e.seconds % 86400;
    if (sod < 0) { sod += 86400; day -= 1; }
    int year; unsigned month, dom;
    detail::civil_from_days(day, year, month, dom);
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%04d-%02u-%02uT%02lld:%02lld:%02lld.%06uZ",
                  year, month, dom,
                  static_cast<long long>(sod / 3600),
                  static_cast<long long>((sod / 60) % 60),
                  static_cast<long long>(sod % 60),
                  e.micros);
    return buf;
}

} // namespace ephshield
