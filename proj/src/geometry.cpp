#include "pvtilt/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "pvtilt/error.hpp"

namespace pvtilt {

double deg_to_rad(double deg) noexcept { return deg * std::numbers::pi / 180.0; }
double rad_to_deg(double rad) noexcept { return rad * 180.0 / std::numbers::pi; }

namespace {

double sin_deg(double deg) { return std::sin(deg_to_rad(deg)); }

}  // namespace

Location::Location(double latitude_deg) : latitude_(latitude_deg) {
    if (!std::isfinite(latitude_deg) || std::abs(latitude_deg) > 90.0)
        throw DomainError(fmt::format("latitude {} outside [-90, 90]", latitude_deg));
}

void Location::require_strict() const {
    if (std::abs(latitude_) >= 90.0 - kAxialTiltDeg)
        throw DomainError(fmt::format(
            "latitude {} is polar: the noon sun drops below the horizon (strict mode needs |lat| < {})",
            latitude_, 90.0 - kAxialTiltDeg));
}

DayOfYear::DayOfYear(int day) : day_(day) {
    if (day < 1 || day > kDaysPerYear)
        throw DomainError(fmt::format("day of year {} outside [1, {}]", day, kDaysPerYear));
}

HourAngle::HourAngle(double omega_deg) : omega_(omega_deg) {
    if (!std::isfinite(omega_deg) || std::abs(omega_deg) > 180.0)
        throw DomainError(fmt::format("hour angle {} outside [-180, 180]", omega_deg));
}

double SolarAngles::compass_azimuth_deg() const noexcept {
    double compass = std::fmod(azimuth_deg + 180.0, 360.0);
    if (compass < 0.0) compass += 360.0;
    return compass;
}

double declination_exact(DayOfYear day) {
    return kAxialTiltDeg * sin_deg(360.0 / kDaysPerYear * (day.value() - kEquinoxDay));
}

double declination_simplified(DayOfYear day) {
    return kAxialTiltDeg * sin_deg(static_cast<double>(day.value() - kEquinoxDay));
}

double declination(DayOfYear day, DeclinationModel model) {
    return model == DeclinationModel::Exact ? declination_exact(day) : declination_simplified(day);
}

NoonElevation noon_elevation(const Location& loc, DayOfYear day) {
    const double raw = 90.0 - (loc.latitude_deg() - declination_exact(day));
    return {raw, std::min(raw, 180.0 - raw)};
}

NoonElevation noon_elevation_strict(const Location& loc, DayOfYear day) {
    loc.require_strict();
    return noon_elevation(loc, day);
}

double noon_zenith(const Location& loc, DayOfYear day) {
    return loc.latitude_deg() - declination_exact(day);
}

SolarAngles sun_position(const Location& loc, DayOfYear day, HourAngle omega) {
    const double decl = declination_exact(day);
    const double phi = deg_to_rad(loc.latitude_deg());
    const double d = deg_to_rad(decl);
    const double w = deg_to_rad(omega.degrees());

    // Unit sun vector in the local (south, west, up) frame.
    const double up = std::sin(phi) * std::sin(d) + std::cos(phi) * std::cos(d) * std::cos(w);
    const double west = std::cos(d) * std::sin(w);
    const double south = std::sin(phi) * std::cos(d) * std::cos(w) - std::cos(phi) * std::sin(d);
    // atan2 keeps full precision near the zenith, where asin(up) does not.
    const double elevation = rad_to_deg(std::atan2(up, std::hypot(south, west)));
    double azimuth = rad_to_deg(std::atan2(west, south));
    if (omega.degrees() == 0.0) azimuth = south >= 0.0 ? 0.0 : 180.0;

    return {decl, elevation, 90.0 - elevation, azimuth};
}

double sunrise_hour_angle(const Location& loc, DayOfYear day) {
    const double x = -std::tan(deg_to_rad(loc.latitude_deg())) * std::tan(deg_to_rad(declination_exact(day)));
    if (x >= 1.0) return 0.0;
    if (x <= -1.0) return 180.0;
    return rad_to_deg(std::acos(x));
}

}  // namespace pvtilt
