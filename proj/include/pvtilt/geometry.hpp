#pragma once

// Closed-form solar position. Every angle at this interface is in degrees;
// times are local apparent solar time (no equation of time, no refraction).

namespace pvtilt {

inline constexpr double kAxialTiltDeg = 23.45;
inline constexpr int kDaysPerYear = 365;
/// Day of the March equinox used as the declination phase anchor.
inline constexpr int kEquinoxDay = 81;

/// Signed geographic latitude, positive north.
class Location {
public:
    explicit Location(double latitude_deg);

    double latitude_deg() const noexcept { return latitude_; }

    /// Throws unless the noon sun stays above the horizon all year
    /// (|latitude| < 90 - 23.45).
    void require_strict() const;

private:
    double latitude_;
};

/// Day of a 365-day year, January 1 = 1.
class DayOfYear {
public:
    explicit DayOfYear(int day);

    int value() const noexcept { return day_; }

private:
    int day_;
};

/// Hour angle: 15 degrees per hour from solar noon, negative in the morning.
class HourAngle {
public:
    explicit HourAngle(double omega_deg);

    static HourAngle from_solar_hour(double hour) { return HourAngle((hour - 12.0) * 15.0); }

    double degrees() const noexcept { return omega_; }
    double solar_hour() const noexcept { return 12.0 + omega_ / 15.0; }

private:
    double omega_;
};

enum class DeclinationModel {
    Exact,       ///< 23.45 sin(360/365 (d - 81))
    Simplified,  ///< 23.45 sin(d - 81), a 360-day period
};

struct SolarAngles {
    double declination_deg = 0.0;
    double elevation_deg = 0.0;
    double zenith_deg = 90.0;
    /// Measured from south, negative toward east (morning), positive toward west.
    double azimuth_deg = 0.0;

    /// Compass bearing: 0 = north, clockwise, in [0, 360).
    double compass_azimuth_deg() const noexcept;
};

struct NoonElevation {
    /// 90 - (latitude - declination); exceeds 90 when the noon sun is poleward.
    double raw_deg = 0.0;
    /// min(raw, 180 - raw): the physical elevation above the horizon.
    double folded_deg = 0.0;
};

double declination_exact(DayOfYear day);
double declination_simplified(DayOfYear day);
double declination(DayOfYear day, DeclinationModel model);

NoonElevation noon_elevation(const Location& loc, DayOfYear day);
/// Same as noon_elevation but rejects latitudes where the noon sun can set.
NoonElevation noon_elevation_strict(const Location& loc, DayOfYear day);

/// latitude - declination; always 90 - noon_elevation(...).raw_deg.
double noon_zenith(const Location& loc, DayOfYear day);

/// Sun position for an arbitrary hour angle. Elevation is negative below
/// the horizon.
SolarAngles sun_position(const Location& loc, DayOfYear day, HourAngle omega);

/// Sunset hour angle in [0, 180]; 0 during polar night, 180 during polar day.
double sunrise_hour_angle(const Location& loc, DayOfYear day);

double deg_to_rad(double deg) noexcept;
double rad_to_deg(double rad) noexcept;

}  // namespace pvtilt
