#pragma once

#include <string>
#include <vector>

#include "pvtilt/geometry.hpp"
#include "pvtilt/tilt_schedule.hpp"

namespace pvtilt {

/// Clear-sky beam irradiance: DNI = S * 0.7^(AM^0.678), AM = 1/cos(zenith),
/// zenith capped to keep AM finite at the horizon. No diffuse or ground
/// reflected light.
struct IrradianceModel {
    double solar_constant_w_m2 = 1353.0;
    double time_step_minutes = 1.0;
    double zenith_cap_deg = 89.0;

    /// Throws DomainError for a non-positive step or constant.
    void validate() const;
};

/// Direct-normal irradiance in W/m^2 for a sun at the given zenith angle;
/// zero when the sun is at or below the horizon.
double direct_normal_irradiance(const IrradianceModel& model, double zenith_deg);

struct Incidence {
    double cosine = 0.0;  ///< in [-1, 1]; negative means the sun is behind the panel
    bool sun_above_horizon = false;
};

/// Cosine of the angle between the sun and the normal of a panel tilted
/// tilt_deg from horizontal, facing panel_azimuth_deg (south-referenced).
Incidence incidence_cosine(const Location& loc, DayOfYear day, HourAngle omega, double tilt_deg,
                           double panel_azimuth_deg = 0.0);

/// Inclusive day range within one 365-day year.
struct DayRange {
    int first = 1;
    int last = kDaysPerYear;

    static DayRange single(int day) { return {day, day}; }
    static DayRange year() { return {}; }
    int size() const noexcept { return last - first + 1; }
    void validate() const;
};

struct InsolationResult {
    double energy_wh_m2 = 0.0;
    DayRange period;
    std::string policy;
    /// One entry per day of the period.
    std::vector<double> daily_wh_m2;
};

/// Plane-of-array beam energy over daylight, trapezoidal rule in hour angle.
InsolationResult daily_insolation(const Location& loc, DayOfYear day, double tilt_deg,
                                  const IrradianceModel& model, double panel_azimuth_deg = 0.0);

/// Energy between two hour angles (clipped to daylight); used for
/// morning/afternoon splits.
double window_insolation(const Location& loc, DayOfYear day, double tilt_deg, double omega_from_deg,
                         double omega_to_deg, const IrradianceModel& model, double panel_azimuth_deg = 0.0);

InsolationResult annual_insolation(const Location& loc, const TiltPolicy& policy, const IrradianceModel& model);

/// Sum of daily insolation over a period at a constant tilt.
double period_insolation(const Location& loc, DayRange period, double tilt_deg, const IrradianceModel& model);

struct FixedTiltOptimum {
    double tilt_deg = 0.0;
    double energy_wh_m2 = 0.0;
};

struct SweepOptions {
    double coarse_step_deg = 0.5;
    /// Shifts the coarse grid to {offset, offset + step, ...}.
    double coarse_offset_deg = 0.0;
    double fine_step_deg = 0.05;
};

/// Exhaustive sweep over [0, 90] followed by a fine sweep around the best
/// coarse point.
FixedTiltOptimum optimize_fixed_tilt(const Location& loc, DayRange period, const IrradianceModel& model,
                                     const SweepOptions& sweep = {});

/// Energy at every tilt of a grid, for inspecting the objective.
std::vector<double> tilt_energy_profile(const Location& loc, DayRange period, const IrradianceModel& model,
                                        const std::vector<double>& tilts_deg);

struct PolicyGain {
    std::string policy;
    double energy_wh_m2 = 0.0;
    double gain_percent = 0.0;
};

struct GainReport {
    double latitude_deg = 0.0;
    TiltMode mode = TiltMode::Exact;
    double baseline_wh_m2 = 0.0;  ///< fixed tilt at latitude
    /// fixed, seasonal, monthly, daily, in that order.
    std::vector<PolicyGain> policies;
};

GainReport gain_report(const Location& loc, const IrradianceModel& model, TiltMode mode = TiltMode::Exact);

}  // namespace pvtilt
