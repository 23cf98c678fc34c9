#include "pvtilt/irradiance.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "pvtilt/error.hpp"

namespace pvtilt {

namespace {

// Sun direction in the local horizon frame, as unit-vector components.
struct SunVector {
    double up;     // sin(elevation)
    double south;  // cos(elevation) cos(azimuth)
    double west;   // cos(elevation) sin(azimuth)
};

SunVector sun_vector(double sin_phi, double cos_phi, double sin_decl, double cos_decl, double omega_rad) {
    return {sin_phi * sin_decl + cos_phi * cos_decl * std::cos(omega_rad),
            sin_phi * cos_decl * std::cos(omega_rad) - cos_phi * sin_decl,
            cos_decl * std::sin(omega_rad)};
}

double panel_cosine(const SunVector& sun, double tilt_deg, double panel_azimuth_deg) {
    const double b = deg_to_rad(tilt_deg);
    const double g = deg_to_rad(panel_azimuth_deg);
    return (sun.south * std::cos(g) + sun.west * std::sin(g)) * std::sin(b) + sun.up * std::cos(b);
}

// Trapezoid-weighted samples of one day's beam irradiance; the weight
// already includes DNI and the time step in hours.
struct WeightedSample {
    double weight;
    SunVector sun;
};

std::vector<WeightedSample> day_samples(const Location& loc, DayOfYear day, double omega_from_deg,
                                        double omega_to_deg, const IrradianceModel& model) {
    const double sunset = sunrise_hour_angle(loc, day);
    const double a = std::max(omega_from_deg, -sunset);
    const double b = std::min(omega_to_deg, sunset);
    std::vector<WeightedSample> samples;
    if (!(b > a)) return samples;

    const double max_step_deg = model.time_step_minutes * 0.25;
    const auto intervals = std::max<long>(1, static_cast<long>(std::ceil((b - a) / max_step_deg - 1e-9)));
    const double h = (b - a) / static_cast<double>(intervals);
    const double hours = h / 15.0;

    const double phi = deg_to_rad(loc.latitude_deg());
    const double decl = deg_to_rad(declination_exact(day));
    const double sp = std::sin(phi), cp = std::cos(phi), sd = std::sin(decl), cd = std::cos(decl);

    samples.reserve(static_cast<std::size_t>(intervals + 1));
    for (long k = 0; k <= intervals; ++k) {
        const double omega = k == intervals ? b : a + static_cast<double>(k) * h;
        const SunVector sun = sun_vector(sp, cp, sd, cd, deg_to_rad(omega));
        const double elevation = rad_to_deg(std::atan2(sun.up, std::hypot(sun.south, sun.west)));
        const double dni = direct_normal_irradiance(model, 90.0 - elevation);
        const double trap = (k == 0 || k == intervals) ? 0.5 : 1.0;
        if (dni > 0.0) samples.push_back({trap * hours * dni, sun});
    }
    return samples;
}

double energy_at(const std::vector<WeightedSample>& samples, double tilt_deg, double panel_azimuth_deg) {
    double sum = 0.0;
    for (const auto& s : samples) sum += s.weight * std::max(0.0, panel_cosine(s.sun, tilt_deg, panel_azimuth_deg));
    return sum;
}

void check_tilt(double tilt_deg) {
    if (!std::isfinite(tilt_deg) || tilt_deg < 0.0 || tilt_deg > 90.0)
        throw DomainError(fmt::format("tilt {} outside [0, 90]", tilt_deg));
}

std::vector<std::vector<WeightedSample>> period_samples(const Location& loc, DayRange period,
                                                        const IrradianceModel& model) {
    std::vector<std::vector<WeightedSample>> days;
    days.reserve(static_cast<std::size_t>(period.size()));
    for (int d = period.first; d <= period.last; ++d) days.push_back(day_samples(loc, DayOfYear(d), -180.0, 180.0, model));
    return days;
}

double total_energy(const std::vector<std::vector<WeightedSample>>& days, double tilt_deg) {
    double sum = 0.0;
    for (const auto& day : days) sum += energy_at(day, tilt_deg, 0.0);
    return sum;
}

}  // namespace

void IrradianceModel::validate() const {
    if (!(time_step_minutes > 0.0) || !std::isfinite(time_step_minutes))
        throw DomainError(fmt::format("time step {} min must be positive", time_step_minutes));
    if (!(solar_constant_w_m2 > 0.0) || !std::isfinite(solar_constant_w_m2))
        throw DomainError(fmt::format("solar constant {} W/m^2 must be positive", solar_constant_w_m2));
    if (!(zenith_cap_deg > 0.0 && zenith_cap_deg < 90.0))
        throw DomainError(fmt::format("zenith cap {} outside (0, 90)", zenith_cap_deg));
}

void DayRange::validate() const {
    if (first < 1 || last > kDaysPerYear || first > last)
        throw DomainError(fmt::format("day range [{}, {}] is empty or outside [1, {}]", first, last, kDaysPerYear));
}

double direct_normal_irradiance(const IrradianceModel& model, double zenith_deg) {
    if (zenith_deg >= 90.0) return 0.0;
    const double z = std::min(zenith_deg, model.zenith_cap_deg);
    const double air_mass = 1.0 / std::cos(deg_to_rad(z));
    return model.solar_constant_w_m2 * std::pow(0.7, std::pow(air_mass, 0.678));
}

Incidence incidence_cosine(const Location& loc, DayOfYear day, HourAngle omega, double tilt_deg,
                           double panel_azimuth_deg) {
    check_tilt(tilt_deg);
    const SolarAngles sun = sun_position(loc, day, omega);
    const double el = deg_to_rad(sun.elevation_deg);
    const double az = deg_to_rad(sun.azimuth_deg);
    const double b = deg_to_rad(tilt_deg);
    const double cosine = std::cos(el) * std::cos(az - deg_to_rad(panel_azimuth_deg)) * std::sin(b) +
                          std::sin(el) * std::cos(b);
    return {std::clamp(cosine, -1.0, 1.0), sun.elevation_deg > 0.0};
}

double window_insolation(const Location& loc, DayOfYear day, double tilt_deg, double omega_from_deg,
                         double omega_to_deg, const IrradianceModel& model, double panel_azimuth_deg) {
    model.validate();
    check_tilt(tilt_deg);
    return energy_at(day_samples(loc, day, omega_from_deg, omega_to_deg, model), tilt_deg, panel_azimuth_deg);
}

InsolationResult daily_insolation(const Location& loc, DayOfYear day, double tilt_deg,
                                  const IrradianceModel& model, double panel_azimuth_deg) {
    InsolationResult r;
    r.energy_wh_m2 = window_insolation(loc, day, tilt_deg, -180.0, 180.0, model, panel_azimuth_deg);
    r.period = DayRange::single(day.value());
    r.policy = fmt::format("fixed({:.2f})", tilt_deg);
    r.daily_wh_m2 = {r.energy_wh_m2};
    return r;
}

InsolationResult annual_insolation(const Location& loc, const TiltPolicy& policy, const IrradianceModel& model) {
    model.validate();
    InsolationResult r;
    r.period = DayRange::year();
    r.policy = policy.name();
    r.daily_wh_m2.reserve(kDaysPerYear);
    for (int d = 1; d <= kDaysPerYear; ++d) {
        const DayOfYear day(d);
        const double tilt = policy.tilt_for(day);
        check_tilt(tilt);
        r.daily_wh_m2.push_back(energy_at(day_samples(loc, day, -180.0, 180.0, model), tilt, 0.0));
    }
    for (double e : r.daily_wh_m2) r.energy_wh_m2 += e;
    return r;
}

double period_insolation(const Location& loc, DayRange period, double tilt_deg, const IrradianceModel& model) {
    model.validate();
    period.validate();
    check_tilt(tilt_deg);
    return total_energy(period_samples(loc, period, model), tilt_deg);
}

std::vector<double> tilt_energy_profile(const Location& loc, DayRange period, const IrradianceModel& model,
                                        const std::vector<double>& tilts_deg) {
    model.validate();
    period.validate();
    const auto days = period_samples(loc, period, model);
    std::vector<double> out;
    out.reserve(tilts_deg.size());
    for (double t : tilts_deg) {
        check_tilt(t);
        out.push_back(total_energy(days, t));
    }
    return out;
}

FixedTiltOptimum optimize_fixed_tilt(const Location& loc, DayRange period, const IrradianceModel& model,
                                     const SweepOptions& sweep) {
    model.validate();
    period.validate();
    if (!(sweep.coarse_step_deg > 0.0) || !(sweep.fine_step_deg > 0.0))
        throw DomainError("sweep steps must be positive");
    const auto days = period_samples(loc, period, model);

    FixedTiltOptimum best{0.0, -1.0};
    auto consider = [&](double tilt) {
        const double e = total_energy(days, tilt);
        if (e > best.energy_wh_m2) best = {tilt, e};
    };

    const double offset = std::fmod(sweep.coarse_offset_deg, sweep.coarse_step_deg);
    for (long k = 0;; ++k) {
        const double t = offset + static_cast<double>(k) * sweep.coarse_step_deg;
        if (t > 90.0 + 1e-9) break;
        if (t >= 0.0) consider(std::min(t, 90.0));
    }

    const double lo = std::max(0.0, best.tilt_deg - sweep.coarse_step_deg);
    const double hi = std::min(90.0, best.tilt_deg + sweep.coarse_step_deg);
    // Fine grid anchored at multiples of the fine step so shifted coarse
    // grids refine onto the same lattice.
    const auto k0 = static_cast<long>(std::ceil(lo / sweep.fine_step_deg - 1e-9));
    const auto k1 = static_cast<long>(std::floor(hi / sweep.fine_step_deg + 1e-9));
    for (long k = k0; k <= k1; ++k) consider(static_cast<double>(k) * sweep.fine_step_deg);
    return best;
}

GainReport gain_report(const Location& loc, const IrradianceModel& model, TiltMode mode) {
    require_northern(loc);
    GainReport report;
    report.latitude_deg = loc.latitude_deg();
    report.mode = mode;

    const std::vector<TiltPolicy> policies{
        TiltPolicy::fixed(std::min(loc.latitude_deg(), 90.0)),
        TiltPolicy::seasonal(seasonal_schedule(loc, mode)),
        TiltPolicy::monthly(monthly_schedule(loc, mode)),
        TiltPolicy::daily(loc),
    };
    for (const auto& p : policies) {
        const double e = annual_insolation(loc, p, model).energy_wh_m2;
        report.policies.push_back({p.name(), e, 0.0});
    }
    report.baseline_wh_m2 = report.policies.front().energy_wh_m2;
    for (auto& p : report.policies)
        p.gain_percent = report.baseline_wh_m2 > 0.0 ? 100.0 * (p.energy_wh_m2 / report.baseline_wh_m2 - 1.0) : 0.0;
    return report;
}

}  // namespace pvtilt
