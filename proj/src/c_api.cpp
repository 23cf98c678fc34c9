#include "pvtilt/pvtilt.h"

#include <cstring>
#include <exception>
#include <new>
#include <optional>
#include <string>

#include "pvtilt/error.hpp"
#include "pvtilt/geometry.hpp"
#include "pvtilt/irradiance.hpp"
#include "pvtilt/output.hpp"
#include "pvtilt/tilt_schedule.hpp"

struct pvt_policy {
    pvtilt::TiltPolicy policy;
};

struct pvt_model {
    pvtilt::IrradianceModel model;
};

struct pvt_text {
    std::string data;
};

namespace {

thread_local std::string g_last_error;

template <class F>
pvt_status guarded(F&& f) noexcept {
    try {
        f();
        g_last_error.clear();
        return PVT_OK;
    } catch (const pvtilt::UnsupportedHemisphere& e) {
        g_last_error = e.what();
        return PVT_ERR_HEMISPHERE;
    } catch (const pvtilt::DomainError& e) {
        g_last_error = e.what();
        return PVT_ERR_DOMAIN;
    } catch (const pvtilt::UsageError& e) {
        g_last_error = e.what();
        return PVT_ERR_INVALID_ARGUMENT;
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return PVT_ERR_INTERNAL;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return PVT_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return PVT_ERR_INTERNAL;
    }
}

template <class T>
void require(T* p, const char* name) {
    if (p == nullptr) throw pvtilt::UsageError(std::string("null pointer argument: ") + name);
}

pvtilt::TiltMode to_mode(pvt_tilt_mode m) {
    switch (m) {
        case PVT_MODE_PAPER: return pvtilt::TiltMode::Published;
        case PVT_MODE_EXACT: return pvtilt::TiltMode::Exact;
    }
    throw pvtilt::UsageError("invalid tilt mode");
}

pvtilt::DeclinationModel to_decl(pvt_declination_model d) {
    switch (d) {
        case PVT_DECL_EXACT: return pvtilt::DeclinationModel::Exact;
        case PVT_DECL_SIMPLIFIED: return pvtilt::DeclinationModel::Simplified;
    }
    throw pvtilt::UsageError("invalid declination model");
}

pvtilt::OutputFormat to_format(pvt_format f) {
    switch (f) {
        case PVT_FORMAT_CSV: return pvtilt::OutputFormat::Csv;
        case PVT_FORMAT_JSON: return pvtilt::OutputFormat::Json;
        case PVT_FORMAT_SVG: return pvtilt::OutputFormat::Svg;
    }
    throw pvtilt::UsageError("invalid output format");
}

void emit(const pvtilt::Document& doc, pvt_format format, pvt_text** out) {
    *out = new pvt_text{pvtilt::render(doc, to_format(format))};
}

}  // namespace

extern "C" {

const char* pvt_version(void) { return PVTILT_VERSION; }

const char* pvt_last_error(void) { return g_last_error.c_str(); }

const char* pvt_status_string(pvt_status status) {
    switch (status) {
        case PVT_OK: return "ok";
        case PVT_ERR_DOMAIN: return "domain error";
        case PVT_ERR_HEMISPHERE: return "unsupported hemisphere";
        case PVT_ERR_INVALID_ARGUMENT: return "invalid argument";
        case PVT_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

pvt_status pvt_declination(int day, pvt_declination_model model, double* out_deg) {
    return guarded([&] {
        require(out_deg, "out_deg");
        *out_deg = pvtilt::declination(pvtilt::DayOfYear(day), to_decl(model));
    });
}

pvt_status pvt_noon_elevation(double latitude_deg, int day, double* out_raw_deg, double* out_folded_deg) {
    return guarded([&] {
        require(out_raw_deg, "out_raw_deg");
        const auto e = pvtilt::noon_elevation(pvtilt::Location(latitude_deg), pvtilt::DayOfYear(day));
        *out_raw_deg = e.raw_deg;
        if (out_folded_deg) *out_folded_deg = e.folded_deg;
    });
}

pvt_status pvt_noon_zenith(double latitude_deg, int day, double* out_deg) {
    return guarded([&] {
        require(out_deg, "out_deg");
        *out_deg = pvtilt::noon_zenith(pvtilt::Location(latitude_deg), pvtilt::DayOfYear(day));
    });
}

pvt_status pvt_sun_position(double latitude_deg, int day, double hour_angle_deg, pvt_solar_angles* out) {
    return guarded([&] {
        require(out, "out");
        const auto s = pvtilt::sun_position(pvtilt::Location(latitude_deg), pvtilt::DayOfYear(day),
                                            pvtilt::HourAngle(hour_angle_deg));
        *out = {s.declination_deg, s.elevation_deg, s.zenith_deg, s.azimuth_deg, s.compass_azimuth_deg()};
    });
}

pvt_status pvt_sunrise_hour_angle(double latitude_deg, int day, double* out_deg) {
    return guarded([&] {
        require(out_deg, "out_deg");
        *out_deg = pvtilt::sunrise_hour_angle(pvtilt::Location(latitude_deg), pvtilt::DayOfYear(day));
    });
}

pvt_status pvt_daily_tilt(double latitude_deg, int day, pvt_declination_model model, double* out_deg, int* out_clamped) {
    return guarded([&] {
        require(out_deg, "out_deg");
        const auto v = pvtilt::daily_tilt(pvtilt::Location(latitude_deg), pvtilt::DayOfYear(day), to_decl(model));
        *out_deg = v.tilt_deg;
        if (out_clamped) *out_clamped = v.clamped ? 1 : 0;
    });
}

pvt_status pvt_tilt_extremes(double latitude_deg, pvt_tilt_mode mode, double* out_min_deg, double* out_max_deg) {
    return guarded([&] {
        require(out_min_deg, "out_min_deg");
        require(out_max_deg, "out_max_deg");
        const auto e = pvtilt::tilt_extremes(pvtilt::Location(latitude_deg), to_mode(mode));
        *out_min_deg = e.min_deg;
        *out_max_deg = e.max_deg;
    });
}

pvt_status pvt_monthly_schedule(double latitude_deg, pvt_tilt_mode mode, double out_betas[12]) {
    return guarded([&] {
        require(out_betas, "out_betas");
        const auto s = pvtilt::monthly_schedule(pvtilt::Location(latitude_deg), to_mode(mode));
        std::memcpy(out_betas, s.betas_deg.data(), sizeof(double) * 12);
    });
}

pvt_status pvt_seasonal_schedule(double latitude_deg, pvt_tilt_mode mode, double out_betas[4]) {
    return guarded([&] {
        require(out_betas, "out_betas");
        const auto s = pvtilt::seasonal_schedule(pvtilt::Location(latitude_deg), to_mode(mode));
        std::memcpy(out_betas, s.betas_deg.data(), sizeof(double) * 4);
    });
}

pvt_status pvt_policy_fixed(double tilt_deg, pvt_policy** out) {
    return guarded([&] {
        require(out, "out");
        *out = new pvt_policy{pvtilt::TiltPolicy::fixed(tilt_deg)};
    });
}

pvt_status pvt_policy_monthly(double latitude_deg, pvt_tilt_mode mode, pvt_policy** out) {
    return guarded([&] {
        require(out, "out");
        *out = new pvt_policy{pvtilt::TiltPolicy::monthly(pvtilt::monthly_schedule(pvtilt::Location(latitude_deg), to_mode(mode)))};
    });
}

pvt_status pvt_policy_seasonal(double latitude_deg, pvt_tilt_mode mode, pvt_policy** out) {
    return guarded([&] {
        require(out, "out");
        *out = new pvt_policy{
            pvtilt::TiltPolicy::seasonal(pvtilt::seasonal_schedule(pvtilt::Location(latitude_deg), to_mode(mode)))};
    });
}

pvt_status pvt_policy_daily(double latitude_deg, pvt_declination_model model, pvt_policy** out) {
    return guarded([&] {
        require(out, "out");
        *out = new pvt_policy{pvtilt::TiltPolicy::daily(pvtilt::Location(latitude_deg), to_decl(model))};
    });
}

pvt_status pvt_policy_tilt(const pvt_policy* policy, int day, double* out_deg) {
    return guarded([&] {
        require(policy, "policy");
        require(out_deg, "out_deg");
        *out_deg = policy->policy.tilt_for(pvtilt::DayOfYear(day));
    });
}

void pvt_policy_destroy(pvt_policy* policy) { delete policy; }

pvt_status pvt_model_create(double time_step_minutes, pvt_model** out) {
    return guarded([&] {
        require(out, "out");
        pvtilt::IrradianceModel m;
        m.time_step_minutes = time_step_minutes;
        m.validate();
        *out = new pvt_model{m};
    });
}

void pvt_model_destroy(pvt_model* model) { delete model; }

pvt_status pvt_incidence_cosine(double latitude_deg, int day, double hour_angle_deg, double tilt_deg,
                                double panel_azimuth_deg, double* out_cosine, int* out_sun_up) {
    return guarded([&] {
        require(out_cosine, "out_cosine");
        const auto inc = pvtilt::incidence_cosine(pvtilt::Location(latitude_deg), pvtilt::DayOfYear(day),
                                                  pvtilt::HourAngle(hour_angle_deg), tilt_deg, panel_azimuth_deg);
        *out_cosine = inc.cosine;
        if (out_sun_up) *out_sun_up = inc.sun_above_horizon ? 1 : 0;
    });
}

pvt_status pvt_daily_insolation(const pvt_model* model, double latitude_deg, int day, double tilt_deg, double* out_wh_m2) {
    return guarded([&] {
        require(model, "model");
        require(out_wh_m2, "out_wh_m2");
        *out_wh_m2 = pvtilt::daily_insolation(pvtilt::Location(latitude_deg), pvtilt::DayOfYear(day), tilt_deg, model->model)
                         .energy_wh_m2;
    });
}

pvt_status pvt_annual_insolation(const pvt_model* model, double latitude_deg, const pvt_policy* policy, double* out_wh_m2) {
    return guarded([&] {
        require(model, "model");
        require(policy, "policy");
        require(out_wh_m2, "out_wh_m2");
        *out_wh_m2 = pvtilt::annual_insolation(pvtilt::Location(latitude_deg), policy->policy, model->model).energy_wh_m2;
    });
}

pvt_status pvt_optimize_fixed_tilt(const pvt_model* model, double latitude_deg, int first_day, int last_day,
                                   double* out_tilt_deg, double* out_wh_m2) {
    return guarded([&] {
        require(model, "model");
        require(out_tilt_deg, "out_tilt_deg");
        const auto r = pvtilt::optimize_fixed_tilt(pvtilt::Location(latitude_deg), {first_day, last_day}, model->model);
        *out_tilt_deg = r.tilt_deg;
        if (out_wh_m2) *out_wh_m2 = r.energy_wh_m2;
    });
}

pvt_status pvt_gain_report_compute(const pvt_model* model, double latitude_deg, pvt_tilt_mode mode, pvt_gain_report* out) {
    return guarded([&] {
        require(model, "model");
        require(out, "out");
        const auto r = pvtilt::gain_report(pvtilt::Location(latitude_deg), model->model, to_mode(mode));
        pvt_gain_report g{};
        g.latitude_deg = r.latitude_deg;
        g.baseline_wh_m2 = r.baseline_wh_m2;
        for (std::size_t i = 0; i < 4 && i < r.policies.size(); ++i) {
            std::strncpy(g.policies[i].policy, r.policies[i].policy.c_str(), sizeof(g.policies[i].policy) - 1);
            g.policies[i].energy_wh_m2 = r.policies[i].energy_wh_m2;
            g.policies[i].gain_percent = r.policies[i].gain_percent;
        }
        *out = g;
    });
}

pvt_status pvt_render_sun(double latitude_deg, int day, double hour_angle_deg, pvt_format format, pvt_text** out) {
    return guarded([&] {
        require(out, "out");
        emit(pvtilt::sun_document(pvtilt::Location(latitude_deg), pvtilt::DayOfYear(day), pvtilt::HourAngle(hour_angle_deg)),
             format, out);
    });
}

pvt_status pvt_render_tilt(double latitude_deg, int day, pvt_declination_model model, pvt_format format, pvt_text** out) {
    return guarded([&] {
        require(out, "out");
        std::optional<int> d;
        if (day > 0) d = pvtilt::DayOfYear(day).value();
        emit(pvtilt::tilt_document(pvtilt::Location(latitude_deg), d, to_decl(model)), format, out);
    });
}

pvt_status pvt_render_extremes(double latitude_deg, pvt_tilt_mode mode, pvt_format format, pvt_text** out) {
    return guarded([&] {
        require(out, "out");
        emit(pvtilt::extremes_document(pvtilt::Location(latitude_deg), to_mode(mode)), format, out);
    });
}

pvt_status pvt_render_schedule(double latitude_deg, pvt_granularity granularity, pvt_tilt_mode mode, int month,
                               pvt_format format, pvt_text** out) {
    return guarded([&] {
        require(out, "out");
        if (granularity != PVT_MONTHLY && granularity != PVT_SEASONAL) throw pvtilt::UsageError("invalid granularity");
        const auto g = granularity == PVT_MONTHLY ? pvtilt::Granularity::Monthly : pvtilt::Granularity::Seasonal;
        std::optional<int> m;
        if (month > 0) m = month;
        emit(pvtilt::schedule_document(pvtilt::Location(latitude_deg), g, to_mode(mode), m), format, out);
    });
}

pvt_status pvt_render_optimize(const pvt_model* model, double latitude_deg, int first_day, int last_day, pvt_format format,
                               pvt_text** out) {
    return guarded([&] {
        require(model, "model");
        require(out, "out");
        const pvtilt::Location loc(latitude_deg);
        const pvtilt::DayRange period{first_day, last_day};
        const auto r = pvtilt::optimize_fixed_tilt(loc, period, model->model);
        emit(pvtilt::optimize_document(loc, period, model->model, r), format, out);
    });
}

pvt_status pvt_render_gains(const pvt_model* model, double latitude_deg, pvt_tilt_mode mode, pvt_format format,
                            pvt_text** out) {
    return guarded([&] {
        require(model, "model");
        require(out, "out");
        const auto r = pvtilt::gain_report(pvtilt::Location(latitude_deg), model->model, to_mode(mode));
        emit(pvtilt::gains_document(r, model->model), format, out);
    });
}

pvt_status pvt_render_sunpath(double latitude_deg, const int* days, size_t n_days, double step_minutes,
                              int include_azimuth, pvt_format format, pvt_text** out) {
    return guarded([&] {
        require(out, "out");
        const std::vector<int> selected = days ? std::vector<int>(days, days + n_days) : pvtilt::default_sunpath_days();
        emit(pvtilt::sunpath_document(pvtilt::Location(latitude_deg), selected, step_minutes, include_azimuth != 0), format,
             out);
    });
}

pvt_status pvt_render_tilt_curve(double latitude_deg, pvt_declination_model model, pvt_format format, pvt_text** out) {
    return guarded([&] {
        require(out, "out");
        emit(pvtilt::tilt_curve_document(pvtilt::Location(latitude_deg), to_decl(model)), format, out);
    });
}

const char* pvt_text_data(const pvt_text* text) { return text ? text->data.c_str() : ""; }
size_t pvt_text_size(const pvt_text* text) { return text ? text->data.size() : 0; }
void pvt_text_destroy(pvt_text* text) { delete text; }

}  // extern "C"
