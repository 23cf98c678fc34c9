/* C interface to the pvtilt library.
 *
 * All functions return a pvt_status. On failure the out-parameters are left
 * untouched and pvt_last_error() describes the problem for the calling
 * thread. Angles are in degrees, days are 1..365, times are solar time.
 */
#ifndef PVTILT_H
#define PVTILT_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(PVTILT_BUILDING)
#    define PVT_API __declspec(dllexport)
#  else
#    define PVT_API __declspec(dllimport)
#  endif
#else
#  define PVT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pvt_status {
    PVT_OK = 0,
    PVT_ERR_DOMAIN = 1,           /* latitude, day, tilt, step ... out of range */
    PVT_ERR_HEMISPHERE = 2,       /* schedules need latitude > 0 */
    PVT_ERR_INVALID_ARGUMENT = 3, /* null pointer, bad enum, unsupported format */
    PVT_ERR_INTERNAL = 4
} pvt_status;

typedef enum pvt_tilt_mode { PVT_MODE_PAPER = 0, PVT_MODE_EXACT = 1 } pvt_tilt_mode;
typedef enum pvt_declination_model { PVT_DECL_EXACT = 0, PVT_DECL_SIMPLIFIED = 1 } pvt_declination_model;
typedef enum pvt_format { PVT_FORMAT_CSV = 0, PVT_FORMAT_JSON = 1, PVT_FORMAT_SVG = 2 } pvt_format;
typedef enum pvt_granularity { PVT_MONTHLY = 0, PVT_SEASONAL = 1 } pvt_granularity;

typedef struct pvt_solar_angles {
    double declination_deg;
    double elevation_deg;
    double zenith_deg;
    double azimuth_deg;         /* south = 0, east negative */
    double compass_azimuth_deg; /* north = 0, clockwise */
} pvt_solar_angles;

typedef struct pvt_policy_gain {
    char policy[32];
    double energy_wh_m2;
    double gain_percent;
} pvt_policy_gain;

/* fixed at latitude, seasonal, monthly, daily */
typedef struct pvt_gain_report {
    double latitude_deg;
    double baseline_wh_m2;
    pvt_policy_gain policies[4];
} pvt_gain_report;

typedef struct pvt_policy pvt_policy; /* day -> tilt mapping */
typedef struct pvt_model pvt_model;   /* clear-sky irradiance model */
typedef struct pvt_text pvt_text;     /* rendered document */

PVT_API const char* pvt_version(void);
PVT_API const char* pvt_last_error(void);
PVT_API const char* pvt_status_string(pvt_status status);

/* solar geometry */
PVT_API pvt_status pvt_declination(int day, pvt_declination_model model, double* out_deg);
PVT_API pvt_status pvt_noon_elevation(double latitude_deg, int day, double* out_raw_deg, double* out_folded_deg);
PVT_API pvt_status pvt_noon_zenith(double latitude_deg, int day, double* out_deg);
PVT_API pvt_status pvt_sun_position(double latitude_deg, int day, double hour_angle_deg, pvt_solar_angles* out);
PVT_API pvt_status pvt_sunrise_hour_angle(double latitude_deg, int day, double* out_deg);

/* tilt schedules (northern hemisphere) */
PVT_API pvt_status pvt_daily_tilt(double latitude_deg, int day, pvt_declination_model model, double* out_deg, int* out_clamped);
PVT_API pvt_status pvt_tilt_extremes(double latitude_deg, pvt_tilt_mode mode, double* out_min_deg, double* out_max_deg);
PVT_API pvt_status pvt_monthly_schedule(double latitude_deg, pvt_tilt_mode mode, double out_betas[12]);
PVT_API pvt_status pvt_seasonal_schedule(double latitude_deg, pvt_tilt_mode mode, double out_betas[4]);

PVT_API pvt_status pvt_policy_fixed(double tilt_deg, pvt_policy** out);
PVT_API pvt_status pvt_policy_monthly(double latitude_deg, pvt_tilt_mode mode, pvt_policy** out);
PVT_API pvt_status pvt_policy_seasonal(double latitude_deg, pvt_tilt_mode mode, pvt_policy** out);
PVT_API pvt_status pvt_policy_daily(double latitude_deg, pvt_declination_model model, pvt_policy** out);
PVT_API pvt_status pvt_policy_tilt(const pvt_policy* policy, int day, double* out_deg);
PVT_API void pvt_policy_destroy(pvt_policy* policy);

/* irradiance and optimisation */
PVT_API pvt_status pvt_model_create(double time_step_minutes, pvt_model** out);
PVT_API void pvt_model_destroy(pvt_model* model);

PVT_API pvt_status pvt_incidence_cosine(double latitude_deg, int day, double hour_angle_deg, double tilt_deg,
                                        double panel_azimuth_deg, double* out_cosine, int* out_sun_up);
PVT_API pvt_status pvt_daily_insolation(const pvt_model* model, double latitude_deg, int day, double tilt_deg,
                                        double* out_wh_m2);
PVT_API pvt_status pvt_annual_insolation(const pvt_model* model, double latitude_deg, const pvt_policy* policy,
                                         double* out_wh_m2);
PVT_API pvt_status pvt_optimize_fixed_tilt(const pvt_model* model, double latitude_deg, int first_day, int last_day,
                                           double* out_tilt_deg, double* out_wh_m2);
PVT_API pvt_status pvt_gain_report_compute(const pvt_model* model, double latitude_deg, pvt_tilt_mode mode,
                                           pvt_gain_report* out);

/* rendered documents (CSV, JSON or SVG text) */
PVT_API pvt_status pvt_render_sun(double latitude_deg, int day, double hour_angle_deg, pvt_format format, pvt_text** out);
/* day <= 0 renders all 365 days */
PVT_API pvt_status pvt_render_tilt(double latitude_deg, int day, pvt_declination_model model, pvt_format format, pvt_text** out);
PVT_API pvt_status pvt_render_extremes(double latitude_deg, pvt_tilt_mode mode, pvt_format format, pvt_text** out);
/* month <= 0 renders every month */
PVT_API pvt_status pvt_render_schedule(double latitude_deg, pvt_granularity granularity, pvt_tilt_mode mode, int month,
                                       pvt_format format, pvt_text** out);
PVT_API pvt_status pvt_render_optimize(const pvt_model* model, double latitude_deg, int first_day, int last_day,
                                       pvt_format format, pvt_text** out);
PVT_API pvt_status pvt_render_gains(const pvt_model* model, double latitude_deg, pvt_tilt_mode mode, pvt_format format,
                                    pvt_text** out);
/* days == NULL selects the 21st of every month; an empty non-null list is rejected */
PVT_API pvt_status pvt_render_sunpath(double latitude_deg, const int* days, size_t n_days, double step_minutes,
                                      int include_azimuth, pvt_format format, pvt_text** out);
PVT_API pvt_status pvt_render_tilt_curve(double latitude_deg, pvt_declination_model model, pvt_format format, pvt_text** out);

PVT_API const char* pvt_text_data(const pvt_text* text);
PVT_API size_t pvt_text_size(const pvt_text* text);
PVT_API void pvt_text_destroy(pvt_text* text);

#ifdef __cplusplus
}
#endif

#endif /* PVTILT_H */
