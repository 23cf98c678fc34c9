// Exercises the shared library strictly through its C header.

#include <cmath>
#include <cstring>
#include <string>
#include <thread>

#include <gtest/gtest.h>

#include "pvtilt/pvtilt.h"

namespace {

std::string take(pvt_text* t) {
    std::string s(pvt_text_data(t), pvt_text_size(t));
    pvt_text_destroy(t);
    return s;
}

}  // namespace

TEST(CApi, VersionAndStatusStrings) {
    EXPECT_STRNE(pvt_version(), "");
    EXPECT_STREQ(pvt_status_string(PVT_OK), "ok");
    EXPECT_STREQ(pvt_status_string(PVT_ERR_HEMISPHERE), "unsupported hemisphere");
}

TEST(CApi, Geometry) {
    double v = 0.0, folded = 0.0;
    ASSERT_EQ(pvt_declination(81, PVT_DECL_EXACT, &v), PVT_OK);
    EXPECT_NEAR(v, 0.0, 1e-12);
    ASSERT_EQ(pvt_declination(171, PVT_DECL_SIMPLIFIED, &v), PVT_OK);
    EXPECT_DOUBLE_EQ(v, 23.45);
    ASSERT_EQ(pvt_noon_elevation(32.7, 81, &v, &folded), PVT_OK);
    EXPECT_NEAR(v, 57.3, 1e-9);
    ASSERT_EQ(pvt_noon_zenith(32.7, 81, &v), PVT_OK);
    EXPECT_NEAR(v, 32.7, 1e-9);
    ASSERT_EQ(pvt_sunrise_hour_angle(32.7, 172, &v), PVT_OK);
    EXPECT_NEAR(v, 106.169, 1e-3);

    pvt_solar_angles a{};
    ASSERT_EQ(pvt_sun_position(0.0, 81, -90.0, &a), PVT_OK);
    EXPECT_NEAR(a.elevation_deg, 0.0, 1e-9);
    EXPECT_NEAR(a.azimuth_deg, -90.0, 1e-9);
    EXPECT_NEAR(a.compass_azimuth_deg, 90.0, 1e-9);
}

TEST(CApi, ErrorsLeaveOutputsUntouched) {
    double v = 123.0;
    EXPECT_EQ(pvt_declination(366, PVT_DECL_EXACT, &v), PVT_ERR_DOMAIN);
    EXPECT_EQ(v, 123.0);
    EXPECT_NE(std::string(pvt_last_error()).find("366"), std::string::npos);

    EXPECT_EQ(pvt_noon_zenith(95.0, 10, &v), PVT_ERR_DOMAIN);
    EXPECT_EQ(pvt_daily_tilt(-10.0, 10, PVT_DECL_EXACT, &v, nullptr), PVT_ERR_HEMISPHERE);
    EXPECT_NE(std::string(pvt_last_error()).find("northern"), std::string::npos);
    EXPECT_EQ(pvt_declination(10, PVT_DECL_EXACT, nullptr), PVT_ERR_INVALID_ARGUMENT);
    EXPECT_EQ(pvt_declination(10, static_cast<pvt_declination_model>(7), &v), PVT_ERR_INVALID_ARGUMENT);
    EXPECT_EQ(v, 123.0);

    ASSERT_EQ(pvt_declination(10, PVT_DECL_EXACT, &v), PVT_OK);
    EXPECT_STREQ(pvt_last_error(), "");
}

TEST(CApi, LastErrorIsPerThread) {
    double v = 0.0;
    EXPECT_EQ(pvt_declination(0, PVT_DECL_EXACT, &v), PVT_ERR_DOMAIN);
    std::string other;
    std::thread t([&] {
        double w = 0.0;
        pvt_declination(5, PVT_DECL_EXACT, &w);
        other = pvt_last_error();
    });
    t.join();
    EXPECT_EQ(other, "");
    EXPECT_NE(std::string(pvt_last_error()), "");
}

TEST(CApi, Schedules) {
    double betas[12] = {};
    ASSERT_EQ(pvt_monthly_schedule(32.7, PVT_MODE_PAPER, betas), PVT_OK);
    EXPECT_NEAR(betas[0], 56.15, 1e-9);
    EXPECT_NEAR(betas[6], 8.25, 1e-9);
    double seasons[4] = {};
    ASSERT_EQ(pvt_seasonal_schedule(32.7, PVT_MODE_PAPER, seasons), PVT_OK);
    EXPECT_EQ(std::lround(seasons[0]), 48);
    EXPECT_EQ(std::lround(seasons[3]), 40);

    double lo = 0, hi = 0;
    ASSERT_EQ(pvt_tilt_extremes(32.7, PVT_MODE_EXACT, &lo, &hi), PVT_OK);
    EXPECT_NEAR(lo, 9.25, 1e-9);
    ASSERT_EQ(pvt_tilt_extremes(32.7, PVT_MODE_PAPER, &lo, &hi), PVT_OK);
    EXPECT_NEAR(lo, 8.25, 1e-9);
    EXPECT_NEAR(hi, 56.15, 1e-9);

    double tilt = 0;
    int clamped = -1;
    ASSERT_EQ(pvt_daily_tilt(10.0, 172, PVT_DECL_EXACT, &tilt, &clamped), PVT_OK);
    EXPECT_EQ(tilt, 0.0);
    EXPECT_EQ(clamped, 1);
}

TEST(CApi, PoliciesAndInsolation) {
    pvt_model* model = nullptr;
    ASSERT_EQ(pvt_model_create(1.0, &model), PVT_OK);
    EXPECT_EQ(pvt_model_create(0.0, &model), PVT_ERR_DOMAIN);
    ASSERT_NE(model, nullptr);

    pvt_policy* fixed = nullptr;
    pvt_policy* daily = nullptr;
    pvt_policy* seasonal = nullptr;
    pvt_policy* monthly = nullptr;
    ASSERT_EQ(pvt_policy_fixed(32.7, &fixed), PVT_OK);
    ASSERT_EQ(pvt_policy_daily(32.7, PVT_DECL_EXACT, &daily), PVT_OK);
    ASSERT_EQ(pvt_policy_seasonal(32.7, PVT_MODE_PAPER, &seasonal), PVT_OK);
    ASSERT_EQ(pvt_policy_monthly(32.7, PVT_MODE_PAPER, &monthly), PVT_OK);
    EXPECT_EQ(pvt_policy_fixed(91.0, &fixed), PVT_ERR_DOMAIN);

    double t = 0;
    ASSERT_EQ(pvt_policy_tilt(seasonal, 200, &t), PVT_OK);
    EXPECT_NEAR(t, 16.24, 0.005);
    ASSERT_EQ(pvt_policy_tilt(monthly, 15, &t), PVT_OK);
    EXPECT_NEAR(t, 56.15, 1e-9);

    double e_fixed = 0, e_daily = 0, e_day = 0;
    ASSERT_EQ(pvt_annual_insolation(model, 32.7, fixed, &e_fixed), PVT_OK);
    ASSERT_EQ(pvt_annual_insolation(model, 32.7, daily, &e_daily), PVT_OK);
    EXPECT_GT(e_daily, e_fixed);
    ASSERT_EQ(pvt_daily_insolation(model, 32.7, 81, 32.7, &e_day), PVT_OK);
    EXPECT_GT(e_day, 0.0);

    double cosine = 0;
    int up = 0;
    ASSERT_EQ(pvt_incidence_cosine(32.7, 81, 0.0, 32.7, 0.0, &cosine, &up), PVT_OK);
    EXPECT_NEAR(cosine, 1.0, 1e-12);
    EXPECT_EQ(up, 1);

    double best = 0, energy = 0;
    ASSERT_EQ(pvt_optimize_fixed_tilt(model, 32.7, 81, 81, &best, &energy), PVT_OK);
    EXPECT_NEAR(best, 32.7, 0.1);
    EXPECT_EQ(pvt_optimize_fixed_tilt(model, 32.7, 100, 50, &best, &energy), PVT_ERR_DOMAIN);

    pvt_gain_report report{};
    ASSERT_EQ(pvt_gain_report_compute(model, 32.7, PVT_MODE_EXACT, &report), PVT_OK);
    EXPECT_STREQ(report.policies[0].policy, "fixed(32.70)");
    EXPECT_STREQ(report.policies[3].policy, "daily");
    EXPECT_GE(report.policies[3].gain_percent, report.policies[2].gain_percent);
    EXPECT_GE(report.policies[2].gain_percent, report.policies[1].gain_percent);
    EXPECT_EQ(pvt_gain_report_compute(model, -5.0, PVT_MODE_EXACT, &report), PVT_ERR_HEMISPHERE);

    pvt_policy_destroy(fixed);
    pvt_policy_destroy(daily);
    pvt_policy_destroy(seasonal);
    pvt_policy_destroy(monthly);
    pvt_model_destroy(model);
    pvt_policy_destroy(nullptr);
    pvt_model_destroy(nullptr);
}

TEST(CApi, Rendering) {
    pvt_text* text = nullptr;
    ASSERT_EQ(pvt_render_schedule(32.7, PVT_SEASONAL, PVT_MODE_PAPER, 0, PVT_FORMAT_CSV, &text), PVT_OK);
    EXPECT_EQ(take(text), "season,tilt_deg,delta_deg\nwinter,48,15.47\nspring,24,-8.48\nsummer,16,-16.46\nfall,40,7.49\n");

    ASSERT_EQ(pvt_render_tilt(32.7, 81, PVT_DECL_EXACT, PVT_FORMAT_CSV, &text), PVT_OK);
    EXPECT_EQ(take(text), "day,tilt_deg,unclamped_deg,clamped\n81,32.70,32.70,0\n");

    text = nullptr;
    EXPECT_EQ(pvt_render_schedule(32.7, PVT_MONTHLY, PVT_MODE_EXACT, 0, PVT_FORMAT_SVG, &text), PVT_ERR_INVALID_ARGUMENT);
    EXPECT_EQ(text, nullptr);
    EXPECT_EQ(pvt_render_tilt(-3.0, 81, PVT_DECL_EXACT, PVT_FORMAT_CSV, &text), PVT_ERR_HEMISPHERE);

    const int days[] = {172, 355};
    ASSERT_EQ(pvt_render_sunpath(32.7, days, 2, 30.0, 0, PVT_FORMAT_SVG, &text), PVT_OK);
    EXPECT_EQ(take(text).rfind("<svg", 0), 0u);
    EXPECT_EQ(pvt_render_sunpath(32.7, days, 0, 30.0, 0, PVT_FORMAT_CSV, &text), PVT_ERR_INVALID_ARGUMENT);
    ASSERT_EQ(pvt_render_sunpath(32.7, nullptr, 0, 60.0, 1, PVT_FORMAT_JSON, &text), PVT_OK);
    EXPECT_NE(take(text).find("day_355_azimuth"), std::string::npos);

    ASSERT_EQ(pvt_render_tilt_curve(32.7, PVT_DECL_SIMPLIFIED, PVT_FORMAT_CSV, &text), PVT_OK);
    EXPECT_NE(take(text).find("daily_tilt,171,9.25\n"), std::string::npos);

    ASSERT_EQ(pvt_render_extremes(32.7, PVT_MODE_PAPER, PVT_FORMAT_JSON, &text), PVT_OK);
    EXPECT_NE(take(text).find("\"note\""), std::string::npos);

    ASSERT_EQ(pvt_render_sun(-33.9, 172, 0.0, PVT_FORMAT_CSV, &text), PVT_OK);
    EXPECT_NE(take(text).find(",180.00,"), std::string::npos);  // noon sun due north

    pvt_model* model = nullptr;
    ASSERT_EQ(pvt_model_create(5.0, &model), PVT_OK);
    ASSERT_EQ(pvt_render_optimize(model, 32.7, 81, 81, PVT_FORMAT_CSV, &text), PVT_OK);
    EXPECT_EQ(take(text).rfind("first_day,last_day,optimal_tilt_deg", 0), 0u);
    ASSERT_EQ(pvt_render_gains(model, 32.7, PVT_MODE_PAPER, PVT_FORMAT_CSV, &text), PVT_OK);
    EXPECT_NE(take(text).find("seasonal(paper)"), std::string::npos);
    pvt_model_destroy(model);

    EXPECT_STREQ(pvt_text_data(nullptr), "");
    EXPECT_EQ(pvt_text_size(nullptr), 0u);
}
