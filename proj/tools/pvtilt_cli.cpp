// pvtilt: solar position, panel tilt schedules and clear-sky gain reports.
//
//   pvtilt sun      --lat 32.7 --day 172 [--hour-angle -60 | --hour 8]
//   pvtilt tilt     --lat 32.7 [--day 81] [--declination simplified] [--extremes --mode paper]
//   pvtilt schedule --lat 32.7 --mode paper --granularity seasonal --format csv
//   pvtilt optimize --lat 32.7 [--first-day 1 --last-day 365 | --day 81] [--step 1]
//   pvtilt gains    --lat 32.7 [--mode exact] [--step 1]
//   pvtilt chart    --lat 32.7 --kind sunpath [--days 172,355] [--azimuth] --format svg
//
// Exit status: 0 success, 1 invalid latitude/day/value, 2 usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pvtilt/pvtilt.h"

namespace {

constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

const std::map<std::string, pvt_format> kFormats{{"csv", PVT_FORMAT_CSV}, {"json", PVT_FORMAT_JSON}, {"svg", PVT_FORMAT_SVG}};
const std::map<std::string, pvt_tilt_mode> kModes{{"paper", PVT_MODE_PAPER}, {"exact", PVT_MODE_EXACT}};
const std::map<std::string, pvt_declination_model> kDeclinations{{"exact", PVT_DECL_EXACT}, {"simplified", PVT_DECL_SIMPLIFIED}};
const std::map<std::string, pvt_granularity> kGranularities{{"monthly", PVT_MONTHLY}, {"seasonal", PVT_SEASONAL}};

struct Options {
    double latitude = 0.0;
    std::string format = "csv";
    std::string out;
    std::string mode = "exact";
    std::string declination = "exact";
    std::string granularity = "monthly";
    std::string kind = "sunpath";
    std::optional<int> day;
    std::optional<int> month;
    std::optional<double> hour_angle;
    std::optional<double> hour;
    std::vector<int> days;
    int first_day = 1;
    int last_day = 365;
    double step = 1.0;
    bool extremes = false;
    bool azimuth = false;
};

int exit_code(pvt_status s) {
    switch (s) {
        case PVT_OK: return 0;
        case PVT_ERR_DOMAIN:
        case PVT_ERR_HEMISPHERE: return kExitDomain;
        case PVT_ERR_INVALID_ARGUMENT: return kExitUsage;
        case PVT_ERR_INTERNAL: return kExitInternal;
    }
    return kExitInternal;
}

int fail(pvt_status s) {
    std::cerr << "pvtilt: " << pvt_status_string(s) << ": " << pvt_last_error() << '\n';
    return exit_code(s);
}

int write_text(pvt_text* text, const std::string& path) {
    const char* data = pvt_text_data(text);
    const std::size_t size = pvt_text_size(text);
    int rc = 0;
    if (path.empty()) {
        std::fwrite(data, 1, size, stdout);
        std::fflush(stdout);
    } else {
        std::ofstream f(path, std::ios::binary);
        f.write(data, static_cast<std::streamsize>(size));
        if (!f) {
            std::cerr << "pvtilt: cannot write " << path << '\n';
            rc = kExitInternal;
        }
    }
    pvt_text_destroy(text);
    return rc;
}

// Runs one renderer and writes its result.
template <class F>
int emit(const Options& o, F&& render) {
    pvt_text* text = nullptr;
    const pvt_status s = render(kFormats.at(o.format), &text);
    if (s != PVT_OK) return fail(s);
    return write_text(text, o.out);
}

struct ModelHandle {
    pvt_model* model = nullptr;
    ~ModelHandle() { pvt_model_destroy(model); }
};

int run(CLI::App& app, const Options& o) {
    if (app.got_subcommand("sun")) {
        if (o.hour_angle && o.hour) {
            std::cerr << "pvtilt: --hour-angle and --hour are mutually exclusive\n";
            return kExitUsage;
        }
        double omega = o.hour_angle.value_or(0.0);
        if (o.hour) omega = (*o.hour - 12.0) * 15.0;
        return emit(o, [&](pvt_format f, pvt_text** t) { return pvt_render_sun(o.latitude, *o.day, omega, f, t); });
    }
    if (app.got_subcommand("tilt")) {
        if (o.extremes)
            return emit(o, [&](pvt_format f, pvt_text** t) {
                return pvt_render_extremes(o.latitude, kModes.at(o.mode), f, t);
            });
        if (o.day && *o.day <= 0) {
            std::cerr << "pvtilt: domain error: day of year " << *o.day << " outside [1, 365]\n";
            return kExitDomain;
        }
        return emit(o, [&](pvt_format f, pvt_text** t) {
            return pvt_render_tilt(o.latitude, o.day.value_or(0), kDeclinations.at(o.declination), f, t);
        });
    }
    if (app.got_subcommand("schedule")) {
        if (o.month && *o.month <= 0) {
            std::cerr << "pvtilt: domain error: month " << *o.month << " outside [1, 12]\n";
            return kExitDomain;
        }
        return emit(o, [&](pvt_format f, pvt_text** t) {
            return pvt_render_schedule(o.latitude, kGranularities.at(o.granularity), kModes.at(o.mode), o.month.value_or(0), f, t);
        });
    }
    if (app.got_subcommand("chart")) {
        if (o.kind == "tilt")
            return emit(o, [&](pvt_format f, pvt_text** t) {
                return pvt_render_tilt_curve(o.latitude, kDeclinations.at(o.declination), f, t);
            });
        return emit(o, [&](pvt_format f, pvt_text** t) {
            return pvt_render_sunpath(o.latitude, o.days.empty() ? nullptr : o.days.data(), o.days.size(), o.step,
                                      o.azimuth ? 1 : 0, f, t);
        });
    }

    ModelHandle model;
    if (const pvt_status s = pvt_model_create(o.step, &model.model); s != PVT_OK) return fail(s);
    if (app.got_subcommand("optimize")) {
        const int first = o.day.value_or(o.first_day);
        const int last = o.day.value_or(o.last_day);
        return emit(o, [&](pvt_format f, pvt_text** t) {
            return pvt_render_optimize(model.model, o.latitude, first, last, f, t);
        });
    }
    if (app.got_subcommand("gains"))
        return emit(o, [&](pvt_format f, pvt_text** t) {
            return pvt_render_gains(model.model, o.latitude, kModes.at(o.mode), f, t);
        });
    std::cerr << app.help();
    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Solar position, PV tilt schedules and clear-sky gain reports (solar time, degrees)", "pvtilt"};
    app.set_version_flag("--version", std::string(pvt_version()));
    app.require_subcommand(1);

    Options o;
    auto common = [&](CLI::App* sub) {
        sub->add_option("--lat", o.latitude, "Latitude in degrees, positive north")->required();
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json", "svg"}));
        sub->add_option("--out", o.out, "Write to this file instead of stdout");
    };
    auto mode = [&](CLI::App* sub) {
        sub->add_option("--mode", o.mode, "paper: published tables verbatim; exact: symmetric offsets")
            ->check(CLI::IsMember({"paper", "exact"}));
    };
    auto declination = [&](CLI::App* sub) {
        sub->add_option("--declination", o.declination, "Declination formula")
            ->check(CLI::IsMember({"exact", "simplified"}));
    };
    auto step = [&](CLI::App* sub) {
        sub->add_option("--step", o.step, "Time step in minutes")->check(CLI::PositiveNumber);
    };

    auto* sun = app.add_subcommand("sun", "Sun position for a day and hour angle");
    common(sun);
    sun->add_option("--day", o.day, "Day of year, Jan 1 = 1")->required();
    sun->add_option("--hour-angle", o.hour_angle, "Hour angle in degrees, negative before noon (default 0)");
    sun->add_option("--hour", o.hour, "Solar hour (12 = solar noon)");

    auto* tilt = app.add_subcommand("tilt", "Daily optimal tilt (all days unless --day) or tilt extremes");
    common(tilt);
    tilt->add_option("--day", o.day, "Day of year, Jan 1 = 1");
    tilt->add_flag("--extremes", o.extremes, "Report minimum and maximum tilt instead");
    mode(tilt);
    declination(tilt);

    auto* schedule = app.add_subcommand("schedule", "Monthly or seasonal tilt schedule");
    common(schedule);
    mode(schedule);
    schedule->add_option("--granularity", o.granularity, "monthly or seasonal")
        ->check(CLI::IsMember({"monthly", "seasonal"}));
    schedule->add_option("--month", o.month, "Only this month (1-12)");

    auto* optimize = app.add_subcommand("optimize", "Best fixed tilt over a day range (clear-sky beam model)");
    common(optimize);
    optimize->add_option("--day", o.day, "Optimise for a single day");
    optimize->add_option("--first-day", o.first_day, "First day of the range");
    optimize->add_option("--last-day", o.last_day, "Last day of the range");
    step(optimize);

    auto* gains = app.add_subcommand("gains", "Annual gain of seasonal, monthly and daily adjustment over fixed tilt");
    common(gains);
    mode(gains);
    step(gains);

    auto* chart = app.add_subcommand("chart", "Sun-path or tilt-curve chart data");
    common(chart);
    chart->add_option("--kind", o.kind, "sunpath or tilt")->check(CLI::IsMember({"sunpath", "tilt"}));
    chart->add_option("--days", o.days, "Days for the sun path (default: 21st of each month)")->delimiter(',');
    chart->add_flag("--azimuth", o.azimuth, "Add compass-azimuth series to the sun path");
    declination(chart);
    step(chart);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }
    return run(app, o);
}
