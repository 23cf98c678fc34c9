#include "pvtilt/tilt_schedule.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <fmt/format.h>

#include "pvtilt/error.hpp"

namespace pvtilt {

namespace {

constexpr std::array<std::string_view, 12> kMonthNames{
    "January", "February", "March",     "April",   "May",      "June",
    "July",    "August",   "September", "October", "November", "December"};

double clamp_tilt(double beta, bool& clamped) {
    const double c = std::clamp(beta, 0.0, 90.0);
    clamped = c != beta;
    return c;
}

double exact_offset(int month) {
    constexpr double step = 2.0 * kAxialTiltDeg / 6.0;
    return month <= 7 ? kAxialTiltDeg - (month - 1) * step : -kAxialTiltDeg + (month - 7) * step;
}

void check_month(int month) {
    if (month < 1 || month > 12) throw DomainError(fmt::format("month {} outside [1, 12]", month));
}

}  // namespace

std::string_view to_string(TiltMode mode) { return mode == TiltMode::Published ? "paper" : "exact"; }

TiltMode parse_tilt_mode(std::string_view text) {
    if (text == "paper") return TiltMode::Published;
    if (text == "exact") return TiltMode::Exact;
    throw DomainError(fmt::format("unknown tilt mode '{}' (expected paper or exact)", text));
}

std::string_view to_string(Season season) {
    switch (season) {
        case Season::Winter: return "winter";
        case Season::Spring: return "spring";
        case Season::Summer: return "summer";
        case Season::Fall: return "fall";
    }
    return "?";
}

std::string_view month_name(int month) {
    check_month(month);
    return kMonthNames[static_cast<std::size_t>(month - 1)];
}

int first_day_of_month(int month) {
    check_month(month);
    return 1 + std::accumulate(kMonthLengths.begin(), kMonthLengths.begin() + (month - 1), 0);
}

int month_of(DayOfYear day) {
    int remaining = day.value();
    for (int m = 0; m < 12; ++m) {
        if (remaining <= kMonthLengths[static_cast<std::size_t>(m)]) return m + 1;
        remaining -= kMonthLengths[static_cast<std::size_t>(m)];
    }
    return 12;
}

Season season_of_month(int month) {
    check_month(month);
    return kSeasons[static_cast<std::size_t>((month - 1) / 3)];
}

void require_northern(const Location& loc) {
    if (loc.latitude_deg() <= 0.0)
        throw UnsupportedHemisphere(fmt::format(
            "latitude {} is not in the northern hemisphere; tilt schedules need latitude > 0",
            loc.latitude_deg()));
}

TiltValue daily_tilt(const Location& loc, DayOfYear day, DeclinationModel model) {
    require_northern(loc);
    TiltValue v;
    v.unclamped_deg = loc.latitude_deg() - declination(day, model);
    v.tilt_deg = clamp_tilt(v.unclamped_deg, v.clamped);
    return v;
}

TiltExtremes tilt_extremes(const Location& loc, TiltMode mode) {
    require_northern(loc);
    const double phi = loc.latitude_deg();
    bool ignored = false;
    TiltExtremes e;
    e.mode = mode;
    e.max_deg = clamp_tilt(phi + kAxialTiltDeg, ignored);
    const double exact_min = clamp_tilt(phi - kAxialTiltDeg, ignored);
    if (mode == TiltMode::Exact) {
        e.min_deg = exact_min;
    } else {
        e.min_deg = clamp_tilt(phi + kPublishedMonthlyOffsets[6], ignored);
        e.min_discrepancy_deg = e.min_deg - exact_min;
        if (e.min_discrepancy_deg != 0.0)
            e.note = fmt::format(
                "published minimum tilt {:.2f} deg differs from latitude - 23.45 = {:.2f} deg by {:+.2f} deg",
                e.min_deg, exact_min, e.min_discrepancy_deg);
    }
    return e;
}

MonthlySchedule monthly_schedule(const Location& loc, TiltMode mode) {
    require_northern(loc);
    MonthlySchedule s;
    s.latitude_deg = loc.latitude_deg();
    s.mode = mode;
    for (int m = 1; m <= 12; ++m) {
        const auto i = static_cast<std::size_t>(m - 1);
        s.offsets_deg[i] = mode == TiltMode::Published ? kPublishedMonthlyOffsets[i] : exact_offset(m);
        bool clamped = false;
        s.betas_deg[i] = clamp_tilt(s.latitude_deg + s.offsets_deg[i], clamped);
        s.clamped[i] = clamped;
    }
    return s;
}

SeasonalSchedule seasonal_schedule(const Location& loc, TiltMode mode) {
    const MonthlySchedule monthly = monthly_schedule(loc, mode);
    SeasonalSchedule s;
    s.latitude_deg = monthly.latitude_deg;
    s.mode = mode;
    for (std::size_t q = 0; q < 4; ++q) {
        const double sum = monthly.betas_deg[3 * q] + monthly.betas_deg[3 * q + 1] + monthly.betas_deg[3 * q + 2];
        s.betas_deg[q] = sum / 3.0;
        s.delta_deg[q] = s.betas_deg[q] - s.latitude_deg;
    }
    return s;
}

std::array<int, 4> SeasonalSchedule::rounded() const {
    std::array<int, 4> out{};
    std::transform(betas_deg.begin(), betas_deg.end(), out.begin(),
                   [](double b) { return static_cast<int>(std::lround(b)); });
    return out;
}

std::array<double, 12> monthly_from_daily_rule(const Location& loc, DeclinationModel model) {
    std::array<double, 12> out{};
    for (int m = 1; m <= 12; ++m)
        out[static_cast<std::size_t>(m - 1)] = daily_tilt(loc, DayOfYear(first_day_of_month(m) + 20), model).tilt_deg;
    return out;
}

TiltPolicy TiltPolicy::fixed(double tilt_deg) {
    if (!std::isfinite(tilt_deg) || tilt_deg < 0.0 || tilt_deg > 90.0)
        throw DomainError(fmt::format("fixed tilt {} outside [0, 90]", tilt_deg));
    return TiltPolicy(FixedTilt{tilt_deg});
}

TiltPolicy TiltPolicy::seasonal(SeasonalSchedule schedule) { return TiltPolicy(std::move(schedule)); }
TiltPolicy TiltPolicy::monthly(MonthlySchedule schedule) { return TiltPolicy(std::move(schedule)); }

TiltPolicy TiltPolicy::daily(const Location& loc, DeclinationModel model) {
    require_northern(loc);
    return TiltPolicy(DailyRule{loc, model});
}

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

double TiltPolicy::tilt_for(DayOfYear day) const {
    return std::visit(
        overloaded{
            [](const FixedTilt& f) { return f.tilt_deg; },
            [&](const SeasonalSchedule& s) { return s.beta(season_of_month(month_of(day))); },
            [&](const MonthlySchedule& m) { return m.beta(month_of(day)); },
            [&](const DailyRule& r) { return daily_tilt(r.location, day, r.declination).tilt_deg; },
        },
        policy_);
}

std::string TiltPolicy::name() const {
    return std::visit(
        overloaded{
            [](const FixedTilt& f) { return fmt::format("fixed({:.2f})", f.tilt_deg); },
            [](const SeasonalSchedule& s) { return fmt::format("seasonal({})", to_string(s.mode)); },
            [](const MonthlySchedule& m) { return fmt::format("monthly({})", to_string(m.mode)); },
            [](const DailyRule&) { return std::string("daily"); },
        },
        policy_);
}

}  // namespace pvtilt
