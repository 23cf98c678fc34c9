#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "pvtilt/geometry.hpp"

namespace pvtilt {

/// How monthly offsets from latitude are produced.
///   Published: the tabulated offsets verbatim, including the 8.25 deg minimum
///              at 32.7 N (July = latitude - 24.45) and the 7.49 rounding.
///   Exact:     symmetric linear interpolation between latitude +/- 23.45.
enum class TiltMode { Published, Exact };

std::string_view to_string(TiltMode mode);
TiltMode parse_tilt_mode(std::string_view text);  // "paper" | "exact"

enum class Season { Winter, Spring, Summer, Fall };
inline constexpr std::array<Season, 4> kSeasons{Season::Winter, Season::Spring, Season::Summer, Season::Fall};
std::string_view to_string(Season season);

inline constexpr std::array<int, 12> kMonthLengths{31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
std::string_view month_name(int month);
/// Calendar month (1..12) of a day in a 365-day year.
int month_of(DayOfYear day);
/// First day-of-year of a month.
int first_day_of_month(int month);
/// Winter = Jan-Mar, Spring = Apr-Jun, Summer = Jul-Sep, Fall = Oct-Dec.
Season season_of_month(int month);

/// Published monthly offsets from latitude, January first.
inline constexpr std::array<double, 12> kPublishedMonthlyOffsets{
    23.45, 15.47, 7.49, -0.5, -8.48, -16.46, -24.45, -16.46, -8.48, -0.5, 7.49, 15.47};

struct TiltValue {
    double tilt_deg = 0.0;
    /// latitude - declination before clamping to [0, 90]
    double unclamped_deg = 0.0;
    bool clamped = false;
};

struct TiltExtremes {
    double min_deg = 0.0;
    double max_deg = 0.0;
    TiltMode mode = TiltMode::Exact;
    /// Published minimum minus the self-consistent latitude - 23.45 (zero in exact mode).
    double min_discrepancy_deg = 0.0;
    std::optional<std::string> note;
};

struct MonthlySchedule {
    double latitude_deg = 0.0;
    TiltMode mode = TiltMode::Exact;
    std::array<double, 12> offsets_deg{};
    std::array<double, 12> betas_deg{};
    std::array<bool, 12> clamped{};

    /// Month 1..12.
    double beta(int month) const { return betas_deg.at(static_cast<std::size_t>(month - 1)); }
};

struct SeasonalSchedule {
    double latitude_deg = 0.0;
    TiltMode mode = TiltMode::Exact;
    /// Mean of the three monthly tilts of each season, full precision.
    std::array<double, 4> betas_deg{};
    /// betas_deg - latitude: the +/- Delta adjustment around latitude.
    std::array<double, 4> delta_deg{};

    double beta(Season s) const { return betas_deg.at(static_cast<std::size_t>(s)); }
    /// Nearest-integer tilts, for display.
    std::array<int, 4> rounded() const;
};

/// Optimal tilt for a day: the panel normal points at the noon sun
/// (tilt = 90 - noon elevation = latitude - declination), clamped to [0, 90].
TiltValue daily_tilt(const Location& loc, DayOfYear day,
                     DeclinationModel model = DeclinationModel::Exact);

TiltExtremes tilt_extremes(const Location& loc, TiltMode mode);
MonthlySchedule monthly_schedule(const Location& loc, TiltMode mode);
SeasonalSchedule seasonal_schedule(const Location& loc, TiltMode mode);

/// Monthly tilts taken from the daily rule evaluated on the 21st of each month.
std::array<double, 12> monthly_from_daily_rule(const Location& loc,
                                               DeclinationModel model = DeclinationModel::Exact);

/// Throws UnsupportedHemisphere unless latitude > 0.
void require_northern(const Location& loc);

struct FixedTilt {
    double tilt_deg;
};

struct DailyRule {
    Location location;
    DeclinationModel declination = DeclinationModel::Exact;
};

/// Maps every day of the year to a panel tilt.
class TiltPolicy {
public:
    using Variant = std::variant<FixedTilt, SeasonalSchedule, MonthlySchedule, DailyRule>;

    static TiltPolicy fixed(double tilt_deg);
    static TiltPolicy seasonal(SeasonalSchedule schedule);
    static TiltPolicy monthly(MonthlySchedule schedule);
    static TiltPolicy daily(const Location& loc, DeclinationModel model = DeclinationModel::Exact);

    double tilt_for(DayOfYear day) const;
    std::string name() const;
    const Variant& variant() const noexcept { return policy_; }

private:
    explicit TiltPolicy(Variant v) : policy_(std::move(v)) {}
    Variant policy_;
};

}  // namespace pvtilt
