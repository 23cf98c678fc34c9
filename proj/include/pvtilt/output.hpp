#pragma once

// Tabular, chart and report emission shared by the C API and the CLI.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pvtilt/geometry.hpp"
#include "pvtilt/irradiance.hpp"
#include "pvtilt/tilt_schedule.hpp"

namespace pvtilt {

enum class OutputFormat { Csv, Json, Svg };

std::string_view to_string(OutputFormat format);
OutputFormat parse_output_format(std::string_view text);

/// Thrown for a valid-but-unsupported combination, e.g. SVG for a table.
class UsageError : public std::invalid_argument {
public:
    explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

/// One table cell: its CSV text and its JSON value.
struct Cell {
    std::string text;
    nlohmann::json value;

    static Cell angle(double deg);  // 2 decimals
    static Cell number(double v, int decimals);
    static Cell integer(long v);
    static Cell string(std::string s);
    static Cell boolean(bool b);
};

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    /// Header row plus one line per row, comma separated, LF endings,
    /// RFC 4180 quoting where needed.
    std::string to_csv() const;
    /// Parses CSV text; every cell comes back as a string value.
    static Table parse_csv(std::string_view text);
};

struct ChartSeries {
    std::string name;
    std::string x_label;
    std::string y_label;
    std::vector<double> x;
    std::vector<double> y;
    int x_decimals = 2;

    /// Throws unless x is strictly increasing and |x| == |y|.
    void validate() const;
};

/// Anything the tool can emit: metadata plus either a table or chart series.
struct Document {
    std::string kind;
    nlohmann::json metadata = nlohmann::json::object();
    Table table;
    std::vector<ChartSeries> series;

    bool is_chart() const noexcept { return !series.empty(); }
};

std::string render(const Document& doc, OutputFormat format);
std::string render_svg(const std::vector<ChartSeries>& series, std::string_view title);

/// Default sun-path days: the 21st of every month.
std::vector<int> default_sunpath_days();

/// One elevation-vs-solar-hour series per day, sampled every step minutes
/// on a grid through solar noon; points below the horizon are dropped.
/// With include_azimuth a compass-azimuth series follows each day.
std::vector<ChartSeries> sunpath_series(const Location& loc, const std::vector<int>& days, double step_minutes,
                                        bool include_azimuth = false);

/// daily_tilt over d = 1..365.
ChartSeries tilt_curve(const Location& loc, DeclinationModel model = DeclinationModel::Exact);

enum class Granularity { Monthly, Seasonal };
Granularity parse_granularity(std::string_view text);

Document sun_document(const Location& loc, DayOfYear day, HourAngle omega);
Document tilt_document(const Location& loc, std::optional<int> day, DeclinationModel model);
Document extremes_document(const Location& loc, TiltMode mode);
/// month restricts a monthly table to one row.
Document schedule_document(const Location& loc, Granularity granularity, TiltMode mode,
                           std::optional<int> month = std::nullopt);
Document optimize_document(const Location& loc, DayRange period, const IrradianceModel& model,
                           const FixedTiltOptimum& result);
Document gains_document(const GainReport& report, const IrradianceModel& model);
Document sunpath_document(const Location& loc, const std::vector<int>& days, double step_minutes,
                          bool include_azimuth);
Document tilt_curve_document(const Location& loc, DeclinationModel model);

}  // namespace pvtilt
