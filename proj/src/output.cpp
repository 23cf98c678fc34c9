#include "pvtilt/output.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>

#include <fmt/format.h>

#include "pvtilt/error.hpp"

namespace pvtilt {

namespace {

double round_to(double v, int decimals) {
    const double scale = std::pow(10.0, decimals);
    const double r = std::round(v * scale) / scale;
    return r == 0.0 ? 0.0 : r;  // drop negative zero
}

std::string fixed(double v, int decimals) {
    return fmt::format("{:.{}f}", round_to(v, decimals), decimals);
}

bool needs_quotes(std::string_view s) {
    return s.find_first_of(",\"\r\n") != std::string_view::npos;
}

void append_csv_field(std::string& out, std::string_view s) {
    if (!needs_quotes(s)) {
        out += s;
        return;
    }
    out += '"';
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
}

nlohmann::json base_metadata(double latitude_deg) {
    return {{"generator", "pvtilt"}, {"latitude_deg", round_to(latitude_deg, 2)}, {"time_basis", "solar"}};
}

std::string sanitize_xml(std::string_view s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

std::string_view to_string(OutputFormat format) {
    switch (format) {
        case OutputFormat::Csv: return "csv";
        case OutputFormat::Json: return "json";
        case OutputFormat::Svg: return "svg";
    }
    return "?";
}

OutputFormat parse_output_format(std::string_view text) {
    if (text == "csv") return OutputFormat::Csv;
    if (text == "json") return OutputFormat::Json;
    if (text == "svg") return OutputFormat::Svg;
    throw UsageError(fmt::format("unknown output format '{}' (expected csv, json or svg)", text));
}

Granularity parse_granularity(std::string_view text) {
    if (text == "monthly") return Granularity::Monthly;
    if (text == "seasonal") return Granularity::Seasonal;
    throw UsageError(fmt::format("unknown granularity '{}' (expected monthly or seasonal)", text));
}

Cell Cell::angle(double deg) { return number(deg, 2); }
Cell Cell::number(double v, int decimals) { return {fixed(v, decimals), round_to(v, decimals)}; }
Cell Cell::integer(long v) { return {std::to_string(v), v}; }
Cell Cell::string(std::string s) {
    nlohmann::json j = s;
    return {std::move(s), std::move(j)};
}
Cell Cell::boolean(bool b) { return {b ? "1" : "0", b}; }

std::string Table::to_csv() const {
    std::string out;
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (i) out += ',';
        append_csv_field(out, columns[i]);
    }
    out += '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            append_csv_field(out, row[i].text);
        }
        out += '\n';
    }
    return out;
}

Table Table::parse_csv(std::string_view text) {
    std::vector<std::vector<std::string>> records;
    std::vector<std::string> record;
    std::string field;
    bool quoted = false;
    bool at_record_start = true;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                field += c;
            }
            continue;
        }
        at_record_start = false;
        if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            record.push_back(std::move(field));
            field.clear();
        } else if (c == '\n') {
            record.push_back(std::move(field));
            field.clear();
            records.push_back(std::move(record));
            record.clear();
            at_record_start = true;
        } else if (c != '\r') {
            field += c;
        }
    }
    if (quoted) throw DomainError("unterminated quoted CSV field");
    if (!at_record_start) {
        record.push_back(std::move(field));
        records.push_back(std::move(record));
    }

    Table t;
    if (records.empty()) return t;
    t.columns = std::move(records.front());
    for (std::size_t r = 1; r < records.size(); ++r) {
        std::vector<Cell> row;
        row.reserve(records[r].size());
        for (auto& f : records[r]) row.push_back(Cell::string(std::move(f)));
        t.rows.push_back(std::move(row));
    }
    return t;
}

void ChartSeries::validate() const {
    if (x.size() != y.size())
        throw DomainError(fmt::format("series '{}' has {} x values but {} y values", name, x.size(), y.size()));
    for (std::size_t i = 1; i < x.size(); ++i)
        if (!(x[i] > x[i - 1]))
            throw DomainError(fmt::format("series '{}' abscissa not strictly increasing at index {}", name, i));
}

std::string render_svg(const std::vector<ChartSeries>& series, std::string_view title) {
    constexpr double width = 800, height = 500, left = 70, right = 20, top = 40, bottom = 60;
    constexpr std::array<std::string_view, 6> palette{"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b"};

    double x0 = INFINITY, x1 = -INFINITY, y0 = INFINITY, y1 = -INFINITY;
    for (const auto& s : series) {
        s.validate();
        for (double v : s.x) x0 = std::min(x0, v), x1 = std::max(x1, v);
        for (double v : s.y) y0 = std::min(y0, v), y1 = std::max(y1, v);
    }
    if (!(x1 > x0)) x0 -= 1.0, x1 += 1.0;
    if (!(y1 > y0)) y0 -= 1.0, y1 += 1.0;
    y0 = std::min(y0, 0.0);

    const double pw = width - left - right, ph = height - top - bottom;
    auto px = [&](double v) { return left + (v - x0) / (x1 - x0) * pw; };
    auto py = [&](double v) { return top + ph - (v - y0) / (y1 - y0) * ph; };

    std::string out;
    auto w = std::back_inserter(out);
    fmt::format_to(w, "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" viewBox=\"0 0 {} {}\">\n",
                   width, height, width, height);
    fmt::format_to(w, "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");
    fmt::format_to(w, "<text x=\"{}\" y=\"24\" font-family=\"sans-serif\" font-size=\"16\" text-anchor=\"middle\">{}</text>\n",
                   width / 2, sanitize_xml(title));
    fmt::format_to(w, "<g stroke=\"black\" stroke-width=\"1\"><line x1=\"{0}\" y1=\"{1:.2f}\" x2=\"{2}\" y2=\"{1:.2f}\"/>"
                      "<line x1=\"{0}\" y1=\"{3}\" x2=\"{0}\" y2=\"{1:.2f}\"/></g>\n",
                   left, top + ph, left + pw, top);
    constexpr int ticks = 5;
    for (int i = 0; i <= ticks; ++i) {
        const double xv = x0 + (x1 - x0) * i / ticks;
        const double yv = y0 + (y1 - y0) * i / ticks;
        fmt::format_to(w, "<text x=\"{:.2f}\" y=\"{:.2f}\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">{:.1f}</text>\n",
                       px(xv), top + ph + 16, xv);
        fmt::format_to(w, "<text x=\"{:.2f}\" y=\"{:.2f}\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\">{:.1f}</text>\n",
                       left - 6, py(yv) + 4, yv);
    }
    if (!series.empty()) {
        fmt::format_to(w, "<text x=\"{:.2f}\" y=\"{:.2f}\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">{}</text>\n",
                       left + pw / 2, height - 16, sanitize_xml(series.front().x_label));
        fmt::format_to(w, "<text x=\"16\" y=\"{:.2f}\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\" "
                          "transform=\"rotate(-90 16 {:.2f})\">{}</text>\n",
                       top + ph / 2, top + ph / 2, sanitize_xml(series.front().y_label));
    }
    for (std::size_t i = 0; i < series.size(); ++i) {
        const auto& s = series[i];
        if (s.x.empty()) continue;
        fmt::format_to(w, "<polyline fill=\"none\" stroke=\"{}\" stroke-width=\"1.5\" points=\"", palette[i % palette.size()]);
        for (std::size_t k = 0; k < s.x.size(); ++k)
            fmt::format_to(w, "{}{:.2f},{:.2f}", k ? " " : "", px(s.x[k]), py(s.y[k]));
        fmt::format_to(w, "\"><title>{}</title></polyline>\n", sanitize_xml(s.name));
    }
    out += "</svg>\n";
    return out;
}

std::string render(const Document& doc, OutputFormat format) {
    switch (format) {
        case OutputFormat::Csv: {
            if (!doc.is_chart()) return doc.table.to_csv();
            Table t;
            t.columns = {"series", "x", "y"};
            for (const auto& s : doc.series) {
                s.validate();
                for (std::size_t i = 0; i < s.x.size(); ++i)
                    t.rows.push_back({Cell::string(s.name), Cell::number(s.x[i], s.x_decimals), Cell::angle(s.y[i])});
            }
            return t.to_csv();
        }
        case OutputFormat::Json: {
            nlohmann::ordered_json j;
            j["kind"] = doc.kind;
            j["metadata"] = doc.metadata;
            if (doc.is_chart()) {
                auto arr = nlohmann::ordered_json::array();
                for (const auto& s : doc.series) {
                    s.validate();
                    nlohmann::ordered_json js;
                    js["name"] = s.name;
                    js["x_label"] = s.x_label;
                    js["y_label"] = s.y_label;
                    auto xs = nlohmann::ordered_json::array();
                    auto ys = nlohmann::ordered_json::array();
                    for (double v : s.x) xs.push_back(round_to(v, s.x_decimals));
                    for (double v : s.y) ys.push_back(round_to(v, 2));
                    js["x"] = std::move(xs);
                    js["y"] = std::move(ys);
                    arr.push_back(std::move(js));
                }
                j["series"] = std::move(arr);
            } else {
                j["columns"] = doc.table.columns;
                auto rows = nlohmann::ordered_json::array();
                for (const auto& row : doc.table.rows) {
                    nlohmann::ordered_json jr = nlohmann::ordered_json::object();
                    for (std::size_t i = 0; i < row.size() && i < doc.table.columns.size(); ++i)
                        jr[doc.table.columns[i]] = row[i].value;
                    rows.push_back(std::move(jr));
                }
                j["rows"] = std::move(rows);
            }
            return j.dump(2) + "\n";
        }
        case OutputFormat::Svg: {
            if (!doc.is_chart()) throw UsageError(fmt::format("'{}' output is a table; svg is only available for charts", doc.kind));
            const std::string title = doc.metadata.value("title", doc.kind);
            return render_svg(doc.series, title);
        }
    }
    throw UsageError("unknown output format");
}

std::vector<int> default_sunpath_days() {
    std::vector<int> days;
    for (int m = 1; m <= 12; ++m) days.push_back(first_day_of_month(m) + 20);
    return days;
}

std::vector<ChartSeries> sunpath_series(const Location& loc, const std::vector<int>& days, double step_minutes,
                                        bool include_azimuth) {
    if (days.empty()) throw UsageError("sun-path chart needs at least one day");
    if (!(step_minutes > 0.0) || !std::isfinite(step_minutes))
        throw DomainError(fmt::format("time step {} min must be positive", step_minutes));
    const double step_deg = step_minutes * 0.25;

    std::vector<ChartSeries> out;
    for (int d : days) {
        const DayOfYear day(d);
        const double sunset = sunrise_hour_angle(loc, day);
        const auto k_max = static_cast<long>(std::floor(sunset / step_deg + 1e-9));

        ChartSeries elev{fmt::format("day_{}", d), "solar hour", "elevation (deg)", {}, {}, 4};
        ChartSeries azim{fmt::format("day_{}_azimuth", d), "solar hour", "compass azimuth (deg)", {}, {}, 4};
        for (long k = -k_max; k <= k_max; ++k) {
            const HourAngle omega(std::clamp(static_cast<double>(k) * step_deg, -180.0, 180.0));
            const SolarAngles sun = sun_position(loc, day, omega);
            if (sun.elevation_deg < 0.0) continue;
            elev.x.push_back(omega.solar_hour());
            elev.y.push_back(sun.elevation_deg);
            azim.x.push_back(omega.solar_hour());
            azim.y.push_back(sun.compass_azimuth_deg());
        }
        out.push_back(std::move(elev));
        if (include_azimuth) out.push_back(std::move(azim));
    }
    return out;
}

ChartSeries tilt_curve(const Location& loc, DeclinationModel model) {
    ChartSeries s{"daily_tilt", "day of year", "tilt (deg)", {}, {}, 0};
    for (int d = 1; d <= kDaysPerYear; ++d) {
        s.x.push_back(d);
        s.y.push_back(daily_tilt(loc, DayOfYear(d), model).tilt_deg);
    }
    return s;
}

Document sun_document(const Location& loc, DayOfYear day, HourAngle omega) {
    const SolarAngles sun = sun_position(loc, day, omega);
    const NoonElevation noon = noon_elevation(loc, day);
    Document doc;
    doc.kind = "sun";
    doc.metadata = base_metadata(loc.latitude_deg());
    doc.metadata["azimuth_reference"] = "azimuth_deg: south = 0, east negative; compass_azimuth_deg: north = 0, clockwise";
    doc.table.columns = {"day",
                         "hour_angle_deg",
                         "solar_hour",
                         "declination_deg",
                         "elevation_deg",
                         "zenith_deg",
                         "azimuth_deg",
                         "compass_azimuth_deg",
                         "noon_elevation_deg",
                         "noon_elevation_folded_deg",
                         "noon_zenith_deg",
                         "sunrise_hour_angle_deg"};
    doc.table.rows.push_back({Cell::integer(day.value()), Cell::angle(omega.degrees()), Cell::number(omega.solar_hour(), 4),
                              Cell::angle(sun.declination_deg), Cell::angle(sun.elevation_deg), Cell::angle(sun.zenith_deg),
                              Cell::angle(sun.azimuth_deg), Cell::angle(sun.compass_azimuth_deg()), Cell::angle(noon.raw_deg),
                              Cell::angle(noon.folded_deg), Cell::angle(noon_zenith(loc, day)),
                              Cell::angle(sunrise_hour_angle(loc, day))});
    return doc;
}

Document tilt_document(const Location& loc, std::optional<int> day, DeclinationModel model) {
    require_northern(loc);
    Document doc;
    doc.kind = "tilt";
    doc.metadata = base_metadata(loc.latitude_deg());
    doc.metadata["declination"] = model == DeclinationModel::Exact ? "exact" : "simplified";
    doc.table.columns = {"day", "tilt_deg", "unclamped_deg", "clamped"};
    const int first = day.value_or(1);
    const int last = day.value_or(kDaysPerYear);
    for (int d = first; d <= last; ++d) {
        const TiltValue v = daily_tilt(loc, DayOfYear(d), model);
        doc.table.rows.push_back({Cell::integer(d), Cell::angle(v.tilt_deg), Cell::angle(v.unclamped_deg), Cell::boolean(v.clamped)});
    }
    return doc;
}

Document extremes_document(const Location& loc, TiltMode mode) {
    const TiltExtremes e = tilt_extremes(loc, mode);
    Document doc;
    doc.kind = "tilt_extremes";
    doc.metadata = base_metadata(loc.latitude_deg());
    doc.metadata["mode"] = to_string(mode);
    if (e.note) doc.metadata["note"] = *e.note;
    doc.table.columns = {"mode", "min_tilt_deg", "max_tilt_deg", "min_discrepancy_deg", "note"};
    doc.table.rows.push_back({Cell::string(std::string(to_string(mode))), Cell::angle(e.min_deg), Cell::angle(e.max_deg),
                              Cell::angle(e.min_discrepancy_deg), Cell::string(e.note.value_or(""))});
    return doc;
}

Document schedule_document(const Location& loc, Granularity granularity, TiltMode mode, std::optional<int> month) {
    Document doc;
    doc.metadata = base_metadata(loc.latitude_deg());
    doc.metadata["mode"] = to_string(mode);
    if (granularity == Granularity::Monthly) {
        const MonthlySchedule s = monthly_schedule(loc, mode);
        doc.kind = "monthly_schedule";
        doc.table.columns = {"month", "name", "offset_deg", "tilt_deg", "clamped"};
        for (int m = 1; m <= 12; ++m) {
            if (month && *month != m) continue;
            const auto i = static_cast<std::size_t>(m - 1);
            doc.table.rows.push_back({Cell::integer(m), Cell::string(std::string(month_name(m))), Cell::angle(s.offsets_deg[i]),
                                      Cell::angle(s.betas_deg[i]), Cell::boolean(s.clamped[i])});
        }
        if (month && doc.table.rows.empty()) throw DomainError(fmt::format("month {} outside [1, 12]", *month));
        return doc;
    }

    if (month) throw UsageError("--month applies to the monthly granularity only");
    const SeasonalSchedule s = seasonal_schedule(loc, mode);
    doc.kind = "seasonal_schedule";
    doc.metadata["season_months"] = {{"winter", "Jan-Mar"}, {"spring", "Apr-Jun"}, {"summer", "Jul-Sep"}, {"fall", "Oct-Dec"}};
    doc.metadata["mean_tilt_deg"] = nlohmann::json::object();
    for (Season q : kSeasons) doc.metadata["mean_tilt_deg"][std::string(to_string(q))] = round_to(s.beta(q), 4);
    doc.table.columns = {"season", "tilt_deg", "delta_deg"};
    const auto rounded = s.rounded();
    for (std::size_t q = 0; q < 4; ++q) {
        const Cell tilt = mode == TiltMode::Published ? Cell::integer(rounded[q]) : Cell::angle(s.betas_deg[q]);
        doc.table.rows.push_back({Cell::string(std::string(to_string(kSeasons[q]))), tilt, Cell::angle(s.delta_deg[q])});
    }
    return doc;
}

Document optimize_document(const Location& loc, DayRange period, const IrradianceModel& model,
                           const FixedTiltOptimum& result) {
    Document doc;
    doc.kind = "optimize";
    doc.metadata = base_metadata(loc.latitude_deg());
    doc.metadata["time_step_minutes"] = model.time_step_minutes;
    doc.metadata["solar_constant_w_m2"] = model.solar_constant_w_m2;
    doc.metadata["irradiance_model"] = "clear-sky beam, DNI = S * 0.7^(AM^0.678)";
    doc.table.columns = {"first_day", "last_day", "optimal_tilt_deg", "tilt_minus_latitude_deg", "energy_wh_m2"};
    doc.table.rows.push_back({Cell::integer(period.first), Cell::integer(period.last), Cell::angle(result.tilt_deg),
                              Cell::angle(result.tilt_deg - loc.latitude_deg()), Cell::number(result.energy_wh_m2, 1)});
    return doc;
}

Document gains_document(const GainReport& report, const IrradianceModel& model) {
    Document doc;
    doc.kind = "gains";
    doc.metadata = base_metadata(report.latitude_deg);
    doc.metadata["mode"] = to_string(report.mode);
    doc.metadata["time_step_minutes"] = model.time_step_minutes;
    doc.metadata["solar_constant_w_m2"] = model.solar_constant_w_m2;
    doc.metadata["irradiance_model"] = "clear-sky beam, DNI = S * 0.7^(AM^0.678)";
    doc.metadata["baseline"] = "fixed tilt at latitude";
    doc.metadata["baseline_wh_m2"] = round_to(report.baseline_wh_m2, 1);
    doc.table.columns = {"policy", "energy_wh_m2", "gain_percent"};
    for (const auto& p : report.policies)
        doc.table.rows.push_back({Cell::string(p.policy), Cell::number(p.energy_wh_m2, 1), Cell::number(p.gain_percent, 2)});
    return doc;
}

Document sunpath_document(const Location& loc, const std::vector<int>& days, double step_minutes, bool include_azimuth) {
    Document doc;
    doc.kind = "sunpath";
    doc.metadata = base_metadata(loc.latitude_deg());
    doc.metadata["title"] = fmt::format("Sun path at latitude {:.2f} deg (solar time)", loc.latitude_deg());
    doc.metadata["units"] = {{"x", "solar hour"}, {"y", "deg"}};
    doc.metadata["days"] = days;
    doc.metadata["time_step_minutes"] = step_minutes;
    doc.series = sunpath_series(loc, days, step_minutes, include_azimuth);
    return doc;
}

Document tilt_curve_document(const Location& loc, DeclinationModel model) {
    Document doc;
    doc.kind = "tilt_curve";
    doc.metadata = base_metadata(loc.latitude_deg());
    doc.metadata["title"] = fmt::format("Daily optimal tilt at latitude {:.2f} deg", loc.latitude_deg());
    doc.metadata["units"] = {{"x", "day of year"}, {"y", "deg"}};
    doc.metadata["declination"] = model == DeclinationModel::Exact ? "exact" : "simplified";
    doc.series = {tilt_curve(loc, model)};
    return doc;
}

}  // namespace pvtilt
