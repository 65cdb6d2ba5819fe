#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "solstor/csv.hpp"
#include "solstor/errors.hpp"

namespace solstor {

inline constexpr std::size_t kHoursPerYear = 8760;
inline constexpr std::size_t kHoursPerLeapYear = 8784;

/// One year of hourly energy values in MWh/h. All internal energy is MWh;
/// GWh/TWh only appear at I/O boundaries.
struct HourlyProfile {
    std::string year_label;
    std::string technology_tag;
    std::vector<double> values;

    double annual_sum() const { return std::accumulate(values.begin(), values.end(), 0.0); }

    void validate_nonnegative() const {
        for (std::size_t i = 0; i < values.size(); ++i)
            if (values[i] < 0.0)
                throw ValidationError("negative value at row " + std::to_string(i + 1) +
                                      " of profile " + technology_tag + "/" + year_label);
    }
};

enum class Season { winter, spring, summer, autumn };

inline const char* season_name(Season s) {
    switch (s) {
        case Season::winter: return "winter";
        case Season::spring: return "spring";
        case Season::summer: return "summer";
        case Season::autumn: return "autumn";
    }
    return "?";
}

struct SeasonSlice {
    Season season;
    std::size_t begin;  // inclusive hour index
    std::size_t end;    // exclusive
    std::size_t length() const { return end - begin; }
};

/// Fixed partition of the normalized 8760-hour year into calendar quarters
/// Jan-Mar / Apr-Jun / Jul-Sep / Oct-Dec. Every study year uses the same
/// partition, which keeps cross-year season splices index-aligned.
inline std::array<SeasonSlice, 4> season_slices() {
    // 90 + 91 + 92 + 92 days
    return {{{Season::winter, 0, 2160},
             {Season::spring, 2160, 4344},
             {Season::summer, 4344, 6552},
             {Season::autumn, 6552, 8760}}};
}

inline double season_sum(const HourlyProfile& p, const SeasonSlice& s) {
    double acc = 0.0;
    for (std::size_t t = s.begin; t < s.end && t < p.values.size(); ++t) acc += p.values[t];
    return acc;
}

/// Equivalent full-load hours: annual energy (MWh) over installed power (MW).
inline double capacity_factor_hours(double annual_energy_mwh, double installed_power_mw) {
    if (installed_power_mw <= 0.0)
        throw ValidationError("capacity factor requires installed power > 0");
    return annual_energy_mwh / installed_power_mw;
}

/// Rescale a profile from one installed power to another. Shape is preserved;
/// annual energy scales by new/old.
inline HourlyProfile scale_profile(const HourlyProfile& p, double old_power_mw,
                                   double new_power_mw) {
    if (old_power_mw <= 0.0)
        throw ValidationError("scale_profile: old power must be > 0 (" + p.technology_tag + ")");
    HourlyProfile out = p;
    const double k = new_power_mw / old_power_mw;
    for (double& v : out.values) v *= k;
    return out;
}

/// Element-wise mean of several profiles, each normalized to 1 MW installed.
/// Used to substitute years whose hourly series was never measured.
inline HourlyProfile average_profile_per_mw(
    const std::vector<std::pair<const HourlyProfile*, double>>& profiles_with_power) {
    if (profiles_with_power.empty())
        throw ValidationError("profile substitution requires at least one measured year");
    const std::size_t n = profiles_with_power.front().first->values.size();
    HourlyProfile out;
    out.year_label = "avg";
    out.technology_tag = profiles_with_power.front().first->technology_tag;
    out.values.assign(n, 0.0);
    for (const auto& [p, power] : profiles_with_power) {
        if (p->values.size() != n)
            throw ValidationError("profile substitution: mixed profile lengths");
        if (power <= 0.0) throw ValidationError("profile substitution: power must be > 0");
        for (std::size_t t = 0; t < n; ++t) out.values[t] += p->values[t] / power;
    }
    for (double& v : out.values) v /= static_cast<double>(profiles_with_power.size());
    return out;
}

namespace detail {

// "YYYY-MM-DD..." -> is Feb 29. Timestamps are otherwise opaque labels.
inline bool is_feb29(const std::string& ts) {
    return ts.size() >= 10 && ts[5] == '0' && ts[6] == '2' && ts[8] == '2' && ts[9] == '9';
}

}  // namespace detail

/// Load every value column of an hourly CSV at once. The file must have a
/// `timestamp` first column and exactly 8760 or 8784 data rows; leap files
/// are normalized by dropping the 24 hours of Feb 29.
inline std::map<std::string, HourlyProfile> load_profile_table(
    const std::filesystem::path& path, const std::string& year_label = "") {
    csv::Table t = csv::read_table(path);
    if (t.header.empty() || t.header[0] != "timestamp")
        throw ValidationError(path.string() + ": first column must be 'timestamp'");
    const std::size_t rows = t.rows.size();
    if (rows != kHoursPerYear && rows != kHoursPerLeapYear)
        throw ValidationError(path.string() + ": expected 8760 or 8784 data rows, found " +
                              std::to_string(rows));

    std::vector<std::size_t> keep;
    keep.reserve(kHoursPerYear);
    for (std::size_t r = 0; r < rows; ++r)
        if (rows == kHoursPerYear || !detail::is_feb29(t.rows[r][0])) keep.push_back(r);
    if (keep.size() != kHoursPerYear)
        throw ValidationError(path.string() + ": leap-year file must contain exactly 24 Feb 29 rows");

    std::map<std::string, HourlyProfile> out;
    for (std::size_t c = 1; c < t.header.size(); ++c) {
        HourlyProfile p;
        p.technology_tag = t.header[c];
        p.year_label = year_label;
        p.values.reserve(kHoursPerYear);
        for (std::size_t r : keep) {
            const std::string where =
                "row " + std::to_string(r + 1) + " (column '" + t.header[c] + "') of " + path.string();
            double v = csv::parse_number(t.rows[r][c], where);
            if (v < 0.0) throw ValidationError("negative value at " + where);
            p.values.push_back(v);
        }
        out.emplace(t.header[c], std::move(p));
    }
    return out;
}

/// Load a single named series; errors if the column is missing.
inline HourlyProfile load_profile(const std::filesystem::path& path, const std::string& column,
                                  const std::string& year_label = "") {
    csv::Table t = csv::read_table(path);
    if (t.column_index(column) < 0)
        throw ValidationError(path.string() + ": missing column '" + column + "'");
    auto all = load_profile_table(path, year_label);
    return std::move(all.at(column));
}

}  // namespace solstor
