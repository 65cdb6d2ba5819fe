#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "solstor/scenario.hpp"
#include "solstor/timeseries.hpp"

namespace solstor {

/// Hourly history of one technology across the study decade. Profiles are
/// the effective series used for scenario assembly (substituted years
/// included); flagged years stay in the dataset but are skipped by the
/// worst-year selection.
struct TechnologySeries {
    std::map<int, HourlyProfile> profiles;
    std::map<int, double> installed_power_mw;
    double plan_power_mw = 0.0;
    std::set<int> flagged_years;
    bool scale_to_plan = true;   // false: enters scenarios with the actual profile
    bool dispatchable = false;
};

struct DecadeDataset {
    std::vector<int> years;
    std::map<std::string, TechnologySeries> technologies;
    std::map<int, HourlyProfile> demand;
    CostBook plan_costs;
    double hydro_dispatch_share = 0.40;

    void validate() const {
        for (int y : years) {
            if (!demand.count(y))
                throw ValidationError("no demand profile for year " + std::to_string(y));
            demand.at(y).validate_nonnegative();
            for (const auto& [name, tech] : technologies) {
                auto it = tech.profiles.find(y);
                if (it == tech.profiles.end())
                    throw ValidationError("no " + name + " profile for year " + std::to_string(y));
                it->second.validate_nonnegative();
                if (it->second.values.size() != kHoursPerYear)
                    throw ValidationError(name + "/" + std::to_string(y) +
                                          ": profile length is not 8760");
                if (!tech.installed_power_mw.count(y))
                    throw ValidationError("no installed power for " + name + "/" +
                                          std::to_string(y));
            }
        }
        plan_costs.validate();
        if (hydro_dispatch_share < 0.0 || hydro_dispatch_share > 1.0)
            throw ValidationError("hydro dispatch share must be in [0,1]");
    }

    double capacity_factor(const std::string& tech, int year) const {
        const auto& t = technologies.at(tech);
        return capacity_factor_hours(t.profiles.at(year).annual_sum(),
                                     t.installed_power_mw.at(year));
    }

    std::string dispatchable_tech() const {
        for (const auto& [name, tech] : technologies)
            if (tech.dispatchable) return name;
        return {};
    }
};

struct WorstCaseRecipe {
    std::map<std::string, int> generation_year;  // per technology
    std::map<Season, int> demand_year;           // per season
};

/// The unflagged year with the lowest capacity factor; earliest year on ties.
inline int select_worst_generation_year(const DecadeDataset& d, const std::string& tech) {
    auto it = d.technologies.find(tech);
    if (it == d.technologies.end()) throw ValidationError("unknown technology '" + tech + "'");
    const TechnologySeries& t = it->second;
    bool found = false;
    int best_year = 0;
    double best_cf = 0.0;
    for (int y : d.years) {
        if (t.flagged_years.count(y)) continue;
        const double cf = d.capacity_factor(tech, y);
        if (!found || cf < best_cf) {
            found = true;
            best_cf = cf;
            best_year = y;
        }
    }
    if (!found) throw ValidationError("every year of '" + tech + "' is flagged");
    return best_year;
}

/// Per season, the year whose demand over that season's hours is largest;
/// earliest year on ties.
inline std::map<Season, int> select_worst_demand_seasons(const DecadeDataset& d) {
    std::map<Season, int> out;
    for (const SeasonSlice& slice : season_slices()) {
        bool found = false;
        int best_year = 0;
        double best_sum = 0.0;
        for (int y : d.years) {
            const double s = season_sum(d.demand.at(y), slice);
            if (!found || s > best_sum) {
                found = true;
                best_sum = s;
                best_year = y;
            }
        }
        out[slice.season] = best_year;
    }
    return out;
}

inline WorstCaseRecipe select_worst_case(const DecadeDataset& d) {
    WorstCaseRecipe r;
    for (const auto& [name, tech] : d.technologies)
        r.generation_year[name] = select_worst_generation_year(d, name);
    r.demand_year = select_worst_demand_seasons(d);
    return r;
}

namespace detail {

inline HourlyProfile scaled_for_plan(const DecadeDataset& d, const std::string& name, int year) {
    const TechnologySeries& t = d.technologies.at(name);
    auto it = t.profiles.find(year);
    if (it == t.profiles.end())
        throw ValidationError("missing profile " + name + "/" + std::to_string(year));
    if (!t.scale_to_plan) return it->second;
    return scale_profile(it->second, t.installed_power_mw.at(year), t.plan_power_mw);
}

}  // namespace detail

/// Rescale an EV charging shape so its annual energy matches the target.
inline HourlyProfile ev_demand_profile(double annual_ev_energy_mwh, const HourlyProfile& shape) {
    const double sum = shape.annual_sum();
    if (sum <= 0.0) throw ValidationError("EV shape must have a positive annual sum");
    HourlyProfile out = shape;
    out.technology_tag = "ev";
    const double k = annual_ev_energy_mwh / sum;
    for (double& v : out.values) v *= k;
    return out;
}

/// One regular study year: every technology scaled to its plan capacity,
/// demand = recorded demand plus the EV profile.
inline ScenarioYear assemble_regular_year(const DecadeDataset& d, int year,
                                          const HourlyProfile& ev) {
    auto dit = d.demand.find(year);
    if (dit == d.demand.end())
        throw ValidationError("missing year " + std::to_string(year) + " in dataset");
    ScenarioYear s;
    s.label = std::to_string(year);
    s.hydro_tech = d.dispatchable_tech();
    s.hydro_dispatch_share = d.hydro_dispatch_share;
    s.plan_costs = d.plan_costs;
    for (const auto& [name, tech] : d.technologies)
        s.technologies[name] = detail::scaled_for_plan(d, name, year);
    s.demand = dit->second;
    s.demand.technology_tag = "demand";
    if (ev.values.size() != s.demand.values.size())
        throw ValidationError("EV profile length does not match the demand profile");
    for (std::size_t t = 0; t < s.demand.values.size(); ++t) s.demand.values[t] += ev.values[t];
    s.validate();
    return s;
}

/// The synthetic worst-case year: per technology the recipe year's profile
/// scaled to plan capacity, demand spliced season by season from the recipe's
/// demand years, plus EV.
inline ScenarioYear assemble_worst_year(const DecadeDataset& d, const WorstCaseRecipe& r,
                                        const HourlyProfile& ev) {
    ScenarioYear s;
    s.label = "worst";
    s.hydro_tech = d.dispatchable_tech();
    s.hydro_dispatch_share = d.hydro_dispatch_share;
    s.plan_costs = d.plan_costs;
    for (const auto& [name, tech] : d.technologies) {
        auto it = r.generation_year.find(name);
        if (it == r.generation_year.end())
            throw ValidationError("recipe has no source year for " + name);
        s.technologies[name] = detail::scaled_for_plan(d, name, it->second);
    }
    s.demand.year_label = "worst";
    s.demand.technology_tag = "demand";
    s.demand.values.assign(kHoursPerYear, 0.0);
    for (const SeasonSlice& slice : season_slices()) {
        auto it = r.demand_year.find(slice.season);
        if (it == r.demand_year.end())
            throw ValidationError(std::string("recipe has no demand year for ") +
                                  season_name(slice.season));
        auto dit = d.demand.find(it->second);
        if (dit == d.demand.end())
            throw ValidationError("missing demand year " + std::to_string(it->second));
        for (std::size_t t = slice.begin; t < slice.end; ++t)
            s.demand.values[t] = dit->second.values[t];
    }
    if (ev.values.size() != kHoursPerYear)
        throw ValidationError("EV profile length does not match the spliced year");
    for (std::size_t t = 0; t < kHoursPerYear; ++t) s.demand.values[t] += ev.values[t];
    s.validate();
    return s;
}

}  // namespace solstor
