#pragma once

#include <map>
#include <string>

#include "solstor/portfolio.hpp"
#include "solstor/timeseries.hpp"

namespace solstor {

/// A fully assembled study year: per-technology production already scaled to
/// the plan capacities, demand including EV charging, the share of hydro
/// energy treated as freely dispatchable, and the cost book of the plan
/// assets (additional PV and battery are attached later by the optimizer).
///
/// Assembled years always have 8760-hour profiles; the type itself only
/// requires a common length so that short hand-built scenarios can drive the
/// dispatch and optimizer tests.
struct ScenarioYear {
    std::string label;
    std::map<std::string, HourlyProfile> technologies;
    std::string hydro_tech;  // key of the dispatchable-capable technology, may be empty
    HourlyProfile demand;    // includes EV
    double hydro_dispatch_share = 0.0;
    CostBook plan_costs;

    std::size_t horizon() const { return demand.values.size(); }

    double annual_demand() const { return demand.annual_sum(); }

    double annual_production() const {
        double acc = 0.0;
        for (const auto& [name, p] : technologies) acc += p.annual_sum();
        return acc;
    }

    const HourlyProfile* find(const std::string& tech) const {
        auto it = technologies.find(tech);
        return it == technologies.end() ? nullptr : &it->second;
    }

    void validate() const {
        if (hydro_dispatch_share < 0.0 || hydro_dispatch_share > 1.0)
            throw ValidationError(label + ": hydro dispatch share must be in [0,1]");
        if (!hydro_tech.empty() && !technologies.count(hydro_tech))
            throw ValidationError(label + ": unknown hydro technology '" + hydro_tech + "'");
        const std::size_t n = horizon();
        if (n == 0) throw ValidationError(label + ": empty demand profile");
        for (const auto& [name, p] : technologies) {
            if (p.values.size() != n)
                throw ValidationError(label + ": profile length mismatch for " + name);
            p.validate_nonnegative();
        }
        demand.validate_nonnegative();
        plan_costs.validate();
    }
};

}  // namespace solstor
