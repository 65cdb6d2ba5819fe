#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "solstor/errors.hpp"

namespace solstor {

/// One generation technology in the cost book. Exactly one pricing mode is
/// active: capex (investment + depreciation) or a per-MWh energy price.
/// Storage entries keep capacity in MWh and investment in EUR/kWh; the flag
/// exists so the two unit systems are never mixed silently.
struct TechnologySpec {
    std::string name;
    double installed = 0.0;            // MW, or MWh when storage_units
    double investment = 0.0;           // EUR/kW, or EUR/kWh when storage_units
    double depreciation_years = 0.0;
    std::optional<double> energy_price;  // EUR/MWh
    bool storage_units = false;

    bool capex_priced() const { return !energy_price.has_value(); }

    void validate() const {
        if (installed < 0.0) throw ValidationError(name + ": installed capacity must be >= 0");
        if (capex_priced()) {
            if (investment < 0.0) throw ValidationError(name + ": investment must be >= 0");
            if (depreciation_years <= 0.0)
                throw ValidationError(name + ": depreciation period must be > 0");
        } else if (*energy_price < 0.0) {
            throw ValidationError(name + ": energy price must be >= 0");
        }
    }
};

/// Straight-line annualized investment, EUR/year. Capital-recovery
/// discounting and OPEX are deliberately out of the model.
inline double annualized_capex(const TechnologySpec& t) {
    if (!t.capex_priced())
        throw std::logic_error("annualized_capex called on energy-priced technology " + t.name);
    // installed MW * 1000 kW/MW * EUR/kW / years (identical arithmetic for
    // storage entries, where the units are MWh and EUR/kWh)
    return t.installed * 1000.0 * t.investment / t.depreciation_years;
}

struct CostBook {
    std::vector<TechnologySpec> technologies;
    double battery_capacity_mwh = 0.0;
    double battery_unit_cost = 0.0;        // EUR/kWh
    double battery_depreciation_years = 13.7;

    void validate() const {
        if (battery_depreciation_years <= 0.0)
            throw ValidationError("battery depreciation period must be > 0");
        if (battery_unit_cost < 0.0) throw ValidationError("battery unit cost must be >= 0");
        if (battery_capacity_mwh < 0.0) throw ValidationError("battery capacity must be >= 0");
        for (const auto& t : technologies) t.validate();
    }

    double battery_annual_cost() const {
        return battery_capacity_mwh * 1000.0 * battery_unit_cost / battery_depreciation_years;
    }

    /// Sum of all capex-priced annualized costs, battery included. EUR/year.
    double annual_fixed_cost() const {
        double acc = battery_annual_cost();
        for (const auto& t : technologies)
            if (t.capex_priced()) acc += annualized_capex(t);
        return acc;
    }
};

/// System LCOE in EUR/MWh: annualized investments plus the energy bill of
/// usage-priced technologies, divided by annual demand. Usage must be given
/// for every energy-priced technology in the book.
inline double lcoe(const CostBook& book, double annual_demand_mwh,
                   const std::map<std::string, double>& energy_priced_usage_mwh = {}) {
    if (annual_demand_mwh <= 0.0) throw ValidationError("lcoe: annual demand must be > 0");
    double cost = book.annual_fixed_cost();
    for (const auto& t : book.technologies) {
        if (t.capex_priced()) continue;
        auto it = energy_priced_usage_mwh.find(t.name);
        if (it == energy_priced_usage_mwh.end())
            throw ValidationError("lcoe: missing used-energy entry for " + t.name);
        cost += it->second * *t.energy_price;
    }
    return cost / annual_demand_mwh;
}

}  // namespace solstor
