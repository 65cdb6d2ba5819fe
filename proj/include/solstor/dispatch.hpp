#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "solstor/scenario.hpp"

namespace solstor {

enum class DeficitPolicy { hydro_first, battery_first };

struct DispatchConfig {
    double hydro_dispatch_share = 0.40;
    double battery_capacity_mwh = 0.0;
    double round_trip_efficiency = 1.0;  // applied on charge
    double initial_soc_mwh = 0.0;
    DeficitPolicy deficit_policy = DeficitPolicy::hydro_first;

    void validate() const {
        if (hydro_dispatch_share < 0.0 || hydro_dispatch_share > 1.0)
            throw ValidationError("hydro dispatch share must be in [0,1]");
        if (battery_capacity_mwh < 0.0) throw ValidationError("battery capacity must be >= 0");
        if (round_trip_efficiency <= 0.0 || round_trip_efficiency > 1.0)
            throw ValidationError("round-trip efficiency must be in (0,1]");
        if (initial_soc_mwh < 0.0 || initial_soc_mwh > battery_capacity_mwh)
            throw ValidationError("initial SoC must be in [0, capacity]");
    }
};

struct SplitHydro {
    HourlyProfile residual;  // (1 - share) * hydro, stays profile-bound
    double budget_mwh = 0.0;  // share * annual hydro, spendable at any hour
};

/// Separate the dispatchable part of hydro generation: a fraction of the
/// annual energy becomes a free annual budget, the rest keeps the profile.
inline SplitHydro split_hydro(const HourlyProfile& hydro, double share) {
    if (share < 0.0 || share > 1.0) throw ValidationError("hydro dispatch share must be in [0,1]");
    SplitHydro out;
    out.residual = hydro;
    for (double& v : out.residual.values) v *= (1.0 - share);
    out.budget_mwh = share * hydro.annual_sum();
    return out;
}

/// Hourly simulation outcome. `battery_delta` is the cell-side energy change
/// (positive = charging). `used_energy` holds H_i per technology: production
/// minus the pro-rata curtailment attributed to it; the additional PV block
/// appears under "additional_pv".
struct DispatchResult {
    std::vector<double> soc;
    std::vector<double> battery_delta;
    std::vector<double> hydro_dispatched;
    std::vector<double> curtailed;
    std::vector<double> unserved;
    bool feasible = false;

    double hydro_budget_mwh = 0.0;
    double hydro_dispatched_total = 0.0;
    double curtailed_total = 0.0;
    double unserved_total = 0.0;
    std::map<std::string, double> used_energy;
};

struct CurtailmentSummary {
    double curtailed_twh = 0.0;
    double pct_of_demand = 0.0;           // curtailed / demand
    double pct_of_demand_plus_curtailed = 0.0;  // curtailed / (demand + curtailed)
};

/// Annual curtailment of a feasible dispatch, reported against both
/// plausible denominators since "gross demand" is read differently across
/// published figures.
inline CurtailmentSummary curtailment_summary(const DispatchResult& r, double gross_demand_mwh) {
    if (!r.feasible) throw ValidationError("curtailment_summary requires a feasible dispatch");
    if (gross_demand_mwh <= 0.0) throw ValidationError("gross demand must be > 0");
    CurtailmentSummary s;
    s.curtailed_twh = r.curtailed_total / 1e6;
    s.pct_of_demand = 100.0 * r.curtailed_total / gross_demand_mwh;
    s.pct_of_demand_plus_curtailed =
        100.0 * r.curtailed_total / (gross_demand_mwh + r.curtailed_total);
    return s;
}

/// Precomputed hourly-balance simulator for one scenario at a fixed hydro
/// dispatchability share. Distinct (PV power, capacity) evaluations are pure
/// and independent, which is what the exhaustive search exploits; `probe` is
/// the cheap feasibility/cost kernel, `full` additionally records the hourly
/// series and per-technology used energy.
class DispatchEngine {
public:
    DispatchEngine(const ScenarioYear& s, const HourlyProfile& pv_shape, const DispatchConfig& cfg)
        : scenario_(&s), cfg_(cfg) {
        cfg_.validate();
        s.validate();
        n_ = s.horizon();
        if (pv_shape.values.size() != n_)
            throw ValidationError("PV shape length does not match the scenario horizon");
        pv_shape_ = &pv_shape.values;
        demand_ = &s.demand.values;

        nondispatchable_.assign(n_, 0.0);
        priced_weight_.assign(n_, 0.0);
        for (const auto& [name, p] : s.technologies) {
            const double keep = (name == s.hydro_tech) ? 1.0 - cfg_.hydro_dispatch_share : 1.0;
            for (std::size_t t = 0; t < n_; ++t) nondispatchable_[t] += keep * p.values[t];
        }
        if (!s.hydro_tech.empty())
            budget_ = cfg_.hydro_dispatch_share * s.technologies.at(s.hydro_tech).annual_sum();

        // Cost weight of energy-priced production per hour, so a probe can
        // bill used energy without per-technology bookkeeping.
        priced_base_cost_ = 0.0;
        for (const auto& tech : s.plan_costs.technologies) {
            if (tech.capex_priced()) continue;
            const HourlyProfile* p = s.find(tech.name);
            if (!p) continue;
            const double keep = (tech.name == s.hydro_tech) ? 1.0 - cfg_.hydro_dispatch_share : 1.0;
            for (std::size_t t = 0; t < n_; ++t)
                priced_weight_[t] += keep * p->values[t] * *tech.energy_price;
            priced_base_cost_ += keep * p->annual_sum() * *tech.energy_price;
            // the dispatchable part of a priced technology is billed when used
            if (tech.name == s.hydro_tech) priced_budget_price_ = *tech.energy_price;
        }
    }

    std::size_t horizon() const { return n_; }
    double hydro_budget() const { return budget_; }
    const ScenarioYear& scenario() const { return *scenario_; }
    const DispatchConfig& config() const { return cfg_; }

    struct Probe {
        bool feasible = false;
        double unserved_total = 0.0;
        double curtailed_total = 0.0;
        double energy_cost_eur = 0.0;  // bill of usage-priced technologies
    };

    Probe probe(double additional_pv_mw, double capacity_mwh) const {
        check_point(additional_pv_mw, capacity_mwh);
        Probe out;
        out.energy_cost_eur = priced_base_cost_;
        const double rt = cfg_.round_trip_efficiency;
        double soc = std::min(cfg_.initial_soc_mwh, capacity_mwh);
        double budget = budget_;
        double dispatched_cost = 0.0;
        for (std::size_t t = 0; t < n_; ++t) {
            const double prod = nondispatchable_[t] + additional_pv_mw * (*pv_shape_)[t];
            const double balance = prod - (*demand_)[t];
            if (balance >= 0.0) {
                const double take = std::min(balance, (capacity_mwh - soc) / rt);
                soc += take * rt;
                const double curt = balance - take;
                if (curt > 0.0) {
                    out.curtailed_total += curt;
                    if (priced_weight_[t] > 0.0)
                        out.energy_cost_eur -= curt * priced_weight_[t] / prod;
                }
            } else {
                double need = -balance;
                if (cfg_.deficit_policy == DeficitPolicy::hydro_first) {
                    const double h = std::min(need, budget);
                    budget -= h;
                    need -= h;
                    dispatched_cost += h;
                    const double d = std::min(need, soc);
                    soc -= d;
                    need -= d;
                } else {
                    const double d = std::min(need, soc);
                    soc -= d;
                    need -= d;
                    const double h = std::min(need, budget);
                    budget -= h;
                    need -= h;
                    dispatched_cost += h;
                }
                out.unserved_total += need;
            }
        }
        out.energy_cost_eur += dispatched_cost * priced_budget_price_;
        out.feasible = out.unserved_total == 0.0;
        return out;
    }

    DispatchResult full(double additional_pv_mw, double capacity_mwh) const {
        check_point(additional_pv_mw, capacity_mwh);
        DispatchResult r;
        r.soc.assign(n_, 0.0);
        r.battery_delta.assign(n_, 0.0);
        r.hydro_dispatched.assign(n_, 0.0);
        r.curtailed.assign(n_, 0.0);
        r.unserved.assign(n_, 0.0);
        r.hydro_budget_mwh = budget_;

        const double rt = cfg_.round_trip_efficiency;
        double soc = std::min(cfg_.initial_soc_mwh, capacity_mwh);
        double budget = budget_;
        for (std::size_t t = 0; t < n_; ++t) {
            const double prod = nondispatchable_[t] + additional_pv_mw * (*pv_shape_)[t];
            const double balance = prod - (*demand_)[t];
            if (balance >= 0.0) {
                const double take = std::min(balance, (capacity_mwh - soc) / rt);
                soc += take * rt;
                r.battery_delta[t] = take * rt;
                r.curtailed[t] = balance - take;
            } else {
                double need = -balance;
                double h = 0.0, d = 0.0;
                if (cfg_.deficit_policy == DeficitPolicy::hydro_first) {
                    h = std::min(need, budget);
                    budget -= h;
                    need -= h;
                    d = std::min(need, soc);
                    soc -= d;
                    need -= d;
                } else {
                    d = std::min(need, soc);
                    soc -= d;
                    need -= d;
                    h = std::min(need, budget);
                    budget -= h;
                    need -= h;
                }
                r.hydro_dispatched[t] = h;
                r.battery_delta[t] = -d;
                r.unserved[t] = need;
            }
            r.soc[t] = soc;
            r.curtailed_total += r.curtailed[t];
            r.unserved_total += r.unserved[t];
            r.hydro_dispatched_total += r.hydro_dispatched[t];
        }
        r.feasible = r.unserved_total == 0.0;
        attribute_used_energy(additional_pv_mw, r);
        return r;
    }

private:
    void check_point(double pv_mw, double capacity_mwh) const {
        if (pv_mw < 0.0) throw ValidationError("additional PV power must be >= 0");
        if (capacity_mwh < 0.0) throw ValidationError("storage capacity must be >= 0");
    }

    // H_i: curtailment is split pro-rata over each non-dispatchable
    // technology's share of that hour's production.
    void attribute_used_energy(double additional_pv_mw, DispatchResult& r) const {
        std::map<std::string, double> used;
        for (const auto& [name, p] : scenario_->technologies) {
            const double keep =
                (name == scenario_->hydro_tech) ? 1.0 - cfg_.hydro_dispatch_share : 1.0;
            used[name] = keep * p.annual_sum();
        }
        double apv_used = 0.0;
        for (std::size_t t = 0; t < n_; ++t) apv_used += additional_pv_mw * (*pv_shape_)[t];
        for (std::size_t t = 0; t < n_; ++t) {
            if (r.curtailed[t] <= 0.0) continue;
            const double prod = nondispatchable_[t] + additional_pv_mw * (*pv_shape_)[t];
            const double frac = r.curtailed[t] / prod;
            for (const auto& [name, p] : scenario_->technologies) {
                const double keep =
                    (name == scenario_->hydro_tech) ? 1.0 - cfg_.hydro_dispatch_share : 1.0;
                used[name] -= frac * keep * p.values[t];
            }
            apv_used -= frac * additional_pv_mw * (*pv_shape_)[t];
        }
        if (!scenario_->hydro_tech.empty()) used[scenario_->hydro_tech] += r.hydro_dispatched_total;
        used["additional_pv"] = apv_used;
        r.used_energy = std::move(used);
    }

    const ScenarioYear* scenario_;
    DispatchConfig cfg_;
    std::size_t n_ = 0;
    const std::vector<double>* pv_shape_ = nullptr;
    const std::vector<double>* demand_ = nullptr;
    std::vector<double> nondispatchable_;
    std::vector<double> priced_weight_;
    double priced_base_cost_ = 0.0;
    double priced_budget_price_ = 0.0;
    double budget_ = 0.0;
};

/// One-shot convenience wrapper around DispatchEngine.
inline DispatchResult simulate_year(const ScenarioYear& s, double additional_pv_mw,
                                    const HourlyProfile& pv_shape, const DispatchConfig& cfg) {
    return DispatchEngine(s, pv_shape, cfg).full(additional_pv_mw, cfg.battery_capacity_mwh);
}

}  // namespace solstor
