#include "iegrowth/chain.hpp"

#include <algorithm>
#include <cmath>

namespace ieg {

ElasticityChain build_chain(const IESeries& ie_investment, const IESeries& ie_productivity,
                            const IESeries& ie_gdppc, const Phase& phase) {
    ElasticityChain chain;
    chain.phase = phase;
    chain.inv_to_prod = fit_elasticity(ie_productivity, ie_investment, phase);
    chain.prod_to_gdppc = fit_elasticity(ie_gdppc, ie_productivity, phase);
    return chain;
}

IESeries predict_ie_gdppc(const ElasticityChain& chain, const IESeries& ie_investment) {
    const double b1 = chain.inv_to_prod.base.slope;
    const double a1 = chain.inv_to_prod.base.intercept;
    const double b2 = chain.prod_to_gdppc.base.slope;
    const double a2 = chain.prod_to_gdppc.base.intercept;

    IESeries out("predicted_" + chain.prod_to_gdppc.response_name, ie_investment.base_year());
    for (const auto& [year, inv] : ie_investment.points()) {
        out.insert(year, a2 + b2 * (a1 + b1 * inv));
    }
    return out;
}

AnnualSeries predict_gdp(const IESeries& pred_ie_gdppc, const AnnualSeries& population,
                         double gdp_base_value, int base_year) {
    if (!(gdp_base_value > 0.0)) {
        throw Error(ErrorKind::Domain, "base-year GDP must be positive");
    }
    const double pop_base = population.at(base_year);
    AnnualSeries out("predicted_gdp", population.unit() == Unit::PopulationCount
                                          ? Unit::CurrencyLevel
                                          : Unit::Index);
    for (const auto& [year, ie] : pred_ie_gdppc.points()) {
        out.insert(year, gdp_base_value * std::exp(ie) * population.at(year) / pop_base);
    }
    return out;
}

PredictionResult accuracy_score(const AnnualSeries& observed, const AnnualSeries& predicted,
                                const std::vector<Phase>& phases) {
    std::vector<std::pair<double, double>> pts;  // (predicted, observed)
    std::vector<int> years;
    for (const auto& [year, pred] : predicted.observations()) {
        if (!observed.contains(year)) continue;
        const bool in_phase = std::any_of(phases.begin(), phases.end(),
                                          [year](const Phase& p) { return p.contains(year); });
        if (!in_phase) continue;
        pts.emplace_back(pred, observed.at(year));
        years.push_back(year);
    }
    if (pts.size() < 3) {
        throw Error(ErrorKind::Fit, "accuracy needs at least 3 common years inside the phases, got " +
                                        std::to_string(pts.size()));
    }

    PredictionResult result;
    result.predicted_gdp = predicted;
    result.observed_gdp = observed;
    result.evaluation_years = std::move(years);
    result.comparison_slope = fit_through_origin(pts);

    std::vector<std::pair<double, double>> swapped;
    swapped.reserve(pts.size());
    for (const auto& [p, o] : pts) swapped.emplace_back(o, p);
    result.reverse_slope = fit_through_origin(swapped);

    const double s = result.comparison_slope;
    result.accuracy = s >= 1.0 ? 1.0 / s : s;
    return result;
}

}  // namespace ieg
