#pragma once

#include <vector>

#include "iegrowth/regress.hpp"

namespace ieg {

/// Investment -> productivity -> GDP-per-capita elasticities, one phase.
struct ElasticityChain {
    Phase phase;
    ElasticityFit inv_to_prod;
    ElasticityFit prod_to_gdppc;
};

struct PredictionResult {
    AnnualSeries predicted_gdp;
    AnnualSeries observed_gdp;
    std::vector<int> evaluation_years;
    double accuracy = 0.0;
    double comparison_slope = 0.0;       // observed regressed on predicted
    double reverse_slope = 0.0;          // predicted regressed on observed
};

ElasticityChain build_chain(const IESeries& ie_investment, const IESeries& ie_productivity,
                            const IESeries& ie_gdppc, const Phase& phase);

/// Composes the two fitted lines: pred(y) = a2 + b2*(a1 + b1*ie_inv(y)).
IESeries predict_ie_gdppc(const ElasticityChain& chain, const IESeries& ie_investment);

/// GDP(y) = gdp_base_value * exp(pred_ie_gdppc(y)) * population(y)/population(base_year).
AnnualSeries predict_gdp(const IESeries& pred_ie_gdppc, const AnnualSeries& population,
                         double gdp_base_value, int base_year);

/// Zero-intercept slope of observed on predicted over the union of phase
/// years, folded to an accuracy score min(s, 1/s).
PredictionResult accuracy_score(const AnnualSeries& observed, const AnnualSeries& predicted,
                                const std::vector<Phase>& phases);

}  // namespace ieg
