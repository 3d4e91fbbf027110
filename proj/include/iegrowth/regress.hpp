#pragma once

#include <utility>
#include <vector>

#include "iegrowth/series.hpp"

namespace ieg {

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
    int n = 0;
    Phase phase;
};

/// Fit of IE against years since base year; lambda is the slope.
struct GrowthFit {
    LinearFit base;
    double lambda = 0.0;
    double annual_rate = 0.0;
};

/// Fit of one IE series against another over a phase window.
struct ElasticityFit {
    LinearFit base;
    std::string response_name;
    std::string predictor_name;
};

/// Ordinary least squares with intercept, centered accumulation.
/// Requires n >= 3 points and at least two distinct x values.
LinearFit fit_line(const std::vector<std::pair<double, double>>& points);

/// Zero-intercept OLS: slope = sum(x*y) / sum(x^2).
double fit_through_origin(const std::vector<std::pair<double, double>>& points);

GrowthFit fit_growth(const IESeries& ie, const Phase& phase);

/// OLS of response IE on predictor IE over the years both series cover
/// inside the phase.
ElasticityFit fit_elasticity(const IESeries& response, const IESeries& predictor,
                             const Phase& phase);

}  // namespace ieg
