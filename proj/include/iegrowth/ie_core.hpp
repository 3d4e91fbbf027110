#pragma once

#include "iegrowth/series.hpp"

namespace ieg {

// lambda = ln(1 + r). Requires r > -1.
double lambda_from_rate(double rate);

// r = exp(lambda) - 1. Requires finite lambda.
double rate_from_lambda(double lambda);

/// Compounds a percent-change-per-annum series into an index with value 1.0
/// at base_year. Years after the base multiply forward by (1 + pct/100);
/// years before it divide backwards by the same factor. The base year itself
/// may sit one year before the first observation.
AnnualSeries cumulate_growth(const AnnualSeries& series, int base_year);

/// point(y) = ln(value(y) / value(base_year)); the base-year point is exactly 0.
IESeries ie_transform(const AnnualSeries& series, int base_year);

/// Divides every value by value(base_year); result unit is Index.
AnnualSeries rebase(const AnnualSeries& series, int base_year);

}  // namespace ieg
