#pragma once

#include <cstdint>
#include <tuple>
#include <vector>

#include "iegrowth/ingest.hpp"

namespace ieg::oracle {

struct SyntheticSpec {
    double lambda = 0.0;
    int base_year = 2000;
    int n_years = 20;
    double noise_sd = 0.0;
    std::uint64_t seed = 0;
};

/// value(y) = exp(lambda * (y - base_year)) * exp(eps_y),
/// eps_y ~ Normal(0, noise_sd^2) via mt19937_64 + Box-Muller so the stream
/// is identical across platforms.
AnnualSeries gen_exponential(const SyntheticSpec& spec);

struct EconomySpec {
    double beta_inv_to_prod = 0.65;
    double beta_prod_to_gdppc = 1.24;
    double lambda_investment = 0.03;
    double population_rate = 0.007;
    int base_year = 2000;
    int n_years = 20;
    double noise_sd = 0.0;
    std::uint64_t seed = 0;
};

/// Builds all seven roles of a synthetic economy in which the chained
/// relationships hold by construction (exactly, when noise_sd is 0).
Dataset gen_chained_economy(const EconomySpec& spec);

/// Writes every series of the dataset as generic year,value CSVs named
/// <role>.csv under dir. Percent-change roles (gdp, productivity) are
/// emitted as year-on-year percent changes of the generated level series.
void write_economy_csvs(const Dataset& dataset, const std::string& dir);

/// Textbook uncentered-summation OLS; the independent cross-check for
/// fit_line. Returns (slope, intercept, r_squared).
std::tuple<double, double, double> ols_reference(
    const std::vector<std::pair<double, double>>& points);

}  // namespace ieg::oracle
