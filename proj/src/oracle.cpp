#include "iegrowth/oracle.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>

#include "iegrowth/ie_core.hpp"

namespace ieg::oracle {

namespace {

class GaussianStream {
public:
    explicit GaussianStream(std::uint64_t seed) : rng_(seed) {}

    // Box-Muller; std::normal_distribution streams differ between stdlibs.
    double next(double sd) {
        if (sd == 0.0) return 0.0;
        if (has_spare_) {
            has_spare_ = false;
            return spare_ * sd;
        }
        double u1 = 0.0;
        do {
            u1 = uniform();
        } while (u1 <= 0.0);
        const double u2 = uniform();
        const double mag = std::sqrt(-2.0 * std::log(u1));
        spare_ = mag * std::sin(2.0 * M_PI * u2);
        has_spare_ = true;
        return mag * std::cos(2.0 * M_PI * u2) * sd;
    }

private:
    double uniform() {
        return static_cast<double>(rng_() >> 11) * 0x1.0p-53;
    }

    std::mt19937_64 rng_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

AnnualSeries levels_from_ie(const std::string& name, Unit unit, int base_year,
                            const std::vector<double>& ie, double base_level) {
    AnnualSeries out(name, unit);
    for (std::size_t t = 0; t < ie.size(); ++t) {
        out.insert(base_year + static_cast<int>(t), base_level * std::exp(ie[t]));
    }
    return out;
}

}  // namespace

AnnualSeries gen_exponential(const SyntheticSpec& spec) {
    if (spec.n_years < 3) {
        throw Error(ErrorKind::Argument, "synthetic series needs at least 3 years");
    }
    GaussianStream noise(spec.seed);
    AnnualSeries out("synthetic", Unit::Index);
    for (int t = 0; t < spec.n_years; ++t) {
        const double eps = noise.next(spec.noise_sd);
        out.insert(spec.base_year + t, std::exp(spec.lambda * t + eps));
    }
    return out;
}

Dataset gen_chained_economy(const EconomySpec& spec) {
    if (spec.n_years < 3) {
        throw Error(ErrorKind::Argument, "synthetic economy needs at least 3 years");
    }
    GaussianStream noise(spec.seed);
    const int n = spec.n_years;

    std::vector<double> inv_ie(n), prod_ie(n), gdppc_ie(n), wages_ie(n);
    for (int t = 0; t < n; ++t) {
        const double eps = t == 0 ? 0.0 : noise.next(spec.noise_sd);
        inv_ie[t] = spec.lambda_investment * t + eps;
        prod_ie[t] = spec.beta_inv_to_prod * inv_ie[t];
        gdppc_ie[t] = spec.beta_prod_to_gdppc * prod_ie[t];
        wages_ie[t] = prod_ie[t];
    }

    Dataset dataset;
    dataset.coverage = {spec.base_year, spec.base_year + n - 1};

    AnnualSeries population("population", Unit::PopulationCount);
    std::vector<double> gdp_ie(n);
    for (int t = 0; t < n; ++t) {
        population.insert(spec.base_year + t, 1000.0 * std::exp(spec.population_rate * t));
        gdp_ie[t] = gdppc_ie[t] + spec.population_rate * t;
    }

    AnnualSeries cpi("cpi", Unit::Index);
    for (int t = 0; t < n; ++t) cpi.insert(spec.base_year + t, 100.0 * std::exp(0.02 * t));

    dataset.entries.push_back({Role::Gdp, levels_from_ie("gdp", Unit::Index, spec.base_year, gdp_ie, 1.0)});
    dataset.entries.push_back({Role::Cpi, std::move(cpi)});
    dataset.entries.push_back(
        {Role::GdpPerCapita, levels_from_ie("gdp_per_capita", Unit::Index, spec.base_year, gdppc_ie, 1.0)});
    dataset.entries.push_back(
        {Role::Productivity, levels_from_ie("productivity", Unit::Index, spec.base_year, prod_ie, 1.0)});
    dataset.entries.push_back({Role::Wages, levels_from_ie("wages", Unit::Index, spec.base_year, wages_ie, 1.0)});
    dataset.entries.push_back(
        {Role::Investment, levels_from_ie("investment", Unit::Index, spec.base_year, inv_ie, 1.0)});
    dataset.entries.push_back({Role::Population, std::move(population)});
    return dataset;
}

void write_economy_csvs(const Dataset& dataset, const std::string& dir) {
    std::filesystem::create_directories(dir);
    for (const auto& entry : dataset.entries) {
        const bool as_pct = entry.role == Role::Gdp || entry.role == Role::Productivity;
        std::ofstream out(std::filesystem::path(dir) / (std::string(role_name(entry.role)) + ".csv"));
        if (!out) {
            throw Error(ErrorKind::Io, std::string("cannot write CSV for ") + role_name(entry.role));
        }
        if (as_pct) {
            AnnualSeries pct(entry.series.name(), Unit::PercentChangePerAnnum);
            double prev = 0.0;
            bool have_prev = false;
            for (const auto& [year, value] : entry.series.observations()) {
                if (have_prev) pct.insert(year, 100.0 * (value / prev - 1.0));
                prev = value;
                have_prev = true;
            }
            emit_generic(pct, out);
        } else {
            emit_generic(entry.series, out);
        }
    }
}

std::tuple<double, double, double> ols_reference(
    const std::vector<std::pair<double, double>>& points) {
    const double n = static_cast<double>(points.size());
    if (points.size() < 3) {
        throw Error(ErrorKind::Fit, "reference OLS needs at least 3 points");
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    for (const auto& [x, y] : points) {
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        syy += y * y;
    }
    const double denom = n * sxx - sx * sx;
    if (denom == 0.0) {
        throw Error(ErrorKind::Fit, "reference OLS: degenerate x");
    }
    const double slope = (n * sxy - sx * sy) / denom;
    const double intercept = (sy - slope * sx) / n;
    const double ss_tot = syy - sy * sy / n;
    double ss_res = 0.0;
    for (const auto& [x, y] : points) {
        const double r = y - (intercept + slope * x);
        ss_res += r * r;
    }
    const double r2 = ss_tot == 0.0 ? (ss_res == 0.0 ? 1.0 : 0.0) : 1.0 - ss_res / ss_tot;
    return {slope, intercept, r2};
}

}  // namespace ieg::oracle
