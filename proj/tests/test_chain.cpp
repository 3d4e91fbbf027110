#include <cmath>
#include <random>

#include <doctest.h>

#include "iegrowth/chain.hpp"
#include "iegrowth/ie_core.hpp"

using namespace ieg;

namespace {

// Investment IE with enough wiggle that the fits are well conditioned.
IESeries wiggly_investment(int base_year, int n_years) {
    IESeries ie("investment", base_year);
    for (int t = 0; t < n_years; ++t) {
        ie.insert(base_year + t, 0.03 * t + 0.004 * ((t * 7) % 5 - 2) * (t > 0 ? 1 : 0));
    }
    return ie;
}

IESeries scaled(const IESeries& src, const std::string& name, double factor) {
    IESeries out(name, src.base_year());
    for (const auto& [y, v] : src.points()) out.insert(y, factor * v);
    return out;
}

}  // namespace

TEST_CASE("build_chain recovers planted slopes exactly") {
    const auto inv = wiggly_investment(2000, 20);
    const auto prod = scaled(inv, "productivity", 0.65);
    const auto gdppc = scaled(prod, "gdp_per_capita", 1.24);
    const Phase p1{"P1", 2000, 2007};

    const auto chain = build_chain(inv, prod, gdppc, p1);
    CHECK(chain.inv_to_prod.base.slope == doctest::Approx(0.65).epsilon(1e-12));
    CHECK(chain.prod_to_gdppc.base.slope == doctest::Approx(1.24).epsilon(1e-12));
    CHECK(chain.inv_to_prod.base.r_squared == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("predict_ie_gdppc with identity chain reproduces the input") {
    const auto inv = wiggly_investment(2000, 20);
    const auto prod = scaled(inv, "productivity", 1.0);
    const auto gdppc = scaled(prod, "gdp_per_capita", 1.0);
    const auto chain = build_chain(inv, prod, gdppc, Phase{"P1", 2000, 2007});
    const auto pred = predict_ie_gdppc(chain, inv);
    for (const auto& [y, v] : inv.points()) {
        CHECK(pred.at(y) == doctest::Approx(v).scale(1).epsilon(1e-12));
    }
}

TEST_CASE("predict_ie_gdppc reproduces exact training data") {
    const auto inv = wiggly_investment(2000, 20);
    const auto prod = scaled(inv, "productivity", 0.65);
    const auto gdppc = scaled(prod, "gdp_per_capita", 1.24);
    const auto chain = build_chain(inv, prod, gdppc, Phase{"P1", 2000, 2007});
    const auto pred = predict_ie_gdppc(chain, inv);
    for (const auto& [y, v] : gdppc.points()) {
        CHECK(pred.at(y) == doctest::Approx(v).scale(1).epsilon(1e-9));
    }
}

TEST_CASE("predict_ie_gdppc hand-computed composition") {
    // Noiseless b1=0.65, b2=1.24, ie_inv = 0.03 t.
    IESeries inv("investment", 2000);
    for (int t = 0; t < 8; ++t) inv.insert(2000 + t, 0.03 * t);
    const auto prod = scaled(inv, "productivity", 0.65);
    const auto gdppc = scaled(prod, "gdp_per_capita", 1.24);
    const auto chain = build_chain(inv, prod, gdppc, Phase{"P1", 2000, 2007});
    const auto pred = predict_ie_gdppc(chain, inv);
    CHECK(pred.at(2007) == doctest::Approx(0.65 * 1.24 * 0.03 * 7).epsilon(1e-12));
}

TEST_CASE("predict_gdp scales by population and the base GDP value") {
    IESeries pred_ie("pred", 2000);
    AnnualSeries constant_pop("population", Unit::PopulationCount);
    AnnualSeries doubling_pop("population", Unit::PopulationCount);
    for (int t = 0; t < 11; ++t) {
        pred_ie.insert(2000 + t, 0.0);
        constant_pop.insert(2000 + t, 5000.0);
        doubling_pop.insert(2000 + t, t < 5 ? 5000.0 : 10000.0);
    }

    const auto flat = predict_gdp(pred_ie, constant_pop, 100.0, 2000);
    for (const auto& [y, v] : flat.observations()) CHECK(v == doctest::Approx(100.0).epsilon(1e-15));

    const auto doubled = predict_gdp(pred_ie, doubling_pop, 100.0, 2000);
    CHECK(doubled.at(2004) == doctest::Approx(100.0).epsilon(1e-15));
    CHECK(doubled.at(2005) == doctest::Approx(200.0).epsilon(1e-15));

    IESeries growing("pred", 2000);
    for (int t = 0; t < 11; ++t) growing.insert(2000 + t, 0.02 * t);
    const auto grown = predict_gdp(growing, constant_pop, 100.0, 2000);
    CHECK(grown.at(2010) == doctest::Approx(100.0 * std::exp(0.2)).epsilon(1e-12));
    CHECK(grown.at(2000) == doctest::Approx(100.0).epsilon(1e-15));
}

TEST_CASE("predict_gdp error paths") {
    IESeries pred_ie("pred", 2000);
    for (int t = 0; t < 5; ++t) pred_ie.insert(2000 + t, 0.0);
    AnnualSeries pop("population", Unit::PopulationCount);
    pop.insert(2000, 100.0);
    CHECK_THROWS_AS(predict_gdp(pred_ie, pop, 100.0, 2000), Error);
    CHECK_THROWS_AS(predict_gdp(pred_ie, pop, -1.0, 2000), Error);
}

TEST_CASE("accuracy_score on identical series is 1") {
    AnnualSeries obs("gdp", Unit::Index);
    for (int t = 0; t < 20; ++t) obs.insert(2000 + t, std::exp(0.02 * t));
    const std::vector<Phase> phases{{"P1", 2000, 2007}, {"P3", 2014, 2019}};
    const auto result = accuracy_score(obs, obs, phases);
    CHECK(result.comparison_slope == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(result.accuracy == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(result.evaluation_years.size() == 14);
}

TEST_CASE("accuracy_score matches the folded-slope definition") {
    AnnualSeries pred("pred", Unit::Index), obs("obs", Unit::Index);
    for (int t = 0; t < 20; ++t) {
        const double v = std::exp(0.02 * t);
        pred.insert(2000 + t, v);
        obs.insert(2000 + t, 1.0023 * v);
    }
    const std::vector<Phase> phases{{"P1", 2000, 2007}, {"P3", 2014, 2019}};
    const auto result = accuracy_score(obs, pred, phases);
    CHECK(result.comparison_slope == doctest::Approx(1.0023).epsilon(1e-12));
    CHECK(result.accuracy == doctest::Approx(1.0 / 1.0023).epsilon(1e-12));
    CHECK(result.accuracy <= 1.0);
}

TEST_CASE("accuracy_score is symmetric under common rescaling") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> jitter(0.99, 1.01);
    AnnualSeries pred("pred", Unit::Index), obs("obs", Unit::Index);
    for (int t = 0; t < 20; ++t) {
        const double v = std::exp(0.02 * t);
        pred.insert(2000 + t, v);
        obs.insert(2000 + t, v * jitter(rng));
    }
    const std::vector<Phase> phases{{"P1", 2000, 2007}, {"P3", 2014, 2019}};
    const auto base = accuracy_score(obs, pred, phases);

    AnnualSeries pred_scaled("pred", Unit::Index), obs_scaled("obs", Unit::Index);
    for (const auto& [y, v] : pred.observations()) pred_scaled.insert(y, 3.7 * v);
    for (const auto& [y, v] : obs.observations()) obs_scaled.insert(y, 3.7 * v);
    const auto rescaled = accuracy_score(obs_scaled, pred_scaled, phases);
    CHECK(rescaled.accuracy == doctest::Approx(base.accuracy).epsilon(1e-12));
    CHECK(base.accuracy <= 1.0);
}

TEST_CASE("end-to-end chain identity on exact linear maps") {
    const auto inv = wiggly_investment(2000, 20);
    const auto prod = scaled(inv, "productivity", 0.65);
    const auto gdppc = scaled(prod, "gdp_per_capita", 1.24);
    AnnualSeries pop("population", Unit::PopulationCount);
    for (int t = 0; t < 20; ++t) pop.insert(2000 + t, 59000.0 * std::exp(0.006 * t));

    AnnualSeries observed("gdp", Unit::CurrencyLevel);
    const double base_gdp = 1.6e6;
    for (const auto& [y, v] : gdppc.points()) {
        observed.insert(y, base_gdp * std::exp(v) * pop.at(y) / pop.at(2000));
    }

    const auto chain = build_chain(inv, prod, gdppc, Phase{"P1", 2000, 2007});
    const auto pred_ie = predict_ie_gdppc(chain, inv);
    const auto predicted = predict_gdp(pred_ie, pop, base_gdp, 2000);
    for (const auto& [y, v] : observed.observations()) {
        CHECK(std::abs(predicted.at(y) / v - 1.0) < 1e-9);
    }
    const std::vector<Phase> phases{{"P1", 2000, 2007}, {"P3", 2014, 2019}};
    const auto result = accuracy_score(observed, predicted, phases);
    CHECK(result.accuracy == doctest::Approx(1.0).epsilon(1e-9));
}
