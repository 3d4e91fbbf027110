#include <cmath>
#include <random>

#include <doctest.h>

#include "iegrowth/ie_core.hpp"

using namespace ieg;

namespace {

AnnualSeries pct_series(std::initializer_list<std::pair<int, double>> values) {
    AnnualSeries s("pct", Unit::PercentChangePerAnnum);
    for (const auto& [y, v] : values) s.insert(y, v);
    return s;
}

AnnualSeries level_series(std::initializer_list<std::pair<int, double>> values) {
    AnnualSeries s("level", Unit::Index);
    for (const auto& [y, v] : values) s.insert(y, v);
    return s;
}

}  // namespace

TEST_CASE("cumulate_growth compounds percent changes") {
    const auto idx = cumulate_growth(pct_series({{2001, 2.0}, {2002, 2.0}}), 2000);
    CHECK(idx.at(2000) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(idx.at(2001) == doctest::Approx(1.02).epsilon(1e-15));
    CHECK(idx.at(2002) == doctest::Approx(1.0404).epsilon(1e-15));
    CHECK(idx.unit() == Unit::Index);
}

TEST_CASE("cumulate_growth zero growth") {
    const auto idx = cumulate_growth(pct_series({{2001, 0.0}}), 2000);
    CHECK(idx.at(2000) == 1.0);
    CHECK(idx.at(2001) == 1.0);
}

TEST_CASE("cumulate_growth of constant-lambda percent changes hits exp(lambda*n)") {
    // Expected value frozen from the direct product of the 19 equal factors.
    const double pct = 100.0 * (std::exp(0.021) - 1.0);
    double product = 1.0;
    for (int i = 0; i < 19; ++i) product *= 1.0 + pct / 100.0;
    CHECK(product == doctest::Approx(std::exp(0.021 * 19)).epsilon(1e-12));

    AnnualSeries s("pct", Unit::PercentChangePerAnnum);
    for (int y = 2001; y <= 2019; ++y) s.insert(y, pct);
    const auto idx = cumulate_growth(s, 2000);
    CHECK(idx.at(2019) == doctest::Approx(std::exp(0.021 * 19)).epsilon(1e-12));
}

TEST_CASE("cumulate_growth extends backwards before the base year") {
    const auto idx = cumulate_growth(pct_series({{2001, 2.0}, {2002, 4.0}}), 2002);
    CHECK(idx.at(2002) == 1.0);
    CHECK(idx.at(2001) == doctest::Approx(1.0 / 1.04).epsilon(1e-15));
    CHECK(idx.at(2000) == doctest::Approx(1.0 / (1.04 * 1.02)).epsilon(1e-15));
}

TEST_CASE("cumulate_growth rejects gaps and out-of-range base") {
    AnnualSeries gappy("pct", Unit::PercentChangePerAnnum);
    gappy.insert(2001, 1.0);
    gappy.insert(2003, 1.0);
    CHECK_THROWS_AS(cumulate_growth(gappy, 2000), Error);
    CHECK_THROWS_AS(cumulate_growth(pct_series({{2001, 1.0}}), 1990), Error);
}

TEST_CASE("percent changes at or below -100 are rejected at construction") {
    AnnualSeries s("pct", Unit::PercentChangePerAnnum);
    CHECK_THROWS_AS(s.insert(2001, -100.0), Error);
    CHECK_THROWS_AS(s.insert(2001, -150.0), Error);
}

TEST_CASE("ie_transform of a constant series is zero everywhere") {
    const auto ie = ie_transform(level_series({{2000, 5}, {2001, 5}, {2002, 5}}), 2000);
    for (const auto& [y, v] : ie.points()) CHECK(v == 0.0);
}

TEST_CASE("ie_transform maps a pure exponential to the line lambda*t") {
    AnnualSeries s("exp", Unit::Index);
    for (int y = 2000; y <= 2019; ++y) s.insert(y, std::exp(0.021 * (y - 2000)));
    const auto ie = ie_transform(s, 2000);
    for (int y = 2000; y <= 2019; ++y) {
        CHECK(ie.at(y) == doctest::Approx(0.021 * (y - 2000)).epsilon(1e-12));
    }
    CHECK(ie.at(2000) == 0.0);  // bit-exact
}

TEST_CASE("ie_transform is scale invariant") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> value(0.1, 100.0);
    std::uniform_real_distribution<double> scale(1e-6, 1e6);
    for (int trial = 0; trial < 50; ++trial) {
        AnnualSeries a("a", Unit::Index), b("b", Unit::Index);
        const double c = scale(rng);
        for (int y = 2000; y < 2010; ++y) {
            const double v = value(rng);
            a.insert(y, v);
            b.insert(y, c * v);
        }
        const auto ia = ie_transform(a, 2003);
        const auto ib = ie_transform(b, 2003);
        for (int y = 2000; y < 2010; ++y) {
            CHECK(ia.at(y) == doctest::Approx(ib.at(y)).epsilon(1e-12));
        }
        CHECK(ia.at(2003) == 0.0);
        CHECK(ib.at(2003) == 0.0);
    }
}

TEST_CASE("ie_transform error paths") {
    CHECK_THROWS_AS(ie_transform(level_series({{2000, 1.0}}), 1999), Error);
    AnnualSeries s("level", Unit::Index);
    CHECK_THROWS_AS(s.insert(2000, -1.0), Error);
    CHECK_THROWS_AS(ie_transform(pct_series({{2001, 1.0}}), 2001), Error);
}

TEST_CASE("lambda and rate conversions") {
    CHECK(lambda_from_rate(0.0) == 0.0);
    CHECK(lambda_from_rate(0.021) == doctest::Approx(std::log(1.021)).epsilon(1e-15));
    CHECK(rate_from_lambda(0.0) == 0.0);
    CHECK(rate_from_lambda(std::log(2.0)) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(rate_from_lambda(0.0208) == doctest::Approx(std::exp(0.0208) - 1.0).epsilon(1e-13));
    CHECK_THROWS_AS(lambda_from_rate(-1.0), Error);
    CHECK_THROWS_AS(lambda_from_rate(-1.5), Error);
    CHECK_THROWS_AS(rate_from_lambda(std::numeric_limits<double>::infinity()), Error);
}

TEST_CASE("lambda<->rate round trip across (-0.9, 2.0)") {
    for (double r = -0.9 + 1e-6; r < 2.0; r += 0.0137) {
        CHECK(std::abs(rate_from_lambda(lambda_from_rate(r)) - r) < 1e-12);
    }
    for (double r : {-0.5, 0.0, 0.1, 1.0}) {
        CHECK(std::abs(rate_from_lambda(lambda_from_rate(r)) - r) < 1e-12);
    }
}

TEST_CASE("rebase divides by the base-year value") {
    const auto r = rebase(level_series({{2000, 4}, {2001, 8}}), 2000);
    CHECK(r.at(2000) == 1.0);
    CHECK(r.at(2001) == 2.0);
    CHECK(r.unit() == Unit::Index);
}

TEST_CASE("rebase is idempotent and commutes with ie_transform") {
    const auto s = level_series({{2000, 3.5}, {2001, 4.25}, {2002, 2.125}});
    const auto once = rebase(s, 2000);
    const auto twice = rebase(once, 2000);
    for (const auto& [y, v] : once.observations()) CHECK(twice.at(y) == v);

    const auto direct = ie_transform(s, 2000);
    const auto via_rebase = ie_transform(once, 2000);
    for (const auto& [y, v] : direct.points()) {
        CHECK(via_rebase.at(y) == doctest::Approx(v).epsilon(1e-12));
    }
}

TEST_CASE("cumulate then transform of a constant-percent series is collinear") {
    AnnualSeries s("pct", Unit::PercentChangePerAnnum);
    for (int y = 2001; y <= 2015; ++y) s.insert(y, 3.0);
    const auto ie = ie_transform(cumulate_growth(s, 2000), 2000);
    const double step = std::log(1.03);
    for (int y = 2000; y <= 2015; ++y) {
        CHECK(ie.at(y) == doctest::Approx(step * (y - 2000)).epsilon(1e-12));
    }
}
