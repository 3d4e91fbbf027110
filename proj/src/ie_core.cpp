#include "iegrowth/ie_core.hpp"

#include <cmath>

namespace ieg {

const char* unit_name(Unit u) {
    switch (u) {
        case Unit::Index: return "index";
        case Unit::PercentChangePerAnnum: return "percent_change_per_annum";
        case Unit::CurrencyLevel: return "currency_level";
        case Unit::PopulationCount: return "population_count";
    }
    return "index";
}

Unit unit_from_name(const std::string& name) {
    if (name == "index") return Unit::Index;
    if (name == "percent_change_per_annum") return Unit::PercentChangePerAnnum;
    if (name == "currency_level") return Unit::CurrencyLevel;
    if (name == "population_count") return Unit::PopulationCount;
    throw Error(ErrorKind::Config, "unknown unit: " + name);
}

void AnnualSeries::insert(int year, double value) {
    if (!std::isfinite(value)) {
        throw Error(ErrorKind::Domain, name_ + ": non-finite value for year " + std::to_string(year));
    }
    if (unit_ == Unit::PercentChangePerAnnum) {
        if (value <= -100.0) {
            throw Error(ErrorKind::Domain,
                        name_ + ": percent change <= -100 at year " + std::to_string(year));
        }
    } else if (value <= 0.0) {
        throw Error(ErrorKind::Domain,
                    name_ + ": non-positive level at year " + std::to_string(year));
    }
    auto [it, inserted] = values_.emplace(year, value);
    (void)it;
    if (!inserted) {
        throw Error(ErrorKind::Duplicate, name_ + ": duplicate year " + std::to_string(year));
    }
}

void AnnualSeries::insert_unchecked(int year, double value) {
    if (!std::isfinite(value)) {
        throw Error(ErrorKind::Domain, name_ + ": non-finite value for year " + std::to_string(year));
    }
    if (!values_.emplace(year, value).second) {
        throw Error(ErrorKind::Duplicate, name_ + ": duplicate year " + std::to_string(year));
    }
}

double AnnualSeries::at(int year) const {
    auto it = values_.find(year);
    if (it == values_.end()) {
        throw Error(ErrorKind::Gap, name_ + ": missing year " + std::to_string(year));
    }
    return it->second;
}

int AnnualSeries::first_year() const {
    if (values_.empty()) throw Error(ErrorKind::Argument, name_ + ": empty series");
    return values_.begin()->first;
}

int AnnualSeries::last_year() const {
    if (values_.empty()) throw Error(ErrorKind::Argument, name_ + ": empty series");
    return values_.rbegin()->first;
}

void IESeries::insert(int year, double value) {
    if (!std::isfinite(value)) {
        throw Error(ErrorKind::Domain, name_ + ": non-finite IE value at year " + std::to_string(year));
    }
    if (!points_.emplace(year, value).second) {
        throw Error(ErrorKind::Duplicate, name_ + ": duplicate year " + std::to_string(year));
    }
}

double IESeries::at(int year) const {
    auto it = points_.find(year);
    if (it == points_.end()) {
        throw Error(ErrorKind::Gap, name_ + ": missing year " + std::to_string(year));
    }
    return it->second;
}

double lambda_from_rate(double rate) {
    if (!(rate > -1.0)) {
        throw Error(ErrorKind::Domain, "growth rate must exceed -1");
    }
    return std::log1p(rate);
}

double rate_from_lambda(double lambda) {
    if (!std::isfinite(lambda)) {
        throw Error(ErrorKind::Domain, "rate constant must be finite");
    }
    return std::expm1(lambda);
}

AnnualSeries cumulate_growth(const AnnualSeries& series, int base_year) {
    if (series.unit() != Unit::PercentChangePerAnnum) {
        throw Error(ErrorKind::Argument, series.name() + ": cumulate_growth requires a percent-change series");
    }
    if (series.empty()) {
        throw Error(ErrorKind::Argument, series.name() + ": empty series");
    }
    const int first = series.first_year();
    const int last = series.last_year();
    if (base_year < first - 1 || base_year > last) {
        throw Error(ErrorKind::Argument,
                    series.name() + ": base year " + std::to_string(base_year) +
                        " outside series range");
    }
    // No gaps allowed: each step needs the year-on-year change.
    for (int y = first; y <= last; ++y) {
        if (!series.contains(y)) {
            throw Error(ErrorKind::Gap, series.name() + ": missing year " + std::to_string(y));
        }
    }

    AnnualSeries out(series.name(), Unit::Index);
    out.insert(base_year, 1.0);
    double level = 1.0;
    for (int y = base_year + 1; y <= last; ++y) {
        level *= 1.0 + series.at(y) / 100.0;
        out.insert(y, level);
    }
    level = 1.0;
    for (int y = base_year; y > first - 1; --y) {
        level /= 1.0 + series.at(y) / 100.0;
        out.insert(y - 1, level);
    }
    return out;
}

IESeries ie_transform(const AnnualSeries& series, int base_year) {
    if (series.unit() == Unit::PercentChangePerAnnum) {
        throw Error(ErrorKind::Argument,
                    series.name() + ": IE transform requires a level series (cumulate first)");
    }
    if (!series.contains(base_year)) {
        throw Error(ErrorKind::Argument,
                    series.name() + ": base year " + std::to_string(base_year) + " not in series");
    }
    const double base = series.at(base_year);
    IESeries out(series.name(), base_year);
    for (const auto& [year, value] : series.observations()) {
        out.insert(year, year == base_year ? 0.0 : std::log(value / base));
    }
    return out;
}

AnnualSeries rebase(const AnnualSeries& series, int base_year) {
    if (series.unit() == Unit::PercentChangePerAnnum) {
        throw Error(ErrorKind::Argument, series.name() + ": cannot rebase a percent-change series");
    }
    if (!series.contains(base_year)) {
        throw Error(ErrorKind::Argument,
                    series.name() + ": base year " + std::to_string(base_year) + " not in series");
    }
    const double base = series.at(base_year);
    AnnualSeries out(series.name(), Unit::Index);
    for (const auto& [year, value] : series.observations()) {
        out.insert(year, value / base);
    }
    return out;
}

}  // namespace ieg
