#pragma once

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

namespace ieg {

enum class Unit {
    Index,
    PercentChangePerAnnum,
    CurrencyLevel,
    PopulationCount,
};

enum class ErrorKind {
    Argument,
    Domain,
    Parse,
    Duplicate,
    Gap,
    Schema,
    Fit,
    Config,
    Io,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string message, int line = 0, int column = 0)
        : std::runtime_error(std::move(message)), kind_(kind), line_(line), column_(column) {}

    ErrorKind kind() const noexcept { return kind_; }
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    ErrorKind kind_;
    int line_;
    int column_;
};

const char* unit_name(Unit u);
Unit unit_from_name(const std::string& name);

/// Annual observations keyed by Gregorian year. Level units require strictly
/// positive values; percent-change values must exceed -100.
class AnnualSeries {
public:
    AnnualSeries() = default;
    AnnualSeries(std::string name, Unit unit) : name_(std::move(name)), unit_(unit) {}

    const std::string& name() const noexcept { return name_; }
    Unit unit() const noexcept { return unit_; }
    void set_name(std::string n) { name_ = std::move(n); }
    void set_unit(Unit u) { unit_ = u; }

    // Inserts an observation, enforcing the unit's value invariant.
    void insert(int year, double value);
    // Parser path: values of not-yet-assigned unit; checks finiteness and
    // duplicates only.
    void insert_unchecked(int year, double value);
    bool contains(int year) const { return values_.count(year) != 0; }
    double at(int year) const;
    std::size_t size() const noexcept { return values_.size(); }
    bool empty() const noexcept { return values_.empty(); }
    int first_year() const;
    int last_year() const;

    const std::map<int, double>& observations() const noexcept { return values_; }

private:
    std::string name_;
    Unit unit_ = Unit::Index;
    std::map<int, double> values_;
};

/// Natural-log series relative to a base year; the base-year point is exactly 0.
class IESeries {
public:
    IESeries() = default;
    IESeries(std::string name, int base_year) : name_(std::move(name)), base_year_(base_year) {}

    const std::string& name() const noexcept { return name_; }
    int base_year() const noexcept { return base_year_; }

    void insert(int year, double value);
    bool contains(int year) const { return points_.count(year) != 0; }
    double at(int year) const;
    std::size_t size() const noexcept { return points_.size(); }

    const std::map<int, double>& points() const noexcept { return points_; }

private:
    std::string name_;
    int base_year_ = 0;
    std::map<int, double> points_;
};

/// Inclusive year window.
struct Phase {
    std::string label;
    int start_year = 0;
    int end_year = 0;

    bool contains(int year) const noexcept { return year >= start_year && year <= end_year; }
    int span() const noexcept { return end_year - start_year + 1; }
};

struct RateConstant {
    double lambda = 0.0;
    double rate = 0.0;
};

}  // namespace ieg
