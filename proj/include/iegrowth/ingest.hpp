#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "iegrowth/series.hpp"

namespace ieg {

enum class FileFormat {
    GenericYearValue,
    OnsTimeseries,
    OecdLong,
};

FileFormat format_from_name(const std::string& name);
const char* format_name(FileFormat f);

enum class Role {
    Gdp,
    Cpi,
    GdpPerCapita,
    Productivity,
    Wages,
    Investment,
    Population,
};

Role role_from_name(const std::string& name);
const char* role_name(Role r);
Unit default_unit_for_role(Role r);

struct SeriesSpec {
    std::string id;
    Role role = Role::Gdp;
    std::string path;
    FileFormat format = FileFormat::GenericYearValue;
    Unit unit = Unit::Index;
    int base_year = 2000;
    double scale = 1.0;                 // e.g. 1000 for populations in thousands
    std::string country_filter = "GBR"; // OECD long format only
};

struct YearRange {
    int first = 0;
    int last = 0;
};

struct DatasetEntry {
    Role role = Role::Gdp;
    AnnualSeries series;  // level form, rebased; population kept as counts
};

struct Dataset {
    std::vector<DatasetEntry> entries;
    YearRange coverage;

    bool has(Role role) const;
    const AnnualSeries& at(Role role) const;
};

/// "year,value" rows, optional header auto-detected on a non-numeric first field.
AnnualSeries parse_generic_year_value(std::istream& in);

/// ONS time-series CSV export: metadata rows, then period rows. Only rows
/// keyed by a bare 4-digit year are annual; quarterly and monthly rows in the
/// same file are skipped.
AnnualSeries parse_ons_timeseries(std::istream& in);

/// OECD long-format CSV; keeps rows whose location column matches the filter.
AnnualSeries parse_oecd_long(std::istream& in, const std::string& country_filter);

/// Writes a series back out as generic "year,value" rows with a header.
void emit_generic(const AnnualSeries& series, std::ostream& out);

/// Reads one spec's file by its declared format (raw values, unit as declared).
AnnualSeries load_series(const SeriesSpec& spec);

/// Loads every spec, cumulates percent-change sources into index form,
/// rebases levels to the spec's base year, and validates gap-free coverage
/// of the analysis range.
Dataset assemble_dataset(const std::vector<SeriesSpec>& specs, const YearRange& analysis_range);

}  // namespace ieg
