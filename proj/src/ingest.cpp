#include "iegrowth/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "iegrowth/ie_core.hpp"

namespace ieg {

namespace {

// Splits one CSV line; understands double quotes and drops the UTF-8 BOM.
std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                field += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(field);
            field.clear();
        } else if (c != '\r') {
            field += c;
        }
    }
    fields.push_back(field);
    return fields;
}

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::string strip_bom(std::string s) {
    if (s.rfind("\xEF\xBB\xBF", 0) == 0) s.erase(0, 3);
    return s;
}

std::string upper(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    return s;
}

bool is_year_token(const std::string& s, int& year) {
    if (s.size() != 4) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    year = std::stoi(s);
    return true;
}

// Numeric parse tolerating thousands separators that survive quote removal.
bool parse_number(const std::string& raw, double& out) {
    std::string s = trim(raw);
    s.erase(std::remove(s.begin(), s.end(), ','), s.end());
    if (s.empty()) return false;
    const char* begin = s.data();
    const char* end = begin + s.size();
    auto [ptr, ec] = std::from_chars(begin, end, out);
    return ec == std::errc() && ptr == end;
}

}  // namespace

FileFormat format_from_name(const std::string& name) {
    if (name == "generic_year_value") return FileFormat::GenericYearValue;
    if (name == "ons_timeseries") return FileFormat::OnsTimeseries;
    if (name == "oecd_long") return FileFormat::OecdLong;
    throw Error(ErrorKind::Config, "unknown file format: " + name);
}

const char* format_name(FileFormat f) {
    switch (f) {
        case FileFormat::GenericYearValue: return "generic_year_value";
        case FileFormat::OnsTimeseries: return "ons_timeseries";
        case FileFormat::OecdLong: return "oecd_long";
    }
    return "generic_year_value";
}

Role role_from_name(const std::string& name) {
    if (name == "gdp") return Role::Gdp;
    if (name == "cpi") return Role::Cpi;
    if (name == "gdp_per_capita") return Role::GdpPerCapita;
    if (name == "productivity") return Role::Productivity;
    if (name == "wages") return Role::Wages;
    if (name == "investment") return Role::Investment;
    if (name == "population") return Role::Population;
    throw Error(ErrorKind::Config, "unknown series role: " + name);
}

const char* role_name(Role r) {
    switch (r) {
        case Role::Gdp: return "gdp";
        case Role::Cpi: return "cpi";
        case Role::GdpPerCapita: return "gdp_per_capita";
        case Role::Productivity: return "productivity";
        case Role::Wages: return "wages";
        case Role::Investment: return "investment";
        case Role::Population: return "population";
    }
    return "gdp";
}

Unit default_unit_for_role(Role r) {
    switch (r) {
        case Role::Gdp: return Unit::PercentChangePerAnnum;
        case Role::Productivity: return Unit::PercentChangePerAnnum;
        case Role::Cpi: return Unit::Index;
        case Role::GdpPerCapita: return Unit::CurrencyLevel;
        case Role::Wages: return Unit::CurrencyLevel;
        case Role::Investment: return Unit::CurrencyLevel;
        case Role::Population: return Unit::PopulationCount;
    }
    return Unit::Index;
}

bool Dataset::has(Role role) const {
    return std::any_of(entries.begin(), entries.end(),
                       [role](const DatasetEntry& e) { return e.role == role; });
}

const AnnualSeries& Dataset::at(Role role) const {
    for (const auto& e : entries) {
        if (e.role == role) return e.series;
    }
    throw Error(ErrorKind::Config, std::string("dataset has no series for role ") + role_name(role));
}

AnnualSeries parse_generic_year_value(std::istream& in) {
    AnnualSeries series("series", Unit::Index);
    std::map<int, double> values;
    std::string line;
    int line_no = 0;
    bool first_row = true;
    while (std::getline(in, line)) {
        ++line_no;
        if (line_no == 1) line = strip_bom(line);
        if (trim(line).empty()) continue;
        const bool was_first = first_row;
        first_row = false;
        auto fields = split_csv(line);
        if (fields.size() < 2) {
            throw Error(ErrorKind::Parse, "expected year,value at line " + std::to_string(line_no),
                        line_no, 1);
        }
        int year = 0;
        if (!is_year_token(trim(fields[0]), year)) {
            if (was_first) continue;  // header row
            throw Error(ErrorKind::Parse,
                        "bad year '" + trim(fields[0]) + "' at line " + std::to_string(line_no),
                        line_no, 1);
        }
        double value = 0.0;
        if (!parse_number(fields[1], value)) {
            throw Error(ErrorKind::Parse,
                        "bad value '" + trim(fields[1]) + "' at line " + std::to_string(line_no),
                        line_no, 2);
        }
        if (!values.emplace(year, value).second) {
            throw Error(ErrorKind::Duplicate,
                        "duplicate year " + std::to_string(year) + " at line " +
                            std::to_string(line_no),
                        line_no, 1);
        }
    }
    for (const auto& [y, v] : values) series.insert_unchecked(y, v);
    return series;
}

AnnualSeries parse_ons_timeseries(std::istream& in) {
    std::map<int, double> values;
    std::string title = "ons_series";
    std::string line;
    int line_no = 0;
    bool first = true;
    while (std::getline(in, line)) {
        ++line_no;
        if (first) {
            line = strip_bom(line);
            first = false;
        }
        if (trim(line).empty()) continue;
        auto fields = split_csv(line);
        const std::string key = trim(fields[0]);
        int year = 0;
        if (!is_year_token(key, year)) {
            if (upper(key) == "TITLE" && fields.size() > 1 && !trim(fields[1]).empty()) {
                title = trim(fields[1]);
            }
            continue;  // metadata, quarterly, or monthly row
        }
        if (fields.size() < 2) {
            throw Error(ErrorKind::Parse, "annual row without value at line " + std::to_string(line_no),
                        line_no, 2);
        }
        double value = 0.0;
        if (!parse_number(fields[1], value)) {
            throw Error(ErrorKind::Parse,
                        "bad value '" + trim(fields[1]) + "' at line " + std::to_string(line_no),
                        line_no, 2);
        }
        if (!values.emplace(year, value).second) {
            throw Error(ErrorKind::Duplicate,
                        "duplicate year " + std::to_string(year) + " at line " +
                            std::to_string(line_no),
                        line_no, 1);
        }
    }
    if (values.empty()) {
        throw Error(ErrorKind::Parse, "no annual rows found in ONS file");
    }
    AnnualSeries series(title, Unit::Index);
    for (const auto& [y, v] : values) series.insert_unchecked(y, v);
    return series;
}

AnnualSeries parse_oecd_long(std::istream& in, const std::string& country_filter) {
    std::string line;
    int line_no = 0;
    if (!std::getline(in, line)) {
        throw Error(ErrorKind::Schema, "empty OECD file");
    }
    ++line_no;
    auto header = split_csv(strip_bom(line));
    int col_location = -1, col_time = -1, col_value = -1;
    for (std::size_t i = 0; i < header.size(); ++i) {
        const std::string h = upper(trim(header[i]));
        if (h == "LOCATION" || h == "COUNTRY") col_location = static_cast<int>(i);
        else if (h == "TIME" || h == "YEAR") col_time = static_cast<int>(i);
        else if (h == "VALUE") col_value = static_cast<int>(i);
    }
    if (col_location < 0 || col_time < 0 || col_value < 0) {
        throw Error(ErrorKind::Schema,
                    "OECD header must name location, time, and value columns");
    }

    std::map<int, double> values;
    const std::string filter = upper(country_filter);
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        auto fields = split_csv(line);
        const std::size_t need = static_cast<std::size_t>(std::max({col_location, col_time, col_value})) + 1;
        if (fields.size() < need) {
            throw Error(ErrorKind::Parse, "short row at line " + std::to_string(line_no), line_no, 1);
        }
        if (upper(trim(fields[static_cast<std::size_t>(col_location)])) != filter) continue;
        int year = 0;
        if (!is_year_token(trim(fields[static_cast<std::size_t>(col_time)]), year)) {
            throw Error(ErrorKind::Parse,
                        "bad year '" + trim(fields[static_cast<std::size_t>(col_time)]) +
                            "' at line " + std::to_string(line_no),
                        line_no, col_time + 1);
        }
        double value = 0.0;
        if (!parse_number(fields[static_cast<std::size_t>(col_value)], value)) {
            throw Error(ErrorKind::Parse,
                        "bad value at line " + std::to_string(line_no), line_no, col_value + 1);
        }
        if (!values.emplace(year, value).second) {
            throw Error(ErrorKind::Duplicate,
                        "duplicate (" + country_filter + ", " + std::to_string(year) +
                            ") at line " + std::to_string(line_no),
                        line_no, 1);
        }
    }
    if (values.empty()) {
        throw Error(ErrorKind::Parse, "no rows match country filter " + country_filter);
    }
    AnnualSeries series(country_filter, Unit::Index);
    for (const auto& [y, v] : values) series.insert_unchecked(y, v);
    return series;
}

void emit_generic(const AnnualSeries& series, std::ostream& out) {
    out << "year,value\n";
    char buf[64];
    for (const auto& [year, value] : series.observations()) {
        std::snprintf(buf, sizeof buf, "%d,%.17g\n", year, value);
        out << buf;
    }
}

AnnualSeries load_series(const SeriesSpec& spec) {
    std::ifstream in(spec.path);
    if (!in) {
        throw Error(ErrorKind::Io, std::string(role_name(spec.role)) + ": cannot open " + spec.path);
    }
    AnnualSeries raw;
    switch (spec.format) {
        case FileFormat::GenericYearValue: raw = parse_generic_year_value(in); break;
        case FileFormat::OnsTimeseries: raw = parse_ons_timeseries(in); break;
        case FileFormat::OecdLong: raw = parse_oecd_long(in, spec.country_filter); break;
    }
    AnnualSeries out(spec.id.empty() ? role_name(spec.role) : spec.id, spec.unit);
    for (const auto& [y, v] : raw.observations()) {
        out.insert(y, spec.unit == Unit::PercentChangePerAnnum ? v : v * spec.scale);
    }
    return out;
}

Dataset assemble_dataset(const std::vector<SeriesSpec>& specs, const YearRange& analysis_range) {
    if (analysis_range.first > analysis_range.last) {
        throw Error(ErrorKind::Config, "analysis range is empty");
    }
    Dataset dataset;
    dataset.coverage = analysis_range;
    for (const auto& spec : specs) {
        if (dataset.has(spec.role)) {
            throw Error(ErrorKind::Config,
                        std::string("duplicate series role ") + role_name(spec.role));
        }
        AnnualSeries raw = load_series(spec);

        AnnualSeries prepared;
        if (spec.unit == Unit::PercentChangePerAnnum) {
            prepared = cumulate_growth(raw, spec.base_year);
        } else if (spec.role == Role::Population) {
            prepared = raw;  // keep counts; predict_gdp takes the ratio itself
        } else {
            prepared = rebase(raw, spec.base_year);
        }

        std::vector<int> missing;
        for (int y = analysis_range.first; y <= analysis_range.last; ++y) {
            if (!prepared.contains(y)) missing.push_back(y);
        }
        if (!missing.empty()) {
            std::ostringstream msg;
            msg << role_name(spec.role) << ", missing years:";
            for (int y : missing) msg << ' ' << y;
            throw Error(ErrorKind::Gap, msg.str());
        }

        // Trim to the analysis range so every series shares it exactly.
        AnnualSeries trimmed(prepared.name(), prepared.unit());
        for (const auto& [y, v] : prepared.observations()) {
            if (y >= analysis_range.first && y <= analysis_range.last) trimmed.insert(y, v);
        }
        dataset.entries.push_back({spec.role, std::move(trimmed)});
    }
    return dataset;
}

}  // namespace ieg
