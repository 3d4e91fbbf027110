#include "iegrowth.h"

#include <fstream>
#include <memory>
#include <string>
#include <vector>

#include "iegrowth/ie_core.hpp"
#include "iegrowth/ingest.hpp"
#include "iegrowth/pipeline.hpp"
#include "iegrowth/regress.hpp"

struct ieg_series {
    ieg::AnnualSeries inner;
};

struct ieg_ie {
    ieg::IESeries inner;
};

struct ieg_report {
    ieg::Report inner;
    std::string rendered;
};

namespace {

thread_local std::string g_last_error;

ieg_status status_from(ieg::ErrorKind kind) {
    using ieg::ErrorKind;
    switch (kind) {
        case ErrorKind::Argument: return IEG_ERR_ARGUMENT;
        case ErrorKind::Domain: return IEG_ERR_DOMAIN;
        case ErrorKind::Parse: return IEG_ERR_PARSE;
        case ErrorKind::Duplicate: return IEG_ERR_DUPLICATE;
        case ErrorKind::Gap: return IEG_ERR_GAP;
        case ErrorKind::Schema: return IEG_ERR_SCHEMA;
        case ErrorKind::Fit: return IEG_ERR_FIT;
        case ErrorKind::Config: return IEG_ERR_CONFIG;
        case ErrorKind::Io: return IEG_ERR_IO;
    }
    return IEG_ERR_ARGUMENT;
}

template <typename Fn>
ieg_status guarded(Fn&& fn) {
    try {
        fn();
        return IEG_OK;
    } catch (const ieg::Error& e) {
        g_last_error = e.what();
        return status_from(e.kind());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return IEG_ERR_ARGUMENT;
    }
}

ieg_status require(bool ok, const char* message) {
    if (ok) return IEG_OK;
    g_last_error = message;
    return IEG_ERR_ARGUMENT;
}

}  // namespace

extern "C" {

const char* ieg_version(void) { return ieg::library_version(); }

const char* ieg_last_error(void) { return g_last_error.c_str(); }

ieg_status ieg_series_read_csv(const char* path, ieg_format format,
                               const char* country_filter, ieg_series** out) {
    if (auto s = require(path && out, "path and out must be non-null")) return s;
    return guarded([&] {
        std::ifstream in(path);
        if (!in) throw ieg::Error(ieg::ErrorKind::Io, std::string("cannot open ") + path);
        ieg::AnnualSeries series;
        switch (format) {
            case IEG_FORMAT_GENERIC_YEAR_VALUE: series = ieg::parse_generic_year_value(in); break;
            case IEG_FORMAT_ONS_TIMESERIES: series = ieg::parse_ons_timeseries(in); break;
            case IEG_FORMAT_OECD_LONG:
                series = ieg::parse_oecd_long(in, country_filter ? country_filter : "GBR");
                break;
            default:
                throw ieg::Error(ieg::ErrorKind::Argument, "unknown format code");
        }
        *out = new ieg_series{std::move(series)};
    });
}

void ieg_series_free(ieg_series* series) { delete series; }

size_t ieg_series_size(const ieg_series* series) { return series ? series->inner.size() : 0; }

ieg_status ieg_series_point(const ieg_series* series, size_t index, int* year, double* value) {
    if (auto s = require(series && year && value, "null argument")) return s;
    if (auto s = require(index < series->inner.size(), "index out of range")) return s;
    auto it = series->inner.observations().begin();
    std::advance(it, static_cast<std::ptrdiff_t>(index));
    *year = it->first;
    *value = it->second;
    return IEG_OK;
}

ieg_status ieg_series_cumulate_growth(const ieg_series* series, int base_year, ieg_series** out) {
    if (auto s = require(series && out, "null argument")) return s;
    return guarded([&] {
        ieg::AnnualSeries pct("series", ieg::Unit::PercentChangePerAnnum);
        for (const auto& [y, v] : series->inner.observations()) pct.insert(y, v);
        *out = new ieg_series{ieg::cumulate_growth(pct, base_year)};
    });
}

ieg_status ieg_ie_transform(const ieg_series* series, int base_year, ieg_ie** out) {
    if (auto s = require(series && out, "null argument")) return s;
    return guarded([&] { *out = new ieg_ie{ieg::ie_transform(series->inner, base_year)}; });
}

void ieg_ie_free(ieg_ie* ie) { delete ie; }

size_t ieg_ie_size(const ieg_ie* ie) { return ie ? ie->inner.size() : 0; }

ieg_status ieg_ie_point(const ieg_ie* ie, size_t index, int* year, double* value) {
    if (auto s = require(ie && year && value, "null argument")) return s;
    if (auto s = require(index < ie->inner.size(), "index out of range")) return s;
    auto it = ie->inner.points().begin();
    std::advance(it, static_cast<std::ptrdiff_t>(index));
    *year = it->first;
    *value = it->second;
    return IEG_OK;
}

ieg_status ieg_fit_growth(const ieg_ie* ie, int from_year, int to_year, ieg_fit_result* out) {
    if (auto s = require(ie && out, "null argument")) return s;
    return guarded([&] {
        const ieg::Phase phase{"window", from_year, to_year};
        const ieg::GrowthFit fit = ieg::fit_growth(ie->inner, phase);
        *out = {fit.base.slope, fit.base.intercept, fit.base.r_squared, fit.base.n,
                fit.lambda, fit.annual_rate};
    });
}

ieg_status ieg_fit_elasticity(const ieg_ie* response, const ieg_ie* predictor,
                              int from_year, int to_year, ieg_fit_result* out) {
    if (auto s = require(response && predictor && out, "null argument")) return s;
    return guarded([&] {
        const ieg::Phase phase{"window", from_year, to_year};
        const ieg::ElasticityFit fit = ieg::fit_elasticity(response->inner, predictor->inner, phase);
        *out = {fit.base.slope, fit.base.intercept, fit.base.r_squared, fit.base.n, 0.0, 0.0};
    });
}

ieg_status ieg_analyze(const char* config_path, const char* override_output_dir,
                       ieg_report** out) {
    if (auto s = require(config_path && out, "null argument")) return s;
    return guarded([&] {
        ieg::AnalysisConfig config = ieg::parse_config(config_path);
        if (override_output_dir) config.output_dir = override_output_dir;
        auto report = std::make_unique<ieg_report>();
        report->inner = ieg::run_analyze(config);
        report->rendered = ieg::render_report(report->inner);
        *out = report.release();
    });
}

void ieg_report_free(ieg_report* report) { delete report; }

const char* ieg_report_text(const ieg_report* report) {
    return report ? report->rendered.c_str() : "";
}

}  // extern "C"
