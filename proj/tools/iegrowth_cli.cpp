// Command-line front end; talks to the core exclusively through the C API.
#include <cmath>
#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "iegrowth.h"

namespace {

// Exit codes: 0 ok, 1 usage, 2 data/parse, 3 fit.
int exit_code_for(ieg_status status) {
    switch (status) {
        case IEG_OK: return 0;
        case IEG_ERR_ARGUMENT:
        case IEG_ERR_CONFIG: return 1;
        case IEG_ERR_FIT: return 3;
        default: return 2;
    }
}

int fail(ieg_status status) {
    std::fprintf(stderr, "error: %s\n", ieg_last_error());
    return exit_code_for(status);
}

ieg_format format_from_string(const std::string& name) {
    if (name == "ons_timeseries") return IEG_FORMAT_ONS_TIMESERIES;
    if (name == "oecd_long") return IEG_FORMAT_OECD_LONG;
    return IEG_FORMAT_GENERIC_YEAR_VALUE;
}

struct SeriesGuard {
    ieg_series* handle = nullptr;
    ~SeriesGuard() { ieg_series_free(handle); }
};

struct IeGuard {
    ieg_ie* handle = nullptr;
    ~IeGuard() { ieg_ie_free(handle); }
};

int load_ie(const std::string& path, const std::string& format, const std::string& country,
            int base_year, bool cumulate, IeGuard& out, ieg_status& status) {
    SeriesGuard series;
    status = ieg_series_read_csv(path.c_str(), format_from_string(format),
                                 country.empty() ? nullptr : country.c_str(), &series.handle);
    if (status != IEG_OK) return fail(status);
    ieg_series* level = series.handle;
    SeriesGuard cumulated;
    if (cumulate) {
        status = ieg_series_cumulate_growth(series.handle, base_year, &cumulated.handle);
        if (status != IEG_OK) return fail(status);
        level = cumulated.handle;
    }
    status = ieg_ie_transform(level, base_year, &out.handle);
    if (status != IEG_OK) return fail(status);
    return 0;
}

void print_fit(const ieg_fit_result& fit, bool growth) {
    std::printf("slope = %.12g\n", fit.slope);
    std::printf("intercept = %.12g\n", fit.intercept);
    std::printf("r_squared = %.12g\n", fit.r_squared);
    std::printf("n = %d\n", fit.n);
    if (growth) {
        std::printf("lambda = %.12g\n", fit.lambda);
        std::printf("annual_rate = %.12g\n", fit.annual_rate);
        std::printf("annual_rate_pct = %.12g%%\n", fit.annual_rate * 100.0);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Information-entropy growth analysis of annual macroeconomic series"};
    app.require_subcommand(1);

    // analyze
    auto* analyze = app.add_subcommand("analyze", "Run the full pipeline from a config file");
    std::string config_path;
    std::string output_dir;
    analyze->add_option("config", config_path, "Analysis config file")->required();
    analyze->add_option("--output-dir", output_dir, "Override the config's output directory");

    // transform
    auto* transform = app.add_subcommand("transform", "IE transform of one series to stdout");
    std::string t_file, t_format = "generic_year_value", t_country;
    int t_base = 2000;
    bool t_cumulate = false;
    transform->add_option("file", t_file, "Series CSV")->required();
    transform->add_option("--base-year", t_base, "Base year (IE = 0 there)");
    transform->add_option("--format", t_format, "generic_year_value | ons_timeseries | oecd_long");
    transform->add_option("--country", t_country, "Country filter for oecd_long");
    transform->add_flag("--cumulate", t_cumulate, "Treat input as percent changes per annum");

    // fit
    auto* fit_cmd = app.add_subcommand("fit", "Growth fit of one series over a year window");
    std::string f_file, f_format = "generic_year_value", f_country;
    int f_base = 2000, f_from = 0, f_to = 0;
    bool f_cumulate = false;
    fit_cmd->add_option("file", f_file, "Series CSV")->required();
    fit_cmd->add_option("--from", f_from, "First year of the window")->required();
    fit_cmd->add_option("--to", f_to, "Last year of the window")->required();
    fit_cmd->add_option("--base-year", f_base, "Base year for the IE transform");
    fit_cmd->add_option("--format", f_format, "Input format");
    fit_cmd->add_option("--country", f_country, "Country filter for oecd_long");
    fit_cmd->add_flag("--cumulate", f_cumulate, "Treat input as percent changes per annum");

    // elasticity
    auto* ela = app.add_subcommand("elasticity", "OLS slope of IE(y-file) on IE(x-file)");
    std::string e_yfile, e_xfile, e_format = "generic_year_value", e_country;
    int e_base = 2000, e_from = 0, e_to = 0;
    ela->add_option("file-y", e_yfile, "Response series CSV")->required();
    ela->add_option("file-x", e_xfile, "Predictor series CSV")->required();
    ela->add_option("--from", e_from, "First year of the window")->required();
    ela->add_option("--to", e_to, "Last year of the window")->required();
    ela->add_option("--base-year", e_base, "Base year for the IE transform");
    ela->add_option("--format", e_format, "Input format for both files");
    ela->add_option("--country", e_country, "Country filter for oecd_long");

    auto* version = app.add_subcommand("version", "Print the tool version");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    ieg_status status = IEG_OK;

    if (*version) {
        std::printf("iegrowth %s\n", ieg_version());
        return 0;
    }

    if (*analyze) {
        ieg_report* report = nullptr;
        status = ieg_analyze(config_path.c_str(), output_dir.empty() ? nullptr : output_dir.c_str(),
                             &report);
        if (status != IEG_OK) return fail(status);
        std::fputs(ieg_report_text(report), stdout);
        ieg_report_free(report);
        return 0;
    }

    if (*transform) {
        IeGuard ie;
        if (int rc = load_ie(t_file, t_format, t_country, t_base, t_cumulate, ie, status)) return rc;
        std::printf("year,ie_value\n");
        for (size_t i = 0; i < ieg_ie_size(ie.handle); ++i) {
            int year = 0;
            double value = 0.0;
            ieg_ie_point(ie.handle, i, &year, &value);
            std::printf("%d,%.12g\n", year, value);
        }
        return 0;
    }

    if (*fit_cmd) {
        IeGuard ie;
        if (int rc = load_ie(f_file, f_format, f_country, f_base, f_cumulate, ie, status)) return rc;
        ieg_fit_result fit{};
        status = ieg_fit_growth(ie.handle, f_from, f_to, &fit);
        if (status != IEG_OK) return fail(status);
        print_fit(fit, true);
        return 0;
    }

    if (*ela) {
        IeGuard ie_y, ie_x;
        if (int rc = load_ie(e_yfile, e_format, e_country, e_base, false, ie_y, status)) return rc;
        if (int rc = load_ie(e_xfile, e_format, e_country, e_base, false, ie_x, status)) return rc;
        ieg_fit_result fit{};
        status = ieg_fit_elasticity(ie_y.handle, ie_x.handle, e_from, e_to, &fit);
        if (status != IEG_OK) return fail(status);
        print_fit(fit, false);
        return 0;
    }

    return 1;
}
