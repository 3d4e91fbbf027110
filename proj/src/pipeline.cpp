#include "iegrowth/pipeline.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "iegrowth/ie_core.hpp"

namespace ieg {

namespace fs = std::filesystem;

const char* library_version() { return "0.1.0"; }

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

namespace {

std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',' || c == ' ' || c == '\t') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

int parse_int(const std::string& s, const std::string& what) {
    try {
        std::size_t pos = 0;
        const int v = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw Error(ErrorKind::Config, "bad integer for " + what + ": '" + s + "'");
    }
}

double parse_real(const std::string& s, const std::string& what) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw Error(ErrorKind::Config, "bad number for " + what + ": '" + s + "'");
    }
}

std::vector<Phase> default_phases() {
    return {{"P1", 2000, 2007}, {"P2", 2008, 2013}, {"P3", 2014, 2019}};
}

struct PairDef {
    const char* label;
    Role response;
    Role predictor;
};

constexpr PairDef kElasticityPairs[] = {
    {"gdp_per_capita~productivity", Role::GdpPerCapita, Role::Productivity},
    {"wages~productivity", Role::Wages, Role::Productivity},
    {"productivity~investment", Role::Productivity, Role::Investment},
};

void write_text_file(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::Io, "cannot write " + path.string());
    out << text;
}

}  // namespace

AnalysisConfig parse_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::Io, "cannot open config " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();

    AnalysisConfig config;
    config.config_text = buffer.str();
    config.config_dir = fs::path(path).parent_path().string();
    config.phases.clear();

    std::istringstream lines(config.config_text);
    std::string line;
    int line_no = 0;

    std::string section;       // "", "phase", "series"
    std::string section_name;  // phase label or role name
    Phase current_phase;
    SeriesSpec current_spec;
    bool unit_set = false;
    bool analyses_set = false;

    auto flush_section = [&]() {
        if (section == "phase") {
            if (current_phase.start_year > current_phase.end_year) {
                throw Error(ErrorKind::Config, "phase " + current_phase.label + " has start after end");
            }
            config.phases.push_back(current_phase);
        } else if (section == "series") {
            if (current_spec.path.empty()) {
                throw Error(ErrorKind::Config,
                            std::string("series ") + role_name(current_spec.role) + " has no path");
            }
            if (!unit_set) current_spec.unit = default_unit_for_role(current_spec.role);
            config.specs.push_back(current_spec);
        }
        section.clear();
    };

    while (std::getline(lines, line)) {
        ++line_no;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        if (t.front() == '[') {
            if (t.back() != ']') {
                throw Error(ErrorKind::Config,
                            "unterminated section header at line " + std::to_string(line_no));
            }
            flush_section();
            const auto words = split_list(t.substr(1, t.size() - 2));
            if (words.size() != 2 || (words[0] != "phase" && words[0] != "series")) {
                throw Error(ErrorKind::Config,
                            "section must be [phase NAME] or [series ROLE], line " +
                                std::to_string(line_no));
            }
            section = words[0];
            section_name = words[1];
            if (section == "phase") {
                current_phase = Phase{section_name, 0, 0};
            } else {
                current_spec = SeriesSpec{};
                current_spec.role = role_from_name(section_name);
                current_spec.id = section_name;
                unit_set = false;
            }
            continue;
        }
        const auto eq = t.find('=');
        if (eq == std::string::npos) {
            throw Error(ErrorKind::Config, "expected key = value at line " + std::to_string(line_no));
        }
        const std::string key = trim(t.substr(0, eq));
        const std::string value = trim(t.substr(eq + 1));

        if (section == "phase") {
            if (key == "start") current_phase.start_year = parse_int(value, "phase start");
            else if (key == "end") current_phase.end_year = parse_int(value, "phase end");
            else throw Error(ErrorKind::Config, "unknown phase key '" + key + "'");
        } else if (section == "series") {
            if (key == "path") current_spec.path = value;
            else if (key == "format") current_spec.format = format_from_name(value);
            else if (key == "unit") { current_spec.unit = unit_from_name(value); unit_set = true; }
            else if (key == "scale") current_spec.scale = parse_real(value, "scale");
            else if (key == "country") current_spec.country_filter = value;
            else throw Error(ErrorKind::Config, "unknown series key '" + key + "'");
        } else {
            if (key == "base_year") config.base_year = parse_int(value, "base_year");
            else if (key == "range") {
                const auto dots = value.find("..");
                if (dots == std::string::npos) {
                    throw Error(ErrorKind::Config, "range must look like 2000..2019");
                }
                config.range.first = parse_int(trim(value.substr(0, dots)), "range start");
                config.range.last = parse_int(trim(value.substr(dots + 2)), "range end");
            } else if (key == "output_dir") config.output_dir = value;
            else if (key == "analyses") {
                config.run_growth = config.run_elasticity = config.run_chain = false;
                analyses_set = true;
                for (const auto& a : split_list(value)) {
                    if (a == "growth") config.run_growth = true;
                    else if (a == "elasticity") config.run_elasticity = true;
                    else if (a == "chain") config.run_chain = true;
                    else throw Error(ErrorKind::Config, "unknown analysis '" + a + "'");
                }
            } else {
                throw Error(ErrorKind::Config, "unknown key '" + key + "'");
            }
        }
    }
    flush_section();

    if (config.phases.empty()) config.phases = default_phases();
    if (analyses_set && !config.run_growth && !config.run_elasticity && !config.run_chain) {
        throw Error(ErrorKind::Config, "at least one analysis must be selected");
    }
    std::sort(config.phases.begin(), config.phases.end(),
              [](const Phase& a, const Phase& b) { return a.start_year < b.start_year; });
    for (std::size_t i = 1; i < config.phases.size(); ++i) {
        if (config.phases[i].start_year <= config.phases[i - 1].end_year) {
            throw Error(ErrorKind::Config, "phases " + config.phases[i - 1].label + " and " +
                                               config.phases[i].label + " overlap");
        }
    }
    for (auto& spec : config.specs) {
        spec.base_year = config.base_year;
        if (!spec.path.empty() && !fs::path(spec.path).is_absolute() && !config.config_dir.empty()) {
            spec.path = (fs::path(config.config_dir) / spec.path).string();
        }
    }
    return config;
}

Report run_analyze(const AnalysisConfig& config) {
    Report report;
    report.version = library_version();
    report.config_hash = fnv1a64(config.config_text);
    report.base_year = config.base_year;
    report.range = config.range;
    report.phases = config.phases;

    if (config.run_chain) {
        std::string missing;
        for (Role r : {Role::Gdp, Role::GdpPerCapita, Role::Productivity, Role::Investment,
                       Role::Population}) {
            const bool present = std::any_of(config.specs.begin(), config.specs.end(),
                                             [r](const SeriesSpec& s) { return s.role == r; });
            if (!present) missing += std::string(missing.empty() ? "" : ", ") + role_name(r);
        }
        if (!missing.empty()) {
            throw Error(ErrorKind::Config, "chain analysis requires series for: " + missing);
        }
    }

    report.dataset = assemble_dataset(config.specs, config.range);

    // Manifest, if present next to the data files, goes into provenance verbatim.
    if (!report.dataset.entries.empty()) {
        const fs::path manifest =
            fs::path(config.specs.front().path).parent_path() / "manifest.json";
        std::ifstream in(manifest, std::ios::binary);
        if (in) {
            std::string line;
            while (std::getline(in, line)) {
                while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
                report.manifest_lines.push_back(line);
            }
        }
    }

    for (const auto& entry : report.dataset.entries) {
        report.ie.emplace(entry.role, ie_transform(entry.series, config.base_year));
    }

    const Phase full{"full", config.range.first, config.range.last};
    if (config.run_growth) {
        for (const auto& entry : report.dataset.entries) {
            const IESeries& ie = report.ie.at(entry.role);
            report.growth.push_back({entry.role, "full", fit_growth(ie, full)});
            for (const auto& phase : config.phases) {
                report.growth.push_back({entry.role, phase.label, fit_growth(ie, phase)});
            }
        }
    }

    const Phase& early = config.phases.front();
    const Phase& late = config.phases.back();
    std::vector<Phase> fit_phases{early};
    if (late.label != early.label) fit_phases.push_back(late);

    if (config.run_elasticity) {
        for (const auto& pair : kElasticityPairs) {
            if (!report.dataset.has(pair.response) || !report.dataset.has(pair.predictor)) continue;
            for (const auto& phase : fit_phases) {
                report.elasticities.push_back(
                    {pair.label,
                     fit_elasticity(report.ie.at(pair.response), report.ie.at(pair.predictor), phase)});
            }
        }
    }

    if (config.run_chain) {
        const IESeries& ie_inv = report.ie.at(Role::Investment);
        const IESeries& ie_prod = report.ie.at(Role::Productivity);
        const IESeries& ie_gdppc = report.ie.at(Role::GdpPerCapita);
        for (const auto& phase : fit_phases) {
            report.chains.push_back(build_chain(ie_inv, ie_prod, ie_gdppc, phase));
        }

        // One predicted IE path over all investment years: each year is
        // served by the chain of the phase containing it; years between the
        // chained phases fall back to the earlier chain.
        IESeries pred_ie("predicted_gdp_per_capita", config.base_year);
        for (const auto& [year, _] : ie_inv.points()) {
            const ElasticityChain* chain = &report.chains.front();
            for (const auto& c : report.chains) {
                if (c.phase.contains(year)) {
                    chain = &c;
                    break;
                }
                if (year >= c.phase.start_year) chain = &c;
            }
            const double b1 = chain->inv_to_prod.base.slope;
            const double a1 = chain->inv_to_prod.base.intercept;
            const double b2 = chain->prod_to_gdppc.base.slope;
            const double a2 = chain->prod_to_gdppc.base.intercept;
            pred_ie.insert(year, a2 + b2 * (a1 + b1 * ie_inv.at(year)));
        }

        const AnnualSeries& observed = report.dataset.at(Role::Gdp);
        const AnnualSeries& population = report.dataset.at(Role::Population);
        const AnnualSeries predicted =
            predict_gdp(pred_ie, population, observed.at(config.base_year), config.base_year);
        report.prediction = accuracy_score(observed, predicted, fit_phases);
    }

    const fs::path out_dir(config.output_dir);
    fs::create_directories(out_dir);
    write_text_file(out_dir / "report.txt", render_report(report));
    emit_plot_data(report, config.output_dir);
    return report;
}

std::string render_report(const Report& report) {
    std::ostringstream out;
    char hash[32];
    std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(report.config_hash));

    out << "# iegrowth analysis report\n";
    out << "version = " << report.version << "\n";
    out << "config_hash = " << hash << "\n";
    out << "base_year = " << report.base_year << "\n";
    out << "range = " << report.range.first << ".." << report.range.last << "\n";
    out << "phases =";
    for (const auto& p : report.phases) {
        out << " " << p.label << " " << p.start_year << ".." << p.end_year << ";";
    }
    out << "\n";

    for (const auto& g : report.growth) {
        const Phase& p = g.fit.base.phase;
        out << "\n[growth " << role_name(g.role) << " " << g.window << " " << p.start_year << ".."
            << p.end_year << "]\n";
        out << "lambda = " << fmt(g.fit.lambda) << "\n";
        out << "annual_rate = " << fmt(g.fit.annual_rate) << "\n";
        out << "annual_rate_pct = " << fmt(g.fit.annual_rate * 100.0) << "%\n";
        out << "intercept = " << fmt(g.fit.base.intercept) << "\n";
        out << "r_squared = " << fmt(g.fit.base.r_squared) << "\n";
        out << "n = " << g.fit.base.n << "\n";
    }

    for (const auto& e : report.elasticities) {
        const Phase& p = e.fit.base.phase;
        out << "\n[elasticity " << e.pair << " " << p.label << " " << p.start_year << ".."
            << p.end_year << "]\n";
        out << "slope = " << fmt(e.fit.base.slope) << "\n";
        out << "intercept = " << fmt(e.fit.base.intercept) << "\n";
        out << "r_squared = " << fmt(e.fit.base.r_squared) << "\n";
        out << "n = " << e.fit.base.n << "\n";
    }

    for (const auto& c : report.chains) {
        out << "\n[chain " << c.phase.label << " " << c.phase.start_year << ".." << c.phase.end_year
            << "]\n";
        out << "inv_to_prod_slope = " << fmt(c.inv_to_prod.base.slope) << "\n";
        out << "inv_to_prod_intercept = " << fmt(c.inv_to_prod.base.intercept) << "\n";
        out << "inv_to_prod_r_squared = " << fmt(c.inv_to_prod.base.r_squared) << "\n";
        out << "prod_to_gdppc_slope = " << fmt(c.prod_to_gdppc.base.slope) << "\n";
        out << "prod_to_gdppc_intercept = " << fmt(c.prod_to_gdppc.base.intercept) << "\n";
        out << "prod_to_gdppc_r_squared = " << fmt(c.prod_to_gdppc.base.r_squared) << "\n";
    }

    if (report.prediction) {
        const auto& pr = *report.prediction;
        out << "\n[prediction]\n";
        out << "evaluation_years =";
        for (int y : pr.evaluation_years) out << " " << y;
        out << "\n";
        out << "comparison_slope = " << fmt(pr.comparison_slope) << "\n";
        out << "reverse_slope = " << fmt(pr.reverse_slope) << "\n";
        out << "accuracy = " << fmt(pr.accuracy) << "\n";
        out << "accuracy_pct = " << fmt(pr.accuracy * 100.0) << "%\n";
    }

    out << "\n[provenance]\n";
    out << "tool = iegrowth " << report.version << "\n";
    out << "config_hash = " << hash << "\n";
    if (report.manifest_lines.empty()) {
        out << "manifest = none\n";
    } else {
        out << "manifest =\n";
        for (const auto& line : report.manifest_lines) out << "  " << line << "\n";
    }
    return out.str();
}

namespace {

class PlotWriter {
public:
    PlotWriter(const fs::path& dir, std::vector<std::string>& written) : dir_(dir), written_(&written) {}

    std::ofstream open(const std::string& name) {
        const fs::path path = dir_ / (name + ".csv");
        std::ofstream out(path, std::ios::binary);
        if (!out) throw Error(ErrorKind::Io, "cannot write " + path.string());
        written_->push_back(path.string());
        return out;
    }

private:
    fs::path dir_;
    std::vector<std::string>* written_;
};

std::string cell(double v) { return fmt(v); }

void write_level_fig(PlotWriter& w, const std::string& name, const std::string& column,
                     const AnnualSeries& series) {
    auto out = w.open(name);
    out << "year," << column << "\n";
    for (const auto& [year, value] : series.observations()) {
        out << year << "," << cell(value) << "\n";
    }
}

void write_ie_with_fits(PlotWriter& w, const std::string& name, const std::string& column,
                        const IESeries& ie, const std::vector<std::pair<std::string, GrowthFit>>& fits) {
    auto out = w.open(name);
    out << "year," << column;
    for (const auto& [label, _] : fits) out << ",fit_" << label;
    out << "\n";
    for (const auto& [year, value] : ie.points()) {
        out << year << "," << cell(value);
        for (const auto& [label, fit] : fits) {
            if (fit.base.phase.contains(year)) {
                const double t = year - ie.base_year();
                out << "," << cell(fit.base.intercept + fit.base.slope * t);
            } else {
                out << ",";
            }
        }
        out << "\n";
    }
}

void write_scatter(PlotWriter& w, const std::string& name, const std::string& xcol,
                   const std::string& ycol, const IESeries& x, const IESeries& y) {
    auto out = w.open(name);
    out << "year," << xcol << "," << ycol << "\n";
    for (const auto& [year, xv] : x.points()) {
        if (!y.contains(year)) continue;
        out << year << "," << cell(xv) << "," << cell(y.at(year)) << "\n";
    }
}

void write_elasticity_fig(PlotWriter& w, const std::string& name, const std::string& xcol,
                          const std::string& ycol, const IESeries& x, const IESeries& y,
                          const ElasticityFit& fit) {
    auto out = w.open(name);
    out << xcol << "," << ycol << ",fitted\n";
    for (const auto& [year, xv] : x.points()) {
        if (!fit.base.phase.contains(year) || !y.contains(year)) continue;
        out << cell(xv) << "," << cell(y.at(year)) << ","
            << cell(fit.base.intercept + fit.base.slope * xv) << "\n";
    }
}

const ElasticityFit* find_elasticity(const Report& report, const std::string& pair,
                                     const std::string& phase_label) {
    for (const auto& e : report.elasticities) {
        if (e.pair == pair && e.fit.base.phase.label == phase_label) return &e.fit;
    }
    return nullptr;
}

}  // namespace

std::vector<std::string> emit_plot_data(const Report& report, const std::string& out_dir) {
    std::vector<std::string> written;
    fs::create_directories(out_dir);
    PlotWriter w(out_dir, written);

    const auto ie_of = [&](Role r) -> const IESeries* {
        auto it = report.ie.find(r);
        return it == report.ie.end() ? nullptr : &it->second;
    };

    if (report.dataset.has(Role::Gdp)) {
        write_level_fig(w, "fig01a", "gdp_index", report.dataset.at(Role::Gdp));
    }
    if (report.dataset.has(Role::Cpi)) {
        write_level_fig(w, "fig01b", "cpi_index", report.dataset.at(Role::Cpi));
    }

    const auto growth_fits_for = [&](Role role) {
        std::vector<std::pair<std::string, GrowthFit>> fits;
        for (const auto& g : report.growth) {
            if (g.role == role && g.window != "full") fits.emplace_back(g.window, g.fit);
        }
        return fits;
    };
    const auto full_fit_for = [&](Role role) {
        std::vector<std::pair<std::string, GrowthFit>> fits;
        for (const auto& g : report.growth) {
            if (g.role == role && g.window == "full") fits.emplace_back(g.window, g.fit);
        }
        return fits;
    };

    if (const auto* ie = ie_of(Role::Gdp); ie && !report.growth.empty()) {
        write_ie_with_fits(w, "fig02a", "ie_gdp", *ie, growth_fits_for(Role::Gdp));
    }
    if (const auto* ie = ie_of(Role::Cpi); ie && !report.growth.empty()) {
        write_ie_with_fits(w, "fig02b", "ie_cpi", *ie, full_fit_for(Role::Cpi));
    }
    if (const auto* ie = ie_of(Role::GdpPerCapita); ie && !report.growth.empty()) {
        write_ie_with_fits(w, "fig03", "ie_gdp_per_capita", *ie, growth_fits_for(Role::GdpPerCapita));
    }

    const IESeries* prod = ie_of(Role::Productivity);
    const IESeries* gdppc = ie_of(Role::GdpPerCapita);
    const IESeries* wages = ie_of(Role::Wages);
    const IESeries* inv = ie_of(Role::Investment);
    const std::string early = report.phases.front().label;
    const std::string late = report.phases.back().label;

    if (prod && gdppc) {
        write_scatter(w, "fig04", "ie_productivity", "ie_gdp_per_capita", *prod, *gdppc);
        if (const auto* f = find_elasticity(report, "gdp_per_capita~productivity", early)) {
            write_elasticity_fig(w, "fig05_1", "ie_productivity", "ie_gdp_per_capita", *prod, *gdppc, *f);
        }
        if (const auto* f = find_elasticity(report, "gdp_per_capita~productivity", late)) {
            write_elasticity_fig(w, "fig05_2", "ie_productivity", "ie_gdp_per_capita", *prod, *gdppc, *f);
        }
    }
    if (prod && wages) {
        write_scatter(w, "fig06", "ie_productivity", "ie_wages", *prod, *wages);
        if (const auto* f = find_elasticity(report, "wages~productivity", early)) {
            write_elasticity_fig(w, "fig07_1", "ie_productivity", "ie_wages", *prod, *wages, *f);
        }
        if (const auto* f = find_elasticity(report, "wages~productivity", late)) {
            write_elasticity_fig(w, "fig07_2", "ie_productivity", "ie_wages", *prod, *wages, *f);
        }
    }
    if (inv && prod) {
        write_scatter(w, "fig08", "ie_investment", "ie_productivity", *inv, *prod);
        if (const auto* f = find_elasticity(report, "productivity~investment", early)) {
            write_elasticity_fig(w, "fig09_1", "ie_investment", "ie_productivity", *inv, *prod, *f);
        }
        if (const auto* f = find_elasticity(report, "productivity~investment", late)) {
            write_elasticity_fig(w, "fig09_2", "ie_investment", "ie_productivity", *inv, *prod, *f);
        }
    }

    if (report.prediction) {
        const auto& pr = *report.prediction;
        {
            auto out = w.open("fig10_1");
            out << "year,observed_gdp,predicted_gdp,in_phase\n";
            for (const auto& [year, obs] : pr.observed_gdp.observations()) {
                if (!pr.predicted_gdp.contains(year)) continue;
                const bool in_phase = std::find(pr.evaluation_years.begin(),
                                                pr.evaluation_years.end(),
                                                year) != pr.evaluation_years.end();
                out << year << "," << cell(obs) << "," << cell(pr.predicted_gdp.at(year)) << ","
                    << (in_phase ? 1 : 0) << "\n";
            }
        }
        {
            auto out = w.open("fig10_2");
            out << "predicted_gdp,observed_gdp,fitted\n";
            for (int year : pr.evaluation_years) {
                const double p = pr.predicted_gdp.at(year);
                out << cell(p) << "," << cell(pr.observed_gdp.at(year)) << ","
                    << cell(pr.comparison_slope * p) << "\n";
            }
        }
    }
    return written;
}

}  // namespace ieg
