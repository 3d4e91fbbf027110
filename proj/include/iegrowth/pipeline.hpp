#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "iegrowth/chain.hpp"
#include "iegrowth/ingest.hpp"

namespace ieg {

struct AnalysisConfig {
    std::vector<SeriesSpec> specs;
    int base_year = 2000;
    YearRange range{2000, 2019};
    std::vector<Phase> phases;  // ordered, non-overlapping
    bool run_growth = true;
    bool run_elasticity = true;
    bool run_chain = true;
    std::string output_dir = "out";
    std::string config_text;  // raw bytes, hashed into provenance
    std::string config_dir;   // series paths resolve against this
};

/// Key-value config with [phase NAME] and [series ROLE] sections.
AnalysisConfig parse_config(const std::string& path);

struct GrowthEntry {
    Role role = Role::Gdp;
    std::string window;  // "full" or a phase label
    GrowthFit fit;
};

struct ElasticityEntry {
    std::string pair;  // e.g. "gdp_per_capita~productivity"
    ElasticityFit fit;
};

struct Report {
    std::string version;
    std::uint64_t config_hash = 0;
    int base_year = 2000;
    YearRange range;
    std::vector<Phase> phases;
    std::vector<GrowthEntry> growth;
    std::vector<ElasticityEntry> elasticities;
    std::vector<ElasticityChain> chains;
    std::optional<PredictionResult> prediction;
    std::vector<std::string> manifest_lines;
    Dataset dataset;
    std::map<Role, IESeries> ie;
};

/// Runs ingest -> IE transforms -> fits -> chained prediction, writes the
/// report document and per-figure plot CSVs into the output directory.
Report run_analyze(const AnalysisConfig& config);

std::string render_report(const Report& report);

/// One CSV per figure; returns the paths written.
std::vector<std::string> emit_plot_data(const Report& report, const std::string& out_dir);

std::uint64_t fnv1a64(const std::string& bytes);

const char* library_version();

}  // namespace ieg
