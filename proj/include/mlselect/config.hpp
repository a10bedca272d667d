#pragma once

#include "mlselect/analysis.hpp"
#include "mlselect/learner.hpp"
#include "mlselect/recommend.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mlselect {

// Everything one grid run needs. Every field has a working default; only
// the dataset list has no useful one.
struct ExperimentConfig {
    std::vector<std::string> data_paths;
    std::vector<std::string> targets; // one per data path
    double split_ratio = 0.8;
    std::uint64_t master_seed = 42;
    Weights weights; // equal weighting
    std::optional<Category> category_filter;
    double target_threshold = kDefaultTargetThreshold;
    double pairwise_threshold = kDefaultPairwiseThreshold;
    HyperOverrides hyper;
    std::vector<std::string> missing_tokens = default_missing_tokens();
    std::size_t threads = 1;
    std::string report_path; // empty: no JSON file
    std::string tables_path; // empty: tables go to stdout
    std::string roc_dir;     // empty: no ROC dumps
};

// Shortest decimal text that parses back to exactly the same double.
std::string format_roundtrip(double value);

// Apply one key=value setting. Keys: data, target, split_ratio, master_seed,
// weights (5 comma-separated values), category, target_threshold,
// pairwise_threshold, missing_tokens (comma-separated), threads, report,
// tables, roc_dir, hyper.<key> (all models), hyper.<MODEL>.<key>.
// data and target append; everything else replaces. Unknown keys and
// unparsable values throw ConfigError.
void apply_config_key(ExperimentConfig& config, const std::string& key, const std::string& value);

// Flat key=value text, one setting per line; lines starting with '#' and
// blank lines are skipped. Starts from `base` (defaults when omitted).
ExperimentConfig parse_config_text(const std::string& text, ExperimentConfig base = {});

ExperimentConfig parse_config_file(const std::string& path, ExperimentConfig base = {});

// Inverse of parse_config_text: parsing the result reproduces the config.
std::string serialize_config(const ExperimentConfig& config);

} // namespace mlselect
