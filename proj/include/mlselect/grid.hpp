#pragma once

#include "mlselect/analysis.hpp"
#include "mlselect/config.hpp"
#include "mlselect/evaluation.hpp"
#include "mlselect/recommend.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mlselect {

// Outcome of the four phases on one dataset. When ok is false only name,
// source_path, and error are meaningful.
struct DatasetResult {
    std::string dataset_name;
    std::string source_path;
    bool ok = false;
    std::string error;
    AnalysisReport analysis;
    std::vector<std::string> selected_feature_names;
    std::size_t train_rows = 0;
    std::size_t test_rows = 0;
    std::vector<LearnerSpec> specs; // parallel to records
    std::vector<EvaluationRecord> records;
    std::vector<CategorySummary> categories;
    std::optional<Recommendation> recommendation;
};

struct RunReport {
    ExperimentConfig config;
    std::vector<DatasetResult> datasets;
    // Reported on the console only; keeping it out of the serialized report
    // is what lets reruns be byte-identical.
    double wall_seconds = 0.0;
};

// Fit and evaluate each spec on the split. Runs on up to `threads` workers;
// per-model seeds make the result identical at any thread count. A model
// failure raises DataError naming the model.
std::vector<EvaluationRecord> fit_and_evaluate(const std::vector<LearnerSpec>& specs,
                                               const SplitPair& split, std::size_t threads,
                                               std::uint64_t master_seed);

// ingest -> attribute analysis -> feature selection -> stratified split ->
// fit + evaluate every registry model -> category averages ->
// recommendation, per dataset. One dataset's failure is recorded in its
// result and the grid moves on.
RunReport run_experiment_grid(const ExperimentConfig& config);

} // namespace mlselect
