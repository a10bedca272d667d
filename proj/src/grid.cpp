#include "mlselect/grid.hpp"

#include "mlselect/error.hpp"
#include "mlselect/rng.hpp"

#include <atomic>
#include <chrono>
#include <thread>

namespace mlselect {

std::vector<EvaluationRecord> fit_and_evaluate(const std::vector<LearnerSpec>& specs,
                                               const SplitPair& split, std::size_t threads,
                                               std::uint64_t master_seed) {
    std::vector<EvaluationRecord> records(specs.size());
    std::vector<std::string> errors(specs.size());
    std::atomic<std::size_t> next{0};

    auto work = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= specs.size()) return;
            try {
                const auto model =
                    fit_model(specs[i], split.train, derive_seed(master_seed, specs[i].name));
                records[i] = evaluate_model(*model, split.test);
            } catch (const std::exception& e) {
                errors[i] = specs[i].name + ": " + e.what();
            }
        }
    };

    const std::size_t workers = std::min(threads, specs.size());
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(work);
        for (std::thread& t : pool) t.join();
    }

    for (const std::string& message : errors)
        if (!message.empty()) throw DataError(message);
    return records;
}

RunReport run_experiment_grid(const ExperimentConfig& config) {
    if (config.data_paths.empty()) throw ConfigError("no datasets configured (key 'data')");
    if (config.targets.size() != config.data_paths.size())
        throw ConfigError("got " + std::to_string(config.data_paths.size()) + " data paths but " +
                          std::to_string(config.targets.size()) + " targets");
    // Validates overrides, weights, and the category filter before any
    // dataset work.
    const std::vector<LearnerSpec> specs =
        registry_all_models(config.hyper, config.category_filter);
    (void)config.weights.normalized();

    const auto started = std::chrono::steady_clock::now();
    RunReport report;
    report.config = config;
    for (std::size_t d = 0; d < config.data_paths.size(); ++d) {
        DatasetResult result;
        result.source_path = config.data_paths[d];
        result.dataset_name = path_stem(config.data_paths[d]);
        try {
            const Dataset full =
                load_dataset(config.data_paths[d], config.targets[d], config.missing_tokens);
            result.dataset_name = full.name;

            result.analysis = suggest_initial_algorithms(profile_attributes(full), full.n_rows());
            result.analysis.selected_features =
                select_features(full, config.target_threshold, config.pairwise_threshold);
            for (std::size_t col : result.analysis.selected_features)
                result.selected_feature_names.push_back(full.columns[col].name);

            const Dataset reduced = full.select_features(result.analysis.selected_features);
            const SplitPair split =
                stratified_split(reduced, config.split_ratio, config.master_seed);
            result.train_rows = split.train.n_rows();
            result.test_rows = split.test.n_rows();

            result.specs = specs;
            result.records = fit_and_evaluate(specs, split, config.threads, config.master_seed);
            result.categories = category_averages(result.records);
            if (result.records.size() >= 2)
                result.recommendation = recommend_model(result.records, config.weights);
            result.ok = true;
        } catch (const std::exception& e) {
            result.ok = false;
            result.error = e.what();
        }
        report.datasets.push_back(std::move(result));
    }
    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return report;
}

} // namespace mlselect
