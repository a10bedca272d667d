#include "mlselect/config.hpp"
#include "mlselect/error.hpp"
#include "mlselect/grid.hpp"
#include "mlselect/report.hpp"
#include "mlselect/synth.hpp"

#include "CLI11.hpp"

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

namespace {

struct RunFlags {
    std::vector<std::string> data;
    std::vector<std::string> targets;
    std::string config_path;
    std::string split;
    std::string seed;
    std::string weights;
    std::string category;
    std::string report_path;
    std::string tables_path;
    std::string roc_dir;
    std::string threads;
};

int run_command(const RunFlags& flags) {
    mlselect::ExperimentConfig config;
    if (!flags.config_path.empty()) config = mlselect::parse_config_file(flags.config_path);

    // Flags beat file values; a data/target flag list replaces the file's.
    if (!flags.data.empty()) {
        config.data_paths = flags.data;
        config.targets.clear();
    }
    if (!flags.targets.empty()) config.targets = flags.targets;
    if (!flags.split.empty()) mlselect::apply_config_key(config, "split_ratio", flags.split);
    if (!flags.seed.empty()) mlselect::apply_config_key(config, "master_seed", flags.seed);
    if (!flags.weights.empty()) mlselect::apply_config_key(config, "weights", flags.weights);
    if (!flags.category.empty()) mlselect::apply_config_key(config, "category", flags.category);
    if (!flags.report_path.empty()) config.report_path = flags.report_path;
    if (!flags.tables_path.empty()) config.tables_path = flags.tables_path;
    if (!flags.roc_dir.empty()) config.roc_dir = flags.roc_dir;
    if (!flags.threads.empty()) mlselect::apply_config_key(config, "threads", flags.threads);

    const mlselect::RunReport report = mlselect::run_experiment_grid(config);
    mlselect::write_outputs(report);

    std::size_t failed = 0;
    for (const auto& dataset : report.datasets) {
        if (!dataset.ok) {
            ++failed;
            std::cerr << "dataset '" << dataset.dataset_name << "' failed: " << dataset.error
                      << '\n';
        }
    }
    std::fprintf(stderr, "%zu/%zu datasets completed in %.2fs\n",
                 report.datasets.size() - failed, report.datasets.size(), report.wall_seconds);
    return failed == report.datasets.size() ? 1 : 0;
}

int gen_command(const std::string& out_dir, std::uint64_t seed, const std::string& names) {
    std::vector<mlselect::SynthShape> shapes;
    if (names.empty()) {
        shapes = mlselect::bundled_shapes();
    } else {
        std::size_t start = 0;
        while (start <= names.size()) {
            const std::size_t comma = names.find(',', start);
            const std::string name = names.substr(
                start, comma == std::string::npos ? std::string::npos : comma - start);
            if (!name.empty()) shapes.push_back(mlselect::bundled_shape(name));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (shapes.empty()) throw mlselect::ConfigError("--datasets selected nothing");
    }
    for (const auto& shape : shapes) {
        const std::string path = mlselect::write_synthetic_csv(out_dir, shape, seed);
        std::cerr << "wrote " << path << " (" << shape.rows << " rows, " << shape.attrs
                  << " columns)\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tabular binary-classification model selection: trains a 13-model "
                 "registry per dataset, scores each model, and recommends the best."};
    app.require_subcommand(1);

    RunFlags flags;
    CLI::App* run = app.add_subcommand("run", "Run the model grid over one or more CSV datasets");
    run->add_option("--data", flags.data, "Dataset CSV path (repeatable)");
    run->add_option("--target", flags.targets, "Target column name, one per --data");
    run->add_option("--config", flags.config_path, "Flat key=value config file");
    run->add_option("--split", flags.split, "Train fraction in (0,1), default 0.8");
    run->add_option("--seed", flags.seed, "Master seed, default 42");
    run->add_option("--weights", flags.weights,
                    "Criterion weights accuracy,precision,recall,f_measure,aic");
    run->add_option("--category", flags.category, "Only run one category: eager|lazy|hybrid");
    run->add_option("--report", flags.report_path, "Write the JSON report here");
    run->add_option("--tables", flags.tables_path, "Write text tables here (default stdout)");
    run->add_option("--roc-dir", flags.roc_dir, "Write per-model ROC CSV dumps here");
    run->add_option("--threads", flags.threads, "Worker threads for model fits, default 1");

    std::string gen_out;
    std::string gen_names;
    std::uint64_t gen_seed = 42;
    CLI::App* gen = app.add_subcommand("gen", "Write the bundled synthetic datasets as CSV");
    gen->add_option("--out", gen_out, "Output directory")->required();
    gen->add_option("--seed", gen_seed, "Generator seed, default 42");
    gen->add_option("--datasets", gen_names, "Comma-separated subset of the bundled names");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (run->parsed()) return run_command(flags);
        return gen_command(gen_out, gen_seed, gen_names);
    } catch (const mlselect::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
