#include "mlselect/report.hpp"

#include "mlselect/error.hpp"

#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace mlselect {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string capitalized(const std::string& word) {
    std::string out = word;
    if (!out.empty() && out[0] >= 'a' && out[0] <= 'z')
        out[0] = static_cast<char>(out[0] - 'a' + 'A');
    return out;
}

// Left-aligned columns, two spaces apart, no trailing blanks.
std::string render_grid(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    for (const auto& row : rows) {
        if (width.size() < row.size()) width.resize(row.size(), 0);
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    }
    std::string out;
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            line += row[c];
            if (c + 1 < row.size())
                line.append(width[c] - row[c].size() + 2, ' ');
        }
        out += line;
        out += '\n';
    }
    return out;
}

const EvaluationRecord* record_named(const DatasetResult& result, const std::string& name) {
    for (const EvaluationRecord& r : result.records)
        if (r.model_name == name) return &r;
    return nullptr;
}

std::string category_of_model(const DatasetResult& result, const std::string& name) {
    const EvaluationRecord* record = record_named(result, name);
    return record ? capitalized(category_name(record->category)) : "?";
}

ordered_json config_json(const ExperimentConfig& config) {
    ordered_json j;
    j["data"] = config.data_paths;
    j["targets"] = config.targets;
    j["split_ratio"] = config.split_ratio;
    j["master_seed"] = config.master_seed;
    j["weights"] = {{"accuracy", config.weights.accuracy},
                    {"precision", config.weights.precision},
                    {"recall", config.weights.recall},
                    {"f_measure", config.weights.f_measure},
                    {"aic", config.weights.aic}};
    if (config.category_filter)
        j["category"] = category_name(*config.category_filter);
    else
        j["category"] = nullptr;
    j["target_threshold"] = config.target_threshold;
    j["pairwise_threshold"] = config.pairwise_threshold;
    j["missing_tokens"] = config.missing_tokens;
    j["threads"] = config.threads;
    j["report"] = config.report_path;
    j["tables"] = config.tables_path;
    j["roc_dir"] = config.roc_dir;
    return j;
}

ordered_json record_json(const EvaluationRecord& record, const LearnerSpec& spec) {
    ordered_json j;
    j["name"] = record.model_name;
    j["category"] = category_name(record.category);
    ordered_json hyper;
    for (const auto& [key, value] : spec.hyper) hyper[key] = value;
    j["hyperparameters"] = std::move(hyper);
    j["param_count"] = record.param_count;
    j["accuracy"] = record.metrics.accuracy;
    j["precision"] = record.metrics.precision;
    j["recall"] = record.metrics.recall;
    j["f_measure"] = record.metrics.f_measure;
    if (record.auc)
        j["auc"] = *record.auc;
    else
        j["auc"] = nullptr;
    j["log_likelihood"] = record.log_likelihood;
    j["aic"] = record.aic;
    j["confusion"] = {{"tp", record.confusion.tp},
                      {"fp", record.confusion.fp},
                      {"fn", record.confusion.fn},
                      {"tn", record.confusion.tn}};
    return j;
}

ordered_json range_json(const CriterionRange& range) {
    return {{"min", range.min}, {"max", range.max}};
}

ordered_json recommendation_json(const Recommendation& rec) {
    ordered_json j;
    j["best_overall"] = rec.best_overall;
    j["best_by_accuracy"] = rec.best_by_accuracy;
    j["best_by_aic"] = rec.best_by_aic;
    j["weights"] = {{"accuracy", rec.weights.accuracy},
                    {"precision", rec.weights.precision},
                    {"recall", rec.weights.recall},
                    {"f_measure", rec.weights.f_measure},
                    {"aic", rec.weights.aic}};
    j["ranges"] = {{"accuracy", range_json(rec.ranges.accuracy)},
                   {"precision", range_json(rec.ranges.precision)},
                   {"recall", range_json(rec.ranges.recall)},
                   {"f_measure", range_json(rec.ranges.f_measure)},
                   {"aic", range_json(rec.ranges.aic)}};
    ordered_json ranked = ordered_json::array();
    for (const RankedModel& m : rec.ranked) ranked.push_back({{"model", m.name}, {"score", m.score}});
    j["ranked"] = std::move(ranked);
    return j;
}

ordered_json dataset_json(const DatasetResult& result) {
    ordered_json j;
    j["name"] = result.dataset_name;
    j["path"] = result.source_path;
    j["ok"] = result.ok;
    if (!result.ok) {
        j["error"] = result.error;
        return j;
    }
    j["error"] = nullptr;
    j["rows"] = result.analysis.n_rows;
    j["features"] = result.analysis.n_features;
    j["linearity"] =
        result.analysis.linearity == Linearity::linear_tendency ? "linear" : "nonlinear";
    j["size_class"] = result.analysis.size_class == SizeClass::small ? "small" : "large";
    j["suggested_algorithms"] = result.analysis.suggested_algorithms;
    j["selected_features"] = result.selected_feature_names;
    j["train_rows"] = result.train_rows;
    j["test_rows"] = result.test_rows;

    ordered_json models = ordered_json::array();
    for (std::size_t i = 0; i < result.records.size(); ++i)
        models.push_back(record_json(result.records[i], result.specs[i]));
    j["models"] = std::move(models);

    ordered_json categories = ordered_json::array();
    for (const CategorySummary& s : result.categories)
        categories.push_back({{"category", category_name(s.category)},
                              {"avg_accuracy", s.avg_accuracy},
                              {"avg_precision", s.avg_precision},
                              {"avg_recall", s.avg_recall},
                              {"avg_f_measure", s.avg_f_measure},
                              {"avg_aic", s.avg_aic},
                              {"member_count", s.member_count}});
    j["category_averages"] = std::move(categories);

    if (result.recommendation)
        j["recommendation"] = recommendation_json(*result.recommendation);
    else
        j["recommendation"] = nullptr;
    return j;
}

} // namespace

std::string format_sig(double value) {
    char buffer[48];
    std::snprintf(buffer, sizeof(buffer), "%.4g", value);
    return buffer;
}

std::string render_tables(const RunReport& report) {
    std::ostringstream out;
    for (const DatasetResult& result : report.datasets) {
        if (!result.ok) {
            out << "Dataset: " << result.dataset_name << "  FAILED: " << result.error << "\n\n";
            continue;
        }
        out << "Dataset: " << result.dataset_name << "  (rows " << result.analysis.n_rows
            << ", features " << result.analysis.n_features << " -> kept "
            << result.selected_feature_names.size() << "; train " << result.train_rows
            << ", test " << result.test_rows << ")\n\n";

        std::vector<std::vector<std::string>> averages = {
            {"Category", "Avg Accuracy", "Avg Precision", "Avg Recall", "Avg F-measure"}};
        std::vector<std::vector<std::string>> aic = {{"Category", "Avg AIC"}};
        for (const CategorySummary& s : result.categories) {
            averages.push_back({capitalized(category_name(s.category)),
                                format_sig(s.avg_accuracy), format_sig(s.avg_precision),
                                format_sig(s.avg_recall), format_sig(s.avg_f_measure)});
            aic.push_back({capitalized(category_name(s.category)), format_sig(s.avg_aic)});
        }
        out << "Category averages\n" << render_grid(averages) << '\n';
        out << "Average AIC\n" << render_grid(aic) << '\n';
    }

    std::vector<std::vector<std::string>> comparison = {
        {"Dataset", "Category", "Algorithm", "Category", "Algorithm", "Overall"}};
    for (const DatasetResult& result : report.datasets) {
        if (!result.ok || !result.recommendation) continue;
        const Recommendation& rec = *result.recommendation;
        comparison.push_back({result.dataset_name, category_of_model(result, rec.best_by_accuracy),
                              rec.best_by_accuracy, category_of_model(result, rec.best_by_aic),
                              rec.best_by_aic, rec.best_overall});
    }
    if (comparison.size() > 1) {
        // Column group header over (Category, Algorithm) pairs.
        std::vector<std::size_t> width(6, 0);
        for (const auto& row : comparison)
            for (std::size_t c = 0; c < row.size(); ++c)
                width[c] = std::max(width[c], row[c].size());
        const std::string acc_label = "Accuracy-Based Analysis";
        const std::string aic_label = "AIC-Based Analysis";
        // Widen the algorithm columns if a group label overflows its pair.
        if (width[1] + 2 + width[2] < acc_label.size())
            width[2] = acc_label.size() - width[1] - 2;
        if (width[3] + 2 + width[4] < aic_label.size())
            width[4] = aic_label.size() - width[3] - 2;

        auto pad = [](const std::string& s, std::size_t w) {
            return s + std::string(w - s.size(), ' ');
        };
        out << "Model comparison\n";
        out << std::string(width[0] + 2, ' ') << pad(acc_label, width[1] + 2 + width[2]) << "  "
            << aic_label << '\n';
        for (const auto& row : comparison) {
            std::string line;
            for (std::size_t c = 0; c < row.size(); ++c) {
                line += row[c];
                if (c + 1 < row.size()) line.append(width[c] - row[c].size() + 2, ' ');
            }
            out << line << '\n';
        }
    }
    return out.str();
}

std::string render_report_json(const RunReport& report) {
    ordered_json j;
    j["version"] = "0.1.0";
    j["config"] = config_json(report.config);
    ordered_json datasets = ordered_json::array();
    for (const DatasetResult& result : report.datasets) datasets.push_back(dataset_json(result));
    j["datasets"] = std::move(datasets);
    return j.dump(2) + "\n";
}

std::string render_roc_csv(const RocCurve& curve) {
    std::ostringstream out;
    out << "threshold,fpr,tpr\n";
    for (std::size_t i = 0; i < curve.size(); ++i) {
        if (std::isinf(curve.thresholds[i]))
            out << "inf";
        else
            out << format_roundtrip(curve.thresholds[i]);
        out << ',' << format_roundtrip(curve.fpr[i]) << ',' << format_roundtrip(curve.tpr[i])
            << '\n';
    }
    return out.str();
}

namespace {

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write '" + path + "'");
    out << content;
    if (!out) throw DataError("write failed for '" + path + "'");
}

} // namespace

void write_outputs(const RunReport& report) {
    const std::string tables = render_tables(report);
    if (report.config.tables_path.empty())
        std::cout << tables;
    else
        write_text_file(report.config.tables_path, tables);

    if (!report.config.report_path.empty())
        write_text_file(report.config.report_path, render_report_json(report));

    if (!report.config.roc_dir.empty()) {
        std::filesystem::create_directories(report.config.roc_dir);
        for (const DatasetResult& result : report.datasets) {
            if (!result.ok) continue;
            for (const EvaluationRecord& record : result.records) {
                if (record.roc.size() == 0) continue;
                const std::string path =
                    (std::filesystem::path(report.config.roc_dir) /
                     (result.dataset_name + "_" + record.model_name + ".csv"))
                        .string();
                write_text_file(path, render_roc_csv(record.roc));
            }
        }
    }
}

} // namespace mlselect
