#include "mlselect/learner.hpp"

#include "mlselect/error.hpp"
#include "mlselect/knn.hpp"
#include "mlselect/naive_bayes.hpp"
#include "mlselect/neural_net.hpp"
#include "mlselect/stacking.hpp"
#include "mlselect/svm.hpp"
#include "mlselect/tree.hpp"

#include <algorithm>
#include <cmath>

namespace mlselect {

const std::string& category_name(Category c) {
    static const std::string names[] = {"eager", "lazy", "hybrid"};
    return names[static_cast<int>(c)];
}

Category parse_category(const std::string& name) {
    if (name == "eager") return Category::eager;
    if (name == "lazy") return Category::lazy;
    if (name == "hybrid") return Category::hybrid;
    throw ConfigError("unknown category '" + name + "' (expected eager, lazy, or hybrid)");
}

double LearnerSpec::hyper_at(const std::string& key) const {
    auto it = hyper.find(key);
    if (it == hyper.end())
        throw ConfigError("model '" + name + "' has no hyperparameter '" + key + "'");
    return it->second;
}

const std::vector<std::string>& registry_model_names() {
    static const std::vector<std::string> names = {
        "DT",     "SVM",       "NN",      "KNN",    "LNB",    "KNN+LNB", "SVM+DT+NN",
        "SVM+KNN", "DT+KNN",   "NN+KNN",  "SVM+LNB", "DT+LNB", "NN+LNB",
    };
    return names;
}

namespace {

LearnerSpec default_spec(const std::string& name) {
    LearnerSpec spec;
    spec.name = name;
    if (name == "DT") {
        spec.category = Category::eager;
        spec.hyper = {{"min_leaf", 5.0}};
    } else if (name == "SVM") {
        spec.category = Category::eager;
        spec.hyper = {{"svm_penalty", 1.0}, {"epochs", 100.0}};
    } else if (name == "NN") {
        spec.category = Category::eager;
        spec.hyper = {{"learning_rate", 0.1}, {"hidden_units", 16.0}, {"epochs", 500.0}};
    } else if (name == "KNN") {
        spec.category = Category::lazy;
        spec.hyper = {{"k_max", 25.0}};
    } else if (name == "LNB") {
        spec.category = Category::lazy;
        spec.hyper = {{"alpha", 1.0}};
    } else if (name.find('+') != std::string::npos) {
        spec.category = Category::hybrid;
        spec.hyper = {{"stack_folds", 5.0}, {"learning_rate", 0.1}, {"epochs", 500.0}};
    } else {
        throw ConfigError("unknown model '" + name + "'");
    }
    return spec;
}

void apply_overrides(LearnerSpec& spec, const HyperOverrides& overrides) {
    auto apply = [&](const std::map<std::string, double>& values, bool strict) {
        for (const auto& [key, value] : values) {
            auto it = spec.hyper.find(key);
            if (it == spec.hyper.end()) {
                if (strict)
                    throw ConfigError("model '" + spec.name + "' has no hyperparameter '" + key + "'");
                continue;
            }
            it->second = value;
        }
    };
    if (auto it = overrides.find(""); it != overrides.end()) apply(it->second, false);
    if (auto it = overrides.find(spec.name); it != overrides.end()) apply(it->second, true);
}

// Overrides flow into hybrids through their bases: each base is resolved
// with the same overrides and embedded under prefixed keys.
LearnerSpec resolved_spec(const std::string& name, const HyperOverrides& overrides) {
    LearnerSpec spec = default_spec(name);
    apply_overrides(spec, overrides);
    if (spec.category == Category::hybrid) {
        for (const std::string& base : hybrid_base_names(name)) {
            LearnerSpec base_spec = resolved_spec(base, overrides);
            for (const auto& [key, value] : base_spec.hyper) spec.hyper[base + "." + key] = value;
        }
    }
    return spec;
}

} // namespace

std::vector<std::string> hybrid_base_names(const std::string& name) {
    std::vector<std::string> bases;
    std::size_t start = 0;
    while (true) {
        const std::size_t plus = name.find('+', start);
        if (plus == std::string::npos) {
            bases.push_back(name.substr(start));
            break;
        }
        bases.push_back(name.substr(start, plus - start));
        start = plus + 1;
    }
    if (bases.size() < 2)
        throw ConfigError("'" + name + "' is not a stacking hybrid name");
    return bases;
}

std::vector<LearnerSpec> registry_all_models(const HyperOverrides& overrides,
                                             const std::optional<Category>& filter) {
    const auto& names = registry_model_names();
    for (const auto& [model, values] : overrides) {
        if (model.empty()) continue;
        if (std::find(names.begin(), names.end(), model) == names.end())
            throw ConfigError("hyperparameter override for unknown model '" + model + "'");
        (void)values;
    }

    std::vector<LearnerSpec> specs;
    for (const auto& name : names) {
        LearnerSpec spec = resolved_spec(name, overrides);
        if (!filter || spec.category == *filter) specs.push_back(std::move(spec));
    }
    return specs;
}

LearnerSpec registry_spec(const std::string& name, const HyperOverrides& overrides) {
    return resolved_spec(name, overrides);
}

std::unique_ptr<FittedModel> fit_model(const LearnerSpec& spec, const Dataset& train,
                                       std::uint64_t seed) {
    if (spec.name == "DT") return fit_decision_tree(train, spec);
    if (spec.name == "SVM") return fit_linear_svm(train, spec, seed);
    if (spec.name == "NN") return fit_neural_net(train, spec, seed);
    if (spec.name == "KNN") return fit_knn(train, spec, seed);
    if (spec.name == "LNB") return fit_lazy_naive_bayes(train, spec);
    if (spec.category == Category::hybrid) return fit_stacking(train, spec, seed);
    throw ConfigError("unknown model '" + spec.name + "'");
}

FeatureScaler FeatureScaler::fit(const Dataset& train) {
    FeatureScaler scaler;
    auto features = train.feature_indices();
    const auto n = static_cast<double>(train.n_rows());
    for (std::size_t col : features) {
        double mean = 0.0;
        for (const auto& row : train.rows) mean += row[col];
        mean /= n;
        double var = 0.0;
        for (const auto& row : train.rows) {
            double d = row[col] - mean;
            var += d * d;
        }
        var /= n;
        scaler.mean_.push_back(mean);
        scaler.inv_std_.push_back(var > 0.0 ? 1.0 / std::sqrt(var) : 0.0);
    }
    return scaler;
}

std::vector<double> FeatureScaler::transform(const std::vector<double>& features) const {
    if (features.size() != mean_.size())
        throw DataError("feature vector has dimension " + std::to_string(features.size()) +
                        ", scaler expects " + std::to_string(mean_.size()));
    std::vector<double> out(features.size());
    for (std::size_t i = 0; i < features.size(); ++i)
        out[i] = (features[i] - mean_[i]) * inv_std_[i];
    return out;
}

} // namespace mlselect
