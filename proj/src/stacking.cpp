#include "mlselect/stacking.hpp"

#include "mlselect/error.hpp"
#include "mlselect/neural_net.hpp"
#include "mlselect/rng.hpp"

#include <algorithm>
#include <limits>

namespace mlselect {

std::vector<LearnerSpec> base_specs_of(const LearnerSpec& hybrid) {
    std::vector<LearnerSpec> bases;
    for (const std::string& name : hybrid_base_names(hybrid.name)) {
        LearnerSpec base = registry_spec(name);
        for (auto& [key, value] : base.hyper) {
            auto it = hybrid.hyper.find(name + "." + key);
            if (it != hybrid.hyper.end()) value = it->second;
        }
        bases.push_back(std::move(base));
    }
    return bases;
}

std::vector<std::size_t> stratified_folds(const Dataset& train, std::size_t folds,
                                          std::uint64_t seed) {
    if (folds < 2) throw ConfigError("stack_folds must be >= 2");
    const auto counts = train.class_counts();
    const std::size_t rare = std::min(counts[0], counts[1]);
    if (rare < 2)
        throw DataError("stacking needs >= 2 rows of each class (got " +
                        std::to_string(counts[0]) + " and " + std::to_string(counts[1]) + ")");
    const std::size_t effective = rare < folds ? 2 : folds;

    SplitMix64 rng(seed);
    std::vector<std::size_t> fold_of(train.n_rows());
    for (int cls = 0; cls < 2; ++cls) {
        std::vector<std::size_t> members;
        for (std::size_t r = 0; r < train.n_rows(); ++r)
            if (train.target(r) == cls) members.push_back(r);
        rng.shuffle(members);
        for (std::size_t i = 0; i < members.size(); ++i) fold_of[members[i]] = i % effective;
    }
    return fold_of;
}

std::vector<std::vector<double>> cross_fit_oof(const Dataset& train,
                                               const std::vector<LearnerSpec>& bases,
                                               std::size_t folds, std::uint64_t seed) {
    if (bases.size() < 2) throw ConfigError("stacking needs at least 2 base models");
    const std::vector<std::size_t> fold_of = stratified_folds(train, folds, seed);
    const std::size_t effective = *std::max_element(fold_of.begin(), fold_of.end()) + 1;

    // NaN marks rows no fold has predicted yet; none may survive the loop.
    std::vector<std::vector<double>> oof(
        bases.size(),
        std::vector<double>(train.n_rows(), std::numeric_limits<double>::quiet_NaN()));
    for (std::size_t fold = 0; fold < effective; ++fold) {
        std::vector<std::size_t> fit_rows, held_rows;
        for (std::size_t r = 0; r < train.n_rows(); ++r)
            (fold_of[r] == fold ? held_rows : fit_rows).push_back(r);
        const Dataset sub = train.take_rows(fit_rows);
        const std::uint64_t fold_seed = derive_seed(seed, fold);
        for (std::size_t b = 0; b < bases.size(); ++b) {
            const auto model = fit_model(bases[b], sub, derive_seed(fold_seed, bases[b].name));
            for (std::size_t r : held_rows) oof[b][r] = model->predict(train.feature_row(r)).prob1;
        }
    }
    return oof;
}

std::pair<std::vector<double>, double> fit_meta_unit(
    const std::vector<std::vector<double>>& columns, const std::vector<int>& targets, double rate,
    std::size_t epochs, std::uint64_t seed) {
    if (columns.empty()) throw DataError("fit_meta_unit: no input columns");
    const std::size_t n = targets.size();
    for (const auto& column : columns)
        if (column.size() != n) throw DataError("fit_meta_unit: column/target length mismatch");

    SplitMix64 rng(seed);
    std::vector<double> w(columns.size());
    for (double& v : w) v = rng.uniform(-0.5, 0.5);
    double bias = rng.uniform(-0.5, 0.5);

    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    for (std::size_t epoch = 0; epoch < epochs; ++epoch) {
        rng.shuffle(order);
        for (std::size_t r : order) {
            double z = bias;
            for (std::size_t j = 0; j < w.size(); ++j) z += w[j] * columns[j][r];
            const double estimate = logistic(z);
            const double y = static_cast<double>(targets[r]);
            for (std::size_t j = 0; j < w.size(); ++j)
                w[j] = weight_update(w[j], rate, y, estimate, columns[j][r]);
            bias = weight_update(bias, rate, y, estimate, 1.0);
        }
    }
    return {std::move(w), bias};
}

StackingModel::StackingModel(LearnerSpec spec, std::vector<std::unique_ptr<FittedModel>> bases,
                             std::vector<double> meta_weights, double meta_bias)
    : FittedModel(std::move(spec)),
      bases_(std::move(bases)),
      meta_weights_(std::move(meta_weights)),
      meta_bias_(meta_bias) {
    if (bases_.size() != meta_weights_.size())
        throw DataError("StackingModel: one meta weight per base required");
}

Prediction StackingModel::predict(const std::vector<double>& features) const {
    double z = meta_bias_;
    for (std::size_t b = 0; b < bases_.size(); ++b)
        z += meta_weights_[b] * bases_[b]->predict(features).prob1;
    return make_prediction(logistic(z));
}

std::size_t StackingModel::param_count() const {
    std::size_t count = meta_weights_.size() + 1;
    for (const auto& base : bases_) count += base->param_count();
    return count;
}

std::unique_ptr<StackingModel> fit_stacking(const Dataset& train,
                                            const std::vector<LearnerSpec>& bases,
                                            const LearnerSpec& spec, std::uint64_t seed) {
    if (bases.size() < 2) throw ConfigError("stacking needs at least 2 base models");
    const auto folds = static_cast<std::size_t>(spec.hyper_at("stack_folds"));
    const double rate = spec.hyper_at("learning_rate");
    const auto epochs = static_cast<std::size_t>(spec.hyper_at("epochs"));

    const auto oof = cross_fit_oof(train, bases, folds, seed);
    std::vector<int> targets(train.n_rows());
    for (std::size_t r = 0; r < train.n_rows(); ++r) targets[r] = train.target(r);
    auto [weights, bias] = fit_meta_unit(oof, targets, rate, epochs, derive_seed(seed, "meta"));

    std::vector<std::unique_ptr<FittedModel>> fitted;
    fitted.reserve(bases.size());
    for (const LearnerSpec& base : bases)
        fitted.push_back(fit_model(base, train, derive_seed(seed, base.name)));
    return std::make_unique<StackingModel>(spec, std::move(fitted), std::move(weights), bias);
}

std::unique_ptr<StackingModel> fit_stacking(const Dataset& train, const LearnerSpec& spec,
                                            std::uint64_t seed) {
    return fit_stacking(train, base_specs_of(spec), spec, seed);
}

} // namespace mlselect
