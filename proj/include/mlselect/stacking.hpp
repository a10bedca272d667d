#pragma once

#include "mlselect/learner.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace mlselect {

// Base specs reconstructed from a hybrid spec's "<BASE>."-prefixed keys;
// keys the hybrid does not carry fall back to registry defaults.
std::vector<LearnerSpec> base_specs_of(const LearnerSpec& hybrid);

// Stratified fold labels, one per row: within each class, seeded-shuffled
// row indices are dealt round-robin across folds, so every fold's training
// complement keeps both classes. When the rarer class has fewer rows than
// `folds` the count drops to 2; fewer than 2 rows of a class is an error.
std::vector<std::size_t> stratified_folds(const Dataset& train, std::size_t folds,
                                          std::uint64_t seed);

// result[base][row]: class-1 probability from the base model fit with that
// row's fold held out. Every row gets exactly one prediction per base.
std::vector<std::vector<double>> cross_fit_oof(const Dataset& train,
                                               const std::vector<LearnerSpec>& bases,
                                               std::size_t folds, std::uint64_t seed);

// Single logistic unit over probability columns, trained per-sample with the
// (target - estimate) * input update in seeded shuffle order. Weights start
// uniform in [-0.5, 0.5) (weights first, then bias). Returns (weights, bias).
std::pair<std::vector<double>, double> fit_meta_unit(
    const std::vector<std::vector<double>>& columns, const std::vector<int>& targets, double rate,
    std::size_t epochs, std::uint64_t seed);

// Level-0 bases feeding a logistic meta-unit over their probabilities.
class StackingModel final : public FittedModel {
public:
    StackingModel(LearnerSpec spec, std::vector<std::unique_ptr<FittedModel>> bases,
                  std::vector<double> meta_weights, double meta_bias);

    Prediction predict(const std::vector<double>& features) const override;
    std::size_t param_count() const override; // sum of base counts + |bases| + 1

    const std::vector<double>& meta_weights() const { return meta_weights_; }
    double meta_bias() const { return meta_bias_; }

private:
    std::vector<std::unique_ptr<FittedModel>> bases_;
    std::vector<double> meta_weights_;
    double meta_bias_ = 0.0;
};

// Out-of-fold base probabilities train the meta-unit, then the bases are
// refit on the full training set for prediction.
std::unique_ptr<StackingModel> fit_stacking(const Dataset& train,
                                            const std::vector<LearnerSpec>& bases,
                                            const LearnerSpec& spec, std::uint64_t seed);

// Name-driven form: "SVM+KNN" stacks bases SVM and KNN.
std::unique_ptr<StackingModel> fit_stacking(const Dataset& train, const LearnerSpec& spec,
                                            std::uint64_t seed);

} // namespace mlselect
