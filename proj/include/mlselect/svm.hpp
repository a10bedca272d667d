#pragma once

#include "mlselect/learner.hpp"

#include <cstdint>
#include <vector>

namespace mlselect {

// Signed decision value w.x + b. Throws DataError on dimension mismatch.
double svm_decision(const std::vector<double>& w, double b, const std::vector<double>& x);

class LinearSvmModel final : public FittedModel {
public:
    LinearSvmModel(LearnerSpec spec, FeatureScaler scaler, std::vector<double> weights,
                   double bias);

    // Class 1 iff the margin is >= 0 (ties go to class 1); the probability is
    // the logistic of the margin.
    Prediction predict(const std::vector<double>& features) const override;
    std::size_t param_count() const override { return weights_.size() + 1; }

    // Margin in standardized feature space.
    double decision_value(const std::vector<double>& features) const;

    const std::vector<double>& weights() const { return weights_; }
    double bias() const { return bias_; }

private:
    FeatureScaler scaler_;
    std::vector<double> weights_;
    double bias_;
};

// Primal hinge-loss training, 0.5*|w|^2 + C * sum hinge, by per-sample
// subgradient steps over shuffled epochs with step 1/(C * epoch).
// Features are standardized first. Throws DataError when the training set
// holds a single class.
std::unique_ptr<LinearSvmModel> fit_linear_svm(const Dataset& train, const LearnerSpec& spec,
                                               std::uint64_t seed);

} // namespace mlselect
