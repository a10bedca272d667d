#pragma once

#include "mlselect/learner.hpp"

#include <cstdint>
#include <vector>

namespace mlselect {

// Single perceptron-style update: w + rate * (target - estimate) * input.
double weight_update(double w, double rate, double target, double estimate, double input);

// One hidden layer of logistic units feeding a logistic output that emits
// the class-1 probability.
class NeuralNetModel final : public FittedModel {
public:
    NeuralNetModel(LearnerSpec spec, FeatureScaler scaler,
                   std::vector<std::vector<double>> hidden_weights, std::vector<double> hidden_bias,
                   std::vector<double> output_weights, double output_bias);

    Prediction predict(const std::vector<double>& features) const override;
    std::size_t param_count() const override;

    double forward(const std::vector<double>& features) const;

private:
    double forward_scaled(const std::vector<double>& scaled, std::vector<double>& hidden) const;

    FeatureScaler scaler_;
    std::vector<std::vector<double>> hidden_weights_; // [unit][input]
    std::vector<double> hidden_bias_;
    std::vector<double> output_weights_;
    double output_bias_;

    friend std::unique_ptr<NeuralNetModel> fit_neural_net(const Dataset&, const LearnerSpec&,
                                                          std::uint64_t);
};

// Backpropagation with per-sample updates in seeded shuffle order. The
// output layer follows the (target - estimate) * input update form; hidden
// deltas carry the logistic derivative. Weights start uniform in
// [-0.5, 0.5) from the seeded generator; features are standardized.
std::unique_ptr<NeuralNetModel> fit_neural_net(const Dataset& train, const LearnerSpec& spec,
                                               std::uint64_t seed);

} // namespace mlselect
