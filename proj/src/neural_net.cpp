#include "mlselect/neural_net.hpp"

#include "mlselect/error.hpp"
#include "mlselect/rng.hpp"

namespace mlselect {

double weight_update(double w, double rate, double target, double estimate, double input) {
    return w + rate * (target - estimate) * input;
}

NeuralNetModel::NeuralNetModel(LearnerSpec spec, FeatureScaler scaler,
                               std::vector<std::vector<double>> hidden_weights,
                               std::vector<double> hidden_bias,
                               std::vector<double> output_weights, double output_bias)
    : FittedModel(std::move(spec)),
      scaler_(std::move(scaler)),
      hidden_weights_(std::move(hidden_weights)),
      hidden_bias_(std::move(hidden_bias)),
      output_weights_(std::move(output_weights)),
      output_bias_(output_bias) {}

double NeuralNetModel::forward_scaled(const std::vector<double>& scaled,
                                      std::vector<double>& hidden) const {
    const std::size_t units = hidden_weights_.size();
    hidden.resize(units);
    for (std::size_t j = 0; j < units; ++j) {
        double z = hidden_bias_[j];
        const auto& row = hidden_weights_[j];
        for (std::size_t i = 0; i < row.size(); ++i) z += row[i] * scaled[i];
        hidden[j] = logistic(z);
    }
    double z = output_bias_;
    for (std::size_t j = 0; j < units; ++j) z += output_weights_[j] * hidden[j];
    return logistic(z);
}

double NeuralNetModel::forward(const std::vector<double>& features) const {
    std::vector<double> hidden;
    return forward_scaled(scaler_.transform(features), hidden);
}

Prediction NeuralNetModel::predict(const std::vector<double>& features) const {
    return make_prediction(forward(features));
}

std::size_t NeuralNetModel::param_count() const {
    std::size_t count = output_weights_.size() + 1;
    for (const auto& row : hidden_weights_) count += row.size();
    count += hidden_bias_.size();
    return count;
}

std::unique_ptr<NeuralNetModel> fit_neural_net(const Dataset& train, const LearnerSpec& spec,
                                               std::uint64_t seed) {
    if (train.n_rows() == 0) throw DataError("fit_neural_net: empty training set");

    const double rate = spec.hyper_at("learning_rate");
    const auto units = static_cast<std::size_t>(spec.hyper_at("hidden_units"));
    const auto epochs = static_cast<std::size_t>(spec.hyper_at("epochs"));

    FeatureScaler scaler = FeatureScaler::fit(train);
    const std::size_t dim = scaler.dimension();
    const std::size_t n = train.n_rows();

    std::vector<std::vector<double>> x;
    x.reserve(n);
    std::vector<double> y;
    y.reserve(n);
    for (std::size_t r = 0; r < n; ++r) {
        x.push_back(scaler.transform(train.feature_row(r)));
        y.push_back(static_cast<double>(train.target(r)));
    }

    SplitMix64 rng(seed);
    // Initialization order is fixed: hidden weights row-major, hidden
    // biases, output weights, output bias.
    std::vector<std::vector<double>> w1(units, std::vector<double>(dim));
    for (auto& row : w1)
        for (double& w : row) w = rng.uniform(-0.5, 0.5);
    std::vector<double> b1(units);
    for (double& b : b1) b = rng.uniform(-0.5, 0.5);
    std::vector<double> w2(units);
    for (double& w : w2) w = rng.uniform(-0.5, 0.5);
    double b2 = rng.uniform(-0.5, 0.5);

    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::vector<double> hidden(units);

    NeuralNetModel net(spec, scaler, std::move(w1), std::move(b1), std::move(w2), b2);
    for (std::size_t epoch = 0; epoch < epochs; ++epoch) {
        rng.shuffle(order);
        for (std::size_t i : order) {
            double estimate = net.forward_scaled(x[i], hidden);
            double delta_out = y[i] - estimate;

            // Hidden deltas use the pre-update output weights.
            std::vector<double> delta_hidden(units);
            for (std::size_t j = 0; j < units; ++j)
                delta_hidden[j] = hidden[j] * (1.0 - hidden[j]) * net.output_weights_[j] * delta_out;

            for (std::size_t j = 0; j < units; ++j)
                net.output_weights_[j] =
                    weight_update(net.output_weights_[j], rate, y[i], estimate, hidden[j]);
            net.output_bias_ = weight_update(net.output_bias_, rate, y[i], estimate, 1.0);

            for (std::size_t j = 0; j < units; ++j) {
                auto& row = net.hidden_weights_[j];
                for (std::size_t k = 0; k < dim; ++k) row[k] += rate * delta_hidden[j] * x[i][k];
                net.hidden_bias_[j] += rate * delta_hidden[j];
            }
        }
    }
    return std::make_unique<NeuralNetModel>(std::move(net));
}

} // namespace mlselect
