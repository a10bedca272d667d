#include "mlselect/svm.hpp"

#include "mlselect/error.hpp"
#include "mlselect/rng.hpp"

namespace mlselect {

double svm_decision(const std::vector<double>& w, double b, const std::vector<double>& x) {
    if (w.size() != x.size())
        throw DataError("svm_decision: weight/input dimension mismatch");
    double z = b;
    for (std::size_t i = 0; i < w.size(); ++i) z += w[i] * x[i];
    return z;
}

LinearSvmModel::LinearSvmModel(LearnerSpec spec, FeatureScaler scaler,
                               std::vector<double> weights, double bias)
    : FittedModel(std::move(spec)),
      scaler_(std::move(scaler)),
      weights_(std::move(weights)),
      bias_(bias) {}

double LinearSvmModel::decision_value(const std::vector<double>& features) const {
    return svm_decision(weights_, bias_, scaler_.transform(features));
}

Prediction LinearSvmModel::predict(const std::vector<double>& features) const {
    double margin = decision_value(features);
    double prob1 = logistic(margin);
    return Prediction{margin >= 0.0 ? 1 : 0, prob1};
}

std::unique_ptr<LinearSvmModel> fit_linear_svm(const Dataset& train, const LearnerSpec& spec,
                                               std::uint64_t seed) {
    auto counts = train.class_counts();
    if (counts[0] == 0 || counts[1] == 0)
        throw DataError("fit_linear_svm: training set holds a single class");

    const double penalty = spec.hyper_at("svm_penalty");
    const auto epochs = static_cast<std::size_t>(spec.hyper_at("epochs"));
    const std::size_t n = train.n_rows();

    FeatureScaler scaler = FeatureScaler::fit(train);
    std::vector<std::vector<double>> x;
    x.reserve(n);
    std::vector<double> y;
    y.reserve(n);
    for (std::size_t r = 0; r < n; ++r) {
        x.push_back(scaler.transform(train.feature_row(r)));
        y.push_back(train.target(r) == 1 ? 1.0 : -1.0);
    }

    std::vector<double> w(scaler.dimension(), 0.0);
    double b = 0.0;

    SplitMix64 rng(seed);
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;

    for (std::size_t epoch = 1; epoch <= epochs; ++epoch) {
        const double step = 1.0 / (penalty * static_cast<double>(epoch));
        rng.shuffle(order);
        for (std::size_t i : order) {
            double margin = y[i] * svm_decision(w, b, x[i]);
            // Regularizer split evenly over the samples of the epoch.
            const double shrink = 1.0 - step / static_cast<double>(n);
            for (double& wj : w) wj *= shrink;
            if (margin < 1.0) {
                const double scale = step * penalty * y[i];
                for (std::size_t j = 0; j < w.size(); ++j) w[j] += scale * x[i][j];
                b += scale;
            }
        }
    }
    return std::make_unique<LinearSvmModel>(spec, std::move(scaler), std::move(w), b);
}

} // namespace mlselect
