#include "mlselect/naive_bayes.hpp"

#include "mlselect/error.hpp"

#include <cmath>

namespace mlselect {

namespace {

constexpr double kVarianceFloor = 1e-9;

double gaussian_log_density(double x, double mean, double variance) {
    const double d = x - mean;
    return -0.5 * std::log(2.0 * 3.14159265358979323846 * variance) - d * d / (2.0 * variance);
}

} // namespace

LazyNaiveBayesModel::LazyNaiveBayesModel(LearnerSpec spec, const Dataset& train)
    : FittedModel(std::move(spec)) {
    if (train.n_rows() == 0) throw DataError("fit_lazy_naive_bayes: empty training set");
    alpha_ = this->spec().hyper_at("alpha");
    if (alpha_ <= 0.0) throw ConfigError("alpha must be positive, got " + std::to_string(alpha_));

    features_.reserve(train.n_rows());
    targets_.reserve(train.n_rows());
    for (std::size_t r = 0; r < train.n_rows(); ++r) {
        features_.push_back(train.feature_row(r));
        targets_.push_back(train.target(r));
    }
    for (std::size_t col : train.feature_indices()) {
        const ColumnSchema& schema = train.columns[col];
        kinds_.push_back(schema.kind);
        cardinalities_.push_back(
            schema.kind == ColumnKind::categorical ? schema.categories.size() : 0);
    }
}

void LazyNaiveBayesModel::compute_stats() const {
    class_n_ = {0, 0};
    for (int y : targets_) ++class_n_[static_cast<std::size_t>(y)];

    stats_.resize(kinds_.size());
    for (std::size_t f = 0; f < kinds_.size(); ++f) {
        FeatureStats& s = stats_[f];
        s.kind = kinds_[f];
        if (s.kind == ColumnKind::categorical) {
            s.n_categories = cardinalities_[f];
            s.cat_count[0].assign(s.n_categories, 0.0);
            s.cat_count[1].assign(s.n_categories, 0.0);
            for (std::size_t r = 0; r < features_.size(); ++r) {
                const auto cat = static_cast<std::size_t>(features_[r][f]);
                if (cat < s.n_categories)
                    s.cat_count[static_cast<std::size_t>(targets_[r])][cat] += 1.0;
            }
        } else {
            for (std::size_t c = 0; c < 2; ++c) {
                const std::size_t n_c = class_n_[c];
                if (n_c == 0) {
                    s.variance[c] = kVarianceFloor;
                    continue;
                }
                double mean = 0.0;
                for (std::size_t r = 0; r < features_.size(); ++r)
                    if (static_cast<std::size_t>(targets_[r]) == c) mean += features_[r][f];
                mean /= static_cast<double>(n_c);
                double var = 0.0;
                for (std::size_t r = 0; r < features_.size(); ++r)
                    if (static_cast<std::size_t>(targets_[r]) == c) {
                        const double d = features_[r][f] - mean;
                        var += d * d;
                    }
                var /= static_cast<double>(n_c);
                s.mean[c] = mean;
                s.variance[c] = std::max(var, kVarianceFloor);
            }
        }
    }
}

Prediction LazyNaiveBayesModel::predict(const std::vector<double>& features) const {
    std::call_once(stats_once_, [this] { compute_stats(); });
    if (features.size() != kinds_.size())
        throw DataError("feature vector has dimension " + std::to_string(features.size()) +
                        ", model expects " + std::to_string(kinds_.size()));

    const double n = static_cast<double>(targets_.size());
    std::array<double, 2> log_score{};
    for (std::size_t c = 0; c < 2; ++c) {
        log_score[c] =
            std::log((static_cast<double>(class_n_[c]) + alpha_) / (n + 2.0 * alpha_));
        for (std::size_t f = 0; f < features.size(); ++f) {
            const FeatureStats& s = stats_[f];
            if (s.kind == ColumnKind::categorical) {
                const auto cat = static_cast<std::size_t>(features[f]);
                const double count = cat < s.n_categories ? s.cat_count[c][cat] : 0.0;
                log_score[c] +=
                    std::log((count + alpha_) /
                             (static_cast<double>(class_n_[c]) +
                              alpha_ * static_cast<double>(s.n_categories)));
            } else if (class_n_[c] > 0) {
                log_score[c] += gaussian_log_density(features[f], s.mean[c], s.variance[c]);
            }
        }
    }
    const double prob1 = 1.0 / (1.0 + std::exp(log_score[0] - log_score[1]));
    return make_prediction(prob1);
}

std::size_t LazyNaiveBayesModel::param_count() const { return 2 * kinds_.size() + 1; }

std::unique_ptr<LazyNaiveBayesModel> fit_lazy_naive_bayes(const Dataset& train,
                                                          const LearnerSpec& spec) {
    return std::make_unique<LazyNaiveBayesModel>(spec, train);
}

} // namespace mlselect
