#include "mlselect/knn.hpp"

#include "mlselect/error.hpp"
#include "mlselect/rng.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace mlselect {

double euclidean_distance(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size())
        throw DataError("euclidean_distance: dimension mismatch (" + std::to_string(a.size()) +
                        " vs " + std::to_string(b.size()) + ")");
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        sum += d * d;
    }
    return std::sqrt(sum);
}

namespace {

double squared_distance(const std::vector<double>& a, const std::vector<double>& b) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        sum += d * d;
    }
    return sum;
}

// (squared distance, training-row index); the index makes ties deterministic.
using Neighbor = std::pair<double, std::size_t>;

} // namespace

std::size_t elbow_pick(const std::vector<std::size_t>& ks, const std::vector<double>& errors) {
    if (ks.empty() || ks.size() != errors.size())
        throw DataError("elbow_pick: candidate and error lists must match and be non-empty");
    if (ks.size() < 3) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < ks.size(); ++i)
            if (errors[i] < errors[best]) best = i;
        return ks[best];
    }
    std::size_t best = 1;
    double best_curve = errors[0] - 2.0 * errors[1] + errors[2];
    for (std::size_t i = 2; i + 1 < ks.size(); ++i) {
        const double curve = errors[i - 1] - 2.0 * errors[i] + errors[i + 1];
        if (curve > best_curve) {
            best_curve = curve;
            best = i;
        }
    }
    return ks[best];
}

std::size_t tune_k(const Dataset& train, std::size_t k_max, std::uint64_t seed) {
    const std::size_t n = train.n_rows();
    if (n < 10) throw DataError("tune_k: needs at least 10 rows, got " + std::to_string(n));

    const auto root = static_cast<std::size_t>(std::sqrt(static_cast<double>(n)));
    const std::size_t cap = std::min(k_max, root);
    std::vector<std::size_t> candidates;
    for (std::size_t k = 1; k <= cap; k += 2) candidates.push_back(k);
    if (candidates.empty()) candidates.push_back(1);
    if (candidates.size() == 1) return candidates.front();

    SplitPair split = stratified_split(train, 0.75, seed);
    FeatureScaler scaler = FeatureScaler::fit(split.train);

    std::vector<std::vector<double>> points;
    points.reserve(split.train.n_rows());
    std::vector<int> labels;
    labels.reserve(split.train.n_rows());
    for (std::size_t r = 0; r < split.train.n_rows(); ++r) {
        points.push_back(scaler.transform(split.train.feature_row(r)));
        labels.push_back(split.train.target(r));
    }

    const std::size_t top = std::min(candidates.back(), points.size());
    std::vector<std::size_t> wrong(candidates.size(), 0);
    std::vector<Neighbor> order(points.size());
    for (std::size_t r = 0; r < split.test.n_rows(); ++r) {
        const std::vector<double> q = scaler.transform(split.test.feature_row(r));
        for (std::size_t i = 0; i < points.size(); ++i)
            order[i] = {squared_distance(q, points[i]), i};
        std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(top),
                          order.end());
        // One sorted neighbor list serves every candidate via prefix votes.
        std::size_t ones = 0, rank = 0, ci = 0;
        for (; rank < top && ci < candidates.size(); ++rank) {
            ones += static_cast<std::size_t>(labels[order[rank].second] == 1);
            while (ci < candidates.size() && candidates[ci] == rank + 1) {
                const std::size_t k = candidates[ci];
                const double prob = static_cast<double>(ones + 1) / static_cast<double>(k + 2);
                const int predicted = prob >= 0.5 ? 1 : 0;
                wrong[ci] += static_cast<std::size_t>(predicted != split.test.target(r));
                ++ci;
            }
        }
    }

    std::vector<double> errors(candidates.size());
    for (std::size_t i = 0; i < candidates.size(); ++i)
        errors[i] = static_cast<double>(wrong[i]) / static_cast<double>(split.test.n_rows());
    return elbow_pick(candidates, errors);
}

KnnModel::KnnModel(LearnerSpec spec, FeatureScaler scaler, std::vector<std::vector<double>> points,
                   std::vector<int> labels, std::size_t k)
    : FittedModel(std::move(spec)),
      scaler_(std::move(scaler)),
      points_(std::move(points)),
      labels_(std::move(labels)),
      k_(k) {
    if (points_.empty()) throw DataError("KnnModel: no training points");
    if (points_.size() != labels_.size()) throw DataError("KnnModel: points/labels mismatch");
}

Prediction KnnModel::predict(const std::vector<double>& features) const {
    const std::vector<double> q = scaler_.transform(features);
    const std::size_t k = std::min(k_, points_.size());
    std::vector<Neighbor> order(points_.size());
    for (std::size_t i = 0; i < points_.size(); ++i)
        order[i] = {squared_distance(q, points_[i]), i};
    std::nth_element(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k - 1),
                     order.end());
    std::size_t ones = 0;
    for (std::size_t i = 0; i < k; ++i)
        ones += static_cast<std::size_t>(labels_[order[i].second] == 1);
    return make_prediction(static_cast<double>(ones + 1) / static_cast<double>(k + 2));
}

std::size_t KnnModel::param_count() const { return scaler_.dimension(); }

std::unique_ptr<KnnModel> fit_knn(const Dataset& train, const LearnerSpec& spec,
                                  std::uint64_t seed) {
    const auto k_max = static_cast<std::size_t>(spec.hyper_at("k_max"));
    const std::size_t k = tune_k(train, k_max, seed);

    FeatureScaler scaler = FeatureScaler::fit(train);
    std::vector<std::vector<double>> points;
    points.reserve(train.n_rows());
    std::vector<int> labels;
    labels.reserve(train.n_rows());
    for (std::size_t r = 0; r < train.n_rows(); ++r) {
        points.push_back(scaler.transform(train.feature_row(r)));
        labels.push_back(train.target(r));
    }
    return std::make_unique<KnnModel>(spec, std::move(scaler), std::move(points),
                                      std::move(labels), k);
}

} // namespace mlselect
