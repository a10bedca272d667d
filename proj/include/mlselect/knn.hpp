#pragma once

#include "mlselect/learner.hpp"

#include <cstdint>
#include <vector>

namespace mlselect {

// √Σ(xᵢ−yᵢ)². The vectors must have the same length.
double euclidean_distance(const std::vector<double>& a, const std::vector<double>& b);

// Elbow pick over an error curve: the interior candidate whose second
// difference err[i-1] - 2·err[i] + err[i+1] is largest (ties go to the
// smaller k). With fewer than three candidates the lowest-error k wins,
// again preferring the smaller k on ties.
std::size_t elbow_pick(const std::vector<std::size_t>& ks, const std::vector<double>& errors);

// Chooses an odd k from 1..min(k_max, ⌊√n⌋) by elbow_pick over validation
// error on a seeded 75/25 stratified sub-split of `train`. Features are
// standardized by a scaler fit on the sub-split's training side. Requires
// at least 10 rows.
std::size_t tune_k(const Dataset& train, std::size_t k_max, std::uint64_t seed);

// Majority vote over the k nearest stored rows (standardized euclidean
// distance, ties broken by lower training-row index) with a Laplace-
// corrected class-1 probability (count + 1) / (k + 2).
class KnnModel final : public FittedModel {
public:
    KnnModel(LearnerSpec spec, FeatureScaler scaler, std::vector<std::vector<double>> points,
             std::vector<int> labels, std::size_t k);

    Prediction predict(const std::vector<double>& features) const override;
    std::size_t param_count() const override; // feature dimension

    std::size_t k() const { return k_; }

private:
    FeatureScaler scaler_;
    std::vector<std::vector<double>> points_; // standardized training rows
    std::vector<int> labels_;
    std::size_t k_;
};

// Standardizes and stores the training set, tuning k with tune_k.
std::unique_ptr<KnnModel> fit_knn(const Dataset& train, const LearnerSpec& spec,
                                  std::uint64_t seed);

} // namespace mlselect
