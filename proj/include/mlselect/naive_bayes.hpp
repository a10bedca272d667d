#pragma once

#include "mlselect/learner.hpp"

#include <array>
#include <mutex>
#include <vector>

namespace mlselect {

// Naive Bayes that defers all computation to query time. The first query
// materializes the sufficient statistics (class counts, per-class category
// counts, per-class numeric mean/variance) once; later queries reuse them.
// Priors and categorical likelihoods are Laplace-smoothed with alpha;
// numeric likelihoods are Gaussian with the variance floored at 1e-9.
class LazyNaiveBayesModel final : public FittedModel {
public:
    LazyNaiveBayesModel(LearnerSpec spec, const Dataset& train);

    // Normalized posterior of class 1 given the feature vector.
    Prediction predict(const std::vector<double>& features) const override;
    std::size_t param_count() const override; // 2 x |features| + 1

private:
    struct FeatureStats {
        ColumnKind kind = ColumnKind::numeric;
        std::size_t n_categories = 0;                  // categorical
        std::array<std::vector<double>, 2> cat_count;  // categorical, [class][category]
        std::array<double, 2> mean{};                  // numeric
        std::array<double, 2> variance{};              // numeric, floored
    };

    void compute_stats() const;

    double alpha_ = 1.0;
    std::vector<std::vector<double>> features_; // training rows, feature order
    std::vector<int> targets_;
    std::vector<ColumnKind> kinds_;
    std::vector<std::size_t> cardinalities_; // 0 for numeric columns

    mutable std::once_flag stats_once_;
    mutable std::array<std::size_t, 2> class_n_{};
    mutable std::vector<FeatureStats> stats_;
};

std::unique_ptr<LazyNaiveBayesModel> fit_lazy_naive_bayes(const Dataset& train,
                                                          const LearnerSpec& spec);

} // namespace mlselect
