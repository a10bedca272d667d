#pragma once

#include "mlselect/learner.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mlselect {

// Counts with class 1 as the positive class.
struct ConfusionMatrix {
    std::size_t tp = 0, fp = 0, fn = 0, tn = 0;

    std::size_t total() const { return tp + fp + fn + tn; }
};

struct Metrics {
    double accuracy = 0.0;
    double precision = 0.0;
    double recall = 0.0;
    double f_measure = 0.0;
};

// accuracy (tp+tn)/total, precision tp/(tp+fp), recall tp/(tp+fn) — the
// latter two 0 when their denominator is 0 — and F = 2pr/(p+r) (0 when
// p+r = 0). The matrix must count at least one row.
Metrics classification_metrics(const ConfusionMatrix& c);

struct ScoredLabel {
    double prob1 = 0.0;
    int label = 0;
};

// Vertices swept over distinct scores in descending order. thresholds[0] is
// +infinity (nothing classified positive), so the curve starts at (0,0) and
// ends at (1,1); instances with equal scores move together.
struct RocCurve {
    std::vector<double> thresholds;
    std::vector<double> fpr;
    std::vector<double> tpr;

    std::size_t size() const { return thresholds.size(); }
};

// Requires both labels present; throws DataError otherwise.
RocCurve roc_curve(const std::vector<ScoredLabel>& scores);

// Trapezoidal area; equals the probability a random positive outscores a
// random negative, ties counting one half.
double auc(const RocCurve& curve);

// Sum of ln p̂(true label), each probability clipped to [1e-6, 1 - 1e-6]
// before the logarithm. Always <= 0.
double log_likelihood(const std::vector<ScoredLabel>& predictions);

// 2k - 2·log_likelihood; lower is better.
double aic_score(std::size_t k, double log_likelihood);

struct EvaluationRecord {
    std::string model_name;
    Category category = Category::eager;
    Metrics metrics;
    ConfusionMatrix confusion;
    std::optional<double> auc; // empty when the test set has one class
    double log_likelihood = 0.0;
    std::size_t param_count = 0;
    double aic = 0.0;
    RocCurve roc; // empty when auc is empty
};

// Runs the model on every test row and assembles the record. A single-class
// test set still yields a record, with auc and the curve left empty.
EvaluationRecord evaluate_model(const FittedModel& model, const Dataset& test);

} // namespace mlselect
