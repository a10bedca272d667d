#pragma once

#include "mlselect/evaluation.hpp"

#include <string>
#include <vector>

namespace mlselect {

// Relative importance of the five criteria. Values are nonnegative with a
// positive sum; they are normalized to sum 1 wherever they are used.
struct Weights {
    double accuracy = 1.0;
    double precision = 1.0;
    double recall = 1.0;
    double f_measure = 1.0;
    double aic = 1.0;

    Weights normalized() const;
    double sum() const { return accuracy + precision + recall + f_measure + aic; }
};

struct CriterionRange {
    double min = 0.0;
    double max = 0.0;
};

struct NormalizationRanges {
    CriterionRange accuracy, precision, recall, f_measure, aic;
};

// One model's normalized criterion values in [0,1]; aic is pre-inverted so
// that 1 is the lowest (best) raw AIC.
struct CriterionVector {
    double accuracy = 0.0;
    double precision = 0.0;
    double recall = 0.0;
    double f_measure = 0.0;
    double aic = 0.0;
};

struct NormalizedScores {
    std::vector<CriterionVector> per_model; // parallel to the input records
    NormalizationRanges ranges;
};

// Min-max normalization of each criterion across the records (a constant
// criterion maps to all 1.0); AIC contributes as 1 - minmax so lower raw
// AIC scores higher. Needs at least 2 records.
NormalizedScores normalize_scores(const std::vector<EvaluationRecord>& records);

// Σ wᵢ·cᵢ with the weights normalized to sum 1. All-zero weights error.
double weighted_score(const CriterionVector& criteria, const Weights& weights);

struct CategorySummary {
    Category category = Category::eager;
    double avg_accuracy = 0.0;
    double avg_precision = 0.0;
    double avg_recall = 0.0;
    double avg_f_measure = 0.0;
    double avg_aic = 0.0;
    std::size_t member_count = 0;
};

// Arithmetic means per category, in eager, lazy, hybrid order. A category
// with no members is omitted with a warning on stderr.
std::vector<CategorySummary> category_averages(const std::vector<EvaluationRecord>& records);

struct RankedModel {
    std::string name;
    double score = 0.0;
};

struct Recommendation {
    std::vector<RankedModel> ranked; // composite descending, ties by name
    std::string best_by_accuracy;    // ties: higher F-measure, then name
    std::string best_by_aic;         // lowest raw AIC; ties by name
    std::string best_overall;
    Weights weights;
    NormalizationRanges ranges;
};

// Composite = weighted_score over normalized criteria. best_overall breaks
// composite ties the same way the accuracy basis does (higher raw
// F-measure, then name), so a pure-accuracy weighting reduces to it exactly.
Recommendation recommend_model(const std::vector<EvaluationRecord>& records,
                               const Weights& weights);

} // namespace mlselect
