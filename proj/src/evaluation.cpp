#include "mlselect/evaluation.hpp"

#include "mlselect/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace mlselect {

namespace {

constexpr double kProbClip = 1e-6;

double clip_probability(double p) {
    return std::clamp(p, kProbClip, 1.0 - kProbClip);
}

} // namespace

Metrics classification_metrics(const ConfusionMatrix& c) {
    const std::size_t total = c.total();
    if (total == 0) throw DataError("classification_metrics: empty confusion matrix");

    Metrics m;
    m.accuracy = static_cast<double>(c.tp + c.tn) / static_cast<double>(total);
    m.precision =
        c.tp + c.fp > 0 ? static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fp) : 0.0;
    m.recall =
        c.tp + c.fn > 0 ? static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fn) : 0.0;
    m.f_measure = m.precision + m.recall > 0.0
                      ? 2.0 * m.precision * m.recall / (m.precision + m.recall)
                      : 0.0;
    return m;
}

RocCurve roc_curve(const std::vector<ScoredLabel>& scores) {
    std::size_t positives = 0, negatives = 0;
    for (const ScoredLabel& s : scores) (s.label == 1 ? positives : negatives) += 1;
    if (positives == 0 || negatives == 0)
        throw DataError("roc_curve: both classes must be present");

    std::vector<ScoredLabel> sorted = scores;
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const ScoredLabel& a, const ScoredLabel& b) { return a.prob1 > b.prob1; });

    RocCurve curve;
    curve.thresholds.push_back(std::numeric_limits<double>::infinity());
    curve.fpr.push_back(0.0);
    curve.tpr.push_back(0.0);

    std::size_t tp = 0, fp = 0;
    for (std::size_t i = 0; i < sorted.size();) {
        const double score = sorted[i].prob1;
        // All instances sharing a score cross the threshold together.
        for (; i < sorted.size() && sorted[i].prob1 == score; ++i)
            (sorted[i].label == 1 ? tp : fp) += 1;
        curve.thresholds.push_back(score);
        curve.fpr.push_back(static_cast<double>(fp) / static_cast<double>(negatives));
        curve.tpr.push_back(static_cast<double>(tp) / static_cast<double>(positives));
    }
    return curve;
}

double auc(const RocCurve& curve) {
    double area = 0.0;
    for (std::size_t i = 1; i < curve.size(); ++i)
        area += (curve.fpr[i] - curve.fpr[i - 1]) * (curve.tpr[i] + curve.tpr[i - 1]) / 2.0;
    return area;
}

double log_likelihood(const std::vector<ScoredLabel>& predictions) {
    if (predictions.empty()) throw DataError("log_likelihood: no predictions");
    double sum = 0.0;
    for (const ScoredLabel& s : predictions)
        sum += std::log(clip_probability(s.label == 1 ? s.prob1 : 1.0 - s.prob1));
    return sum;
}

double aic_score(std::size_t k, double log_likelihood) {
    return 2.0 * static_cast<double>(k) - 2.0 * log_likelihood;
}

EvaluationRecord evaluate_model(const FittedModel& model, const Dataset& test) {
    if (test.n_rows() == 0) throw DataError("evaluate_model: empty test set");

    EvaluationRecord record;
    record.model_name = model.spec().name;
    record.category = model.spec().category;

    std::vector<ScoredLabel> scored;
    scored.reserve(test.n_rows());
    for (std::size_t r = 0; r < test.n_rows(); ++r) {
        const Prediction p = model.predict(test.feature_row(r));
        const int truth = test.target(r);
        scored.push_back({p.prob1, truth});
        if (p.label == 1)
            (truth == 1 ? record.confusion.tp : record.confusion.fp) += 1;
        else
            (truth == 1 ? record.confusion.fn : record.confusion.tn) += 1;
    }

    record.metrics = classification_metrics(record.confusion);
    const auto counts = test.class_counts();
    if (counts[0] > 0 && counts[1] > 0) {
        record.roc = roc_curve(scored);
        record.auc = auc(record.roc);
    }
    record.log_likelihood = log_likelihood(scored);
    record.param_count = model.param_count();
    record.aic = aic_score(record.param_count, record.log_likelihood);
    return record;
}

} // namespace mlselect
