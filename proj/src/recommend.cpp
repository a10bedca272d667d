#include "mlselect/recommend.hpp"

#include "mlselect/error.hpp"

#include <algorithm>
#include <iostream>

namespace mlselect {

namespace {

CriterionRange range_of(const std::vector<double>& values) {
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    return {*lo, *hi};
}

// Constant criteria map to 1.0 by convention.
double minmax(double value, const CriterionRange& range) {
    if (range.max == range.min) return 1.0;
    return (value - range.min) / (range.max - range.min);
}

} // namespace

Weights Weights::normalized() const {
    const double total = sum();
    if (!(total > 0.0)) throw ConfigError("criterion weights must have a positive sum");
    if (accuracy < 0.0 || precision < 0.0 || recall < 0.0 || f_measure < 0.0 || aic < 0.0)
        throw ConfigError("criterion weights must be nonnegative");
    return {accuracy / total, precision / total, recall / total, f_measure / total, aic / total};
}

NormalizedScores normalize_scores(const std::vector<EvaluationRecord>& records) {
    if (records.size() < 2)
        throw DataError("normalize_scores: needs at least 2 records, got " +
                        std::to_string(records.size()));

    std::vector<double> acc, prec, rec, f, aic;
    for (const EvaluationRecord& r : records) {
        acc.push_back(r.metrics.accuracy);
        prec.push_back(r.metrics.precision);
        rec.push_back(r.metrics.recall);
        f.push_back(r.metrics.f_measure);
        aic.push_back(r.aic);
    }

    NormalizedScores out;
    out.ranges = {range_of(acc), range_of(prec), range_of(rec), range_of(f), range_of(aic)};
    for (std::size_t i = 0; i < records.size(); ++i) {
        CriterionVector v;
        v.accuracy = minmax(acc[i], out.ranges.accuracy);
        v.precision = minmax(prec[i], out.ranges.precision);
        v.recall = minmax(rec[i], out.ranges.recall);
        v.f_measure = minmax(f[i], out.ranges.f_measure);
        v.aic = out.ranges.aic.max == out.ranges.aic.min
                    ? 1.0
                    : 1.0 - minmax(aic[i], out.ranges.aic);
        out.per_model.push_back(v);
    }
    return out;
}

double weighted_score(const CriterionVector& criteria, const Weights& weights) {
    const Weights w = weights.normalized();
    return w.accuracy * criteria.accuracy + w.precision * criteria.precision +
           w.recall * criteria.recall + w.f_measure * criteria.f_measure + w.aic * criteria.aic;
}

std::vector<CategorySummary> category_averages(const std::vector<EvaluationRecord>& records) {
    std::vector<CategorySummary> out;
    for (Category category : {Category::eager, Category::lazy, Category::hybrid}) {
        CategorySummary s;
        s.category = category;
        for (const EvaluationRecord& r : records) {
            if (r.category != category) continue;
            s.avg_accuracy += r.metrics.accuracy;
            s.avg_precision += r.metrics.precision;
            s.avg_recall += r.metrics.recall;
            s.avg_f_measure += r.metrics.f_measure;
            s.avg_aic += r.aic;
            ++s.member_count;
        }
        if (s.member_count == 0) {
            std::cerr << "warning: no " << category_name(category)
                      << " models evaluated; category omitted from averages\n";
            continue;
        }
        const auto n = static_cast<double>(s.member_count);
        s.avg_accuracy /= n;
        s.avg_precision /= n;
        s.avg_recall /= n;
        s.avg_f_measure /= n;
        s.avg_aic /= n;
        out.push_back(s);
    }
    return out;
}

Recommendation recommend_model(const std::vector<EvaluationRecord>& records,
                               const Weights& weights) {
    const NormalizedScores normalized = normalize_scores(records);

    Recommendation rec;
    rec.weights = weights;
    rec.ranges = normalized.ranges;

    std::vector<double> composite(records.size());
    for (std::size_t i = 0; i < records.size(); ++i) {
        composite[i] = weighted_score(normalized.per_model[i], weights);
        rec.ranked.push_back({records[i].model_name, composite[i]});
    }
    std::sort(rec.ranked.begin(), rec.ranked.end(), [](const RankedModel& a, const RankedModel& b) {
        if (a.score != b.score) return a.score > b.score;
        return a.name < b.name;
    });

    // (score desc, F desc, name asc) — shared by the accuracy basis and the
    // overall pick so a pure-accuracy weighting reduces to the former.
    auto better = [&](std::size_t i, std::size_t j, double score_i, double score_j) {
        if (score_i != score_j) return score_i > score_j;
        if (records[i].metrics.f_measure != records[j].metrics.f_measure)
            return records[i].metrics.f_measure > records[j].metrics.f_measure;
        return records[i].model_name < records[j].model_name;
    };

    std::size_t by_acc = 0, by_aic = 0, overall = 0;
    for (std::size_t i = 1; i < records.size(); ++i) {
        if (better(i, by_acc, records[i].metrics.accuracy, records[by_acc].metrics.accuracy))
            by_acc = i;
        if (records[i].aic < records[by_aic].aic ||
            (records[i].aic == records[by_aic].aic &&
             records[i].model_name < records[by_aic].model_name))
            by_aic = i;
        if (better(i, overall, composite[i], composite[overall])) overall = i;
    }
    rec.best_by_accuracy = records[by_acc].model_name;
    rec.best_by_aic = records[by_aic].model_name;
    rec.best_overall = records[overall].model_name;
    return rec;
}

} // namespace mlselect
