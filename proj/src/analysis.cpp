#include "mlselect/analysis.hpp"

#include "mlselect/error.hpp"
#include "mlselect/learner.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace mlselect {

double pearson_correlation(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size())
        throw DataError("pearson_correlation: length mismatch");
    if (x.size() < 2)
        throw DataError("pearson_correlation: need at least 2 points");

    const auto n = static_cast<double>(x.size());
    double mean_x = 0.0, mean_y = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mean_x += x[i];
        mean_y += y[i];
    }
    mean_x /= n;
    mean_y /= n;

    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        double dx = x[i] - mean_x;
        double dy = y[i] - mean_y;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0) return 0.0; // constant vector convention
    return sxy / std::sqrt(sxx * syy);
}

std::vector<AttributeProfile> profile_attributes(const Dataset& d) {
    std::vector<double> target;
    target.reserve(d.n_rows());
    for (std::size_t r = 0; r < d.n_rows(); ++r) target.push_back(static_cast<double>(d.target(r)));

    std::vector<AttributeProfile> profiles;
    for (std::size_t col : d.feature_indices()) {
        AttributeProfile p;
        p.column_index = col;
        p.kind = d.columns[col].kind;

        auto values = d.column_values(col);
        std::set<double> distinct(values.begin(), values.end());
        p.cardinality = distinct.size();

        double mean = 0.0;
        for (double v : values) mean += v;
        mean /= static_cast<double>(values.size());
        double var = 0.0;
        for (double v : values) var += (v - mean) * (v - mean);
        p.variance = distinct.size() == 1 ? 0.0 : var / static_cast<double>(values.size());

        p.target_correlation = pearson_correlation(values, target);
        profiles.push_back(p);
    }
    return profiles;
}

std::vector<std::vector<double>> collinearity_matrix(const Dataset& d) {
    auto features = d.feature_indices();
    if (features.size() < 2)
        throw DataError("collinearity_matrix: need at least 2 feature columns");

    std::vector<std::vector<double>> columns;
    columns.reserve(features.size());
    for (std::size_t col : features) columns.push_back(d.column_values(col));

    const std::size_t n = features.size();
    std::vector<std::vector<double>> matrix(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        matrix[i][i] = pearson_correlation(columns[i], columns[i]); // 1, or 0 for a constant column
        for (std::size_t j = i + 1; j < n; ++j) {
            double r = pearson_correlation(columns[i], columns[j]);
            matrix[i][j] = r;
            matrix[j][i] = r;
        }
    }
    return matrix;
}

std::vector<std::size_t> select_features(const Dataset& d, double target_threshold,
                                         double pairwise_threshold) {
    if (target_threshold < 0.0 || target_threshold > 1.0 || pairwise_threshold < 0.0 ||
        pairwise_threshold > 1.0)
        throw DataError("select_features: thresholds must be within [0,1]");

    auto profiles = profile_attributes(d);
    auto features = d.feature_indices();
    std::vector<bool> alive(features.size());
    for (std::size_t i = 0; i < features.size(); ++i)
        alive[i] = std::fabs(profiles[i].target_correlation) >= target_threshold;

    if (features.size() >= 2) {
        auto matrix = collinearity_matrix(d);
        // Lexicographic pair scan; a dropped member stops participating, and
        // dropping never creates new high-correlation pairs.
        for (std::size_t i = 0; i < features.size(); ++i) {
            if (!alive[i]) continue;
            for (std::size_t j = i + 1; j < features.size(); ++j) {
                if (!alive[i]) break;
                if (!alive[j]) continue;
                if (std::fabs(matrix[i][j]) <= pairwise_threshold) continue;
                double ti = std::fabs(profiles[i].target_correlation);
                double tj = std::fabs(profiles[j].target_correlation);
                if (ti < tj) {
                    alive[i] = false;
                } else {
                    alive[j] = false; // tie drops the larger column index
                }
            }
        }
    }

    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < features.size(); ++i)
        if (alive[i]) kept.push_back(features[i]);
    if (kept.empty())
        throw DataError("select_features: all features dropped; relax target_threshold (" +
                        std::to_string(target_threshold) + ") or pairwise_threshold (" +
                        std::to_string(pairwise_threshold) + ")");
    return kept;
}

AnalysisReport suggest_initial_algorithms(const std::vector<AttributeProfile>& profiles,
                                          std::size_t n_rows) {
    if (profiles.empty())
        throw DataError("suggest_initial_algorithms: no attribute profiles");

    double max_abs_corr = 0.0;
    for (const auto& p : profiles)
        max_abs_corr = std::max(max_abs_corr, std::fabs(p.target_correlation));

    AnalysisReport report;
    report.n_rows = n_rows;
    report.n_features = profiles.size();
    report.linearity = max_abs_corr >= kLinearCorrelationThreshold ? Linearity::linear_tendency
                                                                   : Linearity::nonlinear_tendency;
    report.size_class = n_rows < kSmallDatasetRows ? SizeClass::small : SizeClass::large;

    std::vector<std::string> front;
    if (report.linearity == Linearity::linear_tendency) front.push_back("SVM");
    if (report.size_class == SizeClass::small) front.push_back("LNB");

    report.suggested_algorithms = front;
    for (const auto& name : registry_model_names()) {
        if (std::find(front.begin(), front.end(), name) == front.end())
            report.suggested_algorithms.push_back(name);
    }
    return report;
}

} // namespace mlselect
