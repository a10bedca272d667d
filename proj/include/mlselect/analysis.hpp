#pragma once

#include "mlselect/dataset.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace mlselect {

struct AttributeProfile {
    std::size_t column_index = 0;
    ColumnKind kind = ColumnKind::numeric;
    std::size_t cardinality = 0;      // distinct encoded values
    double target_correlation = 0.0;  // Pearson against the 0/1 target
    double variance = 0.0;            // population variance; 0 iff constant
};

enum class Linearity { linear_tendency, nonlinear_tendency };
enum class SizeClass { small, large };

struct AnalysisReport {
    std::size_t n_rows = 0;
    std::size_t n_features = 0;
    Linearity linearity = Linearity::nonlinear_tendency;
    SizeClass size_class = SizeClass::large;
    std::vector<std::string> suggested_algorithms; // permutation of the 13 registry names
    std::vector<std::size_t> selected_features;    // filled by the pipeline
};

// Rows below this count classify as "small".
inline constexpr std::size_t kSmallDatasetRows = 1000;
// Max |feature-target correlation| at or above this reads as a linear tendency.
inline constexpr double kLinearCorrelationThreshold = 0.5;

inline constexpr double kDefaultTargetThreshold = 0.02;
inline constexpr double kDefaultPairwiseThreshold = 0.95;

// Product-moment correlation. Returns 0 when either vector is constant.
// Throws DataError on length mismatch or length < 2.
double pearson_correlation(const std::vector<double>& x, const std::vector<double>& y);

// One profile per non-target column, in ascending column order.
std::vector<AttributeProfile> profile_attributes(const Dataset& d);

// Pairwise feature correlation matrix, indexed by feature position (the
// i-th entry of d.feature_indices()). Constant columns get 0 everywhere,
// including the diagonal.
std::vector<std::vector<double>> collinearity_matrix(const Dataset& d);

// Correlation filter: drop features with |target correlation| below
// target_threshold, then for each surviving pair with |pairwise correlation|
// above pairwise_threshold drop the member with the smaller |target
// correlation| (tie: the larger column index goes). Returns kept column
// indices ascending. Throws DataError when everything is dropped.
std::vector<std::size_t> select_features(const Dataset& d, double target_threshold,
                                         double pairwise_threshold);

// Linearity and size heuristics plus an ordered suggestion list containing
// every registry model exactly once. A linear tendency moves SVM to the
// front; a small dataset moves LNB to the front. When both apply the order
// is SVM, LNB, then the rest in registry order.
AnalysisReport suggest_initial_algorithms(const std::vector<AttributeProfile>& profiles,
                                          std::size_t n_rows);

} // namespace mlselect
