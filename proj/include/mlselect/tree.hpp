#pragma once

#include "mlselect/learner.hpp"

#include <memory>
#include <vector>

namespace mlselect {

// Candidate binary split of one feature. Numeric: left side is x <= value
// (value is a midpoint between consecutive distinct sorted values).
// Categorical: left side is x == value (value is a category index).
struct SplitCandidate {
    ColumnKind kind = ColumnKind::numeric;
    double value = 0.0;
};

// Gain ratio of a split over a column slice: information gain divided by
// split entropy, base-2 logarithms, clamped into [0,1] against rounding.
// Throws DataError when either side of the split is empty.
double gain_ratio(const std::vector<double>& values, const std::vector<int>& labels,
                  const SplitCandidate& split);

// Same, addressing a column of a dataset slice.
double gain_ratio(const Dataset& d, std::size_t column, const SplitCandidate& split);

struct TreeNode {
    bool is_leaf = true;
    // Leaf: Laplace-corrected class-1 frequency over the node's samples.
    double prob1 = 0.5;
    std::size_t samples = 0;
    // Split.
    std::size_t feature = 0; // position within the feature vector
    SplitCandidate split;
    std::unique_ptr<TreeNode> left;
    std::unique_ptr<TreeNode> right;
};

class DecisionTreeModel final : public FittedModel {
public:
    DecisionTreeModel(LearnerSpec spec, std::unique_ptr<TreeNode> root,
                      std::size_t distinct_split_features);

    Prediction predict(const std::vector<double>& features) const override;
    std::size_t param_count() const override { return distinct_split_features_; }

    const TreeNode& root() const { return *root_; }
    std::size_t depth() const; // edges on the longest root-to-leaf path

private:
    std::unique_ptr<TreeNode> root_;
    std::size_t distinct_split_features_;
};

// Recursive partitioning with exhaustive candidate evaluation per node, the
// maximal gain ratio winning (ties: lowest feature position, then lowest
// split value). A node stops when pure, smaller than 2*min_leaf rows, or
// when no candidate has positive gain ratio.
std::unique_ptr<DecisionTreeModel> fit_decision_tree(const Dataset& train,
                                                     const LearnerSpec& spec);

} // namespace mlselect
