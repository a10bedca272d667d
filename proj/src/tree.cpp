#include "mlselect/tree.hpp"

#include "mlselect/error.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace mlselect {

namespace {

double entropy2(std::size_t c0, std::size_t c1) {
    const std::size_t n = c0 + c1;
    if (n == 0 || c0 == 0 || c1 == 0) return 0.0;
    double p0 = static_cast<double>(c0) / static_cast<double>(n);
    double p1 = static_cast<double>(c1) / static_cast<double>(n);
    return -(p0 * std::log2(p0) + p1 * std::log2(p1));
}

// Shared arithmetic for the public gain_ratio and the builder's sweep, so
// both produce bit-identical values.
double gain_ratio_from_counts(std::size_t l0, std::size_t l1, std::size_t r0, std::size_t r1) {
    const std::size_t nl = l0 + l1, nr = r0 + r1, n = nl + nr;
    const double fl = static_cast<double>(nl) / static_cast<double>(n);
    const double fr = static_cast<double>(nr) / static_cast<double>(n);

    double info_gain = entropy2(l0 + r0, l1 + r1) - fl * entropy2(l0, l1) - fr * entropy2(r0, r1);
    double split_entropy = -(fl * std::log2(fl) + fr * std::log2(fr));
    double ratio = info_gain / split_entropy;
    return std::clamp(ratio, 0.0, 1.0);
}

bool goes_left(double value, const SplitCandidate& split) {
    return split.kind == ColumnKind::numeric ? value <= split.value : value == split.value;
}

struct BestSplit {
    double ratio = 0.0;
    std::size_t feature = 0;
    SplitCandidate split;
    bool found = false;

    // Strictly-greater acceptance; candidates arrive in (feature, value)
    // ascending order, which realizes the tie-breaking rule.
    void offer(double ratio_, std::size_t feature_, const SplitCandidate& split_) {
        if (!found || ratio_ > ratio) {
            ratio = ratio_;
            feature = feature_;
            split = split_;
            found = true;
        }
    }
};

class TreeBuilder {
public:
    TreeBuilder(const Dataset& train, std::size_t min_leaf)
        : min_leaf_(std::max<std::size_t>(1, min_leaf)) {
        auto feature_cols = train.feature_indices();
        kinds_.reserve(feature_cols.size());
        columns_.reserve(feature_cols.size());
        for (std::size_t col : feature_cols) {
            kinds_.push_back(train.columns[col].kind);
            columns_.push_back(train.column_values(col));
        }
        labels_.reserve(train.n_rows());
        for (std::size_t r = 0; r < train.n_rows(); ++r) labels_.push_back(train.target(r));
    }

    std::unique_ptr<TreeNode> build() {
        std::vector<std::size_t> rows(labels_.size());
        for (std::size_t r = 0; r < rows.size(); ++r) rows[r] = r;
        return grow(rows);
    }

    std::size_t distinct_split_features() const { return used_features_.size(); }

private:
    std::unique_ptr<TreeNode> grow(const std::vector<std::size_t>& rows) {
        std::size_t c1 = 0;
        for (std::size_t r : rows) c1 += static_cast<std::size_t>(labels_[r]);
        const std::size_t c0 = rows.size() - c1;

        auto node = std::make_unique<TreeNode>();
        node->samples = rows.size();
        node->prob1 = (static_cast<double>(c1) + 1.0) / (static_cast<double>(rows.size()) + 2.0);

        if (c0 == 0 || c1 == 0 || rows.size() < 2 * min_leaf_) return node;

        BestSplit best;
        for (std::size_t f = 0; f < columns_.size(); ++f) {
            if (kinds_[f] == ColumnKind::numeric)
                scan_numeric(rows, f, best);
            else
                scan_categorical(rows, f, best);
        }
        if (!best.found || best.ratio <= 0.0) return node;

        std::vector<std::size_t> left_rows, right_rows;
        for (std::size_t r : rows) {
            if (goes_left(columns_[best.feature][r], best.split))
                left_rows.push_back(r);
            else
                right_rows.push_back(r);
        }

        node->is_leaf = false;
        node->feature = best.feature;
        node->split = best.split;
        used_features_.insert(best.feature);
        node->left = grow(left_rows);
        node->right = grow(right_rows);
        return node;
    }

    void scan_numeric(const std::vector<std::size_t>& rows, std::size_t f, BestSplit& best) {
        const auto& column = columns_[f];
        std::vector<std::pair<double, int>> sorted;
        sorted.reserve(rows.size());
        for (std::size_t r : rows) sorted.emplace_back(column[r], labels_[r]);
        std::sort(sorted.begin(), sorted.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });

        std::size_t total1 = 0;
        for (const auto& [value, label] : sorted) total1 += static_cast<std::size_t>(label);
        const std::size_t total0 = sorted.size() - total1;

        std::size_t l0 = 0, l1 = 0;
        for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
            l0 += static_cast<std::size_t>(sorted[i].second == 0);
            l1 += static_cast<std::size_t>(sorted[i].second == 1);
            if (sorted[i].first == sorted[i + 1].first) continue; // equal values stay together
            SplitCandidate split{ColumnKind::numeric,
                                 sorted[i].first + (sorted[i + 1].first - sorted[i].first) / 2.0};
            best.offer(gain_ratio_from_counts(l0, l1, total0 - l0, total1 - l1), f, split);
        }
    }

    void scan_categorical(const std::vector<std::size_t>& rows, std::size_t f, BestSplit& best) {
        const auto& column = columns_[f];
        std::size_t total1 = 0;
        std::map<double, std::pair<std::size_t, std::size_t>> per_category; // value -> (c0, c1)
        for (std::size_t r : rows) {
            auto& counts = per_category[column[r]];
            if (labels_[r] == 0)
                ++counts.first;
            else
                ++counts.second;
            total1 += static_cast<std::size_t>(labels_[r]);
        }
        const std::size_t total0 = rows.size() - total1;
        if (per_category.size() < 2) return;

        for (const auto& [value, counts] : per_category) { // one-vs-rest, ascending value
            auto [l0, l1] = counts;
            SplitCandidate split{ColumnKind::categorical, value};
            best.offer(gain_ratio_from_counts(l0, l1, total0 - l0, total1 - l1), f, split);
        }
    }

    std::size_t min_leaf_;
    std::vector<ColumnKind> kinds_;
    std::vector<std::vector<double>> columns_;
    std::vector<int> labels_;
    std::set<std::size_t> used_features_;
};

std::size_t node_depth(const TreeNode& node) {
    if (node.is_leaf) return 0;
    return 1 + std::max(node_depth(*node.left), node_depth(*node.right));
}

} // namespace

double gain_ratio(const std::vector<double>& values, const std::vector<int>& labels,
                  const SplitCandidate& split) {
    if (values.size() != labels.size())
        throw DataError("gain_ratio: values/labels length mismatch");
    if (values.empty()) throw DataError("gain_ratio: empty slice");

    std::size_t l0 = 0, l1 = 0, r0 = 0, r1 = 0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (goes_left(values[i], split))
            (labels[i] == 0 ? l0 : l1) += 1;
        else
            (labels[i] == 0 ? r0 : r1) += 1;
    }
    if (l0 + l1 == 0 || r0 + r1 == 0)
        throw DataError("gain_ratio: split leaves one side empty");
    return gain_ratio_from_counts(l0, l1, r0, r1);
}

double gain_ratio(const Dataset& d, std::size_t column, const SplitCandidate& split) {
    std::vector<int> labels;
    labels.reserve(d.n_rows());
    for (std::size_t r = 0; r < d.n_rows(); ++r) labels.push_back(d.target(r));
    return gain_ratio(d.column_values(column), labels, split);
}

DecisionTreeModel::DecisionTreeModel(LearnerSpec spec, std::unique_ptr<TreeNode> root,
                                     std::size_t distinct_split_features)
    : FittedModel(std::move(spec)),
      root_(std::move(root)),
      distinct_split_features_(distinct_split_features) {}

Prediction DecisionTreeModel::predict(const std::vector<double>& features) const {
    const TreeNode* node = root_.get();
    while (!node->is_leaf) {
        if (node->feature >= features.size())
            throw DataError("decision tree: feature vector too short");
        node = goes_left(features[node->feature], node->split) ? node->left.get()
                                                               : node->right.get();
    }
    return make_prediction(node->prob1);
}

std::size_t DecisionTreeModel::depth() const { return node_depth(*root_); }

std::unique_ptr<DecisionTreeModel> fit_decision_tree(const Dataset& train,
                                                     const LearnerSpec& spec) {
    if (train.n_rows() == 0) throw DataError("fit_decision_tree: empty training set");
    auto min_leaf = static_cast<std::size_t>(spec.hyper_at("min_leaf"));
    TreeBuilder builder(train, min_leaf);
    auto root = builder.build();
    return std::make_unique<DecisionTreeModel>(spec, std::move(root),
                                               builder.distinct_split_features());
}

} // namespace mlselect
