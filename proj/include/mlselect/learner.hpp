#pragma once

#include "mlselect/dataset.hpp"

#include <cmath>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace mlselect {

enum class Category { eager, lazy, hybrid };

const std::string& category_name(Category c);
Category parse_category(const std::string& name);

// One of the 13 registry configurations. `hyper` holds only the keys the
// model uses; for a stacking hybrid, learning_rate and epochs drive the
// logistic meta-learner while each base's resolved hyperparameters are
// embedded under "<BASE>." prefixed keys (e.g. "NN.epochs").
struct LearnerSpec {
    std::string name;
    Category category = Category::eager;
    std::map<std::string, double> hyper;

    double hyper_at(const std::string& key) const;
};

struct Prediction {
    int label = 0;       // 1 iff prob1 >= 0.5
    double prob1 = 0.0;  // probability of class 1, in [0,1]
};

inline Prediction make_prediction(double prob1) {
    return Prediction{prob1 >= 0.5 ? 1 : 0, prob1};
}

// A trained model. Immutable after fit and safe to share across threads.
class FittedModel {
public:
    virtual ~FittedModel() = default;
    virtual Prediction predict(const std::vector<double>& features) const = 0;
    virtual std::size_t param_count() const = 0;
    const LearnerSpec& spec() const { return spec_; }

protected:
    explicit FittedModel(LearnerSpec spec) : spec_(std::move(spec)) {}
    LearnerSpec spec_;
};

// Table-order model names: DT, SVM, NN, KNN, LNB, then the 8 stacks.
const std::vector<std::string>& registry_model_names();

// Per-model hyperparameter overrides; the empty-string key applies to every
// model that has the hyperparameter.
using HyperOverrides = std::map<std::string, std::map<std::string, double>>;

// The 13 specs (3 eager, 2 lazy, 8 hybrid) in registry order, with overrides
// applied and optionally filtered by category. Throws ConfigError for an
// override that names an unknown model or a key the model does not use.
std::vector<LearnerSpec> registry_all_models(const HyperOverrides& overrides = {},
                                             const std::optional<Category>& filter = {});

LearnerSpec registry_spec(const std::string& name, const HyperOverrides& overrides = {});

// Base model names of a stacking hybrid, in name order ("SVM+DT+NN" ->
// SVM, DT, NN). Throws ConfigError when the name has no '+'.
std::vector<std::string> hybrid_base_names(const std::string& name);

// Train one model. All randomness derives from `seed`; fitting the same
// (train, spec, seed) twice yields identical predictions.
std::unique_ptr<FittedModel> fit_model(const LearnerSpec& spec, const Dataset& train,
                                       std::uint64_t seed);

// Zero-mean unit-variance scaling fitted on training columns. Distance- and
// gradient-based learners (SVM, NN, KNN) apply it; trees and Bayes do not.
class FeatureScaler {
public:
    FeatureScaler() = default;
    static FeatureScaler fit(const Dataset& train);

    std::vector<double> transform(const std::vector<double>& features) const;
    std::size_t dimension() const { return mean_.size(); }

private:
    std::vector<double> mean_;
    std::vector<double> inv_std_; // 0 for constant columns, mapping them to 0
};

inline double logistic(double z) { return 1.0 / (1.0 + std::exp(-z)); }

} // namespace mlselect
