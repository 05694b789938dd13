#pragma once

#include <riskforge/matrix.hpp>
#include <riskforge/trees.hpp>

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace riskforge {

/// Boosted models are explained on the log-odds margin, forests on the
/// probability they output.
enum class ExplanationScale { Margin, Probability };

std::string_view to_string(ExplanationScale scale);

/// base_value + sum(phi) == prediction (on `scale`).
struct ShapExplanation {
    std::string instance_id;
    ExplanationScale scale = ExplanationScale::Margin;
    double base_value = 0.0;
    std::vector<double> phi;
    double prediction = 0.0;
};

/// Cover-weighted expected output of one tree.
double expected_value(const Tree& tree);

/// Path-dependent TreeSHAP for one tree (unscaled leaf values), added into `phi`.
void tree_shap_accumulate(const Tree& tree, std::span<const double> x, std::span<double> phi);

/// Exact Shapley values of an ensemble for one instance in polynomial time.
/// Throws InputError on a width mismatch.
ShapExplanation tree_shap(const Model& model, std::span<const double> instance, std::string instance_id = {});

/// Exponential-time reference: enumerates every coalition, marginalizing
/// absent features by cover-weighted descent into both children. At most 15 features.
ShapExplanation brute_shapley(const Model& model, std::span<const double> instance, std::string instance_id = {});

/// Value of a coalition (bit i set = feature i present) on the explanation scale.
double coalition_value(const Model& model, std::span<const double> instance, std::uint32_t coalition);

struct ShapSummary {
    std::vector<std::string> feature_names;
    ExplanationScale scale = ExplanationScale::Margin;
    std::size_t instances = 0;
    std::vector<double> shap;            // instances x features, row-major
    std::vector<double> feature_values;  // standardized within the sample, same layout
    std::vector<double> mean_abs;        // per feature
    std::vector<std::size_t> ranking;    // by mean_abs descending, ties by index

    double shap_at(std::size_t i, std::size_t f) const { return shap[i * feature_names.size() + f]; }
    double value_at(std::size_t i, std::size_t f) const { return feature_values[i * feature_names.size() + f]; }
};

/// Throws InputError on an empty sample.
ShapSummary shap_summary(const Model& model, const FeatureMatrix& sample);

struct LimeParams {
    std::size_t n_samples = 5000;
    double kernel_width = 0.0;  // 0 selects 0.75 * sqrt(d)
    std::size_t top_k = 10;
    double ridge = 1.0;
    std::uint64_t seed = 0;
};

struct LimeWeight {
    std::size_t feature;
    std::string name;
    double weight;
};

struct LimeExplanation {
    std::string instance_id;
    double intercept = 0.0;
    std::vector<LimeWeight> weights;  // top_k by |weight| descending, ties by feature index
    double r2 = 0.0;
    double prediction = 0.0;  // black-box probability at the instance
};

/// Per-feature location and scale of the model inputs on the training data.
struct FeatureStats {
    std::vector<double> mean;
    std::vector<double> std;
};

FeatureStats feature_stats(const FeatureMatrix& training);

using BlackBox = std::function<std::vector<double>(const FeatureMatrix&)>;

/// Local surrogate. Draws z ~ N(x, std) per feature (the first sample is x
/// itself), weights each by exp(-||(z - x) / std||^2 / width^2), and fits a
/// weighted ridge regression (unpenalized intercept) of the black-box output
/// on the standardized features (z - mean) / std. Throws InputError when
/// every feature has zero spread.
LimeExplanation lime_explain(const BlackBox& model, std::span<const double> instance,
                             const std::vector<std::string>& feature_names, const FeatureStats& stats,
                             const LimeParams& params, std::string instance_id = {});

LimeExplanation lime_explain(const Model& model, std::span<const double> instance, const FeatureStats& stats,
                             const LimeParams& params, std::string instance_id = {});

} // namespace riskforge
