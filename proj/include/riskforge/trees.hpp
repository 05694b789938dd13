#pragma once

#include <riskforge/binning.hpp>
#include <riskforge/matrix.hpp>

#include <json.hpp>

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace riskforge {

/// Split nodes have both children set; leaves have left == right == -1.
/// Rows with value <= threshold go left.
struct TreeNode {
    int feature = -1;
    double threshold = 0.0;
    int left = -1;
    int right = -1;
    double value = 0.0;  // leaf output
    double cover = 0.0;  // training weight reaching the node (hessian sum or row count)

    bool is_leaf() const { return left < 0; }
    bool operator==(const TreeNode&) const = default;
};

/// Flat node array; node 0 is the root.
struct Tree {
    std::vector<TreeNode> nodes;

    double predict(std::span<const double> x) const;
    std::size_t leaf_index(std::span<const double> x) const;
    std::size_t depth() const;
    std::size_t leaf_count() const;

    /// Same tree with nodes renumbered in pre-order, the layout model files load into.
    Tree preorder() const;

    bool operator==(const Tree&) const = default;
};

enum class Growth { LevelWise, LeafWise };

std::string_view to_string(Growth growth);

struct BoostingParams {
    Growth growth = Growth::LevelWise;
    std::size_t n_trees = 100;
    std::size_t max_depth = 6;    // LevelWise depth; optional cap for LeafWise (0 = none)
    std::size_t max_leaves = 31;  // LeafWise only
    double learning_rate = 0.1;
    double l2 = 1.0;
    double min_split_gain = 0.0;
    double min_child_weight = 1.0;
    std::size_t n_bins = 255;
    double feature_fraction = 1.0;  // sampled once per tree
    std::uint64_t seed = 0;

    static BoostingParams level_wise();
    static BoostingParams leaf_wise();

    /// Throws InputError on out-of-range values.
    void validate() const;

    bool operator==(const BoostingParams&) const = default;
};

/// Additive logistic model: p = sigmoid(base_score + learning_rate * sum of tree outputs).
struct BoostedModel {
    BoostingParams params;
    double base_score = 0.0;
    std::vector<Tree> trees;
    BinIndex bins;
    std::vector<std::string> feature_names;

    double margin(std::span<const double> x) const;
    double predict(std::span<const double> x) const;

    bool operator==(const BoostedModel&) const = default;
};

struct ForestParams {
    std::size_t n_trees = 100;
    std::size_t max_depth = 8;
    double feature_fraction = 0.0;  // per split; 0 selects sqrt(d)/d
    bool bootstrap = true;
    std::size_t min_samples_leaf = 1;
    std::size_t n_bins = 255;
    std::uint64_t seed = 0;

    void validate() const;

    bool operator==(const ForestParams&) const = default;
};

/// Bagged Gini trees; leaves hold the class-1 fraction and the prediction is
/// the mean over trees.
struct ForestModel {
    ForestParams params;
    std::vector<Tree> trees;
    BinIndex bins;
    std::vector<std::string> feature_names;

    double predict(std::span<const double> x) const;

    bool operator==(const ForestModel&) const = default;
};

using Model = std::variant<ForestModel, BoostedModel>;

/// Per-round diagnostics of a boosting run. log_loss[0] is the loss of the
/// constant base_score model and log_loss[t] the loss after t trees.
struct BoostingTrace {
    std::vector<double> log_loss;
};

BoostedModel fit_boosted(const LabeledMatrix& data, const BoostingParams& params, BoostingTrace* trace = nullptr);

ForestModel fit_forest(const LabeledMatrix& data, const ForestParams& params);

/// Probability of default per row. Throws InputError on a column-count mismatch.
std::vector<double> predict_proba(const Model& model, const FeatureMatrix& matrix);
std::vector<double> predict_proba(const BoostedModel& model, const FeatureMatrix& matrix);
std::vector<double> predict_proba(const ForestModel& model, const FeatureMatrix& matrix);

double log_loss(std::span<const int> labels, std::span<const double> probabilities);

std::size_t feature_count(const Model& model);
const std::vector<std::string>& feature_names(const Model& model);

// Versioned JSON model files with recursively nested trees.
nlohmann::json to_json(const Model& model);
Model model_from_json(const nlohmann::json& document);
std::string serialize_model(const Model& model);

} // namespace riskforge
