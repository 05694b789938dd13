#pragma once

#include <riskforge/matrix.hpp>
#include <riskforge/sampling.hpp>
#include <riskforge/trees.hpp>

#include <json.hpp>

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace riskforge {

enum class LearnerKind { Forest, LevelWise, LeafWise };

std::string_view to_string(LearnerKind kind);
LearnerKind learner_kind_from_string(std::string_view text);

/// A learner kind plus its full parameter set.
struct LearnerSpec {
    LearnerKind kind = LearnerKind::LeafWise;
    BoostingParams boosting = BoostingParams::leaf_wise();
    ForestParams forest;

    static LearnerSpec defaults(LearnerKind kind);

    /// Sets one named hyperparameter; throws InputError on unknown names or bad values.
    void set(const std::string& name, const nlohmann::json& value);

    nlohmann::json params_json() const;
};

Model train_model(const LearnerSpec& spec, const LabeledMatrix& data);

/// One assignment of every grid parameter, sorted by parameter name.
using Candidate = std::vector<std::pair<std::string, nlohmann::json>>;

/// Parameter name -> candidate values. Candidates enumerate the cartesian
/// product with names in sorted order; the last name varies fastest and each
/// list keeps its given order.
struct ParamGrid {
    std::map<std::string, std::vector<nlohmann::json>> values;

    std::size_t size() const;
    std::vector<Candidate> candidates() const;
};

struct CvPlan {
    std::size_t n_folds = 5;
    std::uint64_t seed = 0;
};

/// Stratified fold id per row. Each class is shuffled under the seed and
/// dealt round-robin, continuing the rotation across classes so fold sizes
/// differ by at most one. Throws InputError when a class has fewer than
/// n_folds rows.
std::vector<std::size_t> make_folds(std::span<const int> labels, const CvPlan& plan);

enum class Metric { RocAuc, Accuracy, Precision, Recall, F1 };

std::string_view to_string(Metric metric);
Metric metric_from_string(std::string_view text);

/// Scores predictions; threshold metrics use `threshold`.
double score(Metric metric, std::span<const int> labels, std::span<const double> probabilities,
             double threshold = 0.5);

/// Trains on every fold except `fold`. SMOTE, when given, sees training rows
/// only, with a seed derived from (smote.seed, fold).
Model train_fold(const LabeledMatrix& data, std::span<const std::size_t> folds, std::size_t fold,
                 const LearnerSpec& spec, const std::optional<SmoteParams>& smote);

struct CandidateResult {
    Candidate params;
    std::vector<double> fold_scores;
    double mean_score = 0.0;  // -inf when failed
    bool failed = false;
    std::string error;
};

struct SearchResult {
    std::string learner;
    Metric metric = Metric::RocAuc;
    std::size_t n_folds = 0;
    std::vector<CandidateResult> candidates;
    std::size_t best_index = 0;
    double best_score = 0.0;
    std::string note;

    const Candidate& best_params() const { return candidates[best_index].params; }
    nlohmann::json to_json() const;
};

struct SearchOptions {
    Metric metric = Metric::RocAuc;
    double threshold = 0.5;
    std::optional<SmoteParams> smote;
    std::size_t threads = 1;
};

struct SearchOutcome {
    SearchResult result;
    LearnerSpec best_spec;
    Model model;  // refit on all rows with the best candidate
};

/// Exhaustive grid search with stratified k-fold cross-validation. A
/// candidate that throws scores -inf and is recorded as failed; ties keep the
/// earlier candidate. Throws InputError on an empty grid or when every
/// candidate fails.
SearchOutcome grid_search(const LabeledMatrix& data, const ParamGrid& grid, const CvPlan& plan,
                          const LearnerSpec& base, const SearchOptions& options);

/// Runs fn(i) for i in [0, count) on up to `threads` workers.
void parallel_for(std::size_t count, std::size_t threads, const std::function<void(std::size_t)>& fn);

} // namespace riskforge
