#pragma once

#include <riskforge/explain.hpp>
#include <riskforge/features.hpp>
#include <riskforge/preprocess.hpp>
#include <riskforge/risk.hpp>
#include <riskforge/tabular.hpp>
#include <riskforge/tuning.hpp>

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace riskforge {

struct AuxiliarySource {
    std::filesystem::path path;
    AggregationSpec spec;
};

struct ModelConfig {
    std::string name;
    LearnerSpec base;  // fixed parameters; the grid varies the rest
    ParamGrid grid;
};

struct LoanColumns {
    std::string amount_column = "AMT_CREDIT";
    std::string term_column;  // empty: every applicant gets default_term_months
    int default_term_months = 240;
};

struct ExplainConfig {
    std::size_t shap_sample = 1000;
    std::size_t top_features = 5;
    LimeParams lime;
    std::string applicant_model;  // empty: the model with the highest held-out AUC
};

struct CorpusConfig {
    std::size_t rows = 10000;
    std::filesystem::path directory = "data";
};

/// Everything one experiment needs, read from a single JSON file. Relative
/// paths resolve against the file's directory.
struct RunConfig {
    std::uint64_t seed = 42;
    std::filesystem::path output_dir = "out";
    std::filesystem::path train_path;
    std::filesystem::path test_path;
    std::string id_column = "SK_ID_CURR";
    std::string label_column = "TARGET";
    std::vector<AuxiliarySource> auxiliary;
    std::vector<std::string> drop_columns;
    FeatureCatalog recipes = default_catalog();
    std::vector<Stage> stages = kDefaultStages;
    std::optional<SmoteParams> smote = SmoteParams{};
    CvPlan cv;
    Metric metric = Metric::RocAuc;
    double threshold = 0.5;
    std::vector<ModelConfig> models;
    RiskConfig risk;
    LoanColumns loan;
    ExplainConfig explain;
    CorpusConfig corpus;

    /// Per-stage seed: derive_seed(seed, stage).
    std::uint64_t stage_seed(std::string_view stage) const;
};

/// Parses and validates a configuration document. Unknown keys, wrong types
/// and invalid values throw InputError naming the offending key.
RunConfig parse_config(const nlohmann::json& document, const std::filesystem::path& base_dir);

/// Reads a configuration file. RISKFORGE_OUT, when set, replaces output_dir.
RunConfig load_config(const std::filesystem::path& path);

} // namespace riskforge
