#pragma once

#include <riskforge/config.hpp>
#include <riskforge/matrix.hpp>
#include <riskforge/report.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace riskforge {

struct CommandOptions {
    std::size_t threads = 1;
    std::optional<std::vector<std::string>> ids;  // assess: nullopt selects every test applicant
};

/// A prepared (transformed) split as written by `prepare`.
struct PreparedSet {
    std::vector<std::string> ids;
    LabeledMatrix data;
};

struct LoanRequest {
    double amount = 0.0;
    int term_months = 0;
};

/// Output layout under RunConfig::output_dir.
namespace layout {
inline constexpr const char* kPrepared = "prepared";
inline constexpr const char* kModels = "models";
inline constexpr const char* kEvaluation = "evaluation";
} // namespace layout

/// Reads the train/test CSVs, merges the auxiliary aggregates and applies the
/// feature recipes. Label and id columns are still present.
Table load_applications(const RunConfig& config, const std::filesystem::path& path);

PreparedSet read_prepared(const RunConfig& config, const std::string& split);
std::filesystem::path model_path(const RunConfig& config, const std::string& model_name);

/// Writes the synthetic corpus into config.corpus.directory.
void cmd_gen_corpus(const RunConfig& config);

/// Fits the pipeline on the training split and writes prepared/{pipeline.json,
/// train.csv, test.csv, applicants.csv}.
void cmd_prepare(const RunConfig& config);

/// Grid search per configured model; writes models/<name>.json and
/// models/<name>.search.json.
void cmd_train(const RunConfig& config, const CommandOptions& options);

/// Scores every model on the test split; rows sorted by AUC descending.
BusinessImpactReport evaluate_models(const RunConfig& config);

/// Writes evaluation/metrics.json.
void cmd_evaluate(const RunConfig& config);

/// Per-applicant reports plus business_impact.* and xai_report.*.
void cmd_assess_and_report(const RunConfig& config, const CommandOptions& options);

/// Loads the config and runs one command. Returns the process exit code
/// (0 ok, 1 internal error, 2 user or configuration error) and prints errors to `err`.
int run_command(const std::string& command, const std::filesystem::path& config_path, const CommandOptions& options,
                std::ostream& err);

} // namespace riskforge
