#pragma once

#include <riskforge/explain.hpp>
#include <riskforge/metrics.hpp>
#include <riskforge/risk.hpp>

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace riskforge {

/// Rounds to 6 decimals. Every number a report writes goes through this so
/// the HTML can print exactly the value stored in the JSON.
double report_number(double value);

struct ApplicantReport {
    ApplicantAssessment assessment;
    std::string model;
    std::vector<std::string> feature_names;
    std::vector<double> feature_values;  // model inputs, same order as shap.phi
    ShapExplanation shap;
    LimeExplanation lime;
    std::vector<std::string> narrative;
};

/// Plain-language summary from a fixed sentence bank keyed by risk band and
/// the signs of the strongest LIME weights.
std::vector<std::string> narrative_for(const ApplicantAssessment& assessment, const LimeExplanation& lime);

enum ReportFormat : unsigned { kJson = 1, kHtml = 2, kSvg = 4, kAllFormats = 7 };

nlohmann::json to_json(const ApplicantReport& report);

/// Writes <out>/applicants/<id>/report.{json,html} and charts/{lime,shap}.svg.
/// Throws InputError when the applicant id is not a safe path component and
/// std::runtime_error when files cannot be written.
void render_applicant(const ApplicantReport& report, const std::filesystem::path& out, unsigned formats = kAllFormats);

/// Metrics of one model on labeled held-out data, copied from the metrics
/// and risk modules.
struct ModelEvaluation {
    std::string model;
    ConfusionMatrix confusion;
    double accuracy = 0.0;
    double precision = 0.0;
    double recall = 0.0;
    double roc_auc = 0.0;
    double f1 = 0.0;
    RocCurve roc;
    PortfolioImpact impact;
};

struct BusinessImpactReport {
    double threshold = 0.5;
    std::vector<ModelEvaluation> models;
};

/// Stable sort by AUC, highest first.
void sort_by_auc(std::vector<ModelEvaluation>& models);

/// The evaluation document written by `evaluate` (schema "metrics").
nlohmann::json metrics_json(const BusinessImpactReport& report);
nlohmann::json to_json(const BusinessImpactReport& report);

/// Writes <out>/business_impact.{json,html}. Rows appear in the given order.
void render_business(const BusinessImpactReport& report, const std::filesystem::path& out,
                     unsigned formats = kAllFormats);

struct XaiReport {
    struct Entry {
        std::string model;
        ShapSummary summary;
    };
    std::vector<Entry> models;
    std::size_t top_k = 5;
    std::uint64_t seed = 0;  // beeswarm jitter
};

nlohmann::json to_json(const XaiReport& report);

/// Writes <out>/xai_report.{json,html}: a rank-by-model table of the top
/// features plus embedded SHAP bar and beeswarm charts per model.
void render_xai(const XaiReport& report, const std::filesystem::path& out, unsigned formats = kAllFormats);

std::string applicant_html(const nlohmann::json& document, const std::string& lime_svg, const std::string& shap_svg);
std::string business_html(const nlohmann::json& document, const std::string& roc_svg);
std::string xai_html(const nlohmann::json& document, const std::vector<std::string>& charts);

/// Writes text to a file, creating parent directories.
void write_text(const std::filesystem::path& path, const std::string& content);

} // namespace riskforge
