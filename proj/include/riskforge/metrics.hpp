#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace riskforge {

/// Positive class = defaulter (label 1).
struct ConfusionMatrix {
    std::size_t tp = 0;
    std::size_t fp = 0;
    std::size_t tn = 0;
    std::size_t fn = 0;

    std::size_t total() const { return tp + fp + tn + fn; }
    bool operator==(const ConfusionMatrix&) const = default;
};

/// A ratio whose denominator may vanish; then value is 0 and degenerate is set.
struct Rate {
    double value = 0.0;
    bool degenerate = false;
};

/// Predicted positive iff probability >= threshold. Throws InputError on
/// empty or mismatched input.
ConfusionMatrix confusion(std::span<const int> labels, std::span<const double> probabilities, double threshold);

Rate accuracy(const ConfusionMatrix& cm);
Rate precision(const ConfusionMatrix& cm);
Rate recall(const ConfusionMatrix& cm);
Rate false_positive_rate(const ConfusionMatrix& cm);
Rate false_negative_rate(const ConfusionMatrix& cm);
/// 2PR / (P + R), reporting only.
Rate f1_score(const ConfusionMatrix& cm);

struct RocPoint {
    double fpr;
    double tpr;
    double threshold;  // +inf for the first point
};

/// ROC points from threshold +inf down through every distinct score, so the
/// curve runs from (0,0) to (1,1).
struct RocCurve {
    std::vector<RocPoint> points;
    double auc = 0.0;
};

/// Trapezoidal AUC over the tie-grouped curve. Throws InputError when only one class is present.
RocCurve roc_auc(std::span<const int> labels, std::span<const double> scores);

enum class Decision { Approve, Review, Reject };

std::string_view to_string(Decision decision);
Decision decision_from_string(std::string_view text);

struct BusinessMetrics {
    double approval_rate = 0.0;
    double default_rate_among_approved = 0.0;
    double fpr = 0.0;
    double fnr = 0.0;
    bool no_approvals = false;  // default_rate_among_approved is 0 by convention
    bool degenerate_rates = false;  // fpr or fnr had an empty denominator
};

BusinessMetrics business_metrics(std::span<const int> labels, std::span<const Decision> decisions,
                                 std::span<const double> probabilities, double threshold);

} // namespace riskforge
