#pragma once

#include <riskforge/explain.hpp>
#include <riskforge/metrics.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace riskforge {

/// Escapes & < > " ' for element text and attribute values.
std::string escape_xml(std::string_view text);

/// Fixed-point formatting used for every coordinate.
std::string fixed(double value, int decimals);

struct NamedCurve {
    std::string name;
    RocCurve curve;
};

/// One <path> per curve and one <line> for the chance diagonal. Throws
/// InputError on an empty list.
std::string plot_roc(const std::vector<NamedCurve>& curves);

/// Horizontal bars of mean |phi| in ranking order, longest = full width.
std::string plot_shap_bar(const ShapSummary& summary, std::size_t max_features = 20);

/// One <circle> per (instance, shown feature): x = phi, seeded vertical
/// jitter within the feature's row, color = standardized feature value.
std::string plot_beeswarm(const ShapSummary& summary, std::uint64_t seed, std::size_t max_features = 20);

/// Signed bars around a zero axis, green for positive and red for negative
/// values. Zero values are skipped.
std::string plot_signed_bars(std::string_view title, const std::vector<std::string>& labels,
                             const std::vector<double>& values);

std::string plot_lime(const LimeExplanation& explanation);

} // namespace riskforge
