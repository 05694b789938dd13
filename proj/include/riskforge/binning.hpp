#pragma once

#include <riskforge/matrix.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace riskforge {

/// Per-feature ascending bin edges from training quantiles.
///
/// With edges e_0 < ... < e_{m-1}, bin b holds values in (e_{b-1}, e_b] and
/// the last bin holds values above e_{m-1}, so bin(v) = #{edges < v}. A split
/// on edge b sends `value <= e_b` left.
struct BinIndex {
    std::vector<std::vector<double>> edges;

    /// At most n_bins bins (n_bins - 1 edges) per feature. Requires n_bins >= 2.
    static BinIndex fit(const FeatureMatrix& matrix, std::size_t n_bins);

    std::size_t features() const { return edges.size(); }
    std::size_t bin_count(std::size_t feature) const { return edges[feature].size() + 1; }
    std::uint16_t bin(std::size_t feature, double value) const;

    bool operator==(const BinIndex&) const = default;
};

/// Row-major bin ordinals.
struct BinnedMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::uint16_t> bins;

    std::uint16_t at(std::size_t r, std::size_t c) const { return bins[r * cols + c]; }
};

BinnedMatrix bin_matrix(const BinIndex& index, const FeatureMatrix& matrix);

/// First- and second-order loss derivatives per row.
struct GradHessBuffer {
    std::vector<double> g;
    std::vector<double> h;
};

struct GradHess {
    double g;
    double h;
};

/// Logistic loss derivatives with respect to the margin: (p - y, p(1 - p)).
GradHess logistic_grad_hess(double probability, int label);

struct HistogramBin {
    double g = 0.0;
    double h = 0.0;
    std::size_t count = 0;
};

/// Gradient statistics per (feature, bin), flattened with per-feature offsets.
struct Histogram {
    std::vector<std::size_t> offsets;  // size features + 1
    std::vector<HistogramBin> bins;

    std::span<const HistogramBin> feature(std::size_t f) const {
        return {bins.data() + offsets[f], offsets[f + 1] - offsets[f]};
    }

    /// this - other, bin by bin (parent minus sibling gives the other child).
    Histogram subtract(const Histogram& other) const;
};

Histogram build_histograms(const BinnedMatrix& binned, std::span<const std::size_t> rows, const BinIndex& index,
                           const GradHessBuffer& grad);

/// Second-order split gain:
/// 1/2 [GL^2/(HL+l2) + GR^2/(HR+l2) - (GL+GR)^2/(HL+HR+l2)] - min_split_gain
double split_gain(double gl, double hl, double gr, double hr, double l2, double min_split_gain);

/// Newton leaf weight -G/(H + l2). Throws std::invalid_argument if H + l2 == 0.
double leaf_value(double g, double h, double l2);

struct SplitCandidate {
    std::size_t feature = 0;
    std::size_t bin = 0;  // edge index; left child takes bins 0..bin
    double threshold = 0.0;
    double gain = 0.0;
    double gl = 0.0, hl = 0.0, gr = 0.0, hr = 0.0;
    std::size_t left_count = 0, right_count = 0;
};

struct SplitConstraints {
    double l2 = 1.0;
    double min_split_gain = 0.0;
    double min_child_weight = 1.0;
};

/// Best (feature, edge) over the allowed features by split_gain. Candidates
/// with an empty child or a child hessian below min_child_weight are skipped;
/// ties keep the lower feature, then the lower edge. Returns nullopt unless
/// the best gain is strictly positive.
std::optional<SplitCandidate> find_best_split(const Histogram& histogram, const BinIndex& index,
                                              std::span<const std::size_t> features,
                                              const SplitConstraints& constraints);

} // namespace riskforge
