#pragma once

#include <riskforge/matrix.hpp>

#include <cstdint>
#include <vector>

namespace riskforge {

struct SmoteParams {
    std::size_t k = 5;
    std::uint64_t seed = 0;
    double target_ratio = 1.0;  // minority / majority after sampling
};

/// Indices of the k nearest rows to `query` among `candidates` (Euclidean,
/// exact). The query itself is excluded; ties go to the lower row index.
std::vector<std::size_t> nearest_neighbors(const FeatureMatrix& matrix, std::size_t query,
                                           const std::vector<std::size_t>& candidates, std::size_t k);

/// Synthetic minority oversampling.
///
/// Appends minority rows x + u * (nn - x), u ~ U[0,1], where nn is one of the
/// k nearest minority neighbours of x, until the minority count reaches
/// round(target_ratio * majority). Base points are taken round-robin over
/// the minority rows and each synthetic row draws from its own stream derived
/// from (seed, synthetic index). Original rows are returned unchanged and in
/// order, followed by the synthetic rows.
LabeledMatrix smote(const LabeledMatrix& data, const SmoteParams& params);

} // namespace riskforge
