#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace riskforge {

/// Dense row-major real matrix with named columns. This is what the
/// preprocessing pipeline produces and what every learner consumes.
struct FeatureMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> values;
    std::vector<std::string> names;

    FeatureMatrix() = default;
    FeatureMatrix(std::size_t n_rows, std::size_t n_cols, std::vector<std::string> column_names = {})
        : rows(n_rows), cols(n_cols), values(n_rows * n_cols, 0.0), names(std::move(column_names)) {
        if (names.empty()) {
            for (std::size_t c = 0; c < n_cols; ++c) {
                names.push_back("f" + std::to_string(c));
            }
        }
    }

    double& at(std::size_t r, std::size_t c) { return values[r * cols + c]; }
    double at(std::size_t r, std::size_t c) const { return values[r * cols + c]; }

    std::span<const double> row(std::size_t r) const { return {values.data() + r * cols, cols}; }
    std::span<double> row(std::size_t r) { return {values.data() + r * cols, cols}; }

    /// Rows in the given order (duplicates allowed).
    FeatureMatrix select_rows(std::span<const std::size_t> indices) const {
        FeatureMatrix out(indices.size(), cols, names);
        for (std::size_t i = 0; i < indices.size(); ++i) {
            auto src = row(indices[i]);
            std::copy(src.begin(), src.end(), out.values.begin() + static_cast<std::ptrdiff_t>(i * cols));
        }
        return out;
    }

    bool operator==(const FeatureMatrix&) const = default;
};

/// Features plus 0/1 labels (1 = defaulter).
struct LabeledMatrix {
    FeatureMatrix features;
    std::vector<int> labels;

    std::size_t rows() const { return features.rows; }

    LabeledMatrix select_rows(std::span<const std::size_t> indices) const {
        LabeledMatrix out{features.select_rows(indices), {}};
        out.labels.reserve(indices.size());
        for (auto i : indices) {
            out.labels.push_back(labels[i]);
        }
        return out;
    }

    bool operator==(const LabeledMatrix&) const = default;
};

/// Throws InputError unless row counts agree and every label is 0 or 1.
void validate_labeled(const LabeledMatrix& data);

} // namespace riskforge
