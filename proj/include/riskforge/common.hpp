#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace riskforge {

/// Bad user input: unreadable or malformed data, schema mismatches, invalid
/// configuration. The CLI maps it to exit code 2.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Mixes a stream identifier into a seed (splitmix64 finalizer).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// Same as above with a named stream; the name is hashed with FNV-1a.
std::uint64_t derive_seed(std::uint64_t seed, std::string_view stream);

/// Deterministic random source.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the
/// standard. The distribution transforms are done here rather than through
/// <random> distributions, whose results differ between standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform on [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, n). n must be positive.
    std::size_t below(std::size_t n);

    /// Standard normal (Box-Muller).
    double normal();

    /// Partial Fisher-Yates: the first `count` entries of the result are a
    /// uniform sample without replacement from [0, n).
    std::vector<std::size_t> sample_without_replacement(std::size_t n, std::size_t count);

    template <typename T>
    void shuffle(std::span<T> values) {
        for (std::size_t i = values.size(); i > 1; --i) {
            std::swap(values[i - 1], values[below(i)]);
        }
    }

private:
    std::mt19937_64 engine_;
    double spare_normal_ = 0.0;
    bool has_spare_ = false;
};

inline double sigmoid(double margin) {
    if (margin >= 0.0) {
        return 1.0 / (1.0 + std::exp(-margin));
    }
    double e = std::exp(margin);
    return e / (1.0 + e);
}

/// Shortest decimal text that parses back to the same double.
std::string format_double(double value);

} // namespace riskforge
