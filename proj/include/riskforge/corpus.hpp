#pragma once

#include <riskforge/tabular.hpp>

#include <json.hpp>

#include <cstdint>
#include <filesystem>

namespace riskforge {

/// Synthetic loan applications whose default probability is a known
/// logistic function of EXT_SOURCE_2, EXT_SOURCE_3 and the credit-to-goods
/// ratio (AMT_CREDIT / AMT_GOODS_PRICE). Every other column is noise.
struct CorpusSpec {
    std::uint64_t seed = 42;
    std::size_t rows = 10000;
    double default_rate = 0.08;
    double train_fraction = 0.8;
};

struct Corpus {
    Table train;     // application_train.csv, with TARGET
    Table test;      // application_test.csv, with TARGET for evaluation
    Table bureau;    // several rows per applicant, keyed by SK_ID_CURR
    Table previous;  // previous_application.csv
    nlohmann::json ground_truth;
};

/// Throws InputError when rows < 200 or the rates are out of range.
Corpus generate_corpus(const CorpusSpec& spec);

/// Writes the four CSV files and ground_truth.json into `directory`.
void write_corpus(const Corpus& corpus, const std::filesystem::path& directory);

} // namespace riskforge
