#pragma once

#include <riskforge/matrix.hpp>
#include <riskforge/tabular.hpp>

#include <json.hpp>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace riskforge {

/// Median per numeric column, mode per categorical column.
struct ImputerState {
    std::map<std::string, double> medians;
    std::map<std::string, std::string> modes;
};

struct ColumnBounds {
    std::string column;
    double mean = 0.0;
    double std = 0.0;  // population
    double lower = 0.0;
    double upper = 0.0;
};

/// Frozen mean +/- 3 sigma bounds per numeric column.
struct ClipperState {
    std::vector<ColumnBounds> columns;
};

struct Vocabulary {
    std::string column;
    std::vector<std::string> categories;  // lexicographic
};

/// One-hot vocabularies per categorical column.
struct EncoderState {
    std::vector<Vocabulary> columns;
};

struct ColumnScale {
    std::string column;
    double mean = 0.0;
    double std = 0.0;  // population; 0 is stored as is and treated as 1 on transform
};

struct ScalerState {
    std::vector<ColumnScale> columns;
};

ImputerState fit_imputer(const Table& table);
Table apply_imputer(const ImputerState& state, const Table& table);

ClipperState fit_clipper(const Table& table);
Table apply_clipper(const ClipperState& state, const Table& table);

EncoderState fit_encoder(const Table& table);
Table apply_encoder(const EncoderState& state, const Table& table);

/// Fits the listed columns, or every numeric column when the list is empty.
ScalerState fit_scaler(const Table& table, const std::vector<std::string>& columns = {});
Table apply_scaler(const ScalerState& state, const Table& table);

enum class Stage { Impute, Clip, Encode, Scale };

std::string_view to_string(Stage stage);
Stage stage_from_string(std::string_view text);

inline const std::vector<Stage> kDefaultStages = {Stage::Impute, Stage::Clip, Stage::Encode, Stage::Scale};

struct SchemaEntry {
    std::string name;
    ColumnKind kind;
    bool operator==(const SchemaEntry&) const = default;
};

/// Fitted, immutable preprocessing: impute -> clip -> encode -> scale, any
/// stage optional but the relative order fixed.
struct FittedPipeline {
    std::vector<Stage> stages;
    std::vector<SchemaEntry> input_schema;
    std::vector<std::string> output_names;
    ImputerState imputer;
    ClipperState clipper;
    EncoderState encoder;
    ScalerState scaler;
};

/// Throws InputError if the stage list is out of order or repeats a stage.
FittedPipeline fit_pipeline(const Table& table, const std::vector<Stage>& stages = kDefaultStages);

/// Fits and also returns the transformed training matrix.
std::pair<FittedPipeline, FeatureMatrix> fit_transform(const Table& table,
                                                       const std::vector<Stage>& stages = kDefaultStages);

/// Pure function of (pipeline, table). The table must carry exactly the
/// fitted input columns with the fitted kinds, in any order.
FeatureMatrix transform(const FittedPipeline& pipeline, const Table& table);

nlohmann::json to_json(const FittedPipeline& pipeline);
FittedPipeline pipeline_from_json(const nlohmann::json& document);

} // namespace riskforge
