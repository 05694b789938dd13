#pragma once

#include <riskforge/tabular.hpp>

#include <json.hpp>

#include <string>
#include <variant>
#include <vector>

namespace riskforge {

/// numerator / denominator; Missing when either input is Missing or the denominator is 0.
struct Ratio {
    std::string numerator;
    std::string denominator;
};

/// (-days) / 365.25, for sources that store ages as negative day offsets.
struct DaysToYears {
    std::string source;
};

enum class Comparison { Less, LessEqual, Greater, GreaterEqual, Equal, NotEqual };

/// 1 when `source <op> threshold` holds, else 0; Missing stays Missing.
struct Flag {
    std::string source;
    Comparison op = Comparison::Greater;
    double threshold = 0.0;
};

struct FeatureRecipe {
    std::string name;
    std::variant<Ratio, DaysToYears, Flag> kind;

    std::vector<std::string> inputs() const;
};

using FeatureCatalog = std::vector<FeatureRecipe>;

/// CREDIT_TO_GOODS_RATIO, AGE_YEARS, YEARS_EMPLOYED, INCOME_TO_CREDIT_RATIO.
FeatureCatalog default_catalog();

/// Applies recipes in order; later recipes may read earlier outputs.
Table apply_recipes(const Table& table, const FeatureCatalog& catalog);

nlohmann::json to_json(const FeatureRecipe& recipe);
FeatureRecipe recipe_from_json(const nlohmann::json& node);

} // namespace riskforge
