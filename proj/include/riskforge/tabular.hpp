#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace riskforge {

enum class ColumnKind { Numeric, Categorical };

std::string_view to_string(ColumnKind kind);
ColumnKind column_kind_from_string(std::string_view text);

/// Missing, a finite number, or a category string.
using Cell = std::variant<std::monostate, double, std::string>;

inline bool is_missing(const Cell& cell) { return std::holds_alternative<std::monostate>(cell); }

/// Builds a numeric cell; NaN and infinities become Missing.
Cell number_cell(double value);

class Column {
public:
    /// Throws InputError if a cell does not fit the kind (text in a numeric
    /// column, number in a categorical one, or a non-finite number).
    Column(std::string name, ColumnKind kind, std::vector<Cell> cells);

    const std::string& name() const { return name_; }
    ColumnKind kind() const { return kind_; }
    const std::vector<Cell>& cells() const { return cells_; }
    std::size_t size() const { return cells_.size(); }
    const Cell& operator[](std::size_t row) const { return cells_[row]; }

    /// Numeric value of a row; nullopt when Missing. Only valid on numeric columns.
    std::optional<double> number(std::size_t row) const;

    std::size_t missing_count() const;

    /// Distinct category strings in lexicographic order.
    std::vector<std::string> vocabulary() const;

    bool operator==(const Column&) const = default;

private:
    std::string name_;
    ColumnKind kind_;
    std::vector<Cell> cells_;
};

/// Immutable column-typed dataset. All columns have the same length and
/// names are unique.
class Table {
public:
    Table() = default;
    explicit Table(std::vector<Column> columns);

    std::size_t row_count() const { return row_count_; }
    std::size_t column_count() const { return columns_.size(); }
    const std::vector<Column>& columns() const { return columns_; }

    bool has_column(std::string_view name) const;
    std::optional<std::size_t> column_index(std::string_view name) const;

    /// Throws InputError naming the column when absent.
    const Column& column(std::string_view name) const;

    std::vector<std::string> column_names() const;

    /// Copy with `column` appended; the name must be new and the length must match.
    Table with_column(Column column) const;

    /// Copy without the named columns (names that are absent are ignored).
    Table without_columns(const std::vector<std::string>& names) const;

    /// Copy keeping only the given rows, in the given order.
    Table select_rows(const std::vector<std::size_t>& rows) const;

    bool operator==(const Table&) const = default;

private:
    std::vector<Column> columns_;
    std::size_t row_count_ = 0;
};

/// Columns in the requested order. Throws InputError naming the first unknown column.
Table select_columns(const Table& table, const std::vector<std::string>& names);

enum class Statistic { Mean, Max, Sum, Min, Count, Std };

std::string_view to_string(Statistic statistic);
Statistic statistic_from_string(std::string_view text);

/// Groups an auxiliary table by key and attaches per-key summary statistics
/// to the base table.
struct AggregationSpec {
    std::string source_name;  // prefix of the generated column names
    std::string key_column;
    std::vector<std::string> value_columns;
    std::vector<Statistic> statistics;
};

/// Adds one column `<source>_<col>_<STAT>` per (value column, statistic) to
/// `base`. Missing aux cells are ignored. Base rows without a match get
/// Missing, except Count which gets 0. Std is the sample deviation and is
/// Missing for fewer than two values. The row count never changes and the
/// result does not depend on the order of aux rows.
Table aggregate_merge(const Table& base, const Table& aux, const AggregationSpec& spec);

// CSV (RFC 4180). Empty fields and "NA" are Missing. A column is numeric iff
// every non-missing field parses as a number, unless the hint says otherwise.
using SchemaHint = std::map<std::string, ColumnKind, std::less<>>;

Table parse_csv(std::string_view text, const SchemaHint& hint = {});
Table read_csv(const std::filesystem::path& path, const SchemaHint& hint = {});
std::string to_csv(const Table& table);
void write_csv(const Table& table, const std::filesystem::path& path);

} // namespace riskforge
