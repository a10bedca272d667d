#pragma once

#include "mlselect/csv.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mlselect {

enum class ColumnKind { numeric, categorical };

// Per-column schema inferred from raw text. A column is numeric iff every
// non-missing cell parses as a real number; otherwise it is categorical with
// a lexicographically sorted, duplicate-free category list.
struct ColumnSchema {
    std::string name;
    ColumnKind kind = ColumnKind::numeric;
    std::vector<std::string> categories; // categorical only
    std::size_t missing_count = 0;
    double observed_mean = 0.0;   // numeric only, defined when >=1 value observed
    std::string mode_category;    // categorical only, ties -> lexicographically smallest
};

// Fully encoded table: categoricals label-encoded, gaps imputed, binary
// target in {0,1}. Immutable after construction and safe to share read-only
// across concurrent model fits.
struct Dataset {
    std::string name;
    std::vector<ColumnSchema> columns;
    std::vector<std::vector<double>> rows; // row-major, |row| == |columns|
    std::size_t target_index = 0;
    std::array<std::string, 2> class_labels{}; // sorted; positive class is index 1

    std::size_t n_rows() const { return rows.size(); }
    std::size_t n_cols() const { return columns.size(); }
    std::size_t n_features() const { return columns.size() - 1; }

    int target(std::size_t row) const {
        return static_cast<int>(rows[row][target_index]);
    }

    // Column indices excluding the target, ascending.
    std::vector<std::size_t> feature_indices() const;

    // Feature values of one row, in feature_indices() order.
    std::vector<double> feature_row(std::size_t row) const;

    std::vector<double> column_values(std::size_t col) const;

    // Rows per class, indexed by class label 0/1.
    std::array<std::size_t, 2> class_counts() const;

    // New dataset keeping only the given feature columns (plus the target).
    Dataset select_features(const std::vector<std::size_t>& feature_cols) const;

    // New dataset with the given rows, in the given order.
    Dataset take_rows(const std::vector<std::size_t>& row_indices) const;
};

struct SplitPair {
    Dataset train;
    Dataset test;
    double ratio = 0.0;
    std::uint64_t seed = 0;
};

// Raw load result: text table plus inferred schemas. The target column is
// always categorical; its two distinct values become the class labels.
struct LoadedTable {
    RawTable table;
    std::vector<ColumnSchema> schemas;
    std::size_t target_index = 0;
    std::size_t dropped_missing_target_rows = 0;
};

inline const std::vector<std::string>& default_missing_tokens() {
    static const std::vector<std::string> tokens = {"", "NA"};
    return tokens;
}

// Read a CSV file and infer per-column schemas. Rows whose target cell is a
// missing marker are dropped (counted in the result) before inference.
// Throws DataError when the file is absent, the header lacks target_name,
// rows are ragged, there are fewer than 2 data rows, or the target does not
// have exactly 2 distinct non-missing values.
LoadedTable load_csv(const std::string& path, const std::string& target_name,
                     const std::vector<std::string>& missing_tokens = default_missing_tokens());

LoadedTable load_csv_from(RawTable table, const std::string& target_name,
                          const std::vector<std::string>& missing_tokens = default_missing_tokens(),
                          const std::string& origin = "<memory>");

// 0-based index of the cell in the schema's sorted category list.
// Throws UnseenCategoryError for a value outside the observed categories.
double label_encode(const ColumnSchema& schema, const std::string& cell);

// Inverse of label_encode on observed categories.
const std::string& decode_label(const ColumnSchema& schema, double code);

// Fill gaps with the observed mean. Throws DataError when every value is
// missing. The mean of observed values is unchanged by the fill.
std::vector<double> impute_missing(const std::vector<std::optional<double>>& values,
                                   const ColumnSchema& schema);

// Categorical counterpart: gaps become the mode category.
std::vector<std::string> impute_missing(const std::vector<std::optional<std::string>>& values,
                                        const ColumnSchema& schema);

// Encode + impute a loaded table into a Dataset. All-missing columns are
// dropped with a warning on stderr rather than failing the pipeline.
Dataset encode_table(const LoadedTable& loaded, const std::string& dataset_name);

// File name without directory or extension; the default dataset name.
std::string path_stem(const std::string& path);

// load_csv + encode_table.
Dataset load_dataset(const std::string& path, const std::string& target_name,
                     const std::vector<std::string>& missing_tokens = default_missing_tokens(),
                     const std::string& dataset_name = "");

// Deterministic stratified holdout. Shuffles each class's row indices with a
// SplitMix64 stream seeded by `seed` (class 0 first, then class 1, same
// stream); the first floor(ratio * class_count) shuffled rows of each class
// go to train. Rows keep their source order within each side.
// Throws DataError unless 0 < ratio < 1 and each class has >= 2 rows.
SplitPair stratified_split(const Dataset& d, double ratio, std::uint64_t seed);

} // namespace mlselect
