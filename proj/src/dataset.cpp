#include "mlselect/dataset.hpp"

#include "mlselect/error.hpp"
#include "mlselect/rng.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

namespace mlselect {

namespace {

bool is_missing(const std::string& cell, const std::vector<std::string>& tokens) {
    return std::find(tokens.begin(), tokens.end(), cell) != tokens.end();
}

bool parses_as_number(const std::string& cell, double* out = nullptr) {
    if (cell.empty()) return false;
    const char* begin = cell.c_str();
    char* end = nullptr;
    errno = 0;
    double v = std::strtod(begin, &end);
    if (end == begin) return false;
    while (*end == ' ' || *end == '\t') ++end;
    if (*end != '\0') return false;
    if (out) *out = v;
    return true;
}

ColumnSchema infer_column(const std::string& name,
                          const std::vector<const std::string*>& cells,
                          const std::vector<std::string>& missing_tokens,
                          bool force_categorical) {
    ColumnSchema schema;
    schema.name = name;

    bool all_numeric = !force_categorical;
    std::vector<double> numeric_values;
    std::map<std::string, std::size_t> category_counts;
    for (const std::string* cell : cells) {
        if (is_missing(*cell, missing_tokens)) {
            ++schema.missing_count;
            continue;
        }
        double v;
        if (all_numeric && parses_as_number(*cell, &v)) {
            numeric_values.push_back(v);
        } else {
            all_numeric = false;
        }
        ++category_counts[*cell];
    }

    if (all_numeric && !numeric_values.empty()) {
        schema.kind = ColumnKind::numeric;
        double sum = 0.0;
        for (double v : numeric_values) sum += v;
        schema.observed_mean = sum / static_cast<double>(numeric_values.size());
        return schema;
    }

    schema.kind = ColumnKind::categorical;
    std::size_t best_count = 0;
    for (const auto& [value, count] : category_counts) {
        schema.categories.push_back(value); // std::map iterates sorted
        if (count > best_count) {           // ties keep the smaller key
            best_count = count;
            schema.mode_category = value;
        }
    }
    return schema;
}

} // namespace

std::vector<std::size_t> Dataset::feature_indices() const {
    std::vector<std::size_t> out;
    out.reserve(columns.size() - 1);
    for (std::size_t i = 0; i < columns.size(); ++i)
        if (i != target_index) out.push_back(i);
    return out;
}

std::vector<double> Dataset::feature_row(std::size_t row) const {
    std::vector<double> out;
    out.reserve(columns.size() - 1);
    for (std::size_t i = 0; i < columns.size(); ++i)
        if (i != target_index) out.push_back(rows[row][i]);
    return out;
}

std::vector<double> Dataset::column_values(std::size_t col) const {
    std::vector<double> out;
    out.reserve(rows.size());
    for (const auto& row : rows) out.push_back(row[col]);
    return out;
}

std::array<std::size_t, 2> Dataset::class_counts() const {
    std::array<std::size_t, 2> counts{0, 0};
    for (std::size_t r = 0; r < rows.size(); ++r) ++counts[static_cast<std::size_t>(target(r))];
    return counts;
}

Dataset Dataset::select_features(const std::vector<std::size_t>& feature_cols) const {
    std::vector<std::size_t> keep = feature_cols;
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    for (std::size_t col : keep) {
        if (col >= columns.size()) throw DataError("select_features: column index out of range");
        if (col == target_index) throw DataError("select_features: target cannot be selected as a feature");
    }

    Dataset out;
    out.name = name;
    out.class_labels = class_labels;
    for (std::size_t col : keep) out.columns.push_back(columns[col]);
    out.target_index = out.columns.size();
    out.columns.push_back(columns[target_index]);

    out.rows.reserve(rows.size());
    for (const auto& row : rows) {
        std::vector<double> new_row;
        new_row.reserve(keep.size() + 1);
        for (std::size_t col : keep) new_row.push_back(row[col]);
        new_row.push_back(row[target_index]);
        out.rows.push_back(std::move(new_row));
    }
    return out;
}

Dataset Dataset::take_rows(const std::vector<std::size_t>& row_indices) const {
    Dataset out;
    out.name = name;
    out.columns = columns;
    out.target_index = target_index;
    out.class_labels = class_labels;
    out.rows.reserve(row_indices.size());
    for (std::size_t r : row_indices) {
        if (r >= rows.size()) throw DataError("take_rows: row index out of range");
        out.rows.push_back(rows[r]);
    }
    return out;
}

LoadedTable load_csv_from(RawTable table, const std::string& target_name,
                          const std::vector<std::string>& missing_tokens,
                          const std::string& origin) {
    auto it = std::find(table.header.begin(), table.header.end(), target_name);
    if (it == table.header.end())
        throw DataError(origin + ": header has no column named '" + target_name + "'");
    std::size_t target_index = static_cast<std::size_t>(it - table.header.begin());

    // Rows without a target label cannot be imputed meaningfully; drop them
    // up front so schema statistics describe the retained rows.
    std::size_t dropped = 0;
    std::vector<std::vector<std::string>> kept;
    kept.reserve(table.rows.size());
    for (auto& row : table.rows) {
        if (is_missing(row[target_index], missing_tokens)) {
            ++dropped;
        } else {
            kept.push_back(std::move(row));
        }
    }
    table.rows = std::move(kept);
    if (dropped > 0)
        std::cerr << "warning: " << origin << ": dropped " << dropped
                  << " row(s) with a missing target value\n";

    if (table.rows.size() < 2)
        throw DataError(origin + ": need at least 2 data rows, got " + std::to_string(table.rows.size()));

    std::set<std::string> target_values;
    for (const auto& row : table.rows) target_values.insert(row[target_index]);
    if (target_values.size() != 2) {
        std::ostringstream msg;
        msg << origin << ": target column '" << target_name << "' has "
            << target_values.size() << " distinct values, expected exactly 2";
        throw DataError(msg.str());
    }

    LoadedTable loaded;
    loaded.target_index = target_index;
    loaded.dropped_missing_target_rows = dropped;
    for (std::size_t c = 0; c < table.header.size(); ++c) {
        std::vector<const std::string*> cells;
        cells.reserve(table.rows.size());
        for (const auto& row : table.rows) cells.push_back(&row[c]);
        loaded.schemas.push_back(
            infer_column(table.header[c], cells, missing_tokens, c == target_index));
    }
    loaded.table = std::move(table);
    return loaded;
}

LoadedTable load_csv(const std::string& path, const std::string& target_name,
                     const std::vector<std::string>& missing_tokens) {
    return load_csv_from(read_csv(path), target_name, missing_tokens, path);
}

double label_encode(const ColumnSchema& schema, const std::string& cell) {
    if (schema.kind != ColumnKind::categorical)
        throw DataError("label_encode: column '" + schema.name + "' is not categorical");
    auto it = std::lower_bound(schema.categories.begin(), schema.categories.end(), cell);
    if (it == schema.categories.end() || *it != cell)
        throw UnseenCategoryError("label_encode: value '" + cell + "' not among categories of column '" +
                                  schema.name + "'");
    return static_cast<double>(it - schema.categories.begin());
}

const std::string& decode_label(const ColumnSchema& schema, double code) {
    auto index = static_cast<std::size_t>(code);
    if (schema.kind != ColumnKind::categorical || index >= schema.categories.size() ||
        static_cast<double>(index) != code)
        throw DataError("decode_label: code " + std::to_string(code) + " is not a category index of column '" +
                        schema.name + "'");
    return schema.categories[index];
}

std::vector<double> impute_missing(const std::vector<std::optional<double>>& values,
                                   const ColumnSchema& schema) {
    bool any_observed = false;
    for (const auto& v : values)
        if (v.has_value()) any_observed = true;
    if (!any_observed)
        throw DataError("impute_missing: column '" + schema.name + "' has no observed values");

    std::vector<double> out;
    out.reserve(values.size());
    for (const auto& v : values) out.push_back(v.has_value() ? *v : schema.observed_mean);
    return out;
}

std::vector<std::string> impute_missing(const std::vector<std::optional<std::string>>& values,
                                        const ColumnSchema& schema) {
    bool any_observed = false;
    for (const auto& v : values)
        if (v.has_value()) any_observed = true;
    if (!any_observed)
        throw DataError("impute_missing: column '" + schema.name + "' has no observed values");

    std::vector<std::string> out;
    out.reserve(values.size());
    for (const auto& v : values) out.push_back(v.has_value() ? *v : schema.mode_category);
    return out;
}

Dataset encode_table(const LoadedTable& loaded, const std::string& dataset_name) {
    const auto& table = loaded.table;
    const std::size_t n_rows = table.rows.size();

    Dataset out;
    out.name = dataset_name;

    std::vector<std::vector<double>> encoded_columns;
    for (std::size_t c = 0; c < loaded.schemas.size(); ++c) {
        const ColumnSchema& schema = loaded.schemas[c];
        if (schema.missing_count == n_rows) {
            std::cerr << "warning: dropping all-missing column '" << schema.name << "'\n";
            continue;
        }
        std::vector<double> column;
        column.reserve(n_rows);
        if (schema.kind == ColumnKind::numeric) {
            std::vector<std::optional<double>> cells(n_rows);
            for (std::size_t r = 0; r < n_rows; ++r) {
                double v;
                if (parses_as_number(table.rows[r][c], &v)) cells[r] = v;
            }
            column = impute_missing(cells, schema);
        } else {
            std::vector<std::optional<std::string>> cells(n_rows);
            for (std::size_t r = 0; r < n_rows; ++r) {
                const std::string& cell = table.rows[r][c];
                auto it = std::lower_bound(schema.categories.begin(), schema.categories.end(), cell);
                if (it != schema.categories.end() && *it == cell) cells[r] = cell;
            }
            auto filled = impute_missing(cells, schema);
            for (const auto& cell : filled) column.push_back(label_encode(schema, cell));
        }
        if (c == loaded.target_index) out.target_index = out.columns.size();
        out.columns.push_back(schema);
        encoded_columns.push_back(std::move(column));
    }

    const ColumnSchema& target_schema = out.columns[out.target_index];
    out.class_labels = {target_schema.categories[0], target_schema.categories[1]};

    out.rows.assign(n_rows, std::vector<double>(out.columns.size()));
    for (std::size_t c = 0; c < encoded_columns.size(); ++c)
        for (std::size_t r = 0; r < n_rows; ++r) out.rows[r][c] = encoded_columns[c][r];
    return out;
}

std::string path_stem(const std::string& path) {
    const std::size_t slash = path.find_last_of("/\\");
    std::string name = slash == std::string::npos ? path : path.substr(slash + 1);
    const std::size_t dot = name.find_last_of('.');
    if (dot != std::string::npos && dot > 0) name = name.substr(0, dot);
    return name;
}

Dataset load_dataset(const std::string& path, const std::string& target_name,
                     const std::vector<std::string>& missing_tokens,
                     const std::string& dataset_name) {
    const std::string name = dataset_name.empty() ? path_stem(path) : dataset_name;
    return encode_table(load_csv(path, target_name, missing_tokens), name);
}

SplitPair stratified_split(const Dataset& d, double ratio, std::uint64_t seed) {
    if (!(ratio > 0.0 && ratio < 1.0))
        throw DataError("stratified_split: ratio must be in (0,1)");
    auto counts = d.class_counts();
    if (counts[0] < 2 || counts[1] < 2)
        throw DataError("stratified_split: each class needs >= 2 rows (got " +
                        std::to_string(counts[0]) + " and " + std::to_string(counts[1]) + ")");

    SplitMix64 rng(seed);
    std::vector<std::size_t> train_rows, test_rows;
    for (int cls = 0; cls < 2; ++cls) {
        std::vector<std::size_t> members;
        for (std::size_t r = 0; r < d.n_rows(); ++r)
            if (d.target(r) == cls) members.push_back(r);
        rng.shuffle(members);
        auto take = static_cast<std::size_t>(std::floor(ratio * static_cast<double>(members.size())));
        train_rows.insert(train_rows.end(), members.begin(), members.begin() + take);
        test_rows.insert(test_rows.end(), members.begin() + take, members.end());
    }
    std::sort(train_rows.begin(), train_rows.end());
    std::sort(test_rows.begin(), test_rows.end());

    SplitPair pair;
    pair.train = d.take_rows(train_rows);
    pair.test = d.take_rows(test_rows);
    pair.ratio = ratio;
    pair.seed = seed;
    return pair;
}

} // namespace mlselect
