#pragma once

#include "mlselect/csv.hpp"
#include "mlselect/dataset.hpp"

#include <string>
#include <vector>

namespace mlselect::testing {

// Dataset straight from CSV text, encoded the same way the pipeline does it.
inline Dataset dataset_from_csv(const std::string& text, const std::string& target,
                                const std::string& name = "test") {
    return encode_table(load_csv_from(parse_csv(text), target), name);
}

// All-numeric feature matrix plus 0/1 labels, target last. The class labels
// read "no"/"yes" so decoded output stays readable in failures.
inline Dataset dataset_from_rows(const std::vector<std::vector<double>>& features,
                                 const std::vector<int>& labels,
                                 const std::string& name = "test") {
    Dataset d;
    d.name = name;
    const std::size_t n_features = features.empty() ? 0 : features.front().size();
    for (std::size_t c = 0; c < n_features; ++c) {
        ColumnSchema schema;
        schema.name = "f" + std::to_string(c);
        schema.kind = ColumnKind::numeric;
        d.columns.push_back(schema);
    }
    ColumnSchema target_schema;
    target_schema.name = "target";
    target_schema.kind = ColumnKind::categorical;
    target_schema.categories = {"no", "yes"};
    d.columns.push_back(target_schema);
    d.target_index = n_features;
    d.class_labels = {"no", "yes"};
    for (std::size_t r = 0; r < features.size(); ++r) {
        std::vector<double> row = features[r];
        row.push_back(static_cast<double>(labels[r]));
        d.rows.push_back(std::move(row));
    }
    return d;
}

} // namespace mlselect::testing
