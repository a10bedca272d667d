#pragma once

#include "mlselect/csv.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace mlselect {

// Row/attribute counts mirroring widely used public churn and health tables,
// so the bundled grid exercises realistic sizes offline.
struct SynthShape {
    std::string name;
    std::size_t rows = 0;
    std::size_t attrs = 0; // including the target column
};

const std::vector<SynthShape>& bundled_shapes();

// Shape by name; throws ConfigError for an unknown one.
const SynthShape& bundled_shape(const std::string& name);

// Deterministic synthetic table: the first three features carry a linear
// signal that decides the yes/no target (plus mild categorical effects and
// noise), the last feature nearly duplicates the first (collinearity bait),
// every fourth remaining feature is categorical, and roughly 1% of feature
// cells are missing ("NA"). Identical (shape, seed) means identical bytes.
RawTable make_synthetic_table(const SynthShape& shape, std::uint64_t seed);

// Writes <dir>/<name>.csv. Returns the path.
std::string write_synthetic_csv(const std::string& dir, const SynthShape& shape,
                                std::uint64_t seed);

} // namespace mlselect
