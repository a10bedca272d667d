#include "mlselect/synth.hpp"

#include "mlselect/error.hpp"
#include "mlselect/rng.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

namespace mlselect {

namespace {

double gaussian(SplitMix64& rng) {
    // Box-Muller; the half-step keeps u1 away from zero.
    const double u1 = (static_cast<double>(rng.next() >> 11) + 0.5) * 0x1.0p-53;
    const double u2 = static_cast<double>(rng.next() >> 11) * 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
}

std::string format_cell(double value) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.4f", value);
    return buffer;
}

enum class FeatureRole { signal, noise, duplicate, categorical };

} // namespace

const std::vector<SynthShape>& bundled_shapes() {
    static const std::vector<SynthShape> shapes = {
        {"avocado", 18249, 13}, {"bank", 11162, 17},  {"telecom", 4000, 12},
        {"cell2cell", 51047, 38}, {"churn", 3333, 21}, {"cardio", 70000, 13},
        {"fetal", 2126, 22},    {"heart", 1025, 14},
    };
    return shapes;
}

const SynthShape& bundled_shape(const std::string& name) {
    for (const SynthShape& shape : bundled_shapes())
        if (shape.name == name) return shape;
    std::string known;
    for (const SynthShape& shape : bundled_shapes()) {
        if (!known.empty()) known += ", ";
        known += shape.name;
    }
    throw ConfigError("unknown bundled dataset '" + name + "' (known: " + known + ")");
}

RawTable make_synthetic_table(const SynthShape& shape, std::uint64_t seed) {
    if (shape.rows < 2 || shape.attrs < 6)
        throw ConfigError("synthetic shape needs >= 2 rows and >= 6 attributes");
    const std::size_t n_features = shape.attrs - 1;

    std::vector<FeatureRole> roles(n_features, FeatureRole::noise);
    std::vector<std::size_t> cardinality(n_features, 0);
    for (std::size_t f = 0; f < n_features; ++f) {
        if (f < 3)
            roles[f] = FeatureRole::signal;
        else if (f == n_features - 1)
            roles[f] = FeatureRole::duplicate;
        else if (f % 4 == 3) {
            roles[f] = FeatureRole::categorical;
            cardinality[f] = 2 + f % 3;
        }
    }

    RawTable table;
    for (std::size_t f = 0; f < n_features; ++f) {
        char name[24];
        std::snprintf(name, sizeof(name), "f%02zu", f);
        table.header.push_back(name);
    }
    table.header.push_back("target");

    const double signal_coef[3] = {1.5, -1.0, 0.75};
    SplitMix64 rng(derive_seed(seed, shape.name));
    table.rows.reserve(shape.rows);
    for (std::size_t r = 0; r < shape.rows; ++r) {
        std::vector<std::string> cells(shape.attrs);
        double score = 0.0;
        double first_signal = 0.0;
        for (std::size_t f = 0; f < n_features; ++f) {
            switch (roles[f]) {
            case FeatureRole::signal: {
                const double z = gaussian(rng);
                if (f == 0) first_signal = z;
                score += signal_coef[f] * z;
                cells[f] = format_cell(z);
                break;
            }
            case FeatureRole::noise:
                cells[f] = format_cell(gaussian(rng));
                break;
            case FeatureRole::duplicate:
                cells[f] = format_cell(first_signal + 0.05 * gaussian(rng));
                break;
            case FeatureRole::categorical: {
                const std::size_t k = rng.bounded(cardinality[f]);
                score += 0.2 * (static_cast<double>(k) -
                                static_cast<double>(cardinality[f] - 1) / 2.0);
                cells[f] = "c" + std::to_string(k);
                break;
            }
            }
        }
        score += 0.4 * gaussian(rng);
        cells[n_features] = score > 0.0 ? "yes" : "no";
        for (std::size_t f = 0; f < n_features; ++f)
            if (rng.uniform() < 0.01) cells[f] = "NA";
        table.rows.push_back(std::move(cells));
    }
    return table;
}

std::string write_synthetic_csv(const std::string& dir, const SynthShape& shape,
                                std::uint64_t seed) {
    std::filesystem::create_directories(dir);
    const std::string path = (std::filesystem::path(dir) / (shape.name + ".csv")).string();
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write '" + path + "'");

    const RawTable table = make_synthetic_table(shape, seed);
    for (std::size_t c = 0; c < table.header.size(); ++c)
        out << (c ? "," : "") << csv_escape(table.header[c]);
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << csv_escape(row[c]);
        out << '\n';
    }
    if (!out) throw DataError("write failed for '" + path + "'");
    return path;
}

} // namespace mlselect
