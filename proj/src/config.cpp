#include "mlselect/config.hpp"

#include "mlselect/error.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace mlselect {

namespace {

std::string trim(const std::string& s) {
    std::size_t begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    std::size_t end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& key, const std::string& value) {
    const std::string v = trim(value);
    double out = 0.0;
    const char* last = v.data() + v.size();
    auto [ptr, ec] = std::from_chars(v.data(), last, out);
    if (ec != std::errc{} || ptr != last)
        throw ConfigError("key '" + key + "': '" + value + "' is not a number");
    return out;
}

std::uint64_t parse_unsigned(const std::string& key, const std::string& value) {
    const std::string v = trim(value);
    std::uint64_t out = 0;
    const char* last = v.data() + v.size();
    auto [ptr, ec] = std::from_chars(v.data(), last, out);
    if (ec != std::errc{} || ptr != last)
        throw ConfigError("key '" + key + "': '" + value + "' is not a nonnegative integer");
    return out;
}

std::vector<std::string> split_commas(const std::string& value) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = value.find(',', start);
        if (comma == std::string::npos) {
            parts.push_back(value.substr(start));
            break;
        }
        parts.push_back(value.substr(start, comma - start));
        start = comma + 1;
    }
    return parts;
}

std::string join_commas(const std::vector<std::string>& parts) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) out += ',';
        out += parts[i];
    }
    return out;
}

} // namespace

std::string format_roundtrip(double value) {
    char buffer[64];
    auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
    (void)ec;
    return std::string(buffer, ptr);
}

void apply_config_key(ExperimentConfig& config, const std::string& key, const std::string& value) {
    if (key == "data") {
        config.data_paths.push_back(value);
    } else if (key == "target") {
        config.targets.push_back(value);
    } else if (key == "split_ratio") {
        config.split_ratio = parse_double(key, value);
    } else if (key == "master_seed") {
        config.master_seed = parse_unsigned(key, value);
    } else if (key == "weights") {
        const auto parts = split_commas(value);
        if (parts.size() != 5)
            throw ConfigError("key 'weights': expected 5 comma-separated values "
                              "(accuracy,precision,recall,f_measure,aic), got " +
                              std::to_string(parts.size()));
        config.weights.accuracy = parse_double(key, parts[0]);
        config.weights.precision = parse_double(key, parts[1]);
        config.weights.recall = parse_double(key, parts[2]);
        config.weights.f_measure = parse_double(key, parts[3]);
        config.weights.aic = parse_double(key, parts[4]);
    } else if (key == "category") {
        config.category_filter = parse_category(trim(value));
    } else if (key == "target_threshold") {
        config.target_threshold = parse_double(key, value);
    } else if (key == "pairwise_threshold") {
        config.pairwise_threshold = parse_double(key, value);
    } else if (key == "missing_tokens") {
        config.missing_tokens = split_commas(value);
    } else if (key == "threads") {
        const std::uint64_t n = parse_unsigned(key, value);
        if (n == 0) throw ConfigError("key 'threads': must be at least 1");
        config.threads = static_cast<std::size_t>(n);
    } else if (key == "report") {
        config.report_path = value;
    } else if (key == "tables") {
        config.tables_path = value;
    } else if (key == "roc_dir") {
        config.roc_dir = value;
    } else if (key.rfind("hyper.", 0) == 0) {
        const std::string rest = key.substr(6);
        const std::size_t dot = rest.find('.');
        // hyper.<key> hits every model carrying it; hyper.<MODEL>.<key> is strict.
        const std::string model = dot == std::string::npos ? "" : rest.substr(0, dot);
        const std::string hyper_key = dot == std::string::npos ? rest : rest.substr(dot + 1);
        if (hyper_key.empty()) throw ConfigError("key '" + key + "': empty hyperparameter name");
        config.hyper[model][hyper_key] = parse_double(key, value);
    } else {
        throw ConfigError("unknown config key '" + key + "'");
    }
}

ExperimentConfig parse_config_text(const std::string& text, ExperimentConfig base) {
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') continue;
        const std::size_t eq = stripped.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(line_no) +
                              ": expected key=value, got '" + stripped + "'");
        apply_config_key(base, trim(stripped.substr(0, eq)), trim(stripped.substr(eq + 1)));
    }
    return base;
}

ExperimentConfig parse_config_file(const std::string& path, ExperimentConfig base) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config_text(buffer.str(), std::move(base));
}

std::string serialize_config(const ExperimentConfig& config) {
    std::ostringstream out;
    for (std::size_t i = 0; i < config.data_paths.size(); ++i) {
        out << "data=" << config.data_paths[i] << '\n';
        if (i < config.targets.size()) out << "target=" << config.targets[i] << '\n';
    }
    out << "split_ratio=" << format_roundtrip(config.split_ratio) << '\n';
    out << "master_seed=" << config.master_seed << '\n';
    out << "weights=" << format_roundtrip(config.weights.accuracy) << ','
        << format_roundtrip(config.weights.precision) << ','
        << format_roundtrip(config.weights.recall) << ','
        << format_roundtrip(config.weights.f_measure) << ','
        << format_roundtrip(config.weights.aic) << '\n';
    if (config.category_filter)
        out << "category=" << category_name(*config.category_filter) << '\n';
    out << "target_threshold=" << format_roundtrip(config.target_threshold) << '\n';
    out << "pairwise_threshold=" << format_roundtrip(config.pairwise_threshold) << '\n';
    out << "missing_tokens=" << join_commas(config.missing_tokens) << '\n';
    out << "threads=" << config.threads << '\n';
    out << "report=" << config.report_path << '\n';
    out << "tables=" << config.tables_path << '\n';
    out << "roc_dir=" << config.roc_dir << '\n';
    for (const auto& [model, values] : config.hyper)
        for (const auto& [hyper_key, value] : values) {
            out << "hyper.";
            if (!model.empty()) out << model << '.';
            out << hyper_key << '=' << format_roundtrip(value) << '\n';
        }
    return out.str();
}

} // namespace mlselect
