#pragma once

#include <stdexcept>
#include <string>

namespace mlselect {

// Base for all toolkit errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Bad configuration (unknown key, unparsable value, invalid filter).
// Maps to exit code 2 in the CLI.
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& what) : Error(what) {}
};

// Data violates an operation's preconditions (ragged rows, single-class
// training set, all-missing column, ...).
class DataError : public Error {
public:
    explicit DataError(const std::string& what) : Error(what) {}
};

// A categorical value not present in the fitted schema.
class UnseenCategoryError : public DataError {
public:
    explicit UnseenCategoryError(const std::string& what) : DataError(what) {}
};

} // namespace mlselect
