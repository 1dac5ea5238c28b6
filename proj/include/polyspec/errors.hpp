#pragma once

#include <stdexcept>
#include <string>

namespace polyspec {

// Error taxonomy mirrors the CLI exit codes: usage problems are caught by the
// argument parser itself, schema errors come from config validation, numeric
// covers both non-convergence and insufficient data, resource covers caps.

struct ParameterError : std::invalid_argument {
    explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

struct PreconditionError : std::invalid_argument {
    explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

struct SchemaError : std::runtime_error {
    explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

struct InsufficientDataError : std::runtime_error {
    explicit InsufficientDataError(const std::string& what) : std::runtime_error(what) {}
};

struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

struct NotAvailableError : std::runtime_error {
    explicit NotAvailableError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace polyspec
