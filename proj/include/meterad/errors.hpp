#pragma once

#include <stdexcept>
#include <string>

namespace meterad {

// Error taxonomy shared by all modules. The CLI maps each class to a
// distinct exit code.

/// Invalid option, parameter, or configuration value.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Input does not match the expected schema (missing column, bad header).
struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Values are malformed, degenerate, or insufficient for the operation.
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Numerical failure: singular matrix, divergence, undefined statistic.
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A required upstream artifact (model file, feature file) is missing.
struct ArtifactError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace meterad
