#pragma once

#include <stdexcept>
#include <string>

namespace icurisk {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid configuration, schema, or arguments. Mapped to CLI exit code 2.
struct ConfigError : Error {
    using Error::Error;
};

// Malformed or inconsistent input data (unparsable cells, bad outcome labels).
struct DataError : Error {
    using Error::Error;
};

// Numeric or state errors raised while computing.
struct ComputeError : Error {
    using Error::Error;
};

// A stage subcommand was run without its upstream artifacts.
struct DependencyError : Error {
    using Error::Error;
};

} // namespace icurisk
