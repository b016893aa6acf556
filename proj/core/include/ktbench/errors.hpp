#pragma once

#include <stdexcept>
#include <string>

namespace ktbench {

// Error taxonomy shared across the library. The CLI maps these onto exit
// codes: ConfigError/IoError -> 2, DataError -> 1, NumericError -> 3.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad configuration or usage: unknown format tag, invalid counts, mismatched
// dimensions, unknown keys.
struct ConfigError : Error {
    using Error::Error;
};

// Filesystem problems: unreadable or missing files.
struct IoError : Error {
    using Error::Error;
};

// Invalid or insufficient data: empty datasets, single-class traces,
// out-of-range encodings.
struct DataError : Error {
    using Error::Error;
};

// Numerical failures: non-finite activations, undefined losses.
struct NumericError : Error {
    using Error::Error;
};

} // namespace ktbench
