#pragma once

#include <stdexcept>
#include <string>

namespace monav {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OutOfBounds : Error {
    using Error::Error;
};

struct GenerationFailed : Error {
    using Error::Error;
};

struct PlacementFailed : Error {
    using Error::Error;
};

struct ActionInvalidForMode : Error {
    using Error::Error;
};

struct MetricDomain : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

struct DataError : Error {
    using Error::Error;
};

} // namespace monav
