#pragma once

#include <stdexcept>
#include <string>

namespace smtl {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid argument to an operation (shape mismatch, bad enum value, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Malformed or rejected configuration (unknown keys, schema violations).
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Missing or unreadable dataset artifacts (manifests, images, splits).
class DataError : public Error {
public:
    using Error::Error;
};

/// Training aborted (non-finite loss, empty split, ...).
class TrainingError : public Error {
public:
    using Error::Error;
};

}  // namespace smtl
