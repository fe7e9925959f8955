#pragma once

#include <stdexcept>
#include <string>

namespace eudoxia {

struct SimError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad input: config files, traces, CLI arguments, registry keys. CLI exit 1.
struct UserError : SimError {
    using SimError::SimError;
};

// Broken internal contract (scheduler or engine bug). CLI exit 2.
struct FaultError : SimError {
    using SimError::SimError;
};

struct MissingFileError : UserError {
    explicit MissingFileError(const std::string& path)
        : UserError("file not found: " + path) {}
};

struct ParseError : UserError {
    ParseError(const std::string& source, std::size_t line, const std::string& what)
        : UserError(source + ":" + std::to_string(line) + ": " + what) {}
};

struct InvalidValueError : UserError {
    InvalidValueError(const std::string& key, const std::string& reason)
        : UserError("invalid value for '" + key + "': " + reason) {}
};

struct DuplicateKeyError : UserError {
    explicit DuplicateKeyError(const std::string& key)
        : UserError("scheduler key already registered: '" + key + "'") {}
};

struct UnknownSchedulerError : UserError {
    explicit UnknownSchedulerError(const std::string& key)
        : UserError("unknown scheduler: '" + key + "'") {}
};

struct InvariantViolationError : UserError {
    using UserError::UserError;
};

struct MissingPipelineError : UserError {
    using UserError::UserError;
};

struct InvalidAssignmentError : FaultError {
    using FaultError::FaultError;
};

struct UnknownContainerError : FaultError {
    using FaultError::FaultError;
};

struct OutOfOrderTickError : FaultError {
    using FaultError::FaultError;
};

struct ReconciliationError : FaultError {
    using FaultError::FaultError;
};

}  // namespace eudoxia
