// Error taxonomy. Everything caused by bad input (files, config values,
// unknown seeds) derives from InputError; violations of internal contracts
// derive from ContractError. The CLI maps the former to exit code 1 and the
// latter to exit code 2.
#pragma once

#include <stdexcept>
#include <string>

namespace folkweave {

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public InputError {
public:
    ParseError(const std::string& msg, long line)
        : InputError(msg + " (line " + std::to_string(line) + ")"), line_(line) {}
    long line() const { return line_; }

private:
    long line_;
};

class RangeError : public InputError {
public:
    RangeError(const std::string& key, const std::string& msg)
        : InputError("parameter '" + key + "': " + msg), key_(key) {}
    const std::string& key() const { return key_; }

private:
    std::string key_;
};

class SeedNotFound : public InputError {
public:
    explicit SeedNotFound(const std::string& stem)
        : InputError("seed term '" + stem + "' has no saplings in the corpus") {}
};

class SeedNotInReference : public InputError {
public:
    explicit SeedNotInReference(const std::string& stem)
        : InputError("seed term '" + stem + "' does not appear in the reference taxonomy") {}
};

class ContractError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Caller violated a documented precondition of an operation.
class GateViolation : public ContractError {
public:
    using ContractError::ContractError;
};

// A data-structure invariant failed to hold.
class InvariantViolation : public ContractError {
public:
    using ContractError::ContractError;
};

}  // namespace folkweave
