#pragma once

#include <stdexcept>
#include <string>

namespace entspec {

// Input outside an operation's mathematical domain (non-positive energy,
// negative Huang-Rhys factor, zero bandwidth, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Malformed or invalid sweep configuration.  `key()` names the offending
// config key when one is known.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& message, std::string key = {})
        : std::runtime_error(key.empty() ? message : key + ": " + message), key_(std::move(key)) {}

    const std::string& key() const noexcept { return key_; }

private:
    std::string key_;
};

// A kernel failed at a specific grid point, or produced a non-finite value.
class EvaluationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Adaptive quadrature ran out of subdivisions before meeting its tolerance.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace entspec
