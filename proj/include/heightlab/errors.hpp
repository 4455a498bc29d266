#pragma once

#include <stdexcept>
#include <string>

namespace heightlab {

/// Raised when an input lies outside the domain of an operation.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Raised when root certification fails at the maximum working precision.
class PrecisionExhausted : public std::runtime_error {
public:
    PrecisionExhausted(const std::string& what, long bits)
        : std::runtime_error(what), bits_(bits) {}

    long bits() const noexcept { return bits_; }

private:
    long bits_;
};

} // namespace heightlab
