#pragma once

#include <stdexcept>
#include <string>

namespace zetatail {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Requested accuracy could not be reached within the iteration caps.
class PrecisionError : public std::runtime_error {
public:
    explicit PrecisionError(const std::string& what) : std::runtime_error(what) {}
};

/// Size parameter outside the supported enumeration range (k > 8 and similar).
class BoundError : public std::out_of_range {
public:
    explicit BoundError(const std::string& what) : std::out_of_range(what) {}
};

class UnsupportedDepthError : public DomainError {
public:
    explicit UnsupportedDepthError(const std::string& what) : DomainError(what) {}
};

}  // namespace zetatail
