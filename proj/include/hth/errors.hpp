#pragma once

#include <stdexcept>
#include <string>

namespace hth {

/// Mismatched vector/matrix sizes.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Invalid scalar parameter (negative lambda, nonpositive sigma, ...).
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A point lies outside the domain a basis is defined on.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// The discrete Gram identity A^T W A = I fails beyond tolerance.
class InvalidBasisError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A data file cannot be parsed or violates its format contract.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Loaded data fails a mathematical integrity check (design moments, weights).
class IntegrityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A problem exceeds a hard size guard (e.g. brute-force enumeration).
class SizeError : public std::length_error {
public:
    using std::length_error::length_error;
};

/// Bad experiment configuration.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace hth
