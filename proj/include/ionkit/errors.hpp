#ifndef IONKIT_ERRORS_HPP
#define IONKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ionkit {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input file (CSV/JSON table, partition file, auxiliary file).
class ParseError : public Error {
public:
    using Error::Error;
};

/// Sector code rejected under strict-registry rules.
class RegistryError : public ParseError {
public:
    using ParseError::ParseError;
};

/// Unknown node or sector lookup.
class LookupError : public Error {
public:
    using Error::Error;
};

/// Invalid parameter or mathematically undefined request
/// (zero variance, empty network, degenerate HITS, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Iterative solver exhausted max_iter; carries the last residual.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, double last_residual)
        : Error(what), residual(last_residual) {}

    double residual;
};

} // namespace ionkit

#endif
