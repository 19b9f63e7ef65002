#pragma once

#include <stdexcept>
#include <string>

namespace bidea {

/// Base class for all recoverable solver/model failures.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

/// Iterative solver exhausted its iteration budget.
class NoConvergence : public Error {
public:
    explicit NoConvergence(const std::string& what) : Error(what) {}
};

/// Bracketing root solve called with same-sign endpoints.
class BadBracket : public Error {
public:
    explicit BadBracket(const std::string& what) : Error(what) {}
};

/// State evolution produced a non-finite value.
class NonFinite : public Error {
public:
    explicit NonFinite(const std::string& what) : Error(what) {}
};

/// A Gent denominator reached its stretch limit.
class StretchLimitExceeded : public Error {
public:
    explicit StretchLimitExceeded(const std::string& what) : Error(what) {}
};

/// Curve too poorly resolved (or trivial) for equilibrium classification.
class DegenerateCurve : public Error {
public:
    explicit DegenerateCurve(const std::string& what) : Error(what) {}
};

/// Search finished without locating the requested feature.
class NotFound : public Error {
public:
    explicit NotFound(const std::string& what) : Error(what) {}
};

/// No force-balance point exists in the travel range.
class NoEquilibrium : public Error {
public:
    explicit NoEquilibrium(const std::string& what) : Error(what) {}
};

/// Least-squares fit failed to reduce the residual.
class FitDiverged : public Error {
public:
    explicit FitDiverged(const std::string& what) : Error(what) {}
};

/// Configuration file/override rejected by the strict schema.
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& what) : Error(what) {}
};

} // namespace bidea
