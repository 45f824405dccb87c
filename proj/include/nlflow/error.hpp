#pragma once

#include <stdexcept>
#include <string>

namespace nlflow {

/// Base of every error raised by the library. `kind()` is the stable,
/// machine-parsable tag the CLI prints as `error: <kind>: <message>`.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

/// Input outside the mathematical domain of an operation (loops where
/// loopless is required, rank-deficient matrix, n below a bound, ...).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error("domain", what) {}
};

/// An enumeration or lattice would exceed its configured bound.
class ResourceError : public Error {
public:
    explicit ResourceError(const std::string& what) : Error("resource", what) {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error("parse", what) {}
};

class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& what) : Error("precondition", what) {}
};

class NotIntegerPolynomialError : public Error {
public:
    explicit NotIntegerPolynomialError(const std::string& what)
        : Error("not-integer-polynomial", what) {}
};

/// A held-out witness disagrees with an interpolant. Signals a bug in the
/// counting code, never an expected outcome.
class PolynomialityError : public Error {
public:
    explicit PolynomialityError(const std::string& what)
        : Error("polynomiality-violated", what) {}
};

}  // namespace nlflow
