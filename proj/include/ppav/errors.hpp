#pragma once

#include <stdexcept>
#include <string>

namespace ppav {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input lies outside the documented domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A generating set does not span a full-rank lattice.
class RankError : public Error {
public:
    using Error::Error;
};

/// Factorization gave up before completion; `partial` holds what was found.
class FactorError : public Error {
public:
    FactorError(const std::string& what, std::string partial)
        : Error(what), partial_(std::move(partial)) {}
    const std::string& partial() const noexcept { return partial_; }

private:
    std::string partial_;
};

/// Polynomial does not satisfy x^{2n} f(q/x) = q^n f(x).
class NotWeilShape : public Error {
public:
    using Error::Error;
};

/// Roots of the polynomial do not all have absolute value sqrt(q), or the
/// isogeny class is not simple and ordinary where that is required.
class NotWeil : public Error {
public:
    using Error::Error;
};

class UnsupportedDegree : public Error {
public:
    using Error::Error;
};

class SearchLimitError : public Error {
public:
    using Error::Error;
};

/// A file could not be read or written.
class IoError : public Error {
public:
    using Error::Error;
};

/// An invariant that should hold by construction was violated.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace ppav
