#pragma once

#include <stdexcept>
#include <string>

namespace lpm {

// Base for every error raised by the library. Callers that only need to
// distinguish "bad input" from "numerical trouble" can catch the subclasses.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class ConvergenceError : public Error {
public:
    using Error::Error;
};

// A theorem hypothesis (e.g. membership of a matrix in a hyperbolicity cone)
// does not hold for the supplied input.
class PreconditionError : public Error {
public:
    using Error::Error;
};

inline void require_dim(bool ok, const std::string& what) {
    if (!ok) throw DimensionError(what);
}

inline void require(bool ok, const std::string& what) {
    if (!ok) throw DomainError(what);
}

} // namespace lpm
