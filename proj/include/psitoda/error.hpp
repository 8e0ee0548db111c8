#ifndef PSITODA_ERROR_HPP
#define PSITODA_ERROR_HPP

#include <stdexcept>
#include <string>

namespace psitoda {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string &what) : std::runtime_error(what) {}
};

// Violated precondition or value outside an operation's domain.
struct DomainError : Error {
    explicit DomainError(const std::string &what) : Error(what) {}
};

// 0/0 cells, inf - inf, and similar unresolvable expressions.
struct IndeterminateError : Error {
    explicit IndeterminateError(const std::string &what) : Error(what) {}
};

// "Cannot happen" conditions (e.g. an exact division with remainder where
// an identity guarantees exactness). These indicate a bug, not bad input.
struct InternalError : Error {
    explicit InternalError(const std::string &what) : Error(what) {}
};

} // namespace psitoda

#endif
