#pragma once

#include <stdexcept>
#include <string>

namespace shiftedkeys {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid input: wrong symmetry class, non-involution code, bad index, parse faults.
struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

/// Malformed textual input (expressions, polynomials, permutations).
struct ParseError : DomainError {
    explicit ParseError(const std::string& msg) : DomainError(msg) {}
};

/// A configured resource limit (term count, degree, iteration budget) was hit.
struct GuardError : Error {
    explicit GuardError(const std::string& msg) : Error(msg) {}
};

/// An internal identity that is provably exact failed; indicates a bug, not bad input.
struct InvariantError : Error {
    explicit InvariantError(const std::string& msg) : Error(msg) {}
};

} // namespace shiftedkeys
