#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace splinterlab {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Operands do not share the required dimension.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// An index (solution index, permutation rank, ...) is out of range.
class RangeError : public Error {
public:
    using Error::Error;
};

/// A value violates a precondition (zero vector, malformed string, ...).
class ValueError : public Error {
public:
    using Error::Error;
};

/// An enumeration-backed operation was asked to exceed its size cap.
class SizeCapError : public Error {
public:
    using Error::Error;
};

/// A census query repeats (up to scaling) an earlier stream query.
class ProportionalQueryError : public Error {
public:
    ProportionalQueryError(const std::string& what, std::size_t offending_index)
        : Error(what), index(offending_index) {}
    std::size_t index;
};

/// An exact invariant that must hold by construction failed to recompute.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace splinterlab
