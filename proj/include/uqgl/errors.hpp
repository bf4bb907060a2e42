#pragma once

#include <stdexcept>
#include <string>

namespace uqgl {

// Base for every error thrown by the library. Subclasses distinguish
// user-facing input problems from arithmetic domain errors and from
// internal invariant breaches (the CLI maps them to distinct exit codes).
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Arithmetic domain errors.
struct DivisionByZero : Error {
    explicit DivisionByZero(const std::string& msg = "division by zero")
        : Error(msg) {}
};

struct PoleAtPoint : Error {
    explicit PoleAtPoint(const std::string& msg) : Error(msg) {}
};

// Index and ordering errors from the root combinatorics.
struct IndexOutOfRange : Error {
    explicit IndexOutOfRange(const std::string& msg) : Error(msg) {}
};

struct NotStrictlyOrdered : Error {
    explicit NotStrictlyOrdered(const std::string& msg) : Error(msg) {}
};

// Element-level domain errors.
struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& msg) : Error(msg) {}
};

struct NotHomogeneous : Error {
    explicit NotHomogeneous(const std::string& msg) : Error(msg) {}
};

struct IndefiniteDegreeSign : Error {
    explicit IndefiniteDegreeSign(const std::string& msg) : Error(msg) {}
};

struct AlreadyOrdered : Error {
    explicit AlreadyOrdered(const std::string& msg) : Error(msg) {}
};

// Expression language errors.
struct SyntaxError : Error {
    std::size_t position;  // byte offset into the input
    SyntaxError(std::size_t pos, const std::string& msg)
        : Error(msg), position(pos) {}
};

// Invariant breaches that indicate a bug in the library itself.
struct InternalError : Error {
    explicit InternalError(const std::string& msg) : Error(msg) {}
};

}  // namespace uqgl
