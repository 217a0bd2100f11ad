#pragma once

/**
 * @file errors.hpp
 * @brief Exception taxonomy shared by all seqrank modules.
 */

#include <cstddef>
#include <stdexcept>
#include <string>

namespace seqrank {

/// Base class for every error raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed scalar literal, sequence file, or matrix file.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

/// Division by an exactly-zero scalar.
class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

/// An operation was asked about a degenerate object (zero polynomial, etc.).
class DegenerateInput : public Error {
public:
    explicit DegenerateInput(const std::string& what) : Error("degenerate input: " + what) {}
};

/// Matrix dimensions do not fit the operation (non-square, non-symmetric, ...).
class ShapeError : public Error {
public:
    explicit ShapeError(const std::string& what) : Error("shape error: " + what) {}
};

/// Exact linear solve hit a singular matrix.
class SingularMatrix : public Error {
public:
    SingularMatrix() : Error("singular matrix") {}
};

/// A window needed more sequence terms than the prefix provides.
class PrefixTooShort : public Error {
public:
    PrefixTooShort(std::size_t needed, std::size_t have)
        : Error("prefix too short: need " + std::to_string(needed) + " terms, have " +
                std::to_string(have)),
          needed(needed),
          have(have) {}
    std::size_t needed;
    std::size_t have;
};

/// The sequence window carries the wrong indexing origin for the operation.
class IndexConventionError : public Error {
public:
    explicit IndexConventionError(const std::string& what)
        : Error("index convention: " + what) {}
};

/// Minimal-recurrence search found nothing, so no ideal generator exists in the prefix.
class NoGeneratorWithinPrefix : public Error {
public:
    NoGeneratorWithinPrefix() : Error("no recurrence-ideal generator within the prefix") {}
};

/// Simultaneous root iteration failed to converge within its iteration budget.
class RootFindingFailed : public Error {
public:
    explicit RootFindingFailed(const std::string& what)
        : Error("root finding failed: " + what) {}
};

/// A provably-equivalent pair of certification paths produced different answers.
/// Reaching this is a defect (or an adversarial under-determined prefix), never
/// a normal certificate outcome.
class CrossCheckDefect : public Error {
public:
    explicit CrossCheckDefect(const std::string& what)
        : Error("cross-check defect: " + what) {}
};

}  // namespace seqrank
