#pragma once

#include <stdexcept>
#include <string>

namespace fmk {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Mismatched dimension or truncation degree between operands.
class DimensionMismatch : public Error {
public:
    explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

// Enumeration request beyond the configured size cap.
class SizeCapError : public Error {
public:
    explicit SizeCapError(const std::string& what) : Error(what) {}
};

// A structural invariant of the input data does not hold.
class InvariantViolation : public Error {
public:
    explicit InvariantViolation(const std::string& what) : Error(what) {}
};

// Input text (JSON, rational literal, word string) could not be parsed.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace fmk
