#pragma once

#include <stdexcept>
#include <string>

namespace ephshield {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Element-set text that violates the fixed-column grammar. Carries the line
// number (0 = name line) and the 1-based column range of the offending field.
class TleParseError : public Error {
public:
    enum class Kind { BadLength, BadChecksum, NonNumericField, IdMismatch, BadStructure };

    TleParseError(Kind k, int line_no, int col_begin, int col_end, const std::string& what)
        : Error(what), kind(k), line(line_no), col_first(col_begin), col_last(col_end) {}

    Kind kind;
    int line;
    int col_first;
    int col_last;
};

// A value that cannot be represented in its target format (printable column,
// config range, ...).
class RangeError : public Error {
public:
    explicit RangeError(const std::string& what) : Error(what) {}
};

// Orbital elements outside the physical feasibility envelope.
class InfeasibleElementsError : public Error {
public:
    explicit InfeasibleElementsError(const std::string& what) : Error(what) {}
};

// Iterative solver failure; carries the last residual.
class NumericalError : public Error {
public:
    NumericalError(const std::string& what, double res) : Error(what), residual(res) {}
    double residual;
};

class CryptoError : public Error {
public:
    explicit CryptoError(const std::string& what) : Error(what) {}
};

class IoError : public Error {
public:
    explicit IoError(const std::string& what) : Error(what) {}
};

// Malformed canonical binary data.
class DecodeError : public Error {
public:
    explicit DecodeError(const std::string& what) : Error(what) {}
};

} // namespace ephshield
