#pragma once

#include <stdexcept>
#include <string>

namespace vsb {

// Base class for all library errors. Everything thrown on a contract
// violation derives from this, so callers can catch one type when they
// do not care which precondition failed.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class NotPrimeError : public Error {
public:
    explicit NotPrimeError(const std::string& msg) : Error(msg) {}
};

class ReducibleModulusError : public Error {
public:
    explicit ReducibleModulusError(const std::string& msg) : Error(msg) {}
};

class DivisionByZeroError : public Error {
public:
    explicit DivisionByZeroError(const std::string& msg) : Error(msg) {}
};

// Mixing elements of incompatible fields in one operation.
class FieldMismatchError : public Error {
public:
    explicit FieldMismatchError(const std::string& msg) : Error(msg) {}
};

// Map-text syntax errors carry a 1-based source position.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, int line, int col)
        : Error(msg + " (line " + std::to_string(line) + ", column " +
                std::to_string(col) + ")"),
          line_(line), col_(col) {}
    int line() const { return line_; }
    int column() const { return col_; }

private:
    int line_;
    int col_;
};

class UnknownVariableError : public ParseError {
public:
    UnknownVariableError(const std::string& msg, int line, int col)
        : ParseError(msg, line, col) {}
};

class ComponentCountError : public ParseError {
public:
    ComponentCountError(const std::string& msg, int line, int col)
        : ParseError(msg, line, col) {}
};

class ConstantMapError : public Error {
public:
    explicit ConstantMapError(const std::string& msg) : Error(msg) {}
};

class DomainTooLargeError : public Error {
public:
    explicit DomainTooLargeError(const std::string& msg) : Error(msg) {}
};

class UnusedVariablesError : public Error {
public:
    explicit UnusedVariablesError(const std::string& msg) : Error(msg) {}
};

class UncoverableCoordinateError : public Error {
public:
    explicit UncoverableCoordinateError(const std::string& msg) : Error(msg) {}
};

class PartsSumMismatchError : public Error {
public:
    explicit PartsSumMismatchError(const std::string& msg) : Error(msg) {}
};

class NotInBaseFieldError : public Error {
public:
    explicit NotInBaseFieldError(const std::string& msg) : Error(msg) {}
};

class NotTwoDimensionalError : public Error {
public:
    explicit NotTwoDimensionalError(const std::string& msg) : Error(msg) {}
};

class BadParamsError : public Error {
public:
    explicit BadParamsError(const std::string& msg) : Error(msg) {}
};

} // namespace vsb
