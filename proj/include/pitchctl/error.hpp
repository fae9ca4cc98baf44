#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pitchctl {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A column named by the mapping is missing from the CSV header.
class SchemaError : public Error {
public:
    explicit SchemaError(const std::string& column)
        : Error("missing column '" + column + "'"), column_(column) {}
    const std::string& column() const noexcept { return column_; }

private:
    std::string column_;
};

/// A data row could not be interpreted. Row numbers are 1-based and count
/// the header as row 1.
class ParseError : public Error {
public:
    ParseError(std::size_t row, const std::string& what)
        : Error("row " + std::to_string(row) + ": " + what), row_(row) {}
    std::size_t row() const noexcept { return row_; }

private:
    std::size_t row_;
};

class DuplicateRowError : public ParseError {
public:
    using ParseError::ParseError;
};

class BoundsError : public Error {
public:
    using Error::Error;
};

/// A nearest-neighbour query or a control surface was requested over no players.
class EmptyFrameError : public Error {
public:
    EmptyFrameError() : Error("frame has no players") {}
};

/// Malformed grid file.
class FormatError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

/// Invalid model or grid parameters.
class ParameterError : public Error {
public:
    using Error::Error;
};

}  // namespace pitchctl
