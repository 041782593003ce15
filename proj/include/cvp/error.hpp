#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cvp {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input, failed validation, I/O failure.
class DataError : public Error {
public:
    using Error::Error;
};

// A parse failure tied to a specific line of an input file (1-based).
class FormatError : public DataError {
public:
    FormatError(std::size_t line, const std::string& what)
        : DataError("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// Well-formed input on which the computation is undefined: constant series,
// empty polarity class, coincident centroids.
class DegenerateError : public Error {
public:
    using Error::Error;
};

}  // namespace cvp
