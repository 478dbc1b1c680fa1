#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mtrend {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input row; carries the 1-based line number.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t line)
        : Error(msg + " (line " + std::to_string(line) + ")"), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// Input violates a domain invariant (bid > ask, non-increasing schedule, ...).
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& msg) : Error(msg), line_(0) {}
    ValidationError(const std::string& msg, std::size_t line)
        : Error(msg + " (line " + std::to_string(line) + ")"), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class EmptyInputError : public Error {
public:
    using Error::Error;
};

// Requested (t, lag) window falls outside the series.
class WindowError : public Error {
public:
    using Error::Error;
};

// Strict resampling hit an empty minute.
class GapError : public Error {
public:
    using Error::Error;
};

// Series too short for the requested schedule or horizon.
class InsufficientDataError : public Error {
public:
    using Error::Error;
};

// Trend matrix and shift series derive from different source series.
class AlignmentError : public Error {
public:
    using Error::Error;
};

// Statistic has an empty conditioning set; never silently zero.
class UndefinedStatisticError : public Error {
public:
    using Error::Error;
};

// Naive similarity oracle refused an input above its guard bound.
class OracleSizeError : public Error {
public:
    using Error::Error;
};

}  // namespace mtrend
