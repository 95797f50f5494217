#pragma once

#include <stdexcept>
#include <string>

namespace catn {

// An argument violated an operation's contract (shape mismatch, bad range,
// non-divisible grid sides, ...).
class InvalidInputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An iterative solver exhausted its iteration budget. Carries the last
// optimality gap so callers can report how far off the run ended.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double last_gap)
        : std::runtime_error(what), last_gap_(last_gap) {}

    double last_gap() const noexcept { return last_gap_; }

private:
    double last_gap_;
};

// Filesystem-level failure (missing file, short write).
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Well-formedness failure of file contents: bad magic, unsupported version,
// truncation, checksum mismatch.
class FormatError : public IoError {
public:
    using IoError::IoError;
};

} // namespace catn
