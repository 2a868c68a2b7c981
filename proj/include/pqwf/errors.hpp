#pragma once

#include <stdexcept>
#include <string>

namespace pqwf {

/// Invalid value passed for a model or generation parameter.
class ParameterError : public std::invalid_argument {
public:
    explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

/// Input has the wrong length, level count, or per-class row count.
class ShapeError : public std::invalid_argument {
public:
    explicit ShapeError(const std::string& what) : std::invalid_argument(what) {}
};

/// Input is numerically degenerate (e.g. all-zero coefficients).
class DegenerateInputError : public std::runtime_error {
public:
    explicit DegenerateInputError(const std::string& what) : std::runtime_error(what) {}
};

/// File could not be opened or written.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed CSV/JSON input; carries the 1-based line number when known.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, long line = -1)
        : std::runtime_error(line >= 0 ? what + " (line " + std::to_string(line) + ")" : what),
          line_(line) {}
    long line() const { return line_; }

private:
    long line_;
};

} // namespace pqwf
