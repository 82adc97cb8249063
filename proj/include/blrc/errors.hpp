#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace blrc {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class FieldMismatch : public Error {
public:
    FieldMismatch() : Error("operands belong to different fields") {}
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("inverse of zero") {}
};

class NoSolution : public Error {
public:
    using Error::Error;
};

// Raised when the surviving blocks do not determine the data.
class Undecodable : public Error {
public:
    explicit Undecodable(std::vector<int> pattern);

    // Erased block indices, 0-based.
    const std::vector<int>& pattern() const noexcept { return pattern_; }

private:
    std::vector<int> pattern_;
};

class ConstructionFailure : public Error {
public:
    using Error::Error;
};

class FormatError : public Error {
public:
    using Error::Error;
};

} // namespace blrc
