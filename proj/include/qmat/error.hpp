#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qmat {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    std::size_t pos;
    ParseError(const std::string& msg, std::size_t p)
        : Error(msg + " at position " + std::to_string(p)), pos(p) {}
};

struct ContractViolation : Error {
    using Error::Error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
    explicit DivisionByZero(const std::string& what) : Error(what) {}
};

struct PoleAtOne : Error {
    PoleAtOne() : Error("denominator vanishes at q = 1") {}
};

// raised when a computation would need the twist in degree > 2
struct OutOfScope : Error {
    using Error::Error;
};

struct NonTermination : Error {
    using Error::Error;
};

}  // namespace qmat
