#pragma once

#include <stdexcept>
#include <string>

#include "dicebits/bitstring.hpp"

namespace dicebits {

// Malformed textual input (tree expressions, symbol streams, bit strings).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A bit sequence ended in the middle of a codeword. Carries the residual
// suffix that could not be completed.
class DecodeError : public std::runtime_error {
public:
    DecodeError(const std::string& what, BitString residual_suffix)
        : std::runtime_error(what), residual(std::move(residual_suffix)) {}

    BitString residual;
};

// An exhaustive check would enumerate more strings than the configured cap.
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

} // namespace dicebits
