#ifndef SCHROEDER_ERRORS_HPP
#define SCHROEDER_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace schroeder {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An address step left the tree (walked below a leaf).
struct AddressOutOfTree : Error {
    using Error::Error;
};

// Text input does not conform to the grammar.
struct SyntaxError : Error {
    std::size_t position;
    SyntaxError(std::size_t pos, const std::string& expected)
        : Error("syntax error at position " + std::to_string(pos) + ": expected " + expected),
          position(pos) {}
};

// Schroeder node with fewer than two children.
struct ArityError : Error {
    std::size_t position;
    explicit ArityError(std::size_t pos)
        : Error("arity error at position " + std::to_string(pos) +
                ": internal node needs at least 2 children"),
          position(pos) {}
};

// Pointed input with zero or more than one point marker.
struct PointError : Error {
    using Error::Error;
};

struct NotWellWeighted : Error {
    using Error::Error;
};

// Input violates an invariant that valid construction paths cannot violate;
// indicates a bug upstream, not a user error.
struct MalformedInput : Error {
    using Error::Error;
};

// sigma is defined only on trees with at least 2 leaves.
struct TooSmall : Error {
    using Error::Error;
};

// An exact division in a recurrence left a remainder; signals an
// implementation bug, never expected for valid inputs.
struct InexactDivision : Error {
    using Error::Error;
};

struct StepBudgetExhausted : Error {
    using Error::Error;
};

// A sampler produced a tree outside the enumerated class list.
struct UnknownClass : Error {
    using Error::Error;
};

}  // namespace schroeder

#endif  // SCHROEDER_ERRORS_HPP
