#pragma once

#include <stdexcept>
#include <string>

namespace ospq {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Violated precondition or lattice constraint (odd torus coordinates,
// isotropic weight, index out of range, ...).
struct domain_error : error {
    using error::error;
};

// Syntax error with a byte offset into the input text.
struct parse_error : error {
    size_t pos;
    parse_error(size_t pos_, const std::string& msg)
        : error("parse error at " + std::to_string(pos_) + ": " + msg), pos(pos_) {}
};

// Linear solve could not be completed as specified: the ansatz window did
// not close, the system had no solution, or the solution was not unique.
struct solve_error : error {
    using error::error;
};

// Memoization budget exhausted (see OSPQ_MEMO_BUDGET).
struct resource_error : error {
    using error::error;
};

} // namespace ospq
