#pragma once

#include <stdexcept>
#include <string>

namespace surjcount {

// Input text could not be parsed (graph files, list files, CLI payloads).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An operation was called outside its documented preconditions.
struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An enumeration or sampling budget was exhausted before completion.
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An exact solve failed: singular system, non-integral solution, or an
// inexact division. Signals a broken oracle rather than bad user input.
struct SolveError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace surjcount
