#pragma once

#include <stdexcept>
#include <string>

namespace qlt {

/// Base class for every error raised by this library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when elements of two different fields are combined.
struct field_mismatch_error : error {
    field_mismatch_error() : error("field mismatch") {}
};

/// The clause of the parameter assumption that a tuple violates.
enum class assumption_clause { q_fourth_root, clause_i, clause_ii, clause_iii };

/// Raised when a parameter tuple (q,a,b,c,d) fails validation. Carries the
/// violated clause and the exponent of the offending list member, so callers
/// can report exactly which membership test fired.
struct assumption_error : error {
    assumption_clause clause;
    int witness_exponent;

    assumption_error(assumption_clause which, int exponent, const std::string& message)
        : error(message), clause(which), witness_exponent(exponent) {}
};

} // namespace qlt
