#pragma once

#include <stdexcept>
#include <string>

namespace bb {

// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operands live in polynomial rings with different variable counts.
struct dimension_error : error {
    using error::error;
};

// Degree or support requested for the zero polynomial.
struct zero_polynomial_error : error {
    using error::error;
};

// A marked term is missing from the support or has non-maximal degree.
struct marking_error : error {
    using error::error;
};

// A strategy was configured with invalid parameters (e.g. a term ordering
// that is not degree compatible used as a marking source).
struct strategy_error : error {
    using error::error;
};

// An algorithm precondition was violated by the caller.
struct contract_error : error {
    using error::error;
};

// A polynomial set does not have the structure required by an operation
// (e.g. certification input that is not a border prebasis).
struct structure_error : error {
    using error::error;
};

// Input text rejected by the problem-file grammar.
struct parse_error : error {
    parse_error(const std::string& what, int line, int column)
        : error(what + " (line " + std::to_string(line) + ", column " +
                std::to_string(column) + ")"),
          line(line),
          column(column) {}

    int line;
    int column;
};

}  // namespace bb
