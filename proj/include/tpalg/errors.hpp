#pragma once

#include <stdexcept>
#include <string>

namespace tpalg {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Mixing scalars/matrices over different fields.
struct FieldMismatchError : Error {
    using Error::Error;
};

// Shape or ambient-dimension disagreement.
struct DimensionError : Error {
    using Error::Error;
};

// Non-homogeneous element where a homogeneous one is required,
// or a parity-inhomogeneous structure table.
struct ParityError : Error {
    using Error::Error;
};

// Malformed textual input (scalar grammar, algebra files, CLI element syntax).
struct ParseError : Error {
    using Error::Error;
};

// Operation not defined for the given field (e.g. Killing radical over GF(p)).
struct UnsupportedError : Error {
    using Error::Error;
};

// Enumeration/search budget exceeded.
struct BudgetError : Error {
    using Error::Error;
};

} // namespace tpalg
