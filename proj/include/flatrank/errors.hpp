#pragma once

#include <stdexcept>
#include <string>

namespace flatrank {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operands live over different variable sets.
struct ArityMismatch : Error {
    using Error::Error;
};

// A configured size guardrail was hit (basis too large, too many terms, ...).
struct CapExceeded : Error {
    using Error::Error;
};

struct NotHomogeneous : Error {
    using Error::Error;
};

// The prime divides a stored denominator; caller should retry with another.
struct BadPrime : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct PreconditionViolation : Error {
    using Error::Error;
};

}  // namespace flatrank
