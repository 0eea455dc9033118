// Error types shared across the library.
#pragma once

#include <stdexcept>

namespace schlicht {

// A series operation that requires constant term 1 was handed something else.
struct NonUnitConstantTerm : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A function was expected in normalized form (a0 = 0, a1 = 1).
struct NotNormalized : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// The truncation order of an input does not cover the requested computation.
struct InsufficientOrder : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Herglotz atom data violates its invariants (weights, unimodularity).
struct InvalidAtoms : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An operation requiring a certified input received an uncertified one.
struct NotCertified : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Probe/table or vector shapes do not line up.
struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Scalar argument outside the declared domain.
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Parameter vector does not decode under the declared family parametrization.
struct BadParametrization : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace schlicht
