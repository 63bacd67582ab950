#pragma once

#include <stdexcept>
#include <string>

namespace skewcov {

// Every validation failure is an exception carrying the violated contract.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotAdmissible : ValidationError { using ValidationError::ValidationError; };
struct DimensionBlowup : ValidationError { using ValidationError::ValidationError; };
struct NotBasic : ValidationError { using ValidationError::ValidationError; };
struct NotNilpotent : ValidationError { using ValidationError::ValidationError; };
struct FieldIncompatible : ValidationError { using ValidationError::ValidationError; };
struct ActionInvalid : ValidationError { using ValidationError::ValidationError; };
struct AlgebraMismatch : ValidationError { using ValidationError::ValidationError; };
struct NoActionAttached : ValidationError { using ValidationError::ValidationError; };
struct NotAHomomorphism : ValidationError { using ValidationError::ValidationError; };
struct UniverseInvalid : ValidationError { using ValidationError::ValidationError; };
struct NotHomogeneous : ValidationError { using ValidationError::ValidationError; };
struct UnsupportedShape : ValidationError { using ValidationError::ValidationError; };
struct ParseError : std::runtime_error { using std::runtime_error::runtime_error; };
struct UnknownSuite : std::runtime_error { using std::runtime_error::runtime_error; };

} // namespace skewcov
