#pragma once

#include <stdexcept>
#include <string>

namespace harmap {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// malformed or out-of-contract inputs
struct InputError : Error { using Error::Error; };
struct AliasingError : InputError { using InputError::InputError; };
struct DomainError : Error { using Error::Error; };

// topology
struct UndersampledError : Error { using Error::Error; };
struct NonintegerError : Error { using Error::Error; };
struct ZeroOnContourError : Error { using Error::Error; };
struct PreconditionError : Error { using Error::Error; };

struct DegenerateCurveError : Error { using Error::Error; };

// shear
struct DilatationBoundError : Error { using Error::Error; };
struct TruncationError : Error { using Error::Error; };
struct ReciprocalError : Error { using Error::Error; };

// conformal step; everything here maps to the same CLI exit code
struct ConformalError : Error { using Error::Error; };
struct NoConvergenceError : ConformalError { using ConformalError::ConformalError; };
struct NonmonotoneError : ConformalError { using ConformalError::ConformalError; };
struct NonstarlikeError : ConformalError { using ConformalError::ConformalError; };

// counterexample scaffold
struct ConvexInputError : Error { using Error::Error; };
struct NoBridgeError : Error { using Error::Error; };

}  // namespace harmap
