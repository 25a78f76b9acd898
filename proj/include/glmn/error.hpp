#ifndef GLMN_ERROR_HPP
#define GLMN_ERROR_HPP

#include <stdexcept>
#include <string>

namespace glmn {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error { using Error::Error; };
struct NotEven : Error { using Error::Error; };
struct NotOdd : Error { using Error::Error; };
struct Singular : Error { using Error::Error; };
struct NotNilpotent : Error { using Error::Error; };
struct ParityMismatch : Error { using Error::Error; };

// Orbit parameter validation.
struct ValidationError : Error { using Error::Error; };
struct BadShape : ValidationError { using ValidationError::ValidationError; };
struct DimensionOverflow : ValidationError { using ValidationError::ValidationError; };
struct BadMarker : ValidationError { using ValidationError::ValidationError; };

struct NotEmbeddable : Error { using Error::Error; };
struct ParityBudgetMismatch : Error { using Error::Error; };
struct InconsistentType : Error { using Error::Error; };

// Signals a bug in a construction whose output is verified before returning;
// never expected on valid input.
struct InternalRelationFailure : Error { using Error::Error; };

struct ParseError : Error { using Error::Error; };

} // namespace glmn

#endif
