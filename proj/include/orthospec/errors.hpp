#pragma once

#include <stdexcept>
#include <string>

namespace orthospec {

// Error taxonomy mirrors the CLI exit codes: validation errors (bad input,
// violated preconditions) exit 2, numerical failures (budget, cutoff,
// accuracy) exit 3, internal invariant violations exit 4.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ValidationError : Error {
    using Error::Error;
};

struct NumericalError : Error {
    using Error::Error;
};

struct InvariantError : Error {
    using Error::Error;
};

struct NotExceptional : ValidationError { using ValidationError::ValidationError; };
struct NotRegular : ValidationError { using ValidationError::ValidationError; };
struct NotHyperbolic : ValidationError { using ValidationError::ValidationError; };
struct NotPrimitive : ValidationError { using ValidationError::ValidationError; };
struct BadDeterminant : ValidationError { using ValidationError::ValidationError; };
struct EmptyGenerators : ValidationError { using ValidationError::ValidationError; };
struct BeyondCutoff : ValidationError { using ValidationError::ValidationError; };
struct OutOfRegion : ValidationError { using ValidationError::ValidationError; };
struct ModulusOutOfRange : ValidationError { using ValidationError::ValidationError; };
struct AlphaForbidden : ValidationError { using ValidationError::ValidationError; };
struct DecayTooSlow : ValidationError { using ValidationError::ValidationError; };
struct NotDisjoint : ValidationError { using ValidationError::ValidationError; };
struct NotSimple : ValidationError { using ValidationError::ValidationError; };
struct ConfigError : ValidationError { using ValidationError::ValidationError; };

struct BudgetExceeded : NumericalError { using NumericalError::NumericalError; };
struct IncompleteEnumeration : NumericalError { using NumericalError::NumericalError; };
struct DegenerateDelta : NumericalError { using NumericalError::NumericalError; };
struct RejectBoundary : NumericalError { using NumericalError::NumericalError; };
struct CutoffInsufficient : NumericalError { using NumericalError::NumericalError; };
struct NonConvergent : NumericalError { using NumericalError::NumericalError; };
struct AccuracyLoss : NumericalError { using NumericalError::NumericalError; };

}  // namespace orthospec
