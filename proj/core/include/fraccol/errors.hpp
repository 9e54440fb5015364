#pragma once

#include <stdexcept>
#include <string>

namespace fraccol {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input / construction failures.
struct MalformedInputError : Error { using Error::Error; };
struct NonPlanarError : Error { using Error::Error; };
struct InvalidRotationError : Error { using Error::Error; };
struct ParamOutOfRangeError : Error { using Error::Error; };

// Graph surgery.
struct AdjacentPairError : Error { using Error::Error; };
struct NoCommonFaceError : Error { using Error::Error; };
struct FaceLengthEqualsGirthError : Error { using Error::Error; };
struct NoValidIndexError : Error { using Error::Error; };
struct NotCutVertexError : Error { using Error::Error; };
struct DisconnectedError : Error { using Error::Error; };
struct NotSafeError : Error { using Error::Error; };
struct TriangleCreatedError : Error { using Error::Error; };

// Coloring and demand bookkeeping.
struct NotCommonDenominatorError : Error { using Error::Error; };
struct NoColoringError : Error { using Error::Error; };
struct NotMonochromaticError : Error { using Error::Error; };
struct NotTightError : Error { using Error::Error; };
struct WrongDenominatorError : Error { using Error::Error; };
struct SizeMismatchError : Error { using Error::Error; };
struct DemandMismatchError : Error { using Error::Error; };
struct InfeasibleInputError : Error { using Error::Error; };
struct MonoColoringFailedError : Error { using Error::Error; };

// Solver resource limits; an explicit failure, never a silent wrong answer.
struct BudgetExceededError : Error { using Error::Error; };

// Outcomes the underlying theory rules out; reaching one is a logic bug.
struct InternalInvariantError : Error { using Error::Error; };

}  // namespace fraccol
