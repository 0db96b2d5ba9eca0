#pragma once

#include <stdexcept>
#include <string>

namespace cubegrowth {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input document errors.
struct MalformedDocument : Error { using Error::Error; };
struct CubicalIdentityViolation : Error { using Error::Error; };
struct DanglingFaceReference : Error { using Error::Error; };
struct Disconnected : Error { using Error::Error; };

// Query errors.
struct NotAVertex : Error { using Error::Error; };
struct InvalidComplex : Error { using Error::Error; };
struct UnknownVertex : Error { using Error::Error; };
struct UnknownLetter : Error { using Error::Error; };

// Series and substitution errors.
struct NonPositiveWeight : Error { using Error::Error; };
struct UncoveredSymbol : Error { using Error::Error; };
struct SingularSystem : Error { using Error::Error; };
struct NotExpandable : Error { using Error::Error; };
struct ReciprocalUndefined : Error { using Error::Error; };
struct SolveTooLarge : Error { using Error::Error; };

// Internal arithmetic failure; indicates a bug if it escapes.
struct NotDivisible : Error { using Error::Error; };

}  // namespace cubegrowth
