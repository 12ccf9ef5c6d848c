#pragma once

#include <stdexcept>
#include <string>

namespace atlas {

// Every failure mode gets its own type so callers (and the CLI exit-code
// mapping) can tell validation problems from resource limits.

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---- construction / validation ----
struct DegreeError : Error { using Error::Error; };
struct DisconnectedError : Error { using Error::Error; };
struct IndexError : Error { using Error::Error; };
struct FormatError : Error { using Error::Error; };
struct ParamError : Error { using Error::Error; };
struct ParityError : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct GirthError : Error { using Error::Error; };
struct InvalidCycleError : Error { using Error::Error; };
struct LoopMoveError : Error { using Error::Error; };
struct OverlapError : Error { using Error::Error; };
struct GadgetError : Error { using Error::Error; };
struct ConvergenceError : Error { using Error::Error; };

// ---- limits ----
struct LimitError : Error { using Error::Error; };
struct NonTerminationError : Error { using Error::Error; };

} // namespace atlas
