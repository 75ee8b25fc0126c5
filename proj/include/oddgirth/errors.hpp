#pragma once

#include <stdexcept>
#include <string>

namespace oddgirth {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IndexOutOfRange : Error {
    using Error::Error;
};

struct LoopEdge : Error {
    using Error::Error;
};

struct ParamTooSmall : Error {
    using Error::Error;
};

struct OddParam : Error {
    using Error::Error;
};

struct SizeMismatch : Error {
    using Error::Error;
};

struct ZeroClass : Error {
    using Error::Error;
};

struct TooLarge : Error {
    using Error::Error;
};

struct GirthTooSmall : Error {
    using Error::Error;
};

struct PreconditionViolated : Error {
    using Error::Error;
};

// Thrown when a bounded search runs out of nodes. Deliberately distinct
// from an empty result: callers that assert absence must treat this as
// "inconclusive", never as "none".
struct SearchBudgetExceeded : Error {
    using Error::Error;
};

struct HypothesisViolated : Error {
    using Error::Error;
};

// Signals a bug: the constructive machinery reached a state its
// correctness argument rules out.
struct InternalContradiction : Error {
    using Error::Error;
};

struct InvalidCertificate : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

} // namespace oddgirth
