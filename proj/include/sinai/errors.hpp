#pragma once

#include <stdexcept>
#include <string>

namespace sinai {

// Base class for every error this library throws on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// An input was NaN/Inf, nonpositive where a positive quantity is required,
// or would overflow an index computation.
struct NonFiniteInput : Error {
    using Error::Error;
};

// The sampled domain does not contain enough interior extrema to certify a
// central slope with its immediate structure; a longer path is needed.
struct InsufficientDomain : Error {
    using Error::Error;
};

// A coarsening step needed chain structure beyond the tracked window and no
// replenishment policy was available to supply it.
struct WindowExhausted : Error {
    using Error::Error;
};

// Internal consistency failure: the event queue produced a level below the
// current one. Must never happen; indicates a bug, not bad input.
struct NonMonotoneEvent : Error {
    using Error::Error;
};

// Argument outside the mathematical domain of the requested quantity.
struct DomainError : Error {
    using Error::Error;
};

// A series evaluation ran out of its term budget before meeting the
// requested tolerance.
struct TruncationNotConverged : Error {
    using Error::Error;
};

// A tail-frequency estimate observed too few exceedances to be meaningful.
struct InsufficientHits : Error {
    using Error::Error;
};

}  // namespace sinai
