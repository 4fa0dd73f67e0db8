#pragma once

#include <stdexcept>
#include <string>

namespace coralarm {

/// Base class for all domain errors thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CharError : Error {
    using Error::Error;
};
struct ReversalError : Error {
    using Error::Error;
};
struct TunnelError : Error {
    using Error::Error;
};
struct IllegalMove : Error {
    using Error::Error;
};
struct TypeError : Error {
    using Error::Error;
};
struct BoundsError : Error {
    using Error::Error;
};
struct InconsistentIdeal : Error {
    using Error::Error;
};
struct NotCat0Evidence : Error {
    using Error::Error;
};
struct LengthMismatch : Error {
    using Error::Error;
};
struct WidthMismatch : Error {
    using Error::Error;
};
struct UnknownVertex : Error {
    using Error::Error;
};
struct WidthUnsupported : Error {
    using Error::Error;
};
struct UnclassifiableFactor : Error {
    using Error::Error;
};
struct IoError : Error {
    using Error::Error;
};

}  // namespace coralarm
