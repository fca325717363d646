#pragma once

#include <stdexcept>
#include <string>

namespace vilenkin {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RadixTooSmall : Error {
    using Error::Error;
};
struct Overflow : Error {
    using Error::Error;
};
struct StructureMismatch : Error {
    using Error::Error;
};
struct OutOfRange : Error {
    using Error::Error;
};
struct LevelOutOfRange : Error {
    using Error::Error;
};
struct OrderOutOfRange : Error {
    using Error::Error;
};
struct LengthMismatch : Error {
    using Error::Error;
};
struct OracleCapExceeded : Error {
    using Error::Error;
};
struct ZeroVector : Error {
    using Error::Error;
};
struct BadExponent : Error {
    using Error::Error;
};
struct ParseError : Error {
    using Error::Error;
};

}  // namespace vilenkin
