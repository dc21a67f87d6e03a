#pragma once

#include <stdexcept>
#include <string>

namespace weylmod {

/// Base class for all errors thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid input or violated precondition (CLI exit code 2).
class InputError : public Error {
public:
    using Error::Error;
};

/// A configured resource cap was exceeded (CLI exit code 3).
class ResourceError : public Error {
public:
    using Error::Error;
};

/// An internal invariant failed.  This is never expected; it reports a
/// genuine finding about the implementation (CLI exit code 4).
class InternalError : public Error {
public:
    using Error::Error;
};

/// An Auslander-Reiten sequence was requested starting at an injective
/// vertex (r = 0), where none exists.
class InjectiveVertexError : public InputError {
public:
    using InputError::InputError;
};

/// A grid vertex outside the existence region (the zero module) was used
/// where a nonzero module is required.
class ZeroModuleError : public InputError {
public:
    using InputError::InputError;
};

/// Throw InputError unless `cond` holds.
inline void require(bool cond, const std::string& msg) {
    if (!cond) throw InputError(msg);
}

/// Throw InternalError unless `cond` holds.  Used for invariants the
/// algorithms are supposed to maintain on their own.
inline void ensure(bool cond, const std::string& msg) {
    if (!cond) throw InternalError(msg);
}

} // namespace weylmod
