#pragma once

#include <stdexcept>
#include <string>

namespace cleanmat {

// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Operands belong to structurally different ring descriptors.
class DescriptorMismatchError : public Error {
public:
    using Error::Error;
};

// A documented precondition was violated (non-monic divisor, shape mismatch, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

// The requested operation is not defined for this ring descriptor.
class UnsupportedRingError : public Error {
public:
    using Error::Error;
};

// A size, depth or search budget guard rejected the request.
class GuardError : public Error {
public:
    using Error::Error;
};

// Malformed JSON input (unknown fields, wrong types, out-of-range values).
class SchemaError : public Error {
public:
    using Error::Error;
};

// An internally constructed certificate failed its own re-verification.
// Seeing this means an implementation bug, never bad user input.
class VerificationError : public Error {
public:
    using Error::Error;
};

}  // namespace cleanmat
