#pragma once

#include <stdexcept>
#include <string>

namespace parsep {

// Base class of every error raised by the library. Callers that only need to
// report a failure can catch this; the CLI maps each subclass to an exit code.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad parameter ranges (p < 2, r outside [1, p-1], negative n, ...).
class InvalidParameter : public Error {
public:
    using Error::Error;
};

// Malformed partition or monomial literal.
class ParseError : public Error {
public:
    using Error::Error;
};

class NegativePart : public Error {
public:
    using Error::Error;
};

class NegativeEntry : public Error {
public:
    using Error::Error;
};

class ForeignResidue : public Error {
public:
    using Error::Error;
};

class NotInClass : public Error {
public:
    using Error::Error;
};

class NonUnitConstantTerm : public Error {
public:
    using Error::Error;
};

class DivergentProduct : public Error {
public:
    using Error::Error;
};

class IntegerOverflow : public Error {
public:
    using Error::Error;
};

// A theorem-backed internal check failed. Seeing this means a bug, not bad input.
class InternalConsistencyError : public Error {
public:
    using Error::Error;
};

} // namespace parsep
