#pragma once

#include <stdexcept>
#include <string>

namespace linkdcm {

// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A required column or field is missing or misnamed.
class SchemaError : public Error {
public:
    using Error::Error;
};

// A cell or token could not be parsed; message carries row/column context.
class ParseError : public Error {
public:
    using Error::Error;
};

// Structural violations: duplicate keys, inconsistent row counts, invalid values.
class IntegrityError : public Error {
public:
    using Error::Error;
};

// Precondition violations on operation arguments.
class DomainError : public Error {
public:
    using Error::Error;
};

// A matrix required to be invertible is (numerically) singular.
// The message names the parameter direction that is not identified.
class SingularMatrixError : public Error {
public:
    using Error::Error;
};

}  // namespace linkdcm
