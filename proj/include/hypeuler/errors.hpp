#pragma once

#include <stdexcept>
#include <string>

namespace hypeuler {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside an operation's documented domain.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Arithmetic between cyclotomic numbers of different orders.
class IncompatibleOrderError : public Error {
public:
    using Error::Error;
};

/// Polynomial division left a nonzero remainder (or a non-integral quotient).
class NonExactDivisionError : public Error {
public:
    using Error::Error;
};

/// Field outside the supported class (non-abelian, missing character data).
class UnsupportedFieldError : public Error {
public:
    using Error::Error;
};

/// A computation produced a value contradicting an identity that must hold.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

/// A mechanically checked step of the nonexistence argument did not hold.
class ProofStepError : public Error {
public:
    using Error::Error;
};

namespace table {

class SchemaError : public Error {
public:
    using Error::Error;
};

class InvariantError : public Error {
public:
    using Error::Error;
};

class ChecksumError : public Error {
public:
    using Error::Error;
};

/// Query reaches past the discriminant range the table is complete for.
class IncompleteDataError : public Error {
public:
    using Error::Error;
};

}  // namespace table

}  // namespace hypeuler
