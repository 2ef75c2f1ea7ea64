#pragma once

#include <stdexcept>
#include <string>

namespace chromatic {

// Base for everything the library throws on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Family parameters outside their admissible range, e.g. gegenbauer(0).
class ParameterDomainError : public Error {
public:
    using Error::Error;
};

// Caller-side mistakes: short jets, K < N, malformed family strings.
class ArgumentError : public Error {
public:
    using Error::Error;
};

// Evaluation point outside the region where a routine is valid.
class DomainError : public Error {
public:
    using Error::Error;
};

class ConvergenceError : public Error {
public:
    using Error::Error;
};

class NumericError : public Error {
public:
    using Error::Error;
};

// Operation exists but has no implementation for the requested family.
class UnsupportedError : public Error {
public:
    using Error::Error;
};

}  // namespace chromatic
