#pragma once

#include <stdexcept>
#include <string>

namespace sft {

// Base of every error raised by the library. The CLI maps subclasses onto
// exit codes, so keep the hierarchy flat.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class BudgetExceeded : public Error {
public:
    using Error::Error;
};

class UnsupportedForbiddenShape : public Error {
public:
    using Error::Error;
};

class SubsetViolation : public Error {
public:
    using Error::Error;
};

class SymbolOutOfRange : public Error {
public:
    using Error::Error;
};

class NonPrimitiveVector : public Error {
public:
    using Error::Error;
};

class OverlapError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace sft
