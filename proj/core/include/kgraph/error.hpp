#pragma once

#include <stdexcept>
#include <string>

namespace kgraph {

/// Base class for every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or mismatched input: rank mismatch, unknown vertex, bad flag value.
class InputError : public Error {
public:
    using Error::Error;
};

/// Arithmetic outside the domain of an operation (subtract with m not <= n,
/// segment bounds, overflow).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A caller broke a documented precondition that is not a plain input error,
/// e.g. asking for a periodicity tuple at an aperiodic triple.
class ContractError : public Error {
public:
    using Error::Error;
};

/// A configured size limit was exceeded.
class LimitError : public Error {
public:
    using Error::Error;
};

}  // namespace kgraph
