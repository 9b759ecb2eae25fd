#pragma once

#include <stdexcept>
#include <string>

namespace mutinfo {

/// Base class for all errors raised by this library. The CLI maps any
/// Error to exit status 1; flag/usage problems are handled before dispatch
/// and exit with status 2.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A documented type invariant was violated (bad Pmf, mismatched lengths,
/// non-finite samples, ...).
class ContractViolation : public Error {
public:
    using Error::Error;
};

/// A parameter is outside its mathematical domain (beta <= 0, negative MI,
/// zero draws, non-stationary AR coefficients, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A series has zero variance / all-tied values where spread is required.
class DegenerateSeriesError : public Error {
public:
    using Error::Error;
};

/// A binning range collapsed to a point (constant data under auto-range,
/// or an explicit range with lo >= hi).
class DegenerateRangeError : public Error {
public:
    using Error::Error;
};

class EmptyInputError : public Error {
public:
    using Error::Error;
};

/// A datum fell outside the requested histogram range.
class OutOfRangeError : public Error {
public:
    using Error::Error;
};

/// Tabular input could not be loaded (bad header, too few usable rows, ...).
class LoadError : public Error {
public:
    using Error::Error;
};

} // namespace mutinfo
