#pragma once

#include <stdexcept>
#include <string>

namespace tmdnp {

// Base class for all library errors so callers can catch tmdnp failures
// separately from generic std exceptions.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A precondition on an argument was violated.
class InvalidArgumentError : public Error {
public:
    using Error::Error;
};

// A value left its mathematically admissible range (e.g. |P| >= 1).
class OutOfRangeError : public Error {
public:
    using Error::Error;
};

// Zero polarization maps to infinite spin temperature; callers must handle
// this case explicitly instead of receiving +/-inf.
class InfiniteTemperatureError : public Error {
public:
    using Error::Error;
};

// Both electron polarizations saturated with product +1; the pair formula
// is 0/0 there.
class IndeterminateInputError : public Error {
public:
    using Error::Error;
};

// Grid spacing too coarse to resolve the nuclear frequency shift.
class ResolutionError : public Error {
public:
    using Error::Error;
};

// A bracketed root search found no sign change.
class NoRootError : public Error {
public:
    using Error::Error;
};

// Nonlinear least squares failed to converge; message carries diagnostics.
class FitFailureError : public Error {
public:
    using Error::Error;
};

// Fewer data points than free parameters.
class UnderdeterminedError : public Error {
public:
    using Error::Error;
};

// Enhancement ratio implies |P_n| >= 1, i.e. the referencing is wrong.
class UnphysicalEnhancementError : public Error {
public:
    using Error::Error;
};

// A sweep profile has no zero crossing, so alignment is impossible.
class NoCrossingError : public Error {
public:
    using Error::Error;
};

// An operation that needs data received none (e.g. all cells failed).
class NoDataError : public Error {
public:
    using Error::Error;
};

// Linear algebra / stepping failure that should not occur for valid inputs.
class NumericError : public Error {
public:
    using Error::Error;
};

// File or format problem at an I/O boundary.
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace tmdnp
