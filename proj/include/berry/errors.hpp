#pragma once

#include <stdexcept>
#include <string>

namespace berry {

// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// operators
class NotHermitian : public Error {
public:
    using Error::Error;
};
class ConvergenceFailure : public Error {
public:
    using Error::Error;
};

// spin_algebra
class InvalidSpin : public Error {
public:
    using Error::Error;
};
class DimMismatch : public Error {
public:
    using Error::Error;
};

// systems
class InvalidSpec : public Error {
public:
    using Error::Error;
};
class TooFewSamples : public Error {
public:
    using Error::Error;
};

// berry_engine
class TrackingFailure : public Error {
public:
    using Error::Error;
};
class BlockInstability : public Error {
public:
    using Error::Error;
};
class DegenerateBand : public Error {
public:
    using Error::Error;
};
class NotProjectionEigenstate : public Error {
public:
    using Error::Error;
};

// adiabatic
class NonAdiabatic : public Error {
public:
    using Error::Error;
};

// analytic_oracle
class UnsupportedKind : public Error {
public:
    using Error::Error;
};

} // namespace berry
