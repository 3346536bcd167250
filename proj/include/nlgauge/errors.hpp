#ifndef NLGAUGE_ERRORS_HPP
#define NLGAUGE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nlg {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A gauge parameter set with lambda == 0 (not a group element).
class InvalidGaugeError : public Error {
public:
    using Error::Error;
};

/// Violated operation precondition (nu1 == 0, bad grid, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// The density dropped to or below the regularization floor where a
/// division by rho (or ln rho) is required.
class DensityFloorError : public Error {
public:
    using Error::Error;
};

/// Gauge application would produce a field that is discontinuous on the
/// torus (lambda times the phase winding is not an integer).
class WindingError : public Error {
public:
    using Error::Error;
};

/// Boost velocity incompatible with the periodic domain.
class BoostVelocityError : public Error {
public:
    using Error::Error;
};

/// Time step violates the explicit stability guard.
class StabilityGuardError : public Error {
public:
    using Error::Error;
};

/// Amplitude blow-up detected during time integration.
class InstabilityError : public Error {
public:
    using Error::Error;
};

/// Malformed input file or unwritable output.
class IoError : public Error {
public:
    using Error::Error;
};

} // namespace nlg

#endif
