#ifndef NLGAUGE_FIELD_OPS_HPP
#define NLGAUGE_FIELD_OPS_HPP

#include <array>

#include "nlgauge/coeffs.hpp"
#include "nlgauge/field.hpp"

namespace nlg {

/// Sentinel: resolve the density floor as 1e-10 * max(rho).
constexpr double kAutoFloor = -1.0;

/// Resolved absolute floor for a given density field.
double resolve_floor(const RealField& rho, double floor);

/// rho = |psi|^2, pointwise.
RealField density(const WaveField& psi);

/// jhat = Im(conj(psi) grad psi); equals rho grad S wherever rho > 0.
VectorField jhat(const WaveField& psi);

struct UnwrapResult {
    RealField s;
    /// Integer phase winding along each axis of the torus.
    std::array<long, 2> winding = {0, 0};
    bool has_winding() const { return winding[0] != 0 || winding[1] != 0; }
};

/// Continuous phase S with psi = sqrt(rho) exp(i S), unwrapped along grid
/// lines from node 0. Requires min rho > floor (phase is undefined near
/// nodes of psi). The 2 pi ladder is fixed by S(0) = Arg psi(0).
UnwrapResult unwrap_phase(const WaveField& psi, double floor = kAutoFloor);

/// sigma = rho grad laplacian(ln rho).
VectorField sigma(const WaveField& psi, double floor = kAutoFloor);

/// The equivalent form sigma = rho grad (R2 - R5); agrees with sigma() to
/// discretization error. Kept separate so the identity can be checked.
VectorField sigma_gradient_form(const WaveField& psi, double floor = kAutoFloor);

/// The twelve nonlinear functionals R1..R12 of the 6th-order family:
///   R1 = div jhat / rho        R2 = lap rho / rho
///   R3 = jhat^2 / rho^2        R4 = jhat . grad rho / rho^2
///   R5 = (grad rho)^2 / rho^2  R6 = div sigma / rho
///   R7 = jhat . sigma / rho^2  R8 = sigma . grad rho / rho^2
///   R9 = sigma^2 / rho^2       R10 = lap R1
///   R11 = lap R2               R12 = lap R6
struct FunctionalSet {
    std::array<RealField, 12> r;
    const RealField& operator[](int j) const { return r[j - 1]; } // 1-based
};

/// Evaluates all twelve functionals. kcut >= 0 projects every spectral
/// step onto |k| <= kcut (fixed-band pipeline used by the verification
/// oracle); kcut < 0 performs no filtering.
FunctionalSet functionals(const WaveField& psi, double floor = kAutoFloor,
                          int kcut = -1);

/// max norm of lap(psi)/psi - (i R1 + R2/2 - R3 - R5/4) over the grid.
double laplacian_identity_residual(const WaveField& psi,
                                   double floor = kAutoFloor);

/// Gauge-invariant current J = -2 (nu1 jhat + nu2 grad rho + nu6 sigma).
VectorField gi_current(const WaveField& psi, const CoefficientVector& c,
                       double floor = kAutoFloor);

/// max norm of 2 I rho + div J with I = nu1 R1 + nu2 R2 + nu6 R6; the
/// continuity identity, kinematically zero up to discretization.
double continuity_identity_residual(const WaveField& psi,
                                    const CoefficientVector& c,
                                    double floor = kAutoFloor);

} // namespace nlg

#endif
