#ifndef NLGAUGE_GAUGE_MAP_HPP
#define NLGAUGE_GAUGE_MAP_HPP

#include <utility>

#include "nlgauge/coeffs.hpp"
#include "nlgauge/field.hpp"
#include "nlgauge/field_ops.hpp"

namespace nlg {

/// Two-parameter generalization of the gauge phase,
///
///   phi = gamma/2 ln rho + (lambda - 1) S + eta1 R2 + eta2 R5.
///
/// The one-eta subgroup (gamma, lambda, eta) embeds as eta1 = eta,
/// eta2 = -eta, since eta lap(ln rho) = eta (R2 - R5).
struct ExtendedGaugeParams {
    double gamma = 0.0;
    double lambda = 1.0;
    double eta1 = 0.0;
    double eta2 = 0.0;

    static ExtendedGaugeParams from(const GaugeParams& g) {
        return {g.gamma, g.lambda, g.eta, -g.eta};
    }
    static ExtendedGaugeParams identity() { return {0.0, 1.0, 0.0, 0.0}; }
};

/// The real phase functional phi for one gauge element. Unwraps S only
/// when lambda != 1. Throws WindingError when lambda * winding is not an
/// integer (the transformed field would leave the periodic function space)
/// and DensityFloorError when rho touches the floor.
RealField phase_functional(const WaveField& psi, const ExtendedGaugeParams& g,
                           double floor = kAutoFloor);

/// psi' = exp(i phi) psi. Preserves |psi| pointwise.
WaveField apply(const WaveField& psi, const ExtendedGaugeParams& g,
                double floor = kAutoFloor);
WaveField apply(const WaveField& psi, const GaugeParams& g,
                double floor = kAutoFloor);

/// Action on logarithmic coordinates ln psi = T + i S:
///   T' = T,   S' = lambda S + gamma T + eta lap T.
/// Matches apply() under T = ln(rho)/2 with the eta of apply() doubled
/// (eta lap ln rho = 2 eta lap T).
std::pair<RealField, RealField> apply_log_coords(const RealField& t,
                                                 const RealField& s,
                                                 const GaugeParams& g);

struct SeparationReport {
    /// max |apply_2d(psi1 x psi2) - apply_1d(psi1) x apply_1d(psi2)|.
    double product_map_discrepancy = 0.0;
    /// max |R2[psi1 x psi2] - (R2[psi1] + R2[psi2])| on the product grid.
    double r2_additivity_residual = 0.0;
    double r5_additivity_residual = 0.0;
};

/// Builds the two-particle product state on the tensor grid, gauges it
/// with the 2D map, and compares against the tensor product of the 1D
/// gauged factors. Also measures additivity of R2 and R5 on products.
SeparationReport separation_check(const WaveField& psi1, const WaveField& psi2,
                                  const ExtendedGaugeParams& g,
                                  double floor = kAutoFloor);

/// psi1(x1) psi2(x2) on the tensor grid.
WaveField tensor_product(const WaveField& psi1, const WaveField& psi2);

} // namespace nlg

#endif
