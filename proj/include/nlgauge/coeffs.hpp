#ifndef NLGAUGE_COEFFS_HPP
#define NLGAUGE_COEFFS_HPP

#include <array>
#include <optional>
#include <string>

namespace nlg {

/// The 15 real coefficients (nu1, nu2, nu6, mu1..mu12) selecting one
/// member of the 6th-order NLSE family
///
///   i dpsi/dt = { i (nu1 R1 + nu2 R2 + nu6 R6) + sum_j mu_j R_j } psi.
///
/// nu1 must be nonzero for every operation that divides by it
/// (invariants, classification, linearization).
struct CoefficientVector {
    double nu1 = 0.0;
    double nu2 = 0.0;
    double nu6 = 0.0;
    double mu1 = 0.0;
    double mu2 = 0.0;
    double mu3 = 0.0;
    double mu4 = 0.0;
    double mu5 = 0.0;
    double mu6 = 0.0;
    double mu7 = 0.0;
    double mu8 = 0.0;
    double mu9 = 0.0;
    double mu10 = 0.0;
    double mu11 = 0.0;
    double mu12 = 0.0;

    std::array<double, 15> as_array() const {
        return {nu1, nu2, nu6, mu1, mu2,  mu3,  mu4, mu5,
                mu6, mu7, mu8, mu9, mu10, mu11, mu12};
    }
    static CoefficientVector from_array(const std::array<double, 15>& a) {
        return {a[0], a[1], a[2],  a[3],  a[4],  a[5],  a[6], a[7],
                a[8], a[9], a[10], a[11], a[12], a[13], a[14]};
    }
    static const std::array<const char*, 15>& field_names();

    /// Largest coefficient magnitude; scale used by tolerance policies.
    double max_abs() const;

    /// True when any of the coefficients feeding derivative orders above
    /// two (nu6, mu6..mu12) is nonzero; selects the dx^6 stability guard.
    bool has_high_order_terms() const;
};

/// One element (gamma, lambda, eta) of the weakly local gauge group.
/// lambda must be nonzero. eta multiplies laplacian(ln rho) in the phase.
struct GaugeParams {
    double gamma = 0.0;
    double lambda = 1.0;
    double eta = 0.0;
};

/// The thirteen gauge invariants used to classify family members: tau1..tau12
/// plus tau5hat (tau5 is the legacy combination nu1 mu5 - nu2 mu4 +
/// nu2^2 mu3/nu1; tau5hat = mu5 mu3 - mu4^2/4 is the simpler equivalent).
struct InvariantVector {
    double tau1 = 0, tau2 = 0, tau3 = 0, tau4 = 0, tau5 = 0, tau5hat = 0;
    double tau6 = 0, tau7 = 0, tau8 = 0, tau9 = 0, tau10 = 0, tau11 = 0,
           tau12 = 0;

    /// Order: tau1..tau12, tau5hat.
    std::array<double, 13> as_array() const {
        return {tau1, tau2, tau3,  tau4,  tau5,  tau6,   tau7,
                tau8, tau9, tau10, tau11, tau12, tau5hat};
    }
    static const std::array<const char*, 13>& component_names();
};

/// Tolerance-qualified verdicts for one coefficient vector.
struct ClassificationReport {
    bool linear_equivalent = false;
    bool dg_equivalent = false;
    bool galilean = false;
    bool time_reversal = false;
    double tolerance_used = 0.0;
    /// Worst residual of the defining conditions, each scaled by the
    /// degree-matched power of the coefficient magnitude.
    double linear_residual = 0.0;
    double dg_residual = 0.0;
    double galilean_residual = 0.0;
    double time_reversal_residual = 0.0;
    /// hbar/m inferred from tau2 when linear_equivalent, else 0.
    double hbar_over_m = 0.0;
};

/// Which nu6 transformation law to apply. `corrected` is the default:
/// nu6' = nu6 - eta nu1 / lambda, the unique choice under which all
/// thirteen invariants are preserved. `printed` is nu6' = nu6 -
/// eta / (nu1 lambda), the originally published variant, which preserves
/// the nu6-bearing invariants only when nu1^2 = 1; kept for demonstration.
enum class Nu6Law { corrected, printed };

GaugeParams identity_gauge();

/// Group law: (g2 o g1) = (gamma2 + lambda2 gamma1, lambda2 lambda1,
/// eta2 + lambda2 eta1).
GaugeParams compose(const GaugeParams& g2, const GaugeParams& g1);

/// Throws InvalidGaugeError when g.lambda == 0.
GaugeParams inverse(const GaugeParams& g);

/// Action of g on the coefficient family. Requires c.nu1 != 0 and
/// g.lambda != 0 (PreconditionError otherwise).
CoefficientVector transform(const CoefficientVector& c, const GaugeParams& g,
                            Nu6Law law = Nu6Law::corrected);

/// Negates every coefficient; an involution.
CoefficientVector time_reverse(const CoefficientVector& c);

/// All thirteen invariants. Requires c.nu1 != 0.
InvariantVector invariants(const CoefficientVector& c);

/// The free-particle coefficients: nu1 = -hbar/2m, mu2 = -hbar/4m,
/// mu3 = hbar/2m, mu5 = hbar/8m, all others zero.
CoefficientVector schrodinger_coefficients(double hbar, double m);

/// Tolerance-based classification (linear-equivalent / Doebner-Goldin /
/// Galilean / time-reversal). tol is relative to the largest coefficient
/// magnitude, raised to the algebraic degree of each invariant.
ClassificationReport classify(const CoefficientVector& c, double tol);

/// Attempts to construct the gauge carrying c to the Schroedinger
/// coefficients for the given hbar, m. The candidate is forced by the
/// nu1, nu2, nu6 laws; it is returned only if the transformed vector
/// matches the target within tol. Empty optional = not linearizable.
std::optional<GaugeParams> linearizing_gauge(const CoefficientVector& c,
                                             double hbar, double m,
                                             double tol);

} // namespace nlg

#endif
