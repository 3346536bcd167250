#ifndef NLGAUGE_EVOLUTION_HPP
#define NLGAUGE_EVOLUTION_HPP

#include <vector>

#include "nlgauge/coeffs.hpp"
#include "nlgauge/field.hpp"
#include "nlgauge/field_ops.hpp"

namespace nlg {

/// Fixed-step classical RK4 configuration. The stability guard enforces
/// dt <= c_stab * dx^6 / max|coeff| when any high-order term (nu6,
/// mu6..mu12) is active, else dt <= c_stab * dx^2 / max|coeff|.
struct EvolutionConfig {
    double dt = 1e-4;
    double t_max = 1.0;
    double floor = kAutoFloor;
    int record_every = 1;
    double c_stab = 0.5;
};

struct SnapshotDiagnostics {
    double total_probability = 0.0;   // sum rho dx
    double continuity_residual = 0.0; // max |2 I rho + div J|
    double max_amplitude = 0.0;
};

struct Snapshot {
    double time = 0.0;
    WaveField psi;
    SnapshotDiagnostics diag;
};

enum class RunStatus { completed, aborted_floor };

struct Trajectory {
    std::vector<Snapshot> snapshots;
    RunStatus status = RunStatus::completed;
};

/// Throws StabilityGuardError when cfg.dt violates the guard for (grid, c).
void check_stability_guard(const GridSpec& grid, const CoefficientVector& c,
                           const EvolutionConfig& cfg);

/// dpsi/dt = (I - i R) psi with I = nu1 R1 + nu2 R2 + nu6 R6 and
/// R = sum_j mu_j R_j. The output is projected onto |k| <= n/3
/// (2/3-rule dealiasing), which the stability guard presumes.
WaveField rhs(const WaveField& psi, const CoefficientVector& c,
              double floor = kAutoFloor);

/// Integrates psi0 to cfg.t_max, recording every record_every steps (the
/// initial and final states always). Density at the floor aborts with the
/// partial trajectory; amplitude blow-up past 1e6 x initial throws
/// InstabilityError.
Trajectory evolve(const WaveField& psi0, const CoefficientVector& c,
                  const EvolutionConfig& cfg);

struct CovarianceReport {
    /// max over recorded times of the L-inf distance between the density
    /// of path A (evolve under c, then gauge) and path B (gauge, then
    /// evolve under transform(c, g)).
    double max_density_gap = 0.0;
    std::vector<double> times;
    std::vector<double> density_gaps;
};

CovarianceReport gauge_covariance_experiment(const WaveField& psi0,
                                             const CoefficientVector& c,
                                             const GaugeParams& g,
                                             const EvolutionConfig& cfg);

/// Boost at t = 0: psi(x) exp(i v x / (2 nu1)). The phase must close on
/// the torus, i.e. v L / (4 pi nu1) integral; otherwise BoostVelocityError
/// naming the admissible velocity spacing.
WaveField galilean_boost(const WaveField& psi, double v, double nu1);

} // namespace nlg

#endif
