#include "nlgauge/evolution.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "nlgauge/gauge_map.hpp"
#include "nlgauge/spectral.hpp"

namespace nlg {

namespace {

SnapshotDiagnostics diagnostics(const WaveField& psi,
                                const CoefficientVector& c, double floor) {
    SnapshotDiagnostics d;
    RealField rho = density(psi);
    double cell = psi.grid.dx[0] * (psi.grid.dim == 2 ? psi.grid.dx[1] : 1.0);
    for (double v : rho.values) d.total_probability += v;
    d.total_probability *= cell;
    d.max_amplitude = max_abs(psi);
    try {
        d.continuity_residual = continuity_identity_residual(psi, c, floor);
    } catch (const DensityFloorError&) {
        // the state is still recordable; the stepping loop handles the abort
        d.continuity_residual = std::numeric_limits<double>::infinity();
    }
    return d;
}

WaveField axpy(const WaveField& base, double a, const WaveField& dir) {
    WaveField out = base;
    for (std::size_t i = 0; i < out.size(); ++i)
        out.values[i] += a * dir.values[i];
    return out;
}

} // namespace

void check_stability_guard(const GridSpec& grid, const CoefficientVector& c,
                           const EvolutionConfig& cfg) {
    if (!(cfg.dt > 0.0)) throw PreconditionError("dt must be positive");
    if (!(cfg.t_max >= cfg.dt))
        throw PreconditionError("t_max must be at least dt");
    const double cmax = c.max_abs();
    if (cmax == 0.0) return;
    const double dx = grid.dx[0];
    const int p = c.has_high_order_terms() ? 6 : 2;
    const double bound = cfg.c_stab * std::pow(dx, p) / cmax;
    if (cfg.dt > bound)
        throw StabilityGuardError(
            "dt = " + std::to_string(cfg.dt) + " violates the stability guard dt <= " +
            std::to_string(cfg.c_stab) + " * dx^" + std::to_string(p) +
            " / max|coeff| = " + std::to_string(bound));
}

WaveField rhs(const WaveField& psi, const CoefficientVector& c, double floor) {
    FunctionalSet f = functionals(psi, floor);
    const double mu[12] = {c.mu1, c.mu2, c.mu3, c.mu4,  c.mu5,  c.mu6,
                           c.mu7, c.mu8, c.mu9, c.mu10, c.mu11, c.mu12};
    WaveField out(psi.grid);
    for (std::size_t i = 0; i < psi.size(); ++i) {
        double big_i = c.nu1 * f.r[0].values[i] + c.nu2 * f.r[1].values[i] +
                       c.nu6 * f.r[5].values[i];
        double big_r = 0.0;
        for (int j = 0; j < 12; ++j) big_r += mu[j] * f.r[j].values[i];
        out.values[i] = complex_t(big_i, -big_r) * psi.values[i];
    }
    return band_limit(out, psi.grid.n[0] / 3);
}

Trajectory evolve(const WaveField& psi0, const CoefficientVector& c,
                  const EvolutionConfig& cfg) {
    if (psi0.grid.dim != 1)
        throw PreconditionError("evolution supports 1D grids only");
    check_stability_guard(psi0.grid, c, cfg);

    Trajectory traj;
    WaveField psi = band_limit(psi0, psi0.grid.n[0] / 3);
    const double amp0 = max_abs(psi);
    const long n_steps = std::lround(cfg.t_max / cfg.dt);
    const int every = cfg.record_every > 0 ? cfg.record_every : 1;

    traj.snapshots.push_back({0.0, psi, diagnostics(psi, c, cfg.floor)});
    for (long step = 1; step <= n_steps; ++step) {
        try {
            WaveField k1 = rhs(psi, c, cfg.floor);
            WaveField k2 = rhs(axpy(psi, 0.5 * cfg.dt, k1), c, cfg.floor);
            WaveField k3 = rhs(axpy(psi, 0.5 * cfg.dt, k2), c, cfg.floor);
            WaveField k4 = rhs(axpy(psi, cfg.dt, k3), c, cfg.floor);
            for (std::size_t i = 0; i < psi.size(); ++i)
                psi.values[i] += cfg.dt / 6.0 *
                                 (k1.values[i] + 2.0 * k2.values[i] +
                                  2.0 * k3.values[i] + k4.values[i]);
        } catch (const DensityFloorError&) {
            traj.status = RunStatus::aborted_floor;
            return traj;
        }
        if (max_abs(psi) > 1e6 * amp0)
            throw InstabilityError("amplitude blow-up at t = " +
                                   std::to_string(step * cfg.dt));
        if (step % every == 0 || step == n_steps) {
            double t = step * cfg.dt;
            traj.snapshots.push_back({t, psi, diagnostics(psi, c, cfg.floor)});
        }
    }
    return traj;
}

CovarianceReport gauge_covariance_experiment(const WaveField& psi0,
                                             const CoefficientVector& c,
                                             const GaugeParams& g,
                                             const EvolutionConfig& cfg) {
    const CoefficientVector c_primed = transform(c, g);
    check_stability_guard(psi0.grid, c, cfg);
    check_stability_guard(psi0.grid, c_primed, cfg);

    Trajectory path_a = evolve(psi0, c, cfg);
    Trajectory path_b = evolve(apply(psi0, g, cfg.floor), c_primed, cfg);

    CovarianceReport rep;
    std::size_t n = std::min(path_a.snapshots.size(), path_b.snapshots.size());
    for (std::size_t i = 0; i < n; ++i) {
        // Path A is gauged after evolution; the gauge preserves |psi|, so
        // its density is the density of the evolved state itself.
        RealField rho_a = density(path_a.snapshots[i].psi);
        RealField rho_b = density(path_b.snapshots[i].psi);
        double gap = max_abs_diff(rho_a, rho_b);
        rep.times.push_back(path_a.snapshots[i].time);
        rep.density_gaps.push_back(gap);
        rep.max_density_gap = std::max(rep.max_density_gap, gap);
    }
    return rep;
}

WaveField galilean_boost(const WaveField& psi, double v, double nu1) {
    if (psi.grid.dim != 1)
        throw PreconditionError("galilean_boost supports 1D fields only");
    if (nu1 == 0.0) throw PreconditionError("nu1 must be nonzero");
    if (v == 0.0) return psi;

    const double L = psi.grid.length(0);
    const double m = v * L / (4.0 * M_PI * nu1);
    if (std::fabs(m - std::round(m)) > 1e-9 * std::max(1.0, std::fabs(m))) {
        const double spacing = std::fabs(4.0 * M_PI * nu1 / L);
        throw BoostVelocityError(
            "boost velocity " + std::to_string(v) +
            " does not close on the torus; admissible velocities are integer "
            "multiples of " + std::to_string(spacing));
    }
    WaveField out(psi.grid);
    const double k = v / (2.0 * nu1);
    for (int i = 0; i < psi.grid.n[0]; ++i) {
        double x = psi.grid.coord(0, i);
        out.values[i] = psi.values[i] * std::exp(complex_t(0.0, k * x));
    }
    return out;
}

} // namespace nlg
