#include <doctest.h>

#include <cmath>
#include <functional>

#include "nlgauge/evolution.hpp"
#include "nlgauge/spectral.hpp"

using namespace nlg;

namespace {

WaveField plane_wave(const GridSpec& g, int mode) {
    WaveField psi(g);
    const double k = 2.0 * M_PI / g.length(0) * mode;
    for (int i = 0; i < g.n[0]; ++i)
        psi.values[i] = std::exp(complex_t(0.0, k * g.coord(0, i)));
    return psi;
}

WaveField from_rho_s(const GridSpec& g, const std::function<double(double)>& rho,
                     const std::function<double(double)>& s) {
    WaveField psi(g);
    for (int i = 0; i < g.n[0]; ++i) {
        double x = g.coord(0, i);
        psi.values[i] = std::sqrt(rho(x)) * std::exp(complex_t(0.0, s(x)));
    }
    return psi;
}

} // namespace

TEST_CASE("stability guard") {
    GridSpec g = GridSpec::line(64, 2.0 * M_PI / 64);
    CoefficientVector sch = schrodinger_coefficients(1.0, 1.0);
    EvolutionConfig cfg;
    cfg.t_max = 1.0;

    cfg.dt = 1e-3; // dx^2 regime bound: 0.5 * dx^2 / 0.5 = 9.6e-3
    CHECK_NOTHROW(check_stability_guard(g, sch, cfg));
    cfg.dt = 2e-2;
    CHECK_THROWS_AS(check_stability_guard(g, sch, cfg), StabilityGuardError);

    // any high-order coefficient switches to the dx^6 regime
    CoefficientVector six = sch;
    six.mu12 = 0.01;
    cfg.dt = 1e-3;
    CHECK_THROWS_AS(check_stability_guard(g, six, cfg), StabilityGuardError);
    cfg.dt = 5e-7; // below 0.5 dx^6 / 0.5 = 8.9e-7
    CHECK_NOTHROW(check_stability_guard(g, six, cfg));

    CoefficientVector zero;
    cfg.dt = 1.0;
    cfg.t_max = 1.0;
    CHECK_NOTHROW(check_stability_guard(g, zero, cfg)); // no terms, no bound
}

TEST_CASE("rhs of the free equation on a plane wave is -i k^2/2 psi") {
    GridSpec g = GridSpec::line(64, 2.0 * M_PI / 64);
    CoefficientVector sch = schrodinger_coefficients(1.0, 1.0);
    const int mode = 3;
    const double k = 2.0 * M_PI / g.length(0) * mode;
    WaveField psi = plane_wave(g, mode);
    WaveField dpsi = rhs(psi, sch);
    double worst = 0.0;
    for (std::size_t i = 0; i < psi.size(); ++i) {
        complex_t expected = complex_t(0.0, -0.5 * k * k) * psi.values[i];
        worst = std::max(worst, std::abs(dpsi.values[i] - expected));
    }
    CHECK(worst <= 1e-9);
}

TEST_CASE("rhs vanishes for zero coefficients and for constant fields") {
    GridSpec g = GridSpec::line(64, 2.0 * M_PI / 64);
    CoefficientVector zero;
    WaveField psi = from_rho_s(g, [](double x) { return 1.0 + 0.2 * std::cos(x); },
                               [](double x) { return 0.1 * std::sin(x); });
    CHECK(max_abs(rhs(psi, zero)) <= 1e-12);

    CoefficientVector c;
    c.nu1 = -0.4;
    c.nu2 = 0.2;
    c.mu7 = 1.3;
    WaveField flat(g);
    for (auto& v : flat.values) v = complex_t(0.8, 0.3);
    CHECK(max_abs(rhs(flat, c)) <= 1e-10);
}

TEST_CASE("free plane wave evolves with phase k^2/2 t") {
    GridSpec g = GridSpec::line(64, 2.0 * M_PI / 64);
    CoefficientVector sch = schrodinger_coefficients(1.0, 1.0);
    const int mode = 1;
    WaveField psi0 = plane_wave(g, mode);

    EvolutionConfig cfg;
    cfg.dt = 1e-3;
    cfg.t_max = 1.0;
    cfg.record_every = 1000;
    Trajectory traj = evolve(psi0, sch, cfg);
    REQUIRE(traj.status == RunStatus::completed);
    const Snapshot& last = traj.snapshots.back();
    CHECK(last.time == doctest::Approx(1.0));

    const double k = 2.0 * M_PI / g.length(0) * mode;
    double worst = 0.0;
    for (int i = 0; i < g.n[0]; ++i) {
        complex_t expected =
            std::exp(complex_t(0.0, k * g.coord(0, i) - 0.5 * k * k * last.time));
        worst = std::max(worst, std::abs(last.psi.values[i] - expected));
        CHECK(std::fabs(std::abs(last.psi.values[i]) - 1.0) <= 1e-10);
    }
    CHECK(worst <= 1e-8);
}

TEST_CASE("probability is conserved along nonlinear runs") {
    GridSpec g = GridSpec::line(128, 2.0 * M_PI / 128);
    CoefficientVector c = schrodinger_coefficients(1.0, 1.0);
    c.mu1 = -0.1; // Galilean-invariant nonlinear member (damped branch)
    c.mu4 = 0.1;
    WaveField psi0 = from_rho_s(
        g, [](double x) { return 1.0 + 0.3 * std::cos(x) + 0.1 * std::sin(2 * x); },
        [](double x) { return 0.2 * std::cos(x); });

    EvolutionConfig cfg;
    cfg.dt = 1e-4;
    cfg.t_max = 0.05;
    cfg.record_every = 100;
    Trajectory traj = evolve(psi0, c, cfg);
    REQUIRE(traj.status == RunStatus::completed);
    const double p0 = traj.snapshots.front().diag.total_probability;
    for (const auto& snap : traj.snapshots) {
        CHECK(std::fabs(snap.diag.total_probability - p0) <= 1e-6 * p0);
        CHECK(snap.diag.continuity_residual <= 1e-6);
    }
}

TEST_CASE("RK4 order: halving dt reduces the phase error ~16x") {
    GridSpec g = GridSpec::line(64, 2.0 * M_PI / 64);
    CoefficientVector sch = schrodinger_coefficients(1.0, 1.0);
    const int mode = 8;
    WaveField psi0 = plane_wave(g, mode);
    const double k = 2.0 * M_PI / g.length(0) * mode;
    const double t_end = 0.1;

    auto phase_error = [&](double dt) {
        EvolutionConfig cfg;
        cfg.dt = dt;
        cfg.t_max = t_end;
        cfg.record_every = 1 << 20;
        Trajectory traj = evolve(psi0, sch, cfg);
        const WaveField& psi = traj.snapshots.back().psi;
        double worst = 0.0;
        for (int i = 0; i < g.n[0]; ++i) {
            complex_t expected = std::exp(
                complex_t(0.0, k * g.coord(0, i) - 0.5 * k * k * t_end));
            worst = std::max(worst, std::abs(psi.values[i] - expected));
        }
        return worst;
    };

    double e1 = phase_error(2e-3);
    double e2 = phase_error(1e-3);
    double ratio = e1 / e2;
    CHECK(ratio >= 12.0);
    CHECK(ratio <= 20.0);
}

TEST_CASE("density at the floor aborts with a partial trajectory") {
    GridSpec g = GridSpec::line(64, 2.0 * M_PI / 64);
    CoefficientVector sch = schrodinger_coefficients(1.0, 1.0);
    WaveField psi0 = from_rho_s(g, [](double x) { return 1.0 + 0.5 * std::cos(x); },
                                [](double) { return 0.0; });
    EvolutionConfig cfg;
    cfg.dt = 1e-3;
    cfg.t_max = 0.5;
    cfg.floor = 0.6; // above min rho = 0.5, triggers on the first step
    Trajectory traj = evolve(psi0, sch, cfg);
    CHECK(traj.status == RunStatus::aborted_floor);
    CHECK(traj.snapshots.size() == 1); // initial snapshot only
}

TEST_CASE("amplitude blow-up raises an instability error") {
    GridSpec g = GridSpec::line(64, 2.0 * M_PI / 64);
    CoefficientVector c;
    c.nu1 = -0.5;
    c.nu2 = -0.5; // anti-diffusive rho dynamics: high modes grow fast
    WaveField psi0 = from_rho_s(
        g, [](double x) { return 1.0 + 1e-3 * std::cos(21.0 * x); },
        [](double) { return 0.0; });
    EvolutionConfig cfg;
    cfg.dt = 1e-4;
    cfg.t_max = 0.2;
    cfg.record_every = 1 << 20;
    CHECK_THROWS_AS(evolve(psi0, c, cfg), InstabilityError);
}

TEST_CASE("gauge covariance experiment at unit gauge is exact") {
    GridSpec g = GridSpec::line(64, 2.0 * M_PI / 64);
    CoefficientVector sch = schrodinger_coefficients(1.0, 1.0);
    WaveField psi0 = from_rho_s(g, [](double x) { return 1.0 + 0.2 * std::cos(x); },
                                [](double x) { return 0.1 * std::sin(x); });
    EvolutionConfig cfg;
    cfg.dt = 1e-3;
    cfg.t_max = 0.05;
    cfg.record_every = 10;
    CovarianceReport rep =
        gauge_covariance_experiment(psi0, sch, identity_gauge(), cfg);
    CHECK(rep.max_density_gap <= 1e-14);
}

TEST_CASE("gauge covariance for a strictly local gauge at desk scale") {
    GridSpec g = GridSpec::line(64, 2.0 * M_PI / 64);
    CoefficientVector sch = schrodinger_coefficients(1.0, 1.0);
    WaveField psi0 = from_rho_s(g, [](double x) { return 1.0 + 0.2 * std::cos(x); },
                                [](double x) { return 0.1 * std::sin(x); });
    EvolutionConfig cfg;
    cfg.dt = 1e-4;
    cfg.t_max = 0.02;
    cfg.record_every = 50;
    CovarianceReport rep = gauge_covariance_experiment(
        psi0, sch, GaugeParams{0.5, 2.0, 0.0}, cfg);
    CHECK(rep.max_density_gap <= 1e-6);
}

TEST_CASE("galilean boost") {
    GridSpec g = GridSpec::line(64, 2.0 * M_PI / 64);
    WaveField psi = plane_wave(g, 2);

    CHECK(max_abs_diff(galilean_boost(psi, 0.0, -0.5), psi) == 0.0);

    // nu1 = -1/2, L = 2pi: admissible speeds are the integers; the boost
    // phase exp(i v x / (2 nu1)) = exp(-i v x) shifts the mode down by v
    WaveField boosted = galilean_boost(psi, 1.0, -0.5);
    WaveField expected = plane_wave(g, 1);
    CHECK(max_abs_diff(boosted, expected) <= 1e-12);

    CHECK_THROWS_AS(galilean_boost(psi, 0.5, -0.5), BoostVelocityError);
    CHECK_THROWS_AS(galilean_boost(psi, 1.0, 0.0), PreconditionError);
}

TEST_CASE("boosted trajectory matches the shifted unboosted one") {
    GridSpec g = GridSpec::line(64, 2.0 * M_PI / 64);
    CoefficientVector c = schrodinger_coefficients(1.0, 1.0);
    c.mu1 = -0.1; // satisfies the Galilean conditions (mu1 + mu4 = 0)
    c.mu4 = 0.1;
    WaveField psi0 = from_rho_s(g, [](double x) { return 1.0 + 0.2 * std::cos(x); },
                                [](double x) { return 0.1 * std::sin(x); });
    const double v = 1.0;

    EvolutionConfig cfg;
    cfg.dt = 1e-4;
    cfg.t_max = 0.05;
    cfg.record_every = 1 << 20;
    Trajectory plain = evolve(psi0, c, cfg);
    Trajectory boosted = evolve(galilean_boost(psi0, v, c.nu1), c, cfg);

    RealField rho_plain = density(plain.snapshots.back().psi);
    RealField rho_boost = density(boosted.snapshots.back().psi);
    // rho_boost(x, t) = rho_plain(x + v t, t)
    RealField shifted = shift(rho_plain, -v * cfg.t_max);
    CHECK(max_abs_diff(rho_boost, shifted) <= 1e-6);
}
