#include "nlgauge/verify.hpp"

#include <cmath>

#include "nlgauge/oracle.hpp"

namespace nlg {

CovarianceVerification verify_covariance_reference(std::uint64_t seed) {
    CovarianceVerification v;
    v.seed = seed;
    Rng rng(seed);
    const CoefficientVector c = schrodinger_coefficients(1.0, 1.0);

    {
        GridSpec grid = GridSpec::line(256, 2.0 * M_PI / 256);
        WaveField psi0 = make_test_field(TestFieldSpec::random(rng), grid);
        GaugeParams g{0.5, 2.0, 0.0};
        EvolutionConfig cfg;
        cfg.dt = 1e-5;
        cfg.t_max = 0.1;
        cfg.record_every = 1000;
        v.local_gap = gauge_covariance_experiment(psi0, c, g, cfg).max_density_gap;
    }
    {
        GridSpec grid = GridSpec::line(64, 2.0 * M_PI / 64);
        WaveField psi0 = make_test_field(TestFieldSpec::random(rng), grid);
        GaugeParams g{0.0, 1.0, 0.05};
        EvolutionConfig cfg;
        cfg.dt = 8e-7; // under the dx^6 guard for max|coeff| = 1/2
        cfg.t_max = 1e-3;
        cfg.record_every = 125;
        v.eta_gap = gauge_covariance_experiment(psi0, c, g, cfg).max_density_gap;
    }
    v.pass = v.local_gap <= v.local_threshold && v.eta_gap <= v.eta_threshold;
    return v;
}

SeparationVerification verify_separation_reference(std::uint64_t seed) {
    SeparationVerification v;
    v.seed = seed;
    Rng rng(seed);
    GridSpec grid = GridSpec::line(64, 2.0 * M_PI / 64);
    WaveField psi1 = make_test_field(TestFieldSpec::random(rng), grid);
    WaveField psi2 = make_test_field(TestFieldSpec::random(rng), grid);
    ExtendedGaugeParams g{1.0, 2.0, 0.3, 0.7};
    v.report = separation_check(psi1, psi2, g);
    v.pass = v.report.product_map_discrepancy <= v.threshold &&
             v.report.r2_additivity_residual <= v.threshold &&
             v.report.r5_additivity_residual <= v.threshold;
    return v;
}

} // namespace nlg
