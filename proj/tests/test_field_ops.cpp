#include <doctest.h>

#include <cmath>
#include <functional>

#include "fd_stencil.hpp"
#include "nlgauge/field_ops.hpp"
#include "nlgauge/rng.hpp"
#include "nlgauge/spectral.hpp"

using namespace nlg;
using fdtest::fd_derivative;

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

TEST_CASE("density is |psi|^2") {
    GridSpec g = GridSpec::line(64, 2.0 * M_PI / 64);
    CHECK(max_abs_diff(density(plane_wave(g, 3)),
                       RealField(g, std::vector<double>(g.size(), 1.0))) <= 1e-15);

    WaveField zero(g);
    CHECK(max_abs(density(zero)) == 0.0);

    auto rho_fn = [](double x) {
        double v = 1.0 + 0.3 * std::cos(x);
        return v * v;
    };
    WaveField psi = from_rho_s(g, rho_fn, [](double) { return 0.7; });
    RealField rho = density(psi);
    for (int i = 0; i < g.n[0]; ++i)
        CHECK(rho.values[i] == doctest::Approx(rho_fn(g.coord(0, i))).epsilon(1e-13));
}

TEST_CASE("jhat of a plane wave is the wavenumber") {
    GridSpec g = GridSpec::line(64, 2.0 * M_PI / 64);
    const int mode = 2;
    VectorField j = jhat(plane_wave(g, mode));
    const double k = 2.0 * M_PI / g.length(0) * mode;
    for (double v : j.comp[0].values) CHECK(v == doctest::Approx(k).epsilon(1e-12));
}

TEST_CASE("jhat of a real field vanishes") {
    GridSpec g = GridSpec::line(64, 2.0 * M_PI / 64);
    WaveField psi = from_rho_s(g, [](double x) { return 1.0 + 0.4 * std::sin(x); },
                               [](double) { return 0.0; });
    CHECK(max_abs(jhat(psi).comp[0]) <= 1e-12);
}

TEST_CASE("Madelung identity jhat = rho grad S") {
    GridSpec g = GridSpec::line(128, 2.0 * M_PI / 128);
    auto rho = [](double x) { return 1.0 + 0.3 * std::cos(x) + 0.1 * std::sin(2 * x); };
    auto s = [](double x) { return 0.5 * std::cos(x) - 0.2 * std::sin(3 * x); };
    WaveField psi = from_rho_s(g, rho, s);
    VectorField j = jhat(psi);
    RealField grad_s = derivative(unwrap_phase(psi).s, 1);
    RealField rho_f = density(psi);
    for (int i = 0; i < g.n[0]; ++i)
        CHECK(std::fabs(j.comp[0].values[i] - rho_f.values[i] * grad_s.values[i]) <= 1e-8);
}

TEST_CASE("unwrap of a constant-phase field") {
    GridSpec g = GridSpec::line(32, 0.2);
    WaveField psi(g);
    for (auto& v : psi.values) v = std::exp(complex_t(0.0, 0.3));
    UnwrapResult u = unwrap_phase(psi);
    for (double v : u.s.values) CHECK(v == doctest::Approx(0.3).epsilon(1e-14));
    CHECK(u.winding[0] == 0);
}

TEST_CASE("unwrap of a plane wave reports the winding") {
    GridSpec g = GridSpec::line(64, 2.0 * M_PI / 64);
    WaveField psi = plane_wave(g, 1);
    UnwrapResult u = unwrap_phase(psi);
    CHECK(u.winding[0] == 1);
    for (int i = 0; i < g.n[0]; ++i)
        CHECK(u.s.values[i] == doctest::Approx(g.coord(0, i)).epsilon(1e-12));

    // reconstruction psi = sqrt(rho) exp(iS)
    RealField rho = density(psi);
    double worst = 0.0;
    for (int i = 0; i < g.n[0]; ++i) {
        complex_t rebuilt = std::sqrt(rho.values[i]) *
                            std::exp(complex_t(0.0, u.s.values[i]));
        worst = std::max(worst, std::abs(rebuilt - psi.values[i]));
    }
    CHECK(worst <= 1e-10);
}

TEST_CASE("unwrap fails when the density touches zero") {
    GridSpec g = GridSpec::line(64, 2.0 * M_PI / 64);
    WaveField psi = from_rho_s(g, [](double x) { return 1.0 + std::cos(x); },
                               [](double) { return 0.0; });
    CHECK_THROWS_AS(unwrap_phase(psi), DensityFloorError);
}

TEST_CASE("sigma vanishes for constant density") {
    GridSpec g = GridSpec::line(64, 2.0 * M_PI / 64);
    CHECK(max_abs(sigma(plane_wave(g, 2)).comp[0]) <= 1e-10);
}

TEST_CASE("sigma linearization for a small single-mode density") {
    GridSpec g = GridSpec::line(128, 2.0 * M_PI / 128);
    const double a = 0.01, k = 1.0;
    WaveField psi = from_rho_s(g, [&](double x) { return 1.0 + a * std::cos(k * x); },
                               [](double) { return 0.0; });
    VectorField s = sigma(psi);
    // sigma = a k^3 sin(kx) - (3/2) a^2 k^3 sin(2kx) + O(a^3)
    double worst1 = 0.0, worst2 = 0.0;
    for (int i = 0; i < g.n[0]; ++i) {
        double x = g.coord(0, i);
        worst1 = std::max(worst1, std::fabs(s.comp[0].values[i] -
                                            a * k * k * k * std::sin(k * x)));
        double two_term = a * k * k * k * std::sin(k * x) -
                          1.5 * a * a * k * k * k * std::sin(2 * k * x);
        worst2 = std::max(worst2, std::fabs(s.comp[0].values[i] - two_term));
    }
    CHECK(worst1 <= 2.0 * a * a * k * k * k); // first order dominates
    CHECK(worst2 <= 5.0 * a * a * a * k * k * k); // next order is O(a^3)
}

TEST_CASE("both printed forms of sigma agree") {
    GridSpec g = GridSpec::line(128, 2.0 * M_PI / 128);
    WaveField psi = from_rho_s(
        g, [](double x) { return 1.0 + 0.2 * std::cos(x) + 0.15 * std::sin(2 * x); },
        [](double x) { return 0.3 * std::cos(x); });
    VectorField s1 = sigma(psi);
    VectorField s2 = sigma_gradient_form(psi);
    double scale = std::max(1.0, max_abs(s1.comp[0]));
    CHECK(max_abs_diff(s1.comp[0], s2.comp[0]) <= 1e-7 * scale);
}

TEST_CASE("functionals of a plane wave: only R3 survives") {
    GridSpec g = GridSpec::line(64, 2.0 * M_PI / 64);
    const int mode = 3;
    const double k = 2.0 * M_PI / g.length(0) * mode;
    FunctionalSet f = functionals(plane_wave(g, mode));
    for (double v : f.r[2].values) CHECK(v == doctest::Approx(k * k).epsilon(1e-10));
    for (int j = 1; j <= 12; ++j) {
        if (j == 3) continue;
        // R12 carries six spectral derivatives of pure rounding noise
        CHECK(max_abs(f[j]) <= 1e-6);
    }
}

TEST_CASE("functionals of a real constant all vanish") {
    GridSpec g = GridSpec::line(64, 2.0 * M_PI / 64);
    WaveField psi(g);
    for (auto& v : psi.values) v = 1.7;
    FunctionalSet f = functionals(psi);
    for (int j = 1; j <= 12; ++j) CHECK(max_abs(f[j]) <= 1e-10);
}

TEST_CASE("functionals of a real field match the finite-difference oracle") {
    GridSpec g = GridSpec::line(64, 2.0 * M_PI / 64);
    auto rho = [](double x) { return 1.0 + 0.3 * std::cos(x); };
    WaveField psi = from_rho_s(g, rho, [](double) { return 0.0; });
    FunctionalSet f = functionals(psi);

    // no current: R1, R3, R4, R7, R10 identically zero
    for (int j : {1, 3, 4, 7, 10}) CHECK(max_abs(f[j]) <= 1e-9);

    const double h = 0.04;
    auto lnrho = [&](double x) { return std::log(rho(x)); };
    auto w = [&](double x) { return fd_derivative(lnrho, x, 2, h); };
    auto sig = [&](double x) { return rho(x) * fd_derivative(w, x, 1, h); };
    auto r2_fn = [&](double x) { return fd_derivative(rho, x, 2, h) / rho(x); };
    auto r5_fn = [&](double x) {
        double d = fd_derivative(rho, x, 1, h) / rho(x);
        return d * d;
    };
    auto r6_fn = [&](double x) { return fd_derivative(sig, x, 1, h) / rho(x); };
    auto r8_fn = [&](double x) {
        return sig(x) * fd_derivative(rho, x, 1, h) / (rho(x) * rho(x));
    };
    auto r9_fn = [&](double x) {
        double v = sig(x) / rho(x);
        return v * v;
    };
    auto r11_fn = [&](double x) { return fd_derivative(r2_fn, x, 2, 0.05); };
    auto r12_fn = [&](double x) { return fd_derivative(r6_fn, x, 2, 0.05); };

    auto check_against = [&](int j, const std::function<double(double)>& ref_fn) {
        double ref_max = 0.0, err_max = 0.0;
        for (int i = 0; i < g.n[0]; ++i) {
            double ref = ref_fn(g.coord(0, i));
            ref_max = std::max(ref_max, std::fabs(ref));
            err_max = std::max(err_max, std::fabs(f[j].values[i] - ref));
        }
        CAPTURE(j);
        CHECK(err_max <= 1e-6 * std::max(1.0, ref_max));
    };
    check_against(2, r2_fn);
    check_against(5, r5_fn);
    check_against(6, r6_fn);
    check_against(8, r8_fn);
    check_against(9, r9_fn);
    check_against(11, r11_fn);
    check_against(12, r12_fn);
}

TEST_CASE("functionals are invariant under constant phase rotation") {
    GridSpec g = GridSpec::line(128, 2.0 * M_PI / 128);
    WaveField psi = from_rho_s(
        g, [](double x) { return 1.0 + 0.25 * std::cos(x) + 0.1 * std::sin(3 * x); },
        [](double x) { return 0.4 * std::sin(x); });
    WaveField rotated(g);
    for (std::size_t i = 0; i < psi.size(); ++i)
        rotated.values[i] = psi.values[i] * std::exp(complex_t(0.0, 1.234));
    FunctionalSet f0 = functionals(psi);
    FunctionalSet f1 = functionals(rotated);
    for (int j = 1; j <= 12; ++j) {
        double scale = std::max(1.0, max_abs(f0[j]));
        CHECK(max_abs_diff(f0[j], f1[j]) <= 1e-7 * scale);
    }
}

TEST_CASE("laplacian identity residual") {
    GridSpec g = GridSpec::line(256, 2.0 * M_PI / 256);
    CHECK(laplacian_identity_residual(plane_wave(g, 4)) <= 1e-10);

    WaveField c(g);
    for (auto& v : c.values) v = 2.0;
    CHECK(laplacian_identity_residual(c) <= 1e-12);

    WaveField psi = from_rho_s(g,
                               [](double x) {
                                   double v = 1.0 + 0.3 * std::cos(x);
                                   return v * v;
                               },
                               [](double x) { return std::sin(x); });
    CHECK(laplacian_identity_residual(psi) <= 1e-7);
}

TEST_CASE("gauge-invariant current") {
    GridSpec g = GridSpec::line(64, 2.0 * M_PI / 64);
    CoefficientVector sch = schrodinger_coefficients(1.0, 1.0);

    // plane wave: grad rho = sigma = 0, J = -2 nu1 k = k
    const int mode = 2;
    const double k = 2.0 * M_PI / g.length(0) * mode;
    VectorField j = gi_current(plane_wave(g, mode), sch);
    for (double v : j.comp[0].values) CHECK(v == doctest::Approx(k).epsilon(1e-10));

    // real field with only nu2: J = -2 nu2 grad rho
    CoefficientVector c;
    c.nu2 = 0.7;
    auto rho = [](double x) { return 1.0 + 0.2 * std::cos(x); };
    WaveField real_psi = from_rho_s(g, rho, [](double) { return 0.0; });
    VectorField j2 = gi_current(real_psi, c);
    RealField grho = derivative(density(real_psi), 1);
    for (int i = 0; i < g.n[0]; ++i)
        CHECK(j2.comp[0].values[i] ==
              doctest::Approx(-2.0 * 0.7 * grho.values[i]).epsilon(1e-10));
}

TEST_CASE("continuity identity holds kinematically") {
    GridSpec g = GridSpec::line(256, 2.0 * M_PI / 256);
    WaveField psi = from_rho_s(
        g, [](double x) { return 1.0 + 0.25 * std::cos(x) + 0.15 * std::sin(2 * x); },
        [](double x) { return 0.5 * std::cos(x) + 0.3 * std::sin(2 * x); });
    Rng rng(5);
    for (int trial = 0; trial < 5; ++trial) {
        CoefficientVector c;
        c.nu1 = rng.symmetric(2.0);
        c.nu2 = rng.symmetric(2.0);
        c.nu6 = rng.symmetric(2.0);
        CHECK(continuity_identity_residual(psi, c) <= 1e-7);
    }
}

TEST_CASE("density floor rejects fields with nodes") {
    GridSpec g = GridSpec::line(64, 2.0 * M_PI / 64);
    WaveField psi = from_rho_s(g, [](double x) { return 1.0 + std::cos(x); },
                               [](double) { return 0.0; });
    CHECK_THROWS_AS(functionals(psi), DensityFloorError);
    CHECK_THROWS_AS(sigma(psi), DensityFloorError);
    CHECK_THROWS_AS(laplacian_identity_residual(psi), DensityFloorError);
}
