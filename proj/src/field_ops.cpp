#include "nlgauge/field_ops.hpp"

#include <algorithm>
#include <cmath>

#include "nlgauge/spectral.hpp"

namespace nlg {

namespace {

double check_floor(const RealField& rho, double floor) {
    const double f = resolve_floor(rho, floor);
    double mn = rho.values.empty() ? 0.0 : rho.values[0];
    for (double v : rho.values) mn = std::min(mn, v);
    if (!(mn > f))
        throw DensityFloorError("density reaches the regularization floor (min rho = " +
                                std::to_string(mn) + ", floor = " + std::to_string(f) + ")");
    return f;
}

RealField log_field(const RealField& rho) {
    RealField out(rho.grid);
    for (std::size_t i = 0; i < rho.size(); ++i)
        out.values[i] = std::log(rho.values[i]);
    return out;
}

RealField divide(const RealField& a, const RealField& b) {
    RealField out(a.grid);
    for (std::size_t i = 0; i < a.size(); ++i)
        out.values[i] = a.values[i] / b.values[i];
    return out;
}

RealField dot(const VectorField& a, const VectorField& b) {
    RealField out(a.grid);
    for (int ax = 0; ax < a.grid.dim; ++ax)
        for (std::size_t i = 0; i < out.size(); ++i)
            out.values[i] += a.comp[ax].values[i] * b.comp[ax].values[i];
    return out;
}

// Uniform filtering policy: every spectrally produced intermediate is
// projected onto |k| <= kcut so high-mode rounding noise is not amplified
// through the k^6 chains. kcut < 0 disables the projection.
struct Pipeline {
    int kcut;
    RealField lap(const RealField& f) const {
        return band_limit(laplacian(f), kcut);
    }
    RealField div(const VectorField& v) const {
        return band_limit(divergence(v), kcut);
    }
    VectorField grad(const RealField& f) const {
        VectorField g = gradient(f);
        for (int a = 0; a < f.grid.dim; ++a)
            g.comp[a] = band_limit(g.comp[a], kcut);
        return g;
    }
    // Pointwise products/quotients widen the spectrum; project them too.
    RealField p(const RealField& f) const { return band_limit(f, kcut); }
};

} // namespace

double resolve_floor(const RealField& rho, double floor) {
    if (floor >= 0.0) return floor;
    return 1e-10 * max_abs(rho);
}

RealField density(const WaveField& psi) {
    RealField rho(psi.grid);
    for (std::size_t i = 0; i < psi.size(); ++i)
        rho.values[i] = std::norm(psi.values[i]);
    return rho;
}

VectorField jhat(const WaveField& psi) {
    VectorField j(psi.grid);
    for (int a = 0; a < psi.grid.dim; ++a) {
        ComplexField dpsi = derivative(psi, 1, a);
        for (std::size_t i = 0; i < psi.size(); ++i)
            j.comp[a].values[i] =
                std::imag(std::conj(psi.values[i]) * dpsi.values[i]);
    }
    return j;
}

UnwrapResult unwrap_phase(const WaveField& psi, double floor) {
    check_floor(density(psi), floor);
    const GridSpec& g = psi.grid;
    UnwrapResult res;
    res.s = RealField(g);

    auto arg_at = [&](int i0, int i1) { return std::arg(psi.at(i0, i1)); };
    auto wrap = [](double d) {
        while (d > M_PI) d -= 2.0 * M_PI;
        while (d < -M_PI) d += 2.0 * M_PI;
        return d;
    };

    // Unwrap along axis 0 at i1 = 0, then along axis 1 from each row head.
    res.s.at(0, 0) = arg_at(0, 0);
    for (int i0 = 1; i0 < g.n[0]; ++i0)
        res.s.at(i0, 0) =
            res.s.at(i0 - 1, 0) + wrap(arg_at(i0, 0) - arg_at(i0 - 1, 0));
    {
        double loop = res.s.at(g.n[0] - 1, 0) +
                      wrap(arg_at(0, 0) - arg_at(g.n[0] - 1, 0)) -
                      res.s.at(0, 0);
        res.winding[0] = std::lround(loop / (2.0 * M_PI));
    }
    if (g.dim == 2) {
        for (int i0 = 0; i0 < g.n[0]; ++i0) {
            for (int i1 = 1; i1 < g.n[1]; ++i1)
                res.s.at(i0, i1) = res.s.at(i0, i1 - 1) +
                                   wrap(arg_at(i0, i1) - arg_at(i0, i1 - 1));
        }
        double loop = res.s.at(0, g.n[1] - 1) +
                      wrap(arg_at(0, 0) - arg_at(0, g.n[1] - 1)) -
                      res.s.at(0, 0);
        res.winding[1] = std::lround(loop / (2.0 * M_PI));
    }
    return res;
}

VectorField sigma(const WaveField& psi, double floor) {
    RealField rho = density(psi);
    check_floor(rho, floor);
    RealField w = laplacian(log_field(rho));
    VectorField s = gradient(w);
    for (int a = 0; a < psi.grid.dim; ++a)
        for (std::size_t i = 0; i < rho.size(); ++i)
            s.comp[a].values[i] *= rho.values[i];
    return s;
}

VectorField sigma_gradient_form(const WaveField& psi, double floor) {
    RealField rho = density(psi);
    check_floor(rho, floor);
    RealField r2 = divide(laplacian(rho), rho);
    VectorField grho = gradient(rho);
    RealField r5(rho.grid);
    for (int a = 0; a < psi.grid.dim; ++a)
        for (std::size_t i = 0; i < rho.size(); ++i)
            r5.values[i] += grho.comp[a].values[i] * grho.comp[a].values[i] /
                            (rho.values[i] * rho.values[i]);
    RealField diff(rho.grid);
    for (std::size_t i = 0; i < rho.size(); ++i)
        diff.values[i] = r2.values[i] - r5.values[i];
    VectorField s = gradient(diff);
    for (int a = 0; a < psi.grid.dim; ++a)
        for (std::size_t i = 0; i < rho.size(); ++i)
            s.comp[a].values[i] *= rho.values[i];
    return s;
}

FunctionalSet functionals(const WaveField& psi, double floor, int kcut) {
    const Pipeline pl{kcut};
    RealField rho = density(psi);
    check_floor(rho, floor);
    rho = pl.p(rho);

    VectorField j = jhat(psi);
    for (int a = 0; a < psi.grid.dim; ++a) j.comp[a] = pl.p(j.comp[a]);
    VectorField grho = pl.grad(rho);
    RealField laprho = pl.lap(rho);
    RealField divj = pl.div(j);

    RealField rho2(rho.grid);
    for (std::size_t i = 0; i < rho.size(); ++i)
        rho2.values[i] = rho.values[i] * rho.values[i];

    FunctionalSet f;
    f.r[0] = pl.p(divide(divj, rho));                 // R1
    f.r[1] = pl.p(divide(laprho, rho));               // R2
    f.r[2] = pl.p(divide(dot(j, j), rho2));           // R3
    f.r[3] = pl.p(divide(dot(j, grho), rho2));        // R4
    f.r[4] = pl.p(divide(dot(grho, grho), rho2));     // R5

    RealField lnrho = pl.p(log_field(rho));
    VectorField sig = pl.grad(pl.lap(lnrho));
    for (int a = 0; a < psi.grid.dim; ++a) {
        for (std::size_t i = 0; i < rho.size(); ++i)
            sig.comp[a].values[i] *= rho.values[i];
        sig.comp[a] = pl.p(sig.comp[a]);
    }
    RealField divsig = pl.div(sig);

    f.r[5] = pl.p(divide(divsig, rho));               // R6
    f.r[6] = pl.p(divide(dot(j, sig), rho2));         // R7
    f.r[7] = pl.p(divide(dot(sig, grho), rho2));      // R8
    f.r[8] = pl.p(divide(dot(sig, sig), rho2));       // R9
    f.r[9] = pl.lap(f.r[0]);                          // R10
    f.r[10] = pl.lap(f.r[1]);                         // R11
    f.r[11] = pl.lap(f.r[5]);                         // R12
    return f;
}

double laplacian_identity_residual(const WaveField& psi, double floor) {
    RealField rho = density(psi);
    check_floor(rho, floor);
    FunctionalSet f = functionals(psi, floor);
    ComplexField lap_psi = laplacian(psi);
    double worst = 0.0;
    for (std::size_t i = 0; i < psi.size(); ++i) {
        complex_t lhs = lap_psi.values[i] / psi.values[i];
        complex_t rhs(0.5 * f.r[1].values[i] - f.r[2].values[i] -
                          0.25 * f.r[4].values[i],
                      f.r[0].values[i]);
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    return worst;
}

VectorField gi_current(const WaveField& psi, const CoefficientVector& c,
                       double floor) {
    RealField rho = density(psi);
    check_floor(rho, floor);
    VectorField j = jhat(psi);
    VectorField grho = gradient(rho);
    VectorField sig = sigma(psi, floor);
    VectorField out(psi.grid);
    for (int a = 0; a < psi.grid.dim; ++a)
        for (std::size_t i = 0; i < rho.size(); ++i)
            out.comp[a].values[i] =
                -2.0 * (c.nu1 * j.comp[a].values[i] +
                        c.nu2 * grho.comp[a].values[i] +
                        c.nu6 * sig.comp[a].values[i]);
    return out;
}

double continuity_identity_residual(const WaveField& psi,
                                    const CoefficientVector& c, double floor) {
    RealField rho = density(psi);
    check_floor(rho, floor);
    FunctionalSet f = functionals(psi, floor);
    RealField divJ = divergence(gi_current(psi, c, floor));
    double worst = 0.0;
    for (std::size_t i = 0; i < rho.size(); ++i) {
        double big_i = c.nu1 * f.r[0].values[i] + c.nu2 * f.r[1].values[i] +
                       c.nu6 * f.r[5].values[i];
        worst = std::max(worst,
                         std::fabs(2.0 * big_i * rho.values[i] + divJ.values[i]));
    }
    return worst;
}

} // namespace nlg
