#include "nlgauge/gauge_map.hpp"

#include <cmath>

#include "nlgauge/spectral.hpp"

namespace nlg {

namespace {

void require_group_element(const ExtendedGaugeParams& g) {
    if (g.lambda == 0.0)
        throw InvalidGaugeError("gauge parameter lambda must be nonzero");
}

bool near_integer(double x) {
    return std::fabs(x - std::round(x)) <= 1e-9 * std::max(1.0, std::fabs(x));
}

} // namespace

RealField phase_functional(const WaveField& psi, const ExtendedGaugeParams& g,
                           double floor) {
    require_group_element(g);
    RealField rho = density(psi);
    const double f = resolve_floor(rho, floor);
    for (double v : rho.values)
        if (!(v > f))
            throw DensityFloorError("density reaches the floor; gauge phase undefined");

    RealField phi(psi.grid);
    if (g.gamma != 0.0) {
        for (std::size_t i = 0; i < rho.size(); ++i)
            phi.values[i] += 0.5 * g.gamma * std::log(rho.values[i]);
    }
    if (g.lambda != 1.0) {
        UnwrapResult u = unwrap_phase(psi, floor);
        for (int a = 0; a < psi.grid.dim; ++a) {
            if (u.winding[a] != 0 && !near_integer(g.lambda * u.winding[a]))
                throw WindingError(
                    "lambda times the phase winding is not an integer; the "
                    "transformed field would be discontinuous on the torus");
        }
        for (std::size_t i = 0; i < rho.size(); ++i)
            phi.values[i] += (g.lambda - 1.0) * u.s.values[i];
    }
    if (g.eta1 != 0.0 || g.eta2 != 0.0) {
        FunctionalSet fs = functionals(psi, floor);
        for (std::size_t i = 0; i < rho.size(); ++i)
            phi.values[i] += g.eta1 * fs.r[1].values[i] +
                             g.eta2 * fs.r[4].values[i];
    }
    return phi;
}

WaveField apply(const WaveField& psi, const ExtendedGaugeParams& g,
                double floor) {
    RealField phi = phase_functional(psi, g, floor);
    WaveField out(psi.grid);
    for (std::size_t i = 0; i < psi.size(); ++i)
        out.values[i] =
            psi.values[i] * std::exp(complex_t(0.0, phi.values[i]));
    return out;
}

WaveField apply(const WaveField& psi, const GaugeParams& g, double floor) {
    return apply(psi, ExtendedGaugeParams::from(g), floor);
}

std::pair<RealField, RealField> apply_log_coords(const RealField& t,
                                                 const RealField& s,
                                                 const GaugeParams& g) {
    if (!(t.grid == s.grid))
        throw PreconditionError("T and S must share one grid");
    if (g.lambda == 0.0)
        throw InvalidGaugeError("gauge parameter lambda must be nonzero");
    RealField lap_t = laplacian(t);
    RealField s_out(s.grid);
    for (std::size_t i = 0; i < s.size(); ++i)
        s_out.values[i] = g.lambda * s.values[i] + g.gamma * t.values[i] +
                          g.eta * lap_t.values[i];
    return {t, s_out};
}

WaveField tensor_product(const WaveField& psi1, const WaveField& psi2) {
    if (psi1.grid.dim != 1 || psi2.grid.dim != 1)
        throw PreconditionError("tensor_product expects two 1D fields");
    GridSpec g = GridSpec::product(psi1.grid, psi2.grid);
    WaveField out(g);
    for (int i0 = 0; i0 < g.n[0]; ++i0)
        for (int i1 = 0; i1 < g.n[1]; ++i1)
            out.at(i0, i1) = psi1.values[i0] * psi2.values[i1];
    return out;
}

SeparationReport separation_check(const WaveField& psi1, const WaveField& psi2,
                                  const ExtendedGaugeParams& g, double floor) {
    SeparationReport rep;
    WaveField joint = tensor_product(psi1, psi2);

    WaveField joint_gauged = apply(joint, g, floor);
    WaveField factors_gauged =
        tensor_product(apply(psi1, g, floor), apply(psi2, g, floor));
    rep.product_map_discrepancy = max_abs_diff(joint_gauged, factors_gauged);

    FunctionalSet f_joint = functionals(joint, floor);
    FunctionalSet f1 = functionals(psi1, floor);
    FunctionalSet f2 = functionals(psi2, floor);
    const GridSpec& pg = joint.grid;
    for (int i0 = 0; i0 < pg.n[0]; ++i0) {
        for (int i1 = 0; i1 < pg.n[1]; ++i1) {
            double lifted_r2 = f1.r[1].values[i0] + f2.r[1].values[i1];
            double lifted_r5 = f1.r[4].values[i0] + f2.r[4].values[i1];
            rep.r2_additivity_residual =
                std::max(rep.r2_additivity_residual,
                         std::fabs(f_joint.r[1].at(i0, i1) - lifted_r2));
            rep.r5_additivity_residual =
                std::max(rep.r5_additivity_residual,
                         std::fabs(f_joint.r[4].at(i0, i1) - lifted_r5));
        }
    }
    return rep;
}

} // namespace nlg
