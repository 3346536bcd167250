#include "nlgauge/coeffs.hpp"

#include <algorithm>
#include <cmath>

#include "nlgauge/errors.hpp"

namespace nlg {

namespace {

void require_group_element(const GaugeParams& g) {
    if (g.lambda == 0.0)
        throw InvalidGaugeError("gauge parameter lambda must be nonzero");
}

void require_nu1(const CoefficientVector& c) {
    if (c.nu1 == 0.0)
        throw PreconditionError("coefficient nu1 must be nonzero");
}

} // namespace

const std::array<const char*, 15>& CoefficientVector::field_names() {
    static const std::array<const char*, 15> names = {
        "nu1", "nu2", "nu6", "mu1", "mu2",  "mu3",  "mu4", "mu5",
        "mu6", "mu7", "mu8", "mu9", "mu10", "mu11", "mu12"};
    return names;
}

double CoefficientVector::max_abs() const {
    double m = 0.0;
    for (double v : as_array()) m = std::max(m, std::fabs(v));
    return m;
}

bool CoefficientVector::has_high_order_terms() const {
    return nu6 != 0.0 || mu6 != 0.0 || mu7 != 0.0 || mu8 != 0.0 ||
           mu9 != 0.0 || mu10 != 0.0 || mu11 != 0.0 || mu12 != 0.0;
}

const std::array<const char*, 13>& InvariantVector::component_names() {
    static const std::array<const char*, 13> names = {
        "tau1", "tau2", "tau3",  "tau4",  "tau5",  "tau6",   "tau7",
        "tau8", "tau9", "tau10", "tau11", "tau12", "tau5hat"};
    return names;
}

GaugeParams identity_gauge() { return {0.0, 1.0, 0.0}; }

GaugeParams compose(const GaugeParams& g2, const GaugeParams& g1) {
    require_group_element(g1);
    require_group_element(g2);
    return {g2.gamma + g2.lambda * g1.gamma, g2.lambda * g1.lambda,
            g2.eta + g2.lambda * g1.eta};
}

GaugeParams inverse(const GaugeParams& g) {
    require_group_element(g);
    return {-g.gamma / g.lambda, 1.0 / g.lambda, -g.eta / g.lambda};
}

CoefficientVector transform(const CoefficientVector& c, const GaugeParams& g,
                            Nu6Law law) {
    require_nu1(c);
    require_group_element(g);
    const double ga = g.gamma, la = g.lambda, et = g.eta;

    CoefficientVector p;
    p.nu1 = c.nu1 / la;
    p.nu2 = c.nu2 - 0.5 * ga * c.nu1 / la;
    p.nu6 = (law == Nu6Law::corrected) ? c.nu6 - et * c.nu1 / la
                                       : c.nu6 - et / (c.nu1 * la);
    p.mu1 = c.mu1 - ga * c.nu1 / la;
    p.mu2 = la * c.mu2 - 0.5 * ga * c.mu1 + 0.5 * ga * ga * c.nu1 / la -
            ga * c.nu2;
    p.mu3 = c.mu3 / la;
    p.mu4 = c.mu4 - ga * c.mu3 / la;
    p.mu5 = la * c.mu5 - 0.5 * ga * c.mu4 + 0.25 * ga * ga * c.mu3 / la;
    p.mu6 = la * c.mu6 - ga * c.nu6 - et * c.mu1 + et * ga * c.nu1 / la;
    p.mu7 = c.mu7 - 2.0 * et * c.mu3 / la;
    p.mu8 = la * c.mu8 - et * c.mu4 - 0.5 * ga * c.mu7 + ga * et * c.mu3 / la;
    p.mu9 = la * c.mu9 - et * c.mu7 + et * et * c.mu3 / la;
    p.mu10 = c.mu10 - 2.0 * et * c.nu1 / la;
    p.mu11 = la * c.mu11 - 2.0 * et * c.nu2 - 0.5 * ga * c.mu10 +
             ga * et * c.nu1 / la;
    p.mu12 = la * c.mu12 - 2.0 * et * c.nu6 - et * c.mu10 +
             2.0 * et * et * c.nu1 / la;
    return p;
}

CoefficientVector time_reverse(const CoefficientVector& c) {
    auto a = c.as_array();
    for (double& v : a) v = -v;
    return CoefficientVector::from_array(a);
}

InvariantVector invariants(const CoefficientVector& c) {
    require_nu1(c);
    InvariantVector t;
    t.tau1 = c.nu2 - 0.5 * c.mu1;
    t.tau2 = c.nu1 * c.mu2 - c.mu1 * c.nu2;
    t.tau3 = c.mu3 / c.nu1;
    t.tau4 = c.mu4 - c.mu1 * c.mu3 / c.nu1;
    t.tau5 = c.nu1 * c.mu5 - c.nu2 * c.mu4 + c.nu2 * c.nu2 * (c.mu3 / c.nu1);
    t.tau5hat = c.mu5 * c.mu3 - 0.25 * c.mu4 * c.mu4;
    t.tau6 = c.mu6 * c.nu1 - c.mu1 * c.nu6;
    t.tau7 = c.mu7 - 2.0 * c.nu6 * c.mu3 / c.nu1;
    t.tau8 = c.mu8 * c.nu1 - c.mu4 * c.nu6 + c.mu6 * c.mu3 -
             0.5 * c.mu7 * c.mu1;
    t.tau9 = c.mu9 * c.mu3 - 0.25 * c.mu7 * c.mu7;
    t.tau10 = c.mu10 - 2.0 * c.nu6;
    t.tau11 = c.mu11 * c.nu1 - c.mu10 * c.nu2;
    t.tau12 = c.mu12 * c.nu1 - c.nu6 * c.nu6 - 0.25 * c.mu10 * c.mu10;
    return t;
}

CoefficientVector schrodinger_coefficients(double hbar, double m) {
    if (hbar <= 0.0 || m <= 0.0)
        throw PreconditionError("hbar and m must be positive");
    CoefficientVector c;
    c.nu1 = -0.5 * hbar / m;
    c.mu2 = -0.25 * hbar / m;
    c.mu3 = 0.5 * hbar / m;
    c.mu5 = 0.125 * hbar / m;
    return c;
}

namespace {

// Algebraic degree of each invariant in the coefficients; classification
// thresholds scale as tol * max(1, |c|_inf)^degree so the verdicts are
// invariant under rescaling tests at the same relative precision.
// Order matches InvariantVector::as_array().
constexpr std::array<int, 13> kInvariantDegree = {1, 2, 0, 1, 2, 2, 1,
                                                  2, 2, 1, 2, 2, 2};

} // namespace

ClassificationReport classify(const CoefficientVector& c, double tol) {
    require_nu1(c);
    if (tol <= 0.0) throw PreconditionError("classification tol must be > 0");

    const InvariantVector t = invariants(c);
    const double scale = std::max(1.0, c.max_abs());
    const double th0 = tol;                 // dimensionless (tau3)
    const double th1 = tol * scale;         // degree 1
    const double th2 = tol * scale * scale; // degree 2

    ClassificationReport rep;
    rep.tolerance_used = tol;

    // Doebner-Goldin orbit: tau6..tau12 all vanish.
    {
        double r = 0.0;
        r = std::max(r, std::fabs(t.tau6) / th2);
        r = std::max(r, std::fabs(t.tau7) / th1);
        r = std::max(r, std::fabs(t.tau8) / th2);
        r = std::max(r, std::fabs(t.tau9) / th2);
        r = std::max(r, std::fabs(t.tau10) / th1);
        r = std::max(r, std::fabs(t.tau11) / th2);
        r = std::max(r, std::fabs(t.tau12) / th2);
        rep.dg_residual = r;
        rep.dg_equivalent = r <= 1.0;
    }

    // Schroedinger orbit: the DG pattern plus tau3 = -1, tau1 = tau4 = 0,
    // tau2 > 0 and tau5hat = tau2 / 2 (both fixed by some hbar/m > 0).
    {
        double r = rep.dg_residual;
        r = std::max(r, std::fabs(t.tau3 + 1.0) / th0);
        r = std::max(r, std::fabs(t.tau1) / th1);
        r = std::max(r, std::fabs(t.tau4) / th1);
        r = std::max(r, std::fabs(t.tau5hat - 0.5 * t.tau2) / th2);
        rep.linear_residual = r;
        rep.linear_equivalent = r <= 1.0 && t.tau2 > th2;
        if (rep.linear_equivalent) rep.hbar_over_m = std::sqrt(8.0 * t.tau2);
    }

    // Galilean invariance: tau3 = -1, tau4 = 0, tau7 + tau10 = 0.
    {
        double r = 0.0;
        r = std::max(r, std::fabs(t.tau3 + 1.0) / th0);
        r = std::max(r, std::fabs(t.tau4) / th1);
        r = std::max(r, std::fabs(t.tau7 + t.tau10) / th1);
        rep.galilean_residual = r;
        rep.galilean = r <= 1.0;
    }

    // Time reversal: tau1 = tau4 = tau7 = tau10 = 0.
    {
        double r = 0.0;
        r = std::max(r, std::fabs(t.tau1) / th1);
        r = std::max(r, std::fabs(t.tau4) / th1);
        r = std::max(r, std::fabs(t.tau7) / th1);
        r = std::max(r, std::fabs(t.tau10) / th1);
        rep.time_reversal_residual = r;
        rep.time_reversal = r <= 1.0;
    }
    return rep;
}

std::optional<GaugeParams> linearizing_gauge(const CoefficientVector& c,
                                             double hbar, double m,
                                             double tol) {
    require_nu1(c);
    if (hbar <= 0.0 || m <= 0.0)
        throw PreconditionError("hbar and m must be positive");
    if (tol <= 0.0) throw PreconditionError("tol must be > 0");

    const CoefficientVector target = schrodinger_coefficients(hbar, m);

    // The nu-sector laws force the candidate:
    //   nu1' = nu1/lambda = -hbar/2m,
    //   nu2' = 0  =>  gamma = 2 nu2 lambda / nu1,
    //   nu6' = 0  =>  eta   = nu6 lambda / nu1   (corrected law).
    GaugeParams g;
    g.lambda = c.nu1 / target.nu1;
    g.gamma = 2.0 * c.nu2 * g.lambda / c.nu1;
    g.eta = c.nu6 * g.lambda / c.nu1;

    const CoefficientVector got = transform(c, g);
    const auto ga = got.as_array();
    const auto ta = target.as_array();
    const double scale = std::max(1.0, std::max(c.max_abs(), target.max_abs()));
    for (std::size_t i = 0; i < ga.size(); ++i) {
        if (std::fabs(ga[i] - ta[i]) > tol * scale) return std::nullopt;
    }
    return g;
}

} // namespace nlg
