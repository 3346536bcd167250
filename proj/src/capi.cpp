#include "nlgauge.h"

#include <cstring>
#include <sstream>
#include <string>

#include <json.hpp>

#include "nlgauge/coeffs.hpp"
#include "nlgauge/evolution.hpp"
#include "nlgauge/field_ops.hpp"
#include "nlgauge/gauge_map.hpp"
#include "nlgauge/io.hpp"
#include "nlgauge/oracle.hpp"
#include "nlgauge/verify.hpp"

using nlohmann::json;

struct nlg_coeffs {
    nlg::CoefficientVector v;
};

struct nlg_field {
    nlg::WaveField f;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& msg) { g_last_error = msg; }

nlg_status classify_exception() {
    try {
        throw;
    } catch (const nlg::InvalidGaugeError& e) {
        set_error(e.what());
        return NLG_ERR_PRECONDITION;
    } catch (const nlg::PreconditionError& e) {
        set_error(e.what());
        return NLG_ERR_PRECONDITION;
    } catch (const nlg::DensityFloorError& e) {
        set_error(e.what());
        return NLG_ERR_DENSITY_FLOOR;
    } catch (const nlg::WindingError& e) {
        set_error(e.what());
        return NLG_ERR_WINDING;
    } catch (const nlg::BoostVelocityError& e) {
        set_error(e.what());
        return NLG_ERR_PRECONDITION;
    } catch (const nlg::StabilityGuardError& e) {
        set_error(e.what());
        return NLG_ERR_STABILITY;
    } catch (const nlg::InstabilityError& e) {
        set_error(e.what());
        return NLG_ERR_STABILITY;
    } catch (const nlg::IoError& e) {
        set_error(e.what());
        return NLG_ERR_IO;
    } catch (const std::exception& e) {
        set_error(e.what());
        return NLG_ERR_INTERNAL;
    } catch (...) {
        set_error("unknown error");
        return NLG_ERR_INTERNAL;
    }
}

template <class F>
nlg_status guarded(F&& fn) {
    try {
        return fn();
    } catch (...) {
        return classify_exception();
    }
}

nlg_status bad_argument(const char* what) {
    set_error(std::string("invalid argument: ") + what);
    return NLG_ERR_INVALID_ARGUMENT;
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

nlg::GaugeParams to_cpp(nlg_gauge g) { return {g.gamma, g.lambda, g.eta}; }
nlg_gauge to_c(const nlg::GaugeParams& g) { return {g.gamma, g.lambda, g.eta}; }

int coeff_index(const char* name) {
    const auto& names = nlg::CoefficientVector::field_names();
    for (std::size_t i = 0; i < names.size(); ++i)
        if (std::strcmp(name, names[i]) == 0) return static_cast<int>(i);
    return -1;
}

json invariant_report_json(const nlg::InvariantSamplingReport& rep) {
    json j;
    j["suite"] = "invariants";
    j["n"] = rep.n;
    j["seed"] = rep.seed;
    j["law"] = rep.law == nlg::Nu6Law::corrected ? "corrected" : "printed";
    j["tolerance"] = rep.tol;
    j["worst_violation"] = rep.worst_violation;
    json by;
    const auto& names = nlg::InvariantVector::component_names();
    for (int k = 0; k < 13; ++k) by[names[k]] = rep.worst_by_component[k];
    j["worst_by_component"] = by;
    j["violating_components"] = rep.violating_components;
    if (!rep.violating_components.empty()) {
        j["worst_case"] = {{"coefficients", json::parse(nlg::coeffs_to_json(rep.worst_c))},
                           {"gauge", json::parse(nlg::gauge_to_json(rep.worst_g))}};
    }
    j["pass"] = rep.pass;
    return j;
}

} // namespace

extern "C" {

const char* nlg_last_error(void) { return g_last_error.c_str(); }

void nlg_string_free(char* s) { delete[] s; }

nlg_status nlg_coeffs_create(nlg_coeffs** out) {
    if (!out) return bad_argument("out is null");
    *out = new nlg_coeffs{};
    return NLG_OK;
}

nlg_status nlg_coeffs_schrodinger(double hbar, double m, nlg_coeffs** out) {
    if (!out) return bad_argument("out is null");
    return guarded([&] {
        *out = new nlg_coeffs{nlg::schrodinger_coefficients(hbar, m)};
        return NLG_OK;
    });
}

nlg_status nlg_coeffs_from_json(const char* text, nlg_coeffs** out) {
    if (!text || !out) return bad_argument("null pointer");
    return guarded([&] {
        *out = new nlg_coeffs{nlg::coeffs_from_json(text)};
        return NLG_OK;
    });
}

nlg_status nlg_coeffs_load(const char* path, nlg_coeffs** out) {
    if (!path || !out) return bad_argument("null pointer");
    return guarded([&] {
        *out = new nlg_coeffs{nlg::load_coeffs(path)};
        return NLG_OK;
    });
}

nlg_status nlg_coeffs_to_json(const nlg_coeffs* c, char** out) {
    if (!c || !out) return bad_argument("null pointer");
    *out = dup_string(nlg::coeffs_to_json(c->v));
    return NLG_OK;
}

nlg_status nlg_coeffs_set(nlg_coeffs* c, const char* name, double value) {
    if (!c || !name) return bad_argument("null pointer");
    int idx = coeff_index(name);
    if (idx < 0) return bad_argument("unknown coefficient name");
    auto a = c->v.as_array();
    a[idx] = value;
    c->v = nlg::CoefficientVector::from_array(a);
    return NLG_OK;
}

nlg_status nlg_coeffs_get(const nlg_coeffs* c, const char* name,
                          double* value) {
    if (!c || !name || !value) return bad_argument("null pointer");
    int idx = coeff_index(name);
    if (idx < 0) return bad_argument("unknown coefficient name");
    *value = c->v.as_array()[idx];
    return NLG_OK;
}

void nlg_coeffs_free(nlg_coeffs* c) { delete c; }

nlg_gauge nlg_gauge_identity(void) { return {0.0, 1.0, 0.0}; }

nlg_status nlg_gauge_compose(nlg_gauge g2, nlg_gauge g1, nlg_gauge* out) {
    if (!out) return bad_argument("out is null");
    return guarded([&] {
        *out = to_c(nlg::compose(to_cpp(g2), to_cpp(g1)));
        return NLG_OK;
    });
}

nlg_status nlg_gauge_inverse(nlg_gauge g, nlg_gauge* out) {
    if (!out) return bad_argument("out is null");
    return guarded([&] {
        *out = to_c(nlg::inverse(to_cpp(g)));
        return NLG_OK;
    });
}

nlg_status nlg_coeffs_transform(const nlg_coeffs* c, nlg_gauge g,
                                int use_printed_nu6_law, nlg_coeffs** out) {
    if (!c || !out) return bad_argument("null pointer");
    return guarded([&] {
        auto law = use_printed_nu6_law ? nlg::Nu6Law::printed
                                       : nlg::Nu6Law::corrected;
        *out = new nlg_coeffs{nlg::transform(c->v, to_cpp(g), law)};
        return NLG_OK;
    });
}

nlg_status nlg_coeffs_time_reverse(const nlg_coeffs* c, nlg_coeffs** out) {
    if (!c || !out) return bad_argument("null pointer");
    *out = new nlg_coeffs{nlg::time_reverse(c->v)};
    return NLG_OK;
}

nlg_status nlg_invariants(const nlg_coeffs* c, double out13[13]) {
    if (!c || !out13) return bad_argument("null pointer");
    return guarded([&] {
        auto t = nlg::invariants(c->v).as_array();
        for (int i = 0; i < 13; ++i) out13[i] = t[i];
        return NLG_OK;
    });
}

nlg_status nlg_invariants_json(const nlg_coeffs* c, char** out) {
    if (!c || !out) return bad_argument("null pointer");
    return guarded([&] {
        *out = dup_string(nlg::invariants_to_json(nlg::invariants(c->v)));
        return NLG_OK;
    });
}

nlg_status nlg_classify_json(const nlg_coeffs* c, double tol, char** out) {
    if (!c || !out) return bad_argument("null pointer");
    return guarded([&] {
        *out = dup_string(nlg::classification_to_json(nlg::classify(c->v, tol)));
        return NLG_OK;
    });
}

nlg_status nlg_linearizing_gauge(const nlg_coeffs* c, double hbar, double m,
                                 double tol, nlg_gauge* out) {
    if (!c || !out) return bad_argument("null pointer");
    return guarded([&]() -> nlg_status {
        auto g = nlg::linearizing_gauge(c->v, hbar, m, tol);
        if (!g) {
            set_error("equation lies outside the Schrodinger orbit");
            return NLG_ERR_NOT_LINEARIZABLE;
        }
        *out = to_c(*g);
        return NLG_OK;
    });
}

nlg_status nlg_field_create_1d(int n, double dx, const double* re,
                               const double* im, nlg_field** out) {
    if (!re || !out) return bad_argument("null pointer");
    return guarded([&]() -> nlg_status {
        nlg::GridSpec grid = nlg::GridSpec::line(n, dx);
        nlg::WaveField f(grid);
        for (int i = 0; i < n; ++i)
            f.values[i] = nlg::complex_t(re[i], im ? im[i] : 0.0);
        if (!nlg::all_finite(f)) {
            set_error("field samples must be finite");
            return NLG_ERR_PRECONDITION;
        }
        *out = new nlg_field{std::move(f)};
        return NLG_OK;
    });
}

nlg_status nlg_field_plane_wave(int n, double dx, int mode, nlg_field** out) {
    if (!out) return bad_argument("out is null");
    return guarded([&] {
        nlg::GridSpec grid = nlg::GridSpec::line(n, dx);
        nlg::WaveField f(grid);
        const double k = 2.0 * M_PI / grid.length(0) * mode;
        for (int i = 0; i < n; ++i)
            f.values[i] = std::exp(nlg::complex_t(0.0, k * grid.coord(0, i)));
        *out = new nlg_field{std::move(f)};
        return NLG_OK;
    });
}

nlg_status nlg_field_gaussian(int n, double dx, double sigma0,
                              nlg_field** out) {
    if (!out) return bad_argument("out is null");
    if (!(sigma0 > 0.0)) return bad_argument("sigma0 must be positive");
    return guarded([&] {
        nlg::GridSpec grid = nlg::GridSpec::line(n, dx);
        nlg::WaveField f(grid);
        const double xc = 0.5 * grid.length(0);
        for (int i = 0; i < n; ++i) {
            double x = grid.coord(0, i) - xc;
            f.values[i] = std::exp(-x * x / (4.0 * sigma0 * sigma0));
        }
        *out = new nlg_field{std::move(f)};
        return NLG_OK;
    });
}

nlg_status nlg_field_load_csv(const char* path, nlg_field** out) {
    if (!path || !out) return bad_argument("null pointer");
    return guarded([&] {
        *out = new nlg_field{nlg::load_field_csv(path)};
        return NLG_OK;
    });
}

nlg_status nlg_field_save_csv(const nlg_field* f, const char* path) {
    if (!f || !path) return bad_argument("null pointer");
    return guarded([&] {
        nlg::save_field_csv(f->f, path);
        return NLG_OK;
    });
}

int nlg_field_size(const nlg_field* f) {
    return f ? static_cast<int>(f->f.size()) : 0;
}

double nlg_field_dx(const nlg_field* f) { return f ? f->f.grid.dx[0] : 0.0; }

nlg_status nlg_field_samples(const nlg_field* f, double* re, double* im) {
    if (!f || !re || !im) return bad_argument("null pointer");
    for (std::size_t i = 0; i < f->f.size(); ++i) {
        re[i] = f->f.values[i].real();
        im[i] = f->f.values[i].imag();
    }
    return NLG_OK;
}

nlg_status nlg_field_apply_gauge(const nlg_field* f, nlg_gauge_ext g,
                                 double floor, nlg_field** out) {
    if (!f || !out) return bad_argument("null pointer");
    return guarded([&] {
        nlg::ExtendedGaugeParams eg{g.gamma, g.lambda, g.eta1, g.eta2};
        *out = new nlg_field{nlg::apply(f->f, eg, floor)};
        return NLG_OK;
    });
}

nlg_status nlg_field_galilean_boost(const nlg_field* f, double v, double nu1,
                                    nlg_field** out) {
    if (!f || !out) return bad_argument("null pointer");
    return guarded([&] {
        *out = new nlg_field{nlg::galilean_boost(f->f, v, nu1)};
        return NLG_OK;
    });
}

void nlg_field_free(nlg_field* f) { delete f; }

nlg_status nlg_evolve(const nlg_field* psi0, const nlg_coeffs* c,
                      const nlg_evolve_config* cfg, nlg_snapshot_cb cb,
                      void* user) {
    if (!psi0 || !c || !cfg) return bad_argument("null pointer");
    return guarded([&]() -> nlg_status {
        nlg::EvolutionConfig ec;
        ec.dt = cfg->dt;
        ec.t_max = cfg->t_max;
        ec.floor = cfg->floor;
        ec.record_every = cfg->record_every > 0 ? cfg->record_every : 1;
        ec.c_stab = cfg->c_stab > 0.0 ? cfg->c_stab : 0.5;
        nlg::Trajectory traj = nlg::evolve(psi0->f, c->v, ec);
        if (cb) {
            for (const auto& snap : traj.snapshots) {
                nlg_field view{snap.psi};
                std::string line = nlg::diagnostics_json_line(
                    snap.time, snap.diag.total_probability,
                    snap.diag.continuity_residual, snap.diag.max_amplitude);
                cb(user, snap.time, &view, line.c_str());
            }
        }
        if (traj.status == nlg::RunStatus::aborted_floor) {
            set_error("density reached the floor; trajectory truncated");
            return NLG_ERR_DENSITY_FLOOR;
        }
        return NLG_OK;
    });
}

nlg_status nlg_verify_invariants(int n, unsigned long long seed,
                                 int use_printed_nu6_law, double tol,
                                 char** report) {
    if (!report) return bad_argument("report is null");
    return guarded([&]() -> nlg_status {
        auto law = use_printed_nu6_law ? nlg::Nu6Law::printed
                                       : nlg::Nu6Law::corrected;
        auto rep = nlg::invariant_sampling(n, seed, law,
                                           tol > 0.0 ? tol : 1e-9);
        *report = dup_string(invariant_report_json(rep).dump(2));
        if (!rep.pass) {
            set_error("invariant sampling found violations");
            return NLG_ERR_VERIFICATION;
        }
        return NLG_OK;
    });
}

nlg_status nlg_verify_functoriality(int n, unsigned long long seed,
                                    double tol, char** report) {
    if (!report) return bad_argument("report is null");
    return guarded([&]() -> nlg_status {
        auto rep = nlg::functoriality_sampling(n, seed, tol > 0.0 ? tol : 1e-9);
        json j;
        j["suite"] = "functoriality";
        j["n"] = rep.n;
        j["seed"] = rep.seed;
        j["tolerance"] = rep.tol;
        j["worst_violation"] = rep.worst_violation;
        j["pass"] = rep.pass;
        *report = dup_string(j.dump(2));
        if (!rep.pass) {
            set_error("functoriality sampling found violations");
            return NLG_ERR_VERIFICATION;
        }
        return NLG_OK;
    });
}

nlg_status nlg_verify_law(int n, unsigned long long seed, int grid_n,
                          double field_tol, char** report) {
    if (!report) return bad_argument("report is null");
    return guarded([&]() -> nlg_status {
        auto rep = nlg::verify_transformation_law(
            n > 0 ? n : 20, seed, grid_n > 0 ? grid_n : 256,
            field_tol > 0.0 ? field_tol : 1e-5);
        json j;
        j["suite"] = "law";
        j["seed"] = rep.seed;
        j["n_draws"] = rep.n_draws;
        j["grid_n"] = rep.grid_n;
        j["pipeline_band"] = rep.kcut;
        j["field_tolerance"] = rep.field_tol;
        j["corrected_residuals"] = rep.corrected_residuals;
        j["printed_residuals"] = rep.printed_residuals;
        j["corrected_max"] = rep.corrected_max;
        j["printed_min"] = rep.printed_min;
        j["convergence"] = {{"grids",
                             {rep.grid_n / 2, rep.grid_n, 2 * rep.grid_n}},
                            {"corrected", rep.convergence_residuals},
                            {"printed", rep.printed_convergence},
                            {"observed_order", rep.observed_order}};
        j["pass"] = rep.pass;
        *report = dup_string(j.dump(2));
        if (!rep.pass) {
            set_error("transformation-law residuals out of tolerance");
            return NLG_ERR_VERIFICATION;
        }
        return NLG_OK;
    });
}

nlg_status nlg_verify_covariance(unsigned long long seed, char** report) {
    if (!report) return bad_argument("report is null");
    return guarded([&]() -> nlg_status {
        auto v = nlg::verify_covariance_reference(seed);
        json j;
        j["suite"] = "covariance";
        j["seed"] = v.seed;
        j["strictly_local"] = {{"max_density_gap", v.local_gap},
                               {"threshold", v.local_threshold}};
        j["eta_nonzero"] = {{"max_density_gap", v.eta_gap},
                            {"threshold", v.eta_threshold}};
        j["pass"] = v.pass;
        *report = dup_string(j.dump(2));
        if (!v.pass) {
            set_error("gauge covariance gaps out of tolerance");
            return NLG_ERR_VERIFICATION;
        }
        return NLG_OK;
    });
}

nlg_status nlg_verify_separation(unsigned long long seed, char** report) {
    if (!report) return bad_argument("report is null");
    return guarded([&]() -> nlg_status {
        auto v = nlg::verify_separation_reference(seed);
        json j;
        j["suite"] = "separation";
        j["seed"] = v.seed;
        j["product_map_discrepancy"] = v.report.product_map_discrepancy;
        j["r2_additivity_residual"] = v.report.r2_additivity_residual;
        j["r5_additivity_residual"] = v.report.r5_additivity_residual;
        j["threshold"] = v.threshold;
        j["pass"] = v.pass;
        *report = dup_string(j.dump(2));
        if (!v.pass) {
            set_error("separation residuals out of tolerance");
            return NLG_ERR_VERIFICATION;
        }
        return NLG_OK;
    });
}

} // extern "C"
