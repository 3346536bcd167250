// Command-line front end for the nlgauge shared library. Talks to the
// library exclusively through the C API in nlgauge.h.
//
// Exit codes: 0 success, 1 verification failure (includes "not
// linearizable"), 2 input error, 3 numerical abort.

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nlgauge.h"

namespace {

constexpr int kExitVerification = 1;
constexpr int kExitInput = 2;
constexpr int kExitNumerical = 3;

int exit_code_for(nlg_status s) {
    switch (s) {
        case NLG_OK:
            return 0;
        case NLG_ERR_VERIFICATION:
        case NLG_ERR_NOT_LINEARIZABLE:
            return kExitVerification;
        case NLG_ERR_INVALID_ARGUMENT:
        case NLG_ERR_PRECONDITION:
        case NLG_ERR_IO:
            return kExitInput;
        default:
            return kExitNumerical;
    }
}

[[noreturn]] void fail(nlg_status s) {
    std::cerr << "error: " << nlg_last_error() << "\n";
    std::exit(exit_code_for(s));
}

void check(nlg_status s) {
    if (s != NLG_OK) fail(s);
}

struct CoeffsDeleter {
    void operator()(nlg_coeffs* c) const { nlg_coeffs_free(c); }
};
struct FieldDeleter {
    void operator()(nlg_field* f) const { nlg_field_free(f); }
};
using CoeffsPtr = std::unique_ptr<nlg_coeffs, CoeffsDeleter>;
using FieldPtr = std::unique_ptr<nlg_field, FieldDeleter>;

CoeffsPtr load_coeffs(const std::string& path) {
    nlg_coeffs* c = nullptr;
    check(nlg_coeffs_load(path.c_str(), &c));
    return CoeffsPtr(c);
}

std::string take_string(char* s) {
    std::string out = s ? s : "";
    nlg_string_free(s);
    return out;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream os(out_path);
        if (!os) {
            std::cerr << "error: cannot write " << out_path << "\n";
            std::exit(kExitInput);
        }
        os << text << "\n";
    }
}

double default_tol() {
    if (const char* env = std::getenv("NLSE_DEFAULT_TOL")) {
        char* end = nullptr;
        double v = std::strtod(env, &end);
        if (end != env && v > 0.0) return v;
        std::cerr << "error: NLSE_DEFAULT_TOL is not a positive number\n";
        std::exit(kExitInput);
    }
    return 1e-9;
}

struct EvolveWriter {
    std::string out_dir;
    int index = 0;
};

void snapshot_writer(void* user, double /*time*/, const nlg_field* psi,
                     const char* diagnostics_json) {
    auto* w = static_cast<EvolveWriter*>(user);
    std::cout << diagnostics_json << "\n";
    if (!w->out_dir.empty()) {
        char name[64];
        std::snprintf(name, sizeof(name), "snapshot_%06d.csv", w->index);
        std::string path = w->out_dir + "/" + name;
        nlg_status s = nlg_field_save_csv(psi, path.c_str());
        if (s != NLG_OK) fail(s);
    }
    ++w->index;
}

FieldPtr make_initial(const std::string& initial, int n, double dx) {
    nlg_field* f = nullptr;
    if (initial.rfind("plane:", 0) == 0) {
        int mode = std::atoi(initial.c_str() + 6);
        check(nlg_field_plane_wave(n, dx, mode, &f));
    } else if (initial.rfind("gaussian:", 0) == 0) {
        double sigma = std::atof(initial.c_str() + 9);
        check(nlg_field_gaussian(n, dx, sigma, &f));
    } else {
        std::string path = initial.rfind("file:", 0) == 0 ? initial.substr(5)
                                                          : initial;
        check(nlg_field_load_csv(path.c_str(), &f));
    }
    return FieldPtr(f);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"nonlinear gauge transformations for 6th-order NLSE families"};
    app.require_subcommand(1);

    // ---- invariants ----
    auto* cmd_inv = app.add_subcommand("invariants",
                                       "compute the gauge invariants tau1..tau12, tau5hat");
    std::string inv_file, inv_out;
    cmd_inv->add_option("coeff_file", inv_file, "coefficient JSON file")->required();
    cmd_inv->add_option("--out", inv_out, "write the JSON here instead of stdout");

    // ---- classify ----
    auto* cmd_cls = app.add_subcommand("classify",
                                       "classify an equation (linear/DG/Galilean/time-reversal)");
    std::string cls_file, cls_out;
    double cls_tol = 0.0;
    cmd_cls->add_option("coeff_file", cls_file)->required();
    cmd_cls->add_option("--tol", cls_tol, "relative tolerance (default NLSE_DEFAULT_TOL or 1e-9)");
    cmd_cls->add_option("--out", cls_out);

    // ---- transform ----
    auto* cmd_tr = app.add_subcommand("transform",
                                      "apply a gauge element to the coefficients");
    std::string tr_file, tr_out;
    double tr_gamma = 0.0, tr_lambda = 1.0, tr_eta = 0.0;
    bool tr_printed = false;
    cmd_tr->add_option("coeff_file", tr_file)->required();
    cmd_tr->add_option("--gamma", tr_gamma)->required();
    cmd_tr->add_option("--lambda", tr_lambda)->required();
    cmd_tr->add_option("--eta", tr_eta)->required();
    cmd_tr->add_flag("--printed-nu6-law", tr_printed,
                     "use the originally published nu6' law variant (demonstration only)");
    cmd_tr->add_option("--out", tr_out);

    // ---- compose ----
    auto* cmd_cmp = app.add_subcommand("compose", "compose two gauge elements (g2 o g1)");
    std::vector<double> cmp_g1, cmp_g2;
    std::string cmp_out;
    cmd_cmp->add_option("--g1", cmp_g1, "gamma lambda eta")->expected(3)->required();
    cmd_cmp->add_option("--g2", cmp_g2, "gamma lambda eta")->expected(3)->required();
    cmd_cmp->add_option("--out", cmp_out);

    // ---- linearize ----
    auto* cmd_lin = app.add_subcommand("linearize",
                                       "find the gauge mapping the equation to the free Schrodinger equation");
    std::string lin_file, lin_out;
    double lin_hbar = 1.0, lin_m = 1.0, lin_tol = 0.0;
    cmd_lin->add_option("coeff_file", lin_file)->required();
    cmd_lin->add_option("--hbar", lin_hbar);
    cmd_lin->add_option("--m", lin_m);
    cmd_lin->add_option("--tol", lin_tol);
    cmd_lin->add_option("--out", lin_out);

    // ---- evolve ----
    auto* cmd_ev = app.add_subcommand("evolve", "integrate the equation on a periodic grid");
    std::string ev_file, ev_initial, ev_out_dir;
    int ev_n = 256, ev_record = 1;
    double ev_dx = 2.0 * 3.14159265358979323846 / 256.0;
    double ev_dt = 1e-4, ev_tmax = 0.1, ev_floor = -1.0, ev_cstab = 0.5;
    cmd_ev->add_option("coeff_file", ev_file)->required();
    cmd_ev->add_option("--initial", ev_initial,
                       "plane:<mode> | gaussian:<sigma> | file:<path>")->required();
    cmd_ev->add_option("--n", ev_n, "grid points");
    cmd_ev->add_option("--dx", ev_dx, "grid spacing");
    cmd_ev->add_option("--dt", ev_dt, "time step");
    cmd_ev->add_option("--tmax", ev_tmax, "final time");
    cmd_ev->add_option("--record-every", ev_record, "snapshot stride in steps");
    cmd_ev->add_option("--floor", ev_floor, "density floor (absolute; <0 = auto)");
    cmd_ev->add_option("--c-stab", ev_cstab, "stability guard constant");
    cmd_ev->add_option("--out", ev_out_dir, "directory for snapshot CSV files");

    // ---- verify ----
    auto* cmd_vf = app.add_subcommand("verify",
                                      "run a verification suite (exit 0 iff all checks pass)");
    std::string vf_suite, vf_out;
    int vf_n = 0, vf_grid_n = 0;
    unsigned long long vf_seed = 1;
    double vf_tol = 0.0;
    bool vf_printed = false;
    cmd_vf->add_option("suite", vf_suite,
                       "law | covariance | separation | invariants | functoriality")
        ->required();
    cmd_vf->add_option("--n", vf_n, "sample count");
    cmd_vf->add_option("--seed", vf_seed, "random seed");
    cmd_vf->add_option("--grid-n", vf_grid_n, "grid size for the law suite");
    cmd_vf->add_option("--tol", vf_tol, "tolerance override");
    cmd_vf->add_flag("--printed-nu6-law", vf_printed,
                     "run the invariants suite against the published nu6' law variant");
    cmd_vf->add_option("--out", vf_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitInput;
    }

    if (cmd_inv->parsed()) {
        CoeffsPtr c = load_coeffs(inv_file);
        char* text = nullptr;
        check(nlg_invariants_json(c.get(), &text));
        emit(take_string(text), inv_out);
        return 0;
    }

    if (cmd_cls->parsed()) {
        CoeffsPtr c = load_coeffs(cls_file);
        char* text = nullptr;
        check(nlg_classify_json(c.get(), cls_tol > 0.0 ? cls_tol : default_tol(),
                                &text));
        emit(take_string(text), cls_out);
        return 0;
    }

    if (cmd_tr->parsed()) {
        CoeffsPtr c = load_coeffs(tr_file);
        nlg_gauge g{tr_gamma, tr_lambda, tr_eta};
        nlg_coeffs* out = nullptr;
        check(nlg_coeffs_transform(c.get(), g, tr_printed ? 1 : 0, &out));
        CoeffsPtr holder(out);
        char* text = nullptr;
        check(nlg_coeffs_to_json(out, &text));
        emit(take_string(text), tr_out);
        return 0;
    }

    if (cmd_cmp->parsed()) {
        nlg_gauge g1{cmp_g1[0], cmp_g1[1], cmp_g1[2]};
        nlg_gauge g2{cmp_g2[0], cmp_g2[1], cmp_g2[2]};
        nlg_gauge out{};
        check(nlg_gauge_compose(g2, g1, &out));
        char buf[160];
        std::snprintf(buf, sizeof(buf),
                      "{\n  \"gamma\": %.17g,\n  \"lambda\": %.17g,\n  \"eta\": %.17g\n}",
                      out.gamma, out.lambda, out.eta);
        emit(buf, cmp_out);
        return 0;
    }

    if (cmd_lin->parsed()) {
        CoeffsPtr c = load_coeffs(lin_file);
        nlg_gauge g{};
        nlg_status s = nlg_linearizing_gauge(
            c.get(), lin_hbar, lin_m, lin_tol > 0.0 ? lin_tol : default_tol(), &g);
        if (s != NLG_OK) fail(s);
        char buf[160];
        std::snprintf(buf, sizeof(buf),
                      "{\n  \"gamma\": %.17g,\n  \"lambda\": %.17g,\n  \"eta\": %.17g\n}",
                      g.gamma, g.lambda, g.eta);
        emit(buf, lin_out);
        return 0;
    }

    if (cmd_ev->parsed()) {
        CoeffsPtr c = load_coeffs(ev_file);
        FieldPtr psi0 = make_initial(ev_initial, ev_n, ev_dx);
        if (!ev_out_dir.empty())
            std::filesystem::create_directories(ev_out_dir);
        nlg_evolve_config cfg{ev_dt, ev_tmax, ev_floor, ev_record, ev_cstab};
        EvolveWriter writer{ev_out_dir};
        nlg_status s = nlg_evolve(psi0.get(), c.get(), &cfg, snapshot_writer,
                                  &writer);
        if (s != NLG_OK) fail(s);
        return 0;
    }

    if (cmd_vf->parsed()) {
        char* text = nullptr;
        nlg_status s = NLG_ERR_INVALID_ARGUMENT;
        if (vf_suite == "invariants") {
            s = nlg_verify_invariants(vf_n > 0 ? vf_n : 1000, vf_seed,
                                      vf_printed ? 1 : 0, vf_tol, &text);
        } else if (vf_suite == "functoriality") {
            s = nlg_verify_functoriality(vf_n > 0 ? vf_n : 1000, vf_seed,
                                         vf_tol, &text);
        } else if (vf_suite == "law") {
            s = nlg_verify_law(vf_n, vf_seed, vf_grid_n, vf_tol, &text);
        } else if (vf_suite == "covariance") {
            s = nlg_verify_covariance(vf_seed, &text);
        } else if (vf_suite == "separation") {
            s = nlg_verify_separation(vf_seed, &text);
        } else {
            std::cerr << "error: unknown verify suite '" << vf_suite << "'\n";
            return kExitInput;
        }
        if (text) emit(take_string(text), vf_out);
        if (s != NLG_OK) {
            std::cerr << "error: " << nlg_last_error() << "\n";
            return exit_code_for(s);
        }
        return 0;
    }

    return kExitInput;
}
