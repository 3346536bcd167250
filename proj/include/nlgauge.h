/* C API for the nlgauge library: the nonlinear (Backlund-type) gauge
 * group on the 15-coefficient family of 6th-order nonlinear Schrodinger
 * equations, its invariants and classification, periodic-grid field
 * transforms, RK4 evolution, and the numeric verification suites.
 *
 * Conventions: every fallible call returns an nlg_status; NLG_OK is 0.
 * On failure no output argument is written and nlg_last_error() returns a
 * message for the calling thread. Objects created by the create and load
 * calls are released with the matching free function; strings returned
 * through char** are released with nlg_string_free.
 */
#ifndef NLGAUGE_H
#define NLGAUGE_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum nlg_status {
    NLG_OK = 0,
    NLG_ERR_INVALID_ARGUMENT = 1,
    NLG_ERR_PRECONDITION = 2,
    NLG_ERR_DENSITY_FLOOR = 3,
    NLG_ERR_WINDING = 4,
    NLG_ERR_STABILITY = 5,
    NLG_ERR_NOT_LINEARIZABLE = 6,
    NLG_ERR_IO = 7,
    NLG_ERR_VERIFICATION = 8,
    NLG_ERR_INTERNAL = 9
} nlg_status;

/* Message describing the most recent failure on this thread. */
const char* nlg_last_error(void);
void nlg_string_free(char* s);

/* ---- coefficient vectors (opaque) ---------------------------------- */

typedef struct nlg_coeffs nlg_coeffs;

nlg_status nlg_coeffs_create(nlg_coeffs** out); /* all zero */
nlg_status nlg_coeffs_schrodinger(double hbar, double m, nlg_coeffs** out);
nlg_status nlg_coeffs_from_json(const char* text, nlg_coeffs** out);
nlg_status nlg_coeffs_load(const char* path, nlg_coeffs** out);
nlg_status nlg_coeffs_to_json(const nlg_coeffs* c, char** out);
/* name is one of "nu1","nu2","nu6","mu1".."mu12" */
nlg_status nlg_coeffs_set(nlg_coeffs* c, const char* name, double value);
nlg_status nlg_coeffs_get(const nlg_coeffs* c, const char* name, double* value);
void nlg_coeffs_free(nlg_coeffs* c);

/* ---- gauge group ---------------------------------------------------- */

typedef struct nlg_gauge {
    double gamma;
    double lambda;
    double eta;
} nlg_gauge;

/* Extended two-eta phase: phi = gamma/2 ln rho + (lambda-1) S
 * + eta1 R2 + eta2 R5. The one-eta subgroup embeds as (eta, -eta). */
typedef struct nlg_gauge_ext {
    double gamma;
    double lambda;
    double eta1;
    double eta2;
} nlg_gauge_ext;

nlg_gauge nlg_gauge_identity(void);
/* Group law (g2 o g1); fails only when a lambda is zero. */
nlg_status nlg_gauge_compose(nlg_gauge g2, nlg_gauge g1, nlg_gauge* out);
nlg_status nlg_gauge_inverse(nlg_gauge g, nlg_gauge* out);

/* use_printed_nu6_law != 0 selects the originally published variant
 * nu6' = nu6 - eta/(nu1 lambda), which breaks invariance unless
 * nu1^2 = 1; 0 selects the corrected law. */
nlg_status nlg_coeffs_transform(const nlg_coeffs* c, nlg_gauge g,
                                int use_printed_nu6_law, nlg_coeffs** out);
nlg_status nlg_coeffs_time_reverse(const nlg_coeffs* c, nlg_coeffs** out);
/* out13 receives tau1..tau12, tau5hat. */
nlg_status nlg_invariants(const nlg_coeffs* c, double out13[13]);
nlg_status nlg_invariants_json(const nlg_coeffs* c, char** out);
nlg_status nlg_classify_json(const nlg_coeffs* c, double tol, char** out);
/* NLG_ERR_NOT_LINEARIZABLE when c lies off the Schrodinger orbit. */
nlg_status nlg_linearizing_gauge(const nlg_coeffs* c, double hbar, double m,
                                 double tol, nlg_gauge* out);

/* ---- wave fields on periodic grids (opaque) ------------------------- */

typedef struct nlg_field nlg_field;

/* Pass floor < 0 anywhere a density floor is expected to use the default
 * 1e-10 * max(rho). */

nlg_status nlg_field_create_1d(int n, double dx, const double* re,
                               const double* im, nlg_field** out);
nlg_status nlg_field_plane_wave(int n, double dx, int mode, nlg_field** out);
/* exp(-x^2 / (4 sigma0^2)) centered on the torus midpoint. */
nlg_status nlg_field_gaussian(int n, double dx, double sigma0,
                              nlg_field** out);
nlg_status nlg_field_load_csv(const char* path, nlg_field** out);
nlg_status nlg_field_save_csv(const nlg_field* f, const char* path);
int nlg_field_size(const nlg_field* f);
double nlg_field_dx(const nlg_field* f);
nlg_status nlg_field_samples(const nlg_field* f, double* re, double* im);
nlg_status nlg_field_apply_gauge(const nlg_field* f, nlg_gauge_ext g,
                                 double floor, nlg_field** out);
nlg_status nlg_field_galilean_boost(const nlg_field* f, double v, double nu1,
                                    nlg_field** out);
void nlg_field_free(nlg_field* f);

/* ---- time evolution -------------------------------------------------- */

typedef struct nlg_evolve_config {
    double dt;
    double t_max;
    double floor;        /* < 0: default relative floor */
    int record_every;    /* snapshots every k steps; <= 0 means 1 */
    double c_stab;       /* guard constant; <= 0 means 0.5 */
} nlg_evolve_config;

/* Called once per recorded snapshot. diagnostics_json is a single JSON
 * line {"time":..., "norm":..., "continuity_residual":..., "max_amp":...}.
 * The field handle is owned by the library and valid during the call. */
typedef void (*nlg_snapshot_cb)(void* user, double time,
                                const nlg_field* psi,
                                const char* diagnostics_json);

/* Returns NLG_ERR_STABILITY when dt violates the guard or the run blows
 * up, NLG_ERR_DENSITY_FLOOR when the density reaches the floor mid-run
 * (snapshots up to that point are still delivered). */
nlg_status nlg_evolve(const nlg_field* psi0, const nlg_coeffs* c,
                      const nlg_evolve_config* cfg, nlg_snapshot_cb cb,
                      void* user);

/* ---- verification suites -------------------------------------------- */
/* Each writes a JSON report and returns NLG_OK when every check passed,
 * NLG_ERR_VERIFICATION when the suite ran but a check failed. */

nlg_status nlg_verify_invariants(int n, unsigned long long seed,
                                 int use_printed_nu6_law, double tol,
                                 char** report);
nlg_status nlg_verify_functoriality(int n, unsigned long long seed,
                                    double tol, char** report);
/* Chain-rule oracle: n draws at grid size grid_n (0 -> 256) plus a
 * grid-doubling convergence study; corrected law must stay below
 * field_tol (0 -> 1e-5), printed law must stay O(1). */
nlg_status nlg_verify_law(int n, unsigned long long seed, int grid_n,
                          double field_tol, char** report);
/* Gauge covariance of evolution in both regimes (strictly local and
 * eta != 0); scale = 1 runs the reference resolutions. */
nlg_status nlg_verify_covariance(unsigned long long seed, char** report);
/* Product-state separation on the 2D tensor grid. */
nlg_status nlg_verify_separation(unsigned long long seed, char** report);

#ifdef __cplusplus
}
#endif

#endif /* NLGAUGE_H */
