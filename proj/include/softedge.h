/* softedge - exact finite-n level densities of the Gaussian/Laguerre beta
 * ensembles and their soft-edge Airy expansions.
 *
 * C API over the C++ core: opaque handles, status codes, caller-owned strings.
 * All functions are thread safe; handles are immutable after creation.
 */
#ifndef SOFTEDGE_H
#define SOFTEDGE_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum softedge_status {
    SOFTEDGE_OK = 0,
    SOFTEDGE_ERR_DOMAIN = 1,            /* argument outside the mathematical domain */
    SOFTEDGE_ERR_INVALID = 2,           /* malformed parameters (beta, p range, null output) */
    SOFTEDGE_ERR_UNSUPPORTED_ORDER = 3, /* expansion order beyond the built-in tables */
    SOFTEDGE_ERR_CAPABILITY = 4,        /* parameters beyond the supported accuracy range */
    SOFTEDGE_ERR_NO_CONVERGENCE = 5,    /* quadrature failed its tolerance */
    SOFTEDGE_ERR_INCONSISTENT = 6,      /* exact polynomial system has no solution */
    SOFTEDGE_ERR_INTERNAL = 7
} softedge_status;

/* Opaque ensemble handle: fixes beta in {1,2,4}, dimension n, and the family. */
typedef struct softedge_ensemble softedge_ensemble;

softedge_status softedge_ensemble_create_gaussian(int beta, int n, softedge_ensemble** out);
softedge_status softedge_ensemble_create_laguerre(int beta, int n, double p,
                                                  softedge_ensemble** out);
void softedge_ensemble_free(softedge_ensemble* e);

/* Exact level density rho_{beta,n}(x); integrates to n. */
softedge_status softedge_density(const softedge_ensemble* e, double x, double* out);

/* Rescaled density at the soft edge: sigma' rho(mu' + sigma' s), doubled for beta=4. */
softedge_status softedge_density_rescaled(const softedge_ensemble* e, double s, double* out);

/* Airy expansion of the rescaled density truncated at order m in {0,1,2}. */
softedge_status softedge_expansion_density(const softedge_ensemble* e, double s, int m,
                                           double* out);

/* Soft-edge scaling parameters at the shifted indices:
 * out = {mu, sigma, h, tau, n_eff, p_eff}; p_eff is NaN for Gaussian. */
softedge_status softedge_scaling(const softedge_ensemble* e, double out[6]);

/* Quadrature of the density over its domain (equals n to ~1e-9). */
softedge_status softedge_mass(const softedge_ensemble* e, double* out);

/* Scalar special functions (total on finite arguments). */
double softedge_airy_ai(double x);
double softedge_airy_ai_prime(double x);
double softedge_airy_int(double x, int nu);

/* Reconstruction of the generating-function polynomials P_{beta,j,k} by exact
 * elimination from the built-in expansion tables. *out receives the canonical
 * text rendering (one polynomial per line, "P1 = ..."), *match is 1 when the
 * result equals the built-in reference polynomials exactly.
 * Free *out with softedge_free_string. */
softedge_status softedge_reconstruct_text(int beta, int j, int* match, char** out);

/* JSON dump of all exact expansion coefficient tables. */
softedge_status softedge_tables_json(char** out);

/* Runs the built-in invariant suite; *out receives a JSON report
 * {command, params, results, failures}; *n_failures the failed-check count. */
softedge_status softedge_validate_json(int* n_failures, char** out);

void softedge_free_string(char* s);

/* Static name of a status code ("ok", "domain", ...). */
const char* softedge_status_name(softedge_status s);

/* Message of the most recent error on this thread (empty string if none). */
const char* softedge_last_error_message(void);

#ifdef __cplusplus
}
#endif

#endif /* SOFTEDGE_H */
