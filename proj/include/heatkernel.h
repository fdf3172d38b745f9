/* C API of the heat-kernel library: evaluation of the heat kernel of the
 * weighted Maass-Laplacian on the hyperbolic upper half-plane, tail
 * bounds, and the named verification suites. All handles are opaque;
 * every entry point returns an hk_status, HK_OK on success. */

#ifndef HEATKERNEL_H
#define HEATKERNEL_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hk_status {
  HK_OK = 0,
  HK_EDOMAIN = 1,   /* argument outside the mathematical domain */
  HK_EOVERFLOW = 2, /* result certifiably too large for a double */
  HK_EQUAD = 3,     /* quadrature tolerance not reached in budget */
  HK_EINVAL = 4,    /* bad handle, null pointer, unknown suite name */
  HK_EINTERNAL = 5
} hk_status;

/* Human-readable message for the last error on this thread. */
const char* hk_last_error(void);
const char* hk_status_name(hk_status s);

/* --- quadrature configuration ------------------------------------- */

typedef struct hk_config hk_config;

hk_config* hk_config_new(void); /* defaults: rel 1e-8, abs 0, 4000, 1e-10 */
void hk_config_free(hk_config* cfg);
hk_status hk_config_set_rel_tol(hk_config* cfg, double rel_tol);
hk_status hk_config_set_abs_tol(hk_config* cfg, double abs_tol);
hk_status hk_config_set_max_subdivisions(hk_config* cfg, int n);
hk_status hk_config_set_tail_rel_tol(hk_config* cfg, double tol);

/* --- kernel evaluation --------------------------------------------- */

typedef struct hk_eval_report {
  double value;
  double error_estimate;
  double tail_bound;
  double tail_cut;
  long long evaluations;
  int underflow;
} hk_eval_report;

hk_status hk_eval_kernel(const hk_config* cfg, double t, double r, double k,
                         hk_eval_report* out);

/* z = zx + i*zy, w = wx + i*wy in the upper half-plane. */
hk_status hk_eval_kernel_points(const hk_config* cfg, double t, double zx,
                                double zy, double wx, double wy, double k,
                                hk_eval_report* out);

hk_status hk_hyperbolic_distance(double zx, double zy, double wx, double wy,
                                 double* out);

/* --- scalar special functions -------------------------------------- */

hk_status hk_t2k(double x, double k, double* out);
hk_status hk_t2k_prime(double x, double k, double* out);
hk_status hk_tail_bound(double r, double t, double k, double U, double* out);
hk_status hk_gaussian_tail(double a, double b, double U, double* out);
hk_status hk_parabolic_cylinder_d_minus2(double z, double* out);

/* --- verification suites -------------------------------------------- */

typedef struct hk_check_report {
  char suite[32];
  long long cases_run;
  double worst_residual;
  char worst_case[96];
  int passed;
} hk_check_report;

/* suite: "all" or one of tcheb, bracket, kernel, monotone, asymptotics,
 * tails. Writes up to capacity reports; *n_written gets the count.
 * Returns HK_EINVAL for an unknown suite name. A failing check is not an
 * error: inspect report.passed. */
hk_status hk_run_checks(const hk_config* cfg, const char* suite,
                        hk_check_report* out, int capacity, int* n_written);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* HEATKERNEL_H */
