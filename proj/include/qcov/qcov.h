/*
 * qcov - covariant two-particle quantum maps over N-dimensional systems.
 *
 * C API of the shared library. Complex matrices cross the boundary as two
 * row-major double arrays (re, im). Two-particle states are d = N*N
 * dimensional with |ij> flattened as i*N + j (first factor slow).
 * Indices i, j are 1-based, matching the generator conventions.
 */
#ifndef QCOV_H
#define QCOV_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qcov_status {
  QCOV_OK = 0,
  QCOV_ERR_NULLPTR = 1,
  QCOV_ERR_DIMENSION = 2,
  QCOV_ERR_INDEX = 3,
  QCOV_ERR_VALIDATION = 4,
  QCOV_ERR_NOT_A_STATE = 5,
  QCOV_ERR_INTERNAL = 6
} qcov_status;

const char* qcov_status_string(qcov_status s);

/* Opaque handle for a d x d complex matrix (typically a density matrix). */
typedef struct qcov_state qcov_state;

typedef struct qcov_map_params {
  int n;
  double alpha;
  double beta;
  double c;
} qcov_map_params;

typedef struct qcov_canonical_coeffs {
  int n;
  double m11;
  double m12;
  double m23;
  double cross; /* C + beta * m_11 */
} qcov_canonical_coeffs;

typedef struct qcov_positivity {
  int m23_ge_abs_c;
  int m12_ge_abs_cross;
  int m23_plus_c_ge_0;
  int m11_ge_0;
  double margin; /* minimum slack; physical iff margin >= -1e-12 */
} qcov_positivity;

typedef struct qcov_region_point {
  double x; /* beta * m_11 */
  double y; /* C */
  int physical;
  double min_eig;
  double margin;
} qcov_region_point;

typedef struct qcov_boundary_point {
  int found;
  double x;
  double y;
  double margin;
} qcov_boundary_point;

typedef struct qcov_minimizer_result {
  int n;
  int resolution;
  double beta_m11;
  double c;
  double entropy;
  double margin;
} qcov_minimizer_result;

typedef struct qcov_suite_result {
  int pass;
  int trials;
  double max_dev;
  double tolerance;
} qcov_suite_result;

typedef enum qcov_bell_kind {
  QCOV_BELL_PSI_MINUS = 0,
  QCOV_BELL_PSI_PLUS = 1,
  QCOV_BELL_PHI_PLUS = 2,
  QCOV_BELL_PHI_MINUS = 3
} qcov_bell_kind;

/* ---- states ---------------------------------------------------------- */

/* re/im: d*d row-major. im may be NULL for a real matrix. */
qcov_status qcov_state_create(int d, const double* re, const double* im,
                              qcov_state** out);
void qcov_state_destroy(qcov_state* s);
int qcov_state_dim(const qcov_state* s);
qcov_status qcov_state_copy_data(const qcov_state* s, double* re, double* im);

/* ---- generator algebra and Bloch encoding ---------------------------- */

/* A_ij for 1 <= i, j <= n; fills n*n doubles each. */
qcov_status qcov_generator(int i, int j, int n, double* re, double* im);

/* m convention: m_ij = N * rho_ij (canonical pure input |1><1| has
 * m_ij = N delta_i1 delta_j1). */
qcov_status qcov_bloch_decompose(const qcov_state* rho, double* m_re,
                                 double* m_im);

/* physical (optional) receives 0 if the composed matrix has an eigenvalue
 * below -1e-10. Non-physical m is accepted. */
qcov_status qcov_bloch_compose(int n, const double* m_re, const double* m_im,
                               qcov_state** out, int* physical);

qcov_status qcov_canonical_bloch(int n, double* m_re, double* m_im);

qcov_status qcov_purity_residual(int n, const double* m_re, const double* m_im,
                                 double* out);

qcov_status qcov_haar_unitary(int n, uint64_t seed, double* re, double* im);

/* R with vec(m') = R vec(m) for rho -> U rho U+; fills n^2 x n^2. */
qcov_status qcov_bloch_rotation(int n, const double* u_re, const double* u_im,
                                double* r_re, double* r_im);

/* ---- covariant map family -------------------------------------------- */

qcov_status qcov_apply(const qcov_map_params* p, const double* m_re,
                       const double* m_im, qcov_state** out);

qcov_status qcov_canonical_coefficients(const qcov_map_params* p,
                                        qcov_canonical_coeffs* out);

qcov_status qcov_positivity_flags(const qcov_canonical_coeffs* coeffs,
                                  double c, qcov_positivity* out);

/* grid must hold resolution*resolution entries (y outer, x inner);
 * resolution is points per axis. boundary may be NULL. */
qcov_status qcov_region_scan(int n, double alpha, double x_min, double x_max,
                             double y_min, double y_max, int resolution,
                             qcov_region_point* grid,
                             qcov_boundary_point* boundary);

qcov_status qcov_verify_linearity(const qcov_map_params* p,
                                  const double* m1_re, const double* m1_im,
                                  const double* m2_re, const double* m2_im,
                                  double prob, double* deviation);

/* ---- distinguished processes ----------------------------------------- */

/* Fills n*n doubles each (a vector in the two-particle space). */
qcov_status qcov_bell_state(qcov_bell_kind kind, int i, int j, int n,
                            double* re, double* im);

qcov_status qcov_cloning_params(int n, qcov_map_params* out);
qcov_status qcov_entangling_params(int n, qcov_map_params* out);
qcov_status qcov_cloning_output(int n, qcov_state** out);
qcov_status qcov_entangled_output(int n, qcov_state** out);
qcov_status qcov_optimal_entropy(int n, double* out);

/* ---- diagnostics ------------------------------------------------------ */

qcov_status qcov_von_neumann_entropy(const qcov_state* rho, double* out);
qcov_status qcov_partial_trace(const qcov_state* rho, int which,
                               qcov_state** out);
qcov_status qcov_partial_transpose_min_eig(const qcov_state* rho, double* out);
qcov_status qcov_epsilon_separation(const qcov_state* rho, double* out);

/* alpha1/alpha2: n*n each; k: n^4 row-major over (i, j, r, s). Any output
 * pointer may be NULL to skip it. */
qcov_status qcov_two_party_decompose(const qcov_state* rho, double* alpha1_re,
                                     double* alpha1_im, double* alpha2_re,
                                     double* alpha2_im, double* k_re,
                                     double* k_im);

qcov_status qcov_entropy_minimizer(int n, int resolution,
                                   qcov_minimizer_result* out);

/* ---- property suites -------------------------------------------------- */

/* suite: covariance | linearity | marginals | spectrum | permutation |
 *        generators | roundtrip */
qcov_status qcov_run_suite(const char* suite, int n, int trials, uint64_t seed,
                           qcov_suite_result* out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* QCOV_H */
