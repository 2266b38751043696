/* C interface to the driven-qubit / dissipative-cavity simulator.
 *
 * All functions return a qdc_status; on failure a human-readable message is
 * available from qdc_last_error() on the calling thread. Handles are opaque
 * and owned by the caller (destroy functions accept NULL). Times are in
 * units of 1/gamma and rates in units of gamma.
 */
#ifndef QDC_QDC_H_
#define QDC_QDC_H_

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(QDC_BUILDING_LIBRARY)
#define QDC_API __attribute__((visibility("default")))
#else
#define QDC_API
#endif

typedef enum qdc_status {
  QDC_OK = 0,
  QDC_ERR_VALIDATION = 1,
  QDC_ERR_INTEGRATION = 2,
  QDC_ERR_POLE = 3,
  QDC_ERR_OMEGA_D_ZERO = 4,
  QDC_ERR_UNRESOLVED_BRACKET = 5,
  QDC_ERR_USAGE = 6,
  QDC_ERR_IO = 7,
  QDC_ERR_NULL_ARGUMENT = 8,
  QDC_ERR_INTERNAL = 9
} qdc_status;

typedef struct qdc_params_t qdc_params_t;
typedef struct qdc_intervals_t qdc_intervals_t;
typedef struct qdc_sweep_t qdc_sweep_t;

typedef struct qdc_system_params {
  double gamma;
  double lambda;
  double omega;     /* Rabi frequency of the classical drive */
  double delta;     /* qubit / drive detuning */
  double delta_cav; /* qubit / cavity-center detuning */
  double theta;     /* initial state cos(theta)|A> + sin(theta)|B> */
} qdc_system_params;

typedef struct qdc_derived {
  double eta;
  double omega_d;
  double m_re, m_im;
  double f_re, f_im;
  double tau_r;
  double tau_q;
  int warn_rwa;
  int warn_strong_coupling;
  int warn_omega_d_zero;
} qdc_derived;

/* Density matrix in the dressed basis {|A>, |B>}. */
typedef struct qdc_state {
  double rho_aa;
  double rho_bb;
  double rho_ab_re;
  double rho_ab_im;
} qdc_state;

typedef struct qdc_lgi_values {
  double tau;
  double c3;
  double c4;
  int violated3;
  int violated4;
} qdc_lgi_values;

typedef struct qdc_eigen {
  double eps_plus;
  double eps_minus;
  double cos_theta;
  double sin_theta;
  double phase;
  int degenerate;
} qdc_eigen;

typedef struct qdc_blp {
  double n_measure;
  double grid_n_measure;
  double best_alpha;
  double t_max;
  double truncation_bound;
  size_t interval_count;
  int truncated;
} qdc_blp;

typedef struct qdc_summary {
  size_t rows;
  size_t error_rows;
  double min;
  double max;
  double argmax;
} qdc_summary;

typedef void (*qdc_check_callback)(const char* name, int passed, double measured,
                                   double threshold, void* user);

QDC_API const char* qdc_version(void);
QDC_API const char* qdc_last_error(void);
QDC_API const char* qdc_status_string(qdc_status status);

/* Parameters */
QDC_API void qdc_system_params_default(qdc_system_params* out);
QDC_API qdc_status qdc_params_create(const qdc_system_params* params, qdc_params_t** out);
QDC_API void qdc_params_destroy(qdc_params_t* params);
QDC_API qdc_status qdc_params_get(const qdc_params_t* params, qdc_system_params* out);
QDC_API qdc_status qdc_params_derived(const qdc_params_t* params, qdc_derived* out);
QDC_API qdc_status qdc_spectral_density(double strength, double width, double center_offset,
                                        double omega_offset, double* out);
QDC_API qdc_status qdc_kernel(const qdc_params_t* params, double dt, double* re, double* im);

/* Amplitude */
QDC_API qdc_status qdc_amplitude(const qdc_params_t* params, double t, double* re, double* im);
/* ODE oracle sampled at n ascending times. */
QDC_API qdc_status qdc_amplitude_ode(const qdc_params_t* params, double tol, size_t n,
                                     const double* times, double* re, double* im);
QDC_API qdc_status qdc_decay_rate(const qdc_params_t* params, double t, double* out);

/* Qubit state */
QDC_API qdc_status qdc_state_evolve(const qdc_params_t* params, double theta, double t,
                                    qdc_state* out);
QDC_API qdc_status qdc_state_apply_channel(const qdc_params_t* params, const qdc_state* initial,
                                           double t, qdc_state* out);
QDC_API qdc_status qdc_coherence_l1(const qdc_state* state, double* out);
QDC_API qdc_status qdc_trace_distance(const qdc_state* s1, const qdc_state* s2, double* out);

/* Temporal quantumness */
QDC_API qdc_status qdc_correlation(const qdc_params_t* params, double theta, double t_earlier,
                                   double t_later, double* out);
QDC_API qdc_status qdc_lgi(const qdc_params_t* params, double theta, double tau, qdc_lgi_values* out);
/* Row-major 2x2 propagator in the {|+>, |->} basis. */
QDC_API qdc_status qdc_propagator(const qdc_params_t* params, double t, double out[4]);
QDC_API qdc_status qdc_witness(const qdc_params_t* params, double theta, double tau,
                               double* w_q);
QDC_API qdc_status qdc_coherence_monotone(const qdc_params_t* params, size_t n,
                                          const double* taus, double* out);

/* Geometric phase */
QDC_API qdc_status qdc_eigensystem(const qdc_params_t* params, double theta, double t,
                                   qdc_eigen* out);
QDC_API qdc_status qdc_geometric_phase(const qdc_params_t* params, double theta,
                                       double quad_tol, double* phase);

/* Non-Markovianity; alpha is the polar angle of an antipodal pure pair. */
QDC_API qdc_status qdc_info_flux(const qdc_params_t* params, double alpha, double t,
                                 double* out);
QDC_API qdc_status qdc_backflow_intervals(const qdc_params_t* params, double alpha,
                                          double t_max, qdc_intervals_t** out);
QDC_API size_t qdc_intervals_count(const qdc_intervals_t* intervals);
QDC_API qdc_status qdc_intervals_get(const qdc_intervals_t* intervals, size_t index,
                                     double* start, double* end, double* d_start,
                                     double* d_end);
QDC_API void qdc_intervals_destroy(qdc_intervals_t* intervals);
QDC_API qdc_status qdc_blp_measure(const qdc_params_t* params, double t_max, size_t alpha_grid,
                                   qdc_blp* out);

/* Sweeps. Keys mirror the CLI flags (quantity, axis, min, max, points,
 * spacing, out, gamma, lambda, omega, delta, delta-cav, theta, tmax, tol,
 * alpha-grid, curve). */
QDC_API qdc_status qdc_sweep_create(qdc_sweep_t** out);
QDC_API void qdc_sweep_destroy(qdc_sweep_t* sweep);
QDC_API qdc_status qdc_sweep_set(qdc_sweep_t* sweep, const char* key, const char* value);
QDC_API qdc_status qdc_sweep_parse(qdc_sweep_t* sweep, const char* text);
/* Fixed physical parameters of the spec. */
QDC_API qdc_status qdc_sweep_get_params(const qdc_sweep_t* sweep, qdc_system_params* out);
/* Copies the spec as key=value text; *needed receives the size including NUL. */
QDC_API qdc_status qdc_sweep_describe(const qdc_sweep_t* sweep, char* buf, size_t cap,
                                      size_t* needed);
/* Runs the sweep; writes the CSV to the spec's output path when set. */
QDC_API qdc_status qdc_sweep_run(qdc_sweep_t* sweep, unsigned threads, qdc_summary* summary);
/* CSV text of the last run. */
QDC_API qdc_status qdc_sweep_csv(const qdc_sweep_t* sweep, char* buf, size_t cap,
                                 size_t* needed);
QDC_API const char* qdc_sweep_observable(const qdc_sweep_t* sweep);

QDC_API size_t qdc_figure_count(void);
QDC_API const char* qdc_figure_name(size_t index);
QDC_API qdc_status qdc_figure_run(const char* name, const char* out_dir, unsigned threads,
                                  qdc_summary* summary);

/* Runs the oracle-equivalence suite, reporting each line to the callback. */
QDC_API qdc_status qdc_check_run(qdc_check_callback callback, void* user, int* all_passed);

#ifdef __cplusplus
}
#endif

#endif /* QDC_QDC_H_ */
