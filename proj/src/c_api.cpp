#include "qdc/qdc.h"

#include <cstring>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>

#include "qdc/amplitude.hpp"
#include "qdc/check.hpp"
#include "qdc/error.hpp"
#include "qdc/geometric_phase.hpp"
#include "qdc/non_markovianity.hpp"
#include "qdc/presets.hpp"
#include "qdc/qubit_state.hpp"
#include "qdc/sweep.hpp"
#include "qdc/temporal.hpp"

struct qdc_params_t {
  qdc::SystemParams params;
  qdc::DerivedParams derived;
};

struct qdc_intervals_t {
  qdc::BackflowIntervals value;
};

struct qdc_sweep_t {
  qdc::SweepSpec spec;
  std::string csv;
  std::string observable;
};

namespace {

thread_local std::string g_last_error;

qdc_status to_status(qdc::ErrorCode code) {
  switch (code) {
    case qdc::ErrorCode::kValidation: return QDC_ERR_VALIDATION;
    case qdc::ErrorCode::kIntegrationFailure: return QDC_ERR_INTEGRATION;
    case qdc::ErrorCode::kPole: return QDC_ERR_POLE;
    case qdc::ErrorCode::kOmegaDZero: return QDC_ERR_OMEGA_D_ZERO;
    case qdc::ErrorCode::kUnresolvedBracket: return QDC_ERR_UNRESOLVED_BRACKET;
    case qdc::ErrorCode::kTruncation: return QDC_ERR_VALIDATION;
    case qdc::ErrorCode::kUsage: return QDC_ERR_USAGE;
    case qdc::ErrorCode::kIo: return QDC_ERR_IO;
  }
  return QDC_ERR_INTERNAL;
}

// Runs `fn`, translating exceptions into status codes.
template <typename Fn>
qdc_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    fn();
    return QDC_OK;
  } catch (const qdc::Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return QDC_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return QDC_ERR_INTERNAL;
  }
}


qdc_status null_status(const char* what) {
  g_last_error = std::string("null argument: ") + what;
  return QDC_ERR_NULL_ARGUMENT;
}

qdc::SystemParams from_c(const qdc_system_params& p) {
  return {p.gamma, p.lambda, p.omega, p.delta, p.delta_cav, p.theta};
}

qdc_state to_c(const qdc::QubitState& s) {
  return {s.rho_aa(), s.rho_bb(), s.rho_ab().real(), s.rho_ab().imag()};
}

qdc::QubitState from_c(const qdc_state& s) {
  Eigen::Matrix2cd rho;
  const qdc::Complex ab(s.rho_ab_re, s.rho_ab_im);
  rho << s.rho_aa, ab, std::conj(ab), s.rho_bb;
  return qdc::QubitState::make(rho);
}

qdc_status copy_text(const std::string& text, char* buf, size_t cap, size_t* needed) {
  if (needed != nullptr) *needed = text.size() + 1;
  if (buf == nullptr || cap == 0) return QDC_OK;
  if (cap < text.size() + 1) {
    g_last_error = "buffer too small";
    return QDC_ERR_USAGE;
  }
  std::memcpy(buf, text.c_str(), text.size() + 1);
  return QDC_OK;
}

#define QDC_NEED(p) \
  if ((p) == nullptr) return null_status(#p)

}  // namespace

extern "C" {

const char* qdc_version(void) { return "1.0.0"; }

const char* qdc_last_error(void) { return g_last_error.c_str(); }

const char* qdc_status_string(qdc_status status) {
  switch (status) {
    case QDC_OK: return "ok";
    case QDC_ERR_VALIDATION: return "validation";
    case QDC_ERR_INTEGRATION: return "integration_failure";
    case QDC_ERR_POLE: return "pole";
    case QDC_ERR_OMEGA_D_ZERO: return "omega_d_zero";
    case QDC_ERR_UNRESOLVED_BRACKET: return "unresolved_bracket";
    case QDC_ERR_USAGE: return "usage";
    case QDC_ERR_IO: return "io";
    case QDC_ERR_NULL_ARGUMENT: return "null_argument";
    case QDC_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

void qdc_system_params_default(qdc_system_params* out) {
  if (out == nullptr) return;
  const qdc::SystemParams p;
  *out = {p.gamma, p.lambda, p.omega_rabi, p.delta_qc, p.delta_cav, p.theta};
}

qdc_status qdc_params_create(const qdc_system_params* params, qdc_params_t** out) {
  QDC_NEED(params);
  QDC_NEED(out);
  *out = nullptr;
  return guarded([&] {
    const qdc::SystemParams p = from_c(*params);
    *out = new qdc_params_t{p, qdc::derive(p)};
  });
}

void qdc_params_destroy(qdc_params_t* params) { delete params; }

qdc_status qdc_params_get(const qdc_params_t* params, qdc_system_params* out) {
  QDC_NEED(params);
  QDC_NEED(out);
  const qdc::SystemParams& p = params->params;
  *out = {p.gamma, p.lambda, p.omega_rabi, p.delta_qc, p.delta_cav, p.theta};
  return QDC_OK;
}

qdc_status qdc_params_derived(const qdc_params_t* params, qdc_derived* out) {
  QDC_NEED(params);
  QDC_NEED(out);
  const qdc::DerivedParams& d = params->derived;
  *out = {d.eta,
          d.omega_d,
          d.m_const.real(),
          d.m_const.imag(),
          d.f_const.real(),
          d.f_const.imag(),
          d.tau_r,
          d.tau_q,
          d.warnings.rwa_regime ? 1 : 0,
          d.warnings.outside_strong_coupling ? 1 : 0,
          d.warnings.omega_d_zero ? 1 : 0};
  return QDC_OK;
}

qdc_status qdc_spectral_density(double strength, double width, double center_offset,
                                double omega_offset, double* out) {
  QDC_NEED(out);
  return guarded([&] {
    *out = qdc::spectral_density({center_offset, width, strength}, omega_offset);
  });
}

qdc_status qdc_kernel(const qdc_params_t* params, double dt, double* re, double* im) {
  QDC_NEED(params);
  return guarded([&] {
    const qdc::Complex k = qdc::kernel(params->derived, dt);
    if (re) *re = k.real();
    if (im) *im = k.imag();
  });
}

qdc_status qdc_amplitude(const qdc_params_t* params, double t, double* re, double* im) {
  QDC_NEED(params);
  return guarded([&] {
    const qdc::Complex a = qdc::amplitude(params->derived, t);
    if (re) *re = a.real();
    if (im) *im = a.imag();
  });
}

qdc_status qdc_amplitude_ode(const qdc_params_t* params, double tol, size_t n,
                             const double* times, double* re, double* im) {
  QDC_NEED(params);
  QDC_NEED(times);
  return guarded([&] {
    if (n == 0) return;
    std::vector<double> ts(times, times + n);
    const qdc::AmplitudeTrajectory traj =
        qdc::amplitude_oracle_ode(params->params, ts.back(), tol, ts);
    // The trajectory gains a leading t = 0 sample when times[0] > 0.
    const std::size_t offset = traj.values.size() - n;
    for (std::size_t i = 0; i < n; ++i) {
      if (re) re[i] = traj.values[i + offset].real();
      if (im) im[i] = traj.values[i + offset].imag();
    }
  });
}

qdc_status qdc_decay_rate(const qdc_params_t* params, double t, double* out) {
  QDC_NEED(params);
  QDC_NEED(out);
  return guarded([&] { *out = qdc::decay_rate(params->derived, t); });
}

qdc_status qdc_state_evolve(const qdc_params_t* params, double theta, double t,
                            qdc_state* out) {
  QDC_NEED(params);
  QDC_NEED(out);
  return guarded([&] { *out = to_c(qdc::evolve_superposition(params->derived, theta, t)); });
}

qdc_status qdc_state_apply_channel(const qdc_params_t* params, const qdc_state* initial,
                                   double t, qdc_state* out) {
  QDC_NEED(params);
  QDC_NEED(initial);
  QDC_NEED(out);
  return guarded([&] { *out = to_c(qdc::apply_channel(params->derived, from_c(*initial), t)); });
}

qdc_status qdc_coherence_l1(const qdc_state* state, double* out) {
  QDC_NEED(state);
  QDC_NEED(out);
  return guarded([&] { *out = qdc::coherence_l1(from_c(*state)); });
}

qdc_status qdc_trace_distance(const qdc_state* s1, const qdc_state* s2, double* out) {
  QDC_NEED(s1);
  QDC_NEED(s2);
  QDC_NEED(out);
  return guarded([&] { *out = qdc::trace_distance(from_c(*s1), from_c(*s2)); });
}

qdc_status qdc_correlation(const qdc_params_t* params, double theta, double t_earlier,
                           double t_later, double* out) {
  QDC_NEED(params);
  QDC_NEED(out);
  return guarded([&] {
    *out = qdc::two_time_correlation(params->derived, theta, t_earlier, t_later);
  });
}

qdc_status qdc_lgi(const qdc_params_t* params, double theta, double tau, qdc_lgi_values* out) {
  QDC_NEED(params);
  QDC_NEED(out);
  return guarded([&] {
    const qdc::LgiResult r = qdc::lgi(params->derived, theta, tau);
    *out = {r.tau, r.c3, r.c4, r.violated3 ? 1 : 0, r.violated4 ? 1 : 0};
  });
}

qdc_status qdc_propagator(const qdc_params_t* params, double t, double out[4]) {
  QDC_NEED(params);
  QDC_NEED(out);
  return guarded([&] {
    const qdc::Propagator l = qdc::propagator(params->derived, t);
    out[0] = l[0][0];
    out[1] = l[0][1];
    out[2] = l[1][0];
    out[3] = l[1][1];
  });
}

qdc_status qdc_witness(const qdc_params_t* params, double theta, double tau, double* w_q) {
  QDC_NEED(params);
  QDC_NEED(w_q);
  return guarded([&] { *w_q = qdc::quantum_witness(params->derived, theta, tau).w_q; });
}

qdc_status qdc_coherence_monotone(const qdc_params_t* params, size_t n, const double* taus,
                                  double* out) {
  QDC_NEED(params);
  QDC_NEED(taus);
  QDC_NEED(out);
  return guarded([&] {
    const std::vector<double> env =
        qdc::coherence_monotone(params->derived, std::span<const double>(taus, n));
    std::copy(env.begin(), env.end(), out);
  });
}

qdc_status qdc_eigensystem(const qdc_params_t* params, double theta, double t, qdc_eigen* out) {
  QDC_NEED(params);
  QDC_NEED(out);
  return guarded([&] {
    const qdc::EigenSystem e = qdc::eigensystem(params->derived, theta, t);
    *out = {e.eps_plus, e.eps_minus, e.cos_theta_big, e.sin_theta_big, e.coherence_phase,
            e.degenerate ? 1 : 0};
  });
}

qdc_status qdc_geometric_phase(const qdc_params_t* params, double theta, double quad_tol,
                               double* phase) {
  QDC_NEED(params);
  QDC_NEED(phase);
  return guarded([&] { *phase = qdc::geometric_phase(params->derived, theta, quad_tol).phase; });
}

qdc_status qdc_info_flux(const qdc_params_t* params, double alpha, double t, double* out) {
  QDC_NEED(params);
  QDC_NEED(out);
  return guarded([&] { *out = qdc::info_flux(params->derived, {alpha, 0.0}, t); });
}

qdc_status qdc_backflow_intervals(const qdc_params_t* params, double alpha, double t_max,
                                  qdc_intervals_t** out) {
  QDC_NEED(params);
  QDC_NEED(out);
  *out = nullptr;
  return guarded([&] {
    *out = new qdc_intervals_t{qdc::backflow_intervals(params->derived, {alpha, 0.0}, t_max)};
  });
}

size_t qdc_intervals_count(const qdc_intervals_t* intervals) {
  return intervals == nullptr ? 0 : intervals->value.intervals.size();
}

qdc_status qdc_intervals_get(const qdc_intervals_t* intervals, size_t index, double* start,
                             double* end, double* d_start, double* d_end) {
  QDC_NEED(intervals);
  return guarded([&] {
    if (index >= intervals->value.intervals.size()) {
      throw qdc::Error(qdc::ErrorCode::kUsage, "interval index out of range");
    }
    const qdc::Interval& iv = intervals->value.intervals[index];
    const qdc::Interval& d = intervals->value.d_values[index];
    if (start) *start = iv.start;
    if (end) *end = iv.end;
    if (d_start) *d_start = d.start;
    if (d_end) *d_end = d.end;
  });
}

void qdc_intervals_destroy(qdc_intervals_t* intervals) { delete intervals; }

qdc_status qdc_blp_measure(const qdc_params_t* params, double t_max, size_t alpha_grid,
                           qdc_blp* out) {
  QDC_NEED(params);
  QDC_NEED(out);
  return guarded([&] {
    const qdc::BlpResult r = qdc::blp_measure(params->params, t_max, alpha_grid);
    *out = {r.n_measure, r.grid_n_measure, r.best_pair.alpha, r.t_max, r.truncation_bound,
            r.interval_count, r.truncated ? 1 : 0};
  });
}

qdc_status qdc_sweep_create(qdc_sweep_t** out) {
  QDC_NEED(out);
  return guarded([&] { *out = new qdc_sweep_t{}; });
}

void qdc_sweep_destroy(qdc_sweep_t* sweep) { delete sweep; }

qdc_status qdc_sweep_set(qdc_sweep_t* sweep, const char* key, const char* value) {
  QDC_NEED(sweep);
  QDC_NEED(key);
  QDC_NEED(value);
  return guarded([&] { qdc::set_spec_value(sweep->spec, key, value); });
}

qdc_status qdc_sweep_parse(qdc_sweep_t* sweep, const char* text) {
  QDC_NEED(sweep);
  QDC_NEED(text);
  return guarded([&] { sweep->spec = qdc::parse_spec(text, sweep->spec); });
}

qdc_status qdc_sweep_get_params(const qdc_sweep_t* sweep, qdc_system_params* out) {
  QDC_NEED(sweep);
  QDC_NEED(out);
  const qdc::SystemParams& p = sweep->spec.fixed;
  *out = {p.gamma, p.lambda, p.omega_rabi, p.delta_qc, p.delta_cav, p.theta};
  return QDC_OK;
}

qdc_status qdc_sweep_describe(const qdc_sweep_t* sweep, char* buf, size_t cap,
                              size_t* needed) {
  QDC_NEED(sweep);
  return copy_text(qdc::format_spec(sweep->spec), buf, cap, needed);
}

qdc_status qdc_sweep_run(qdc_sweep_t* sweep, unsigned threads, qdc_summary* summary) {
  QDC_NEED(sweep);
  return guarded([&] {
    const qdc::SweepResult result = qdc::run_sweep(sweep->spec, threads);
    std::ostringstream csv;
    qdc::write_csv(csv, {result});
    sweep->csv = csv.str();
    sweep->observable = result.summary.observable;
    if (!sweep->spec.output_path.empty()) {
      std::ofstream file(sweep->spec.output_path);
      if (!(file << sweep->csv)) {
        throw qdc::Error(qdc::ErrorCode::kIo, "cannot write " + sweep->spec.output_path);
      }
    }
    if (summary) {
      const qdc::SweepSummary& s = result.summary;
      *summary = {s.rows, s.error_rows, s.min, s.max, s.argmax};
    }
  });
}

qdc_status qdc_sweep_csv(const qdc_sweep_t* sweep, char* buf, size_t cap, size_t* needed) {
  QDC_NEED(sweep);
  return copy_text(sweep->csv, buf, cap, needed);
}

const char* qdc_sweep_observable(const qdc_sweep_t* sweep) {
  return sweep == nullptr ? "" : sweep->observable.c_str();
}

size_t qdc_figure_count(void) { return qdc::figure_names().size(); }

const char* qdc_figure_name(size_t index) {
  static const std::vector<std::string> names = qdc::figure_names();
  return index < names.size() ? names[index].c_str() : nullptr;
}

qdc_status qdc_figure_run(const char* name, const char* out_dir, unsigned threads,
                          qdc_summary* summary) {
  QDC_NEED(name);
  QDC_NEED(out_dir);
  return guarded([&] {
    const qdc::FigureReport report = qdc::run_figure(name, out_dir, threads);
    if (summary) {
      *summary = {};
      bool first = true;
      for (const auto& panel : report.panels) {
        for (const qdc::SweepResult& curve : panel) {
          summary->rows += curve.summary.rows;
          if (curve.summary.rows == curve.summary.error_rows) continue;
          if (first || curve.summary.min < summary->min) summary->min = curve.summary.min;
          if (first || curve.summary.max > summary->max) {
            summary->max = curve.summary.max;
            summary->argmax = curve.summary.argmax;
          }
          first = false;
        }
      }
      summary->error_rows = report.error_rows;
    }
  });
}

qdc_status qdc_check_run(qdc_check_callback callback, void* user, int* all_passed) {
  return guarded([&] {
    bool ok = true;
    for (const qdc::CheckLine& line : qdc::run_checks()) {
      ok = ok && line.passed;
      if (callback) callback(line.name.c_str(), line.passed ? 1 : 0, line.measured,
                             line.threshold, user);
    }
    if (all_passed) *all_passed = ok ? 1 : 0;
  });
}

}  // extern "C"
