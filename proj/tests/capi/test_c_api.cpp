// Exercises the shared library through the C header only.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "doctest.h"
#include "qdc/qdc.h"

namespace {

struct Params {
  qdc_params_t* handle = nullptr;
  explicit Params(qdc_system_params p) { REQUIRE(qdc_params_create(&p, &handle) == QDC_OK); }
  ~Params() { qdc_params_destroy(handle); }
};

qdc_system_params defaults() {
  qdc_system_params p;
  qdc_system_params_default(&p);
  return p;
}

}  // namespace

TEST_CASE("version and status strings") {
  CHECK(std::string(qdc_version()) == "1.0.0");
  CHECK(std::string(qdc_status_string(QDC_OK)) == "ok");
  CHECK(std::string(qdc_status_string(QDC_ERR_POLE)) == "pole");
  CHECK(std::string(qdc_status_string(QDC_ERR_OMEGA_D_ZERO)) == "omega_d_zero");
}

TEST_CASE("parameter handles") {
  qdc_system_params p = defaults();
  CHECK(p.gamma == 1.0);
  CHECK(p.lambda == 0.01);
  p.omega = 0.5;
  Params h(p);
  qdc_system_params back;
  CHECK(qdc_params_get(h.handle, &back) == QDC_OK);
  CHECK(back.omega == 0.5);
  qdc_derived d;
  CHECK(qdc_params_derived(h.handle, &d) == QDC_OK);
  CHECK(d.omega_d == 1.0);
  CHECK(d.eta == doctest::Approx(M_PI / 2));

  p.lambda = -1.0;
  qdc_params_t* bad = reinterpret_cast<qdc_params_t*>(0x1);
  CHECK(qdc_params_create(&p, &bad) == QDC_ERR_VALIDATION);
  CHECK(bad == nullptr);
  CHECK(std::strlen(qdc_last_error()) > 0);
  CHECK(qdc_params_create(nullptr, &bad) == QDC_ERR_NULL_ARGUMENT);
  qdc_params_destroy(nullptr);
}

TEST_CASE("amplitude, ODE oracle and decay rate") {
  qdc_system_params p = defaults();
  p.lambda = 0.1;
  p.omega = 0.5;
  Params h(p);
  double re = 0, im = 0;
  CHECK(qdc_amplitude(h.handle, 0.0, &re, &im) == QDC_OK);
  CHECK(re == 1.0);
  CHECK(im == 0.0);

  const std::vector<double> times{0.5, 1.0, 5.0, 20.0};
  std::vector<double> ore(4), oim(4);
  CHECK(qdc_amplitude_ode(h.handle, 1e-12, times.size(), times.data(), ore.data(), oim.data()) ==
        QDC_OK);
  for (std::size_t i = 0; i < times.size(); ++i) {
    CHECK(qdc_amplitude(h.handle, times[i], &re, &im) == QDC_OK);
    CHECK(std::abs(re - ore[i]) < 1e-8);
    CHECK(std::abs(im - oim[i]) < 1e-8);
  }
  double g = 1;
  CHECK(qdc_decay_rate(h.handle, 0.0, &g) == QDC_OK);
  CHECK(g == 0.0);
  CHECK(qdc_amplitude(h.handle, -1.0, &re, &im) == QDC_ERR_VALIDATION);
}

TEST_CASE("states and distances") {
  Params h(defaults());
  qdc_state s;
  CHECK(qdc_state_evolve(h.handle, M_PI / 4, 0.0, &s) == QDC_OK);
  CHECK(s.rho_aa == doctest::Approx(0.5));
  double c = 0;
  CHECK(qdc_coherence_l1(&s, &c) == QDC_OK);
  CHECK(c == doctest::Approx(1.0));
  qdc_state out;
  CHECK(qdc_state_apply_channel(h.handle, &s, 3.0, &out) == QDC_OK);
  double dist = 0;
  CHECK(qdc_trace_distance(&s, &out, &dist) == QDC_OK);
  CHECK(dist > 0.0);
  qdc_state bad{0.9, 0.9, 0.0, 0.0};
  CHECK(qdc_coherence_l1(&bad, &c) == QDC_ERR_VALIDATION);
}

TEST_CASE("temporal quantities") {
  qdc_system_params p = defaults();
  p.omega = 2.0;
  Params h(p);
  qdc_lgi_values l;
  CHECK(qdc_lgi(h.handle, 0.0, 0.0, &l) == QDC_OK);
  CHECK(l.c3 == 1.0);
  CHECK(l.c4 == 2.0);
  double lam[4];
  CHECK(qdc_propagator(h.handle, 1.0, lam) == QDC_OK);
  CHECK(lam[0] + lam[2] == doctest::Approx(1.0));
  double w = -1;
  CHECK(qdc_witness(h.handle, 0.0, 2.0, &w) == QDC_OK);
  CHECK(w == 0.0);
  const std::vector<double> taus{0.0, 1.0, 2.0, 3.0};
  std::vector<double> env(4);
  CHECK(qdc_coherence_monotone(h.handle, 4, taus.data(), env.data()) == QDC_OK);
  CHECK(env[0] == 0.5);
  CHECK(qdc_coherence_monotone(h.handle, 2, taus.data(), env.data()) == QDC_ERR_VALIDATION);
  double corr = 0;
  CHECK(qdc_correlation(h.handle, 0.0, 0.0, 0.0, &corr) == QDC_OK);
  CHECK(corr == 1.0);
}

TEST_CASE("geometric phase and its error code") {
  qdc_system_params p = defaults();
  p.gamma = 1e-12;
  p.omega = 0.5;
  Params h(p);
  double phase = 0;
  CHECK(qdc_geometric_phase(h.handle, M_PI / 6, 1e-9, &phase) == QDC_OK);
  CHECK(phase == doctest::Approx(1.5 * M_PI).epsilon(1e-6));
  qdc_eigen e;
  CHECK(qdc_eigensystem(h.handle, M_PI / 6, 1.0, &e) == QDC_OK);
  CHECK(e.eps_plus + e.eps_minus == doctest::Approx(1.0));

  Params idle(defaults());
  CHECK(qdc_geometric_phase(idle.handle, M_PI / 6, 1e-9, &phase) == QDC_ERR_OMEGA_D_ZERO);
}

TEST_CASE("backflow intervals and BLP measure") {
  Params h(defaults());
  qdc_intervals_t* iv = nullptr;
  CHECK(qdc_backflow_intervals(h.handle, M_PI / 2, 100.0, &iv) == QDC_OK);
  const size_t n = qdc_intervals_count(iv);
  CHECK(n > 0);
  double s, e, ds, de;
  CHECK(qdc_intervals_get(iv, 0, &s, &e, &ds, &de) == QDC_OK);
  CHECK(e > s);
  CHECK(de > ds);
  CHECK(qdc_intervals_get(iv, n, &s, &e, &ds, &de) == QDC_ERR_USAGE);
  qdc_intervals_destroy(iv);
  CHECK(qdc_intervals_count(nullptr) == 0);

  qdc_blp b;
  CHECK(qdc_blp_measure(h.handle, 100.0, 91, &b) == QDC_OK);
  CHECK(b.n_measure > 0.0);
  CHECK(b.truncated == 1);
  CHECK(qdc_blp_measure(h.handle, 10.0, 91, &b) == QDC_ERR_VALIDATION);
  double flux = 0;
  CHECK(qdc_info_flux(h.handle, M_PI / 2, 0.0, &flux) == QDC_OK);
  CHECK(flux == 0.0);
}

TEST_CASE("sweeps through the C API") {
  qdc_sweep_t* sw = nullptr;
  REQUIRE(qdc_sweep_create(&sw) == QDC_OK);
  CHECK(qdc_sweep_parse(sw, "quantity=coherence max=5 points=6\ntheta=0.7853981633974483") ==
        QDC_OK);
  CHECK(qdc_sweep_set(sw, "lambda", "0.1") == QDC_OK);
  CHECK(qdc_sweep_set(sw, "nope", "1") == QDC_ERR_USAGE);
  qdc_system_params p;
  CHECK(qdc_sweep_get_params(sw, &p) == QDC_OK);
  CHECK(p.lambda == 0.1);

  size_t needed = 0;
  CHECK(qdc_sweep_describe(sw, nullptr, 0, &needed) == QDC_OK);
  std::string text(needed, '\0');
  CHECK(qdc_sweep_describe(sw, text.data(), needed, &needed) == QDC_OK);
  CHECK(text.find("quantity=coherence") != std::string::npos);

  qdc_summary sum;
  CHECK(qdc_sweep_run(sw, 1, &sum) == QDC_OK);
  CHECK(sum.rows == 6);
  CHECK(sum.error_rows == 0);
  CHECK(sum.max == doctest::Approx(1.0));
  CHECK(std::string(qdc_sweep_observable(sw)) == "c_l1");
  CHECK(qdc_sweep_csv(sw, nullptr, 0, &needed) == QDC_OK);
  std::string csv(needed, '\0');
  char tiny[4];
  CHECK(qdc_sweep_csv(sw, tiny, sizeof tiny, &needed) == QDC_ERR_USAGE);
  CHECK(qdc_sweep_csv(sw, csv.data(), csv.size(), &needed) == QDC_OK);
  CHECK(csv.rfind("# qdc-csv schema=1", 0) == 0);

  CHECK(qdc_sweep_set(sw, "points", "1") == QDC_OK);
  CHECK(qdc_sweep_run(sw, 1, &sum) == QDC_ERR_USAGE);
  qdc_sweep_destroy(sw);
}

TEST_CASE("figures and checks") {
  CHECK(qdc_figure_count() == 9);
  CHECK(std::string(qdc_figure_name(0)) == "fig2");
  CHECK(qdc_figure_name(9) == nullptr);
  qdc_summary sum;
  CHECK(qdc_figure_run("fig99", "/tmp", 1, &sum) == QDC_ERR_USAGE);

  int all = 0;
  int lines = 0;
  CHECK(qdc_check_run(
            [](const char*, int, double, double, void* user) { ++*static_cast<int*>(user); },
            &lines, &all) == QDC_OK);
  CHECK(all == 1);
  CHECK(lines >= 5);
}
