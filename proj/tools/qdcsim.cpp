// qdcsim: command-line front end over the qdc C API.

#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qdc/qdc.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNumerical = 2;

int exit_code(qdc_status status) {
  switch (status) {
    case QDC_OK: return kExitOk;
    case QDC_ERR_VALIDATION:
    case QDC_ERR_USAGE:
    case QDC_ERR_NULL_ARGUMENT: return kExitUsage;
    default: return kExitNumerical;
  }
}

int report(qdc_status status) {
  std::fprintf(stderr, "qdcsim: %s: %s\n", qdc_status_string(status), qdc_last_error());
  return exit_code(status);
}

// Physical parameter flags shared by every subcommand. Values stay strings
// so they can be handed to the sweep spec verbatim.
struct ParamFlags {
  std::map<std::string, std::string> values;

  void add(CLI::App* app) {
    for (const char* key : {"gamma", "lambda", "omega", "delta", "delta-cav", "theta"}) {
      app->add_option(std::string("--") + key, values[key], std::string(key) == "theta" ? std::string("theta (radians)") : std::string(key) + " (units of gamma)")
          ->check(CLI::Number);
    }
  }
};

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

// Builds a spec from the config file (if any), then the flags on top.
qdc_status build_spec(qdc_sweep_t* sweep, const std::string& config,
                      const std::vector<const std::map<std::string, std::string>*>& flags) {
  if (!config.empty()) {
    const std::optional<std::string> text = read_file(config);
    if (!text) {
      std::fprintf(stderr, "qdcsim: cannot read %s\n", config.c_str());
      return QDC_ERR_USAGE;
    }
    const qdc_status st = qdc_sweep_parse(sweep, text->c_str());
    if (st != QDC_OK) return st;
  }
  for (const auto* kv : flags) {
    for (const auto& [key, value] : *kv) {
      if (value.empty()) continue;
      const qdc_status st = qdc_sweep_set(sweep, key.c_str(), value.c_str());
      if (st != QDC_OK) return st;
    }
  }
  return QDC_OK;
}

void print_summary(const char* observable, const qdc_summary& s) {
  std::fprintf(stderr, "observable=%s rows=%zu error_rows=%zu min=%.17g max=%.17g argmax=%.17g\n",
               observable, s.rows, s.error_rows, s.min, s.max, s.argmax);
}

struct SweepOptions {
  ParamFlags params;
  std::map<std::string, std::string> spec;
  std::string config;
  unsigned threads = 0;
};

int run_sweep(SweepOptions& opts) {
  qdc_sweep_t* sweep = nullptr;
  qdc_status st = qdc_sweep_create(&sweep);
  if (st != QDC_OK) return report(st);
  st = build_spec(sweep, opts.config, {&opts.params.values, &opts.spec});
  qdc_summary summary{};
  if (st == QDC_OK) st = qdc_sweep_run(sweep, opts.threads, &summary);
  if (st != QDC_OK) {
    qdc_sweep_destroy(sweep);
    return report(st);
  }
  size_t len = 0;
  qdc_sweep_describe(sweep, nullptr, 0, &len);
  std::string described(len, '\0');
  qdc_sweep_describe(sweep, described.data(), described.size(), &len);
  if (described.find(" out=") == std::string::npos) {
    size_t needed = 0;
    qdc_sweep_csv(sweep, nullptr, 0, &needed);
    std::string csv(needed, '\0');
    qdc_sweep_csv(sweep, csv.data(), csv.size(), &needed);
    std::fputs(csv.c_str(), stdout);
  }
  print_summary(qdc_sweep_observable(sweep), summary);
  qdc_sweep_destroy(sweep);
  return summary.error_rows == 0 ? kExitOk : kExitNumerical;
}

int run_figure(const std::string& preset, const std::string& out_dir, unsigned threads) {
  qdc_summary summary{};
  const qdc_status st = qdc_figure_run(preset.c_str(), out_dir.c_str(), threads, &summary);
  if (st != QDC_OK) return report(st);
  std::fprintf(stderr, "preset=%s dir=%s rows=%zu error_rows=%zu\n", preset.c_str(),
               out_dir.c_str(), summary.rows, summary.error_rows);
  return summary.error_rows == 0 ? kExitOk : kExitNumerical;
}

void print_check(const char* name, int passed, double measured, double threshold, void*) {
  std::printf("%s %-40s measured=%.3e threshold=%.3e\n", passed ? "PASS" : "FAIL", name,
              measured, threshold);
}

int run_check() {
  int all = 0;
  const qdc_status st = qdc_check_run(print_check, nullptr, &all);
  if (st != QDC_OK) return report(st);
  return all ? kExitOk : kExitNumerical;
}

int run_params(const ParamFlags& flags, const std::string& config) {
  qdc_sweep_t* sweep = nullptr;
  qdc_status st = qdc_sweep_create(&sweep);
  if (st != QDC_OK) return report(st);
  st = build_spec(sweep, config, {&flags.values});
  qdc_system_params p;
  if (st == QDC_OK) st = qdc_sweep_get_params(sweep, &p);
  qdc_sweep_destroy(sweep);
  if (st != QDC_OK) return report(st);

  qdc_params_t* handle = nullptr;
  st = qdc_params_create(&p, &handle);
  if (st != QDC_OK) return report(st);
  qdc_derived d;
  qdc_params_derived(handle, &d);
  qdc_params_destroy(handle);

  std::printf("gamma=%.17g\nlambda=%.17g\nomega=%.17g\ndelta=%.17g\ndelta_cav=%.17g\ntheta=%.17g\n",
              p.gamma, p.lambda, p.omega, p.delta, p.delta_cav, p.theta);
  std::printf("eta=%.17g\nomega_d=%.17g\nm=%.17g%+.17gi\nf=%.17g%+.17gi\n", d.eta, d.omega_d,
              d.m_re, d.m_im, d.f_re, d.f_im);
  std::printf("tau_r=%.17g\ntau_q=%.17g\n", d.tau_r, d.tau_q);
  if (d.warn_rwa) std::fprintf(stderr, "warning: Omega or |Delta| above 10 gamma\n");
  if (d.warn_strong_coupling) std::fprintf(stderr, "warning: lambda >= gamma (weak coupling)\n");
  if (d.warn_omega_d_zero) std::fprintf(stderr, "warning: omega_d = 0\n");
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Driven qubit in a dissipative cavity: sweeps and figure data"};
  app.set_version_flag("--version", qdc_version());
  app.require_subcommand(1);

  SweepOptions sweep_opts;
  CLI::App* sweep = app.add_subcommand("sweep", "Evaluate one observable along an axis");
  sweep->add_option("--config", sweep_opts.config, "key=value file; flags override it")
      ->check(CLI::ExistingFile);
  sweep_opts.params.add(sweep);
  auto& spec = sweep_opts.spec;
  sweep->add_option("--quantity", spec["quantity"],
                    "amplitude|decay_rate|coherence|lgi3|lgi4|witness|gp|blp|trace_distance");
  sweep->add_option("--axis", spec["axis"], "time|tau|lambda_ratio|omega|delta|theta");
  sweep->add_option("--min", spec["min"])->check(CLI::Number);
  sweep->add_option("--max", spec["max"])->check(CLI::Number);
  sweep->add_option("--points", spec["points"])->check(CLI::PositiveNumber);
  sweep->add_option("--spacing", spec["spacing"], "linear|log");
  sweep->add_option("--tmax", spec["tmax"], "BLP time horizon")->check(CLI::Number);
  sweep->add_option("--tol", spec["tol"], "geometric phase quadrature tolerance")
      ->check(CLI::Number);
  sweep->add_option("--alpha-grid", spec["alpha-grid"], "BLP pair grid size")
      ->check(CLI::PositiveNumber);
  sweep->add_option("--curve", spec["curve"], "curve label column");
  sweep->add_option("--out", spec["out"], "CSV path (stdout when omitted)");
  sweep->add_option("--threads", sweep_opts.threads, "worker threads (0 = all cores)");

  std::string preset;
  std::string out_dir = ".";
  unsigned figure_threads = 0;
  CLI::App* figure = app.add_subcommand("figure", "Write the CSVs of a figure preset");
  figure->add_option("--preset", preset, "fig2 ... fig10")->required();
  figure->add_option("--out", out_dir, "output directory");
  figure->add_option("--threads", figure_threads, "worker threads (0 = all cores)");

  CLI::App* check = app.add_subcommand("check", "Run the oracle-equivalence suite");

  ParamFlags param_flags;
  std::string params_config;
  CLI::App* params = app.add_subcommand("params", "Print derived quantities");
  params->add_option("--config", params_config, "key=value file; flags override it")
      ->check(CLI::ExistingFile);
  param_flags.add(params);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*sweep) return run_sweep(sweep_opts);
    if (*figure) return run_figure(preset, out_dir, figure_threads);
    if (*check) return run_check();
    if (*params) return run_params(param_flags, params_config);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "qdcsim: %s\n", e.what());
    return kExitUsage;
  }
  return kExitUsage;
}
