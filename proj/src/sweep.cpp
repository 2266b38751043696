#include "qdc/sweep.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <thread>

#include "qdc/amplitude.hpp"
#include "qdc/error.hpp"
#include "qdc/geometric_phase.hpp"
#include "qdc/non_markovianity.hpp"
#include "qdc/qubit_state.hpp"
#include "qdc/temporal.hpp"

namespace qdc {

namespace {

template <typename Enum, std::size_t N>
using NameTable = std::array<std::pair<Enum, std::string_view>, N>;

constexpr NameTable<Quantity, 9> kQuantityNames{{
    {Quantity::kAmplitude, "amplitude"},
    {Quantity::kDecayRate, "decay_rate"},
    {Quantity::kCoherence, "coherence"},
    {Quantity::kLgi3, "lgi3"},
    {Quantity::kLgi4, "lgi4"},
    {Quantity::kWitness, "witness"},
    {Quantity::kGeometricPhase, "gp"},
    {Quantity::kBlp, "blp"},
    {Quantity::kTraceDistance, "trace_distance"},
}};

constexpr NameTable<Axis, 6> kAxisNames{{
    {Axis::kTime, "time"},
    {Axis::kTau, "tau"},
    {Axis::kLambdaRatio, "lambda_ratio"},
    {Axis::kOmega, "omega"},
    {Axis::kDelta, "delta"},
    {Axis::kTheta, "theta"},
}};

constexpr NameTable<Spacing, 2> kSpacingNames{{
    {Spacing::kLinear, "linear"},
    {Spacing::kLog, "log"},
}};

template <typename Enum, std::size_t N>
std::string_view name_of(const NameTable<Enum, N>& table, Enum e) {
  for (const auto& [value, name] : table) {
    if (value == e) return name;
  }
  return "?";
}

template <typename Enum, std::size_t N>
Enum parse_name(const NameTable<Enum, N>& table, std::string_view text, const char* what) {
  for (const auto& [value, name] : table) {
    if (name == text) return value;
  }
  throw Error(ErrorCode::kUsage, std::string("unknown ") + what + ": " + std::string(text));
}

void usage_check(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::kUsage, what);
}

double parse_double(std::string_view key, std::string_view text) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  usage_check(ec == std::errc() && ptr == text.data() + text.size(),
              "invalid number for " + std::string(key) + ": " + std::string(text));
  return v;
}

std::size_t parse_count(std::string_view key, std::string_view text) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  usage_check(ec == std::errc() && ptr == text.data() + text.size(),
              "invalid count for " + std::string(key) + ": " + std::string(text));
  return v;
}

}  // namespace

std::string_view to_string(Quantity q) { return name_of(kQuantityNames, q); }
std::string_view to_string(Axis a) { return name_of(kAxisNames, a); }
std::string_view to_string(Spacing s) { return name_of(kSpacingNames, s); }
Quantity parse_quantity(std::string_view t) { return parse_name(kQuantityNames, t, "quantity"); }
Axis parse_axis(std::string_view t) { return parse_name(kAxisNames, t, "axis"); }
Spacing parse_spacing(std::string_view t) { return parse_name(kSpacingNames, t, "spacing"); }

bool is_time_quantity(Quantity q) {
  return q != Quantity::kGeometricPhase && q != Quantity::kBlp;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void validate(const SweepSpec& spec) {
  usage_check(spec.count >= 2, "sweep needs at least 2 points");
  usage_check(std::isfinite(spec.min) && std::isfinite(spec.max) && spec.min < spec.max,
              "sweep needs min < max");
  usage_check(spec.spacing != Spacing::kLog || spec.min > 0.0,
              "log spacing needs min > 0");
  const bool time_axis = spec.axis == Axis::kTime || spec.axis == Axis::kTau;
  if (is_time_quantity(spec.quantity)) {
    usage_check(time_axis, std::string(to_string(spec.quantity)) +
                               " is swept along time or tau");
    usage_check(spec.min >= 0.0, "times must be >= 0");
  } else {
    usage_check(!time_axis, std::string(to_string(spec.quantity)) +
                                " is swept along a parameter axis");
  }
  if (spec.axis == Axis::kLambdaRatio) usage_check(spec.min > 0.0, "lambda must be > 0");
  if (spec.axis == Axis::kOmega) usage_check(spec.min >= 0.0, "omega must be >= 0");
  if (spec.axis == Axis::kTheta) {
    usage_check(spec.min >= 0.0 && spec.max <= std::numbers::pi / 2 + 1e-12,
                "theta must lie in [0, pi/2]");
  }
  usage_check(spec.tol > 0.0, "tol must be > 0");
  usage_check(spec.t_max > 0.0, "tmax must be > 0");
  usage_check(spec.alpha_grid >= 2, "alpha-grid needs >= 2 points");
  try {
    validate(params_at(spec, spec.min));
  } catch (const Error& e) {
    throw Error(ErrorCode::kUsage, e.what());
  }
}

std::vector<double> axis_values(const SweepSpec& spec) {
  std::vector<double> v(spec.count);
  const double last = static_cast<double>(spec.count - 1);
  for (std::size_t i = 0; i < spec.count; ++i) {
    const double w = static_cast<double>(i) / last;
    if (spec.spacing == Spacing::kLog) {
      v[i] = std::exp((1.0 - w) * std::log(spec.min) + w * std::log(spec.max));
    } else {
      v[i] = (1.0 - w) * spec.min + w * spec.max;
    }
  }
  v.front() = spec.min;
  v.back() = spec.max;
  return v;
}

SystemParams params_at(const SweepSpec& spec, double x) {
  SystemParams p = spec.fixed;
  switch (spec.axis) {
    case Axis::kLambdaRatio: p.lambda = x * p.gamma; break;
    case Axis::kOmega: p.omega_rabi = x * p.gamma; break;
    case Axis::kDelta: p.delta_qc = x * p.gamma; break;
    case Axis::kTheta: p.theta = x; break;
    case Axis::kTime:
    case Axis::kTau: break;
  }
  return p;
}

std::string format_spec(const SweepSpec& s) {
  std::string out;
  auto add = [&out](std::string_view key, const std::string& value) {
    if (!out.empty()) out += ' ';
    out += key;
    out += '=';
    out += value;
  };
  add("quantity", std::string(to_string(s.quantity)));
  add("axis", std::string(to_string(s.axis)));
  add("min", format_double(s.min));
  add("max", format_double(s.max));
  add("points", std::to_string(s.count));
  add("spacing", std::string(to_string(s.spacing)));
  add("gamma", format_double(s.fixed.gamma));
  add("lambda", format_double(s.fixed.lambda));
  add("omega", format_double(s.fixed.omega_rabi));
  add("delta", format_double(s.fixed.delta_qc));
  add("delta-cav", format_double(s.fixed.delta_cav));
  add("theta", format_double(s.fixed.theta));
  add("tmax", format_double(s.t_max));
  add("tol", format_double(s.tol));
  add("alpha-grid", std::to_string(s.alpha_grid));
  if (!s.output_path.empty()) add("out", s.output_path);
  if (!s.curve.empty()) add("curve", s.curve);
  return out;
}

void set_spec_value(SweepSpec& s, std::string_view key, std::string_view value) {
  if (key == "quantity") s.quantity = parse_quantity(value);
  else if (key == "axis") s.axis = parse_axis(value);
  else if (key == "min") s.min = parse_double(key, value);
  else if (key == "max") s.max = parse_double(key, value);
  else if (key == "points") s.count = parse_count(key, value);
  else if (key == "spacing") s.spacing = parse_spacing(value);
  else if (key == "gamma") s.fixed.gamma = parse_double(key, value);
  else if (key == "lambda") s.fixed.lambda = parse_double(key, value);
  else if (key == "omega") s.fixed.omega_rabi = parse_double(key, value);
  else if (key == "delta") s.fixed.delta_qc = parse_double(key, value);
  else if (key == "delta-cav") s.fixed.delta_cav = parse_double(key, value);
  else if (key == "theta") s.fixed.theta = parse_double(key, value);
  else if (key == "tmax") s.t_max = parse_double(key, value);
  else if (key == "tol") s.tol = parse_double(key, value);
  else if (key == "alpha-grid") s.alpha_grid = parse_count(key, value);
  else if (key == "out") s.output_path = std::string(value);
  else if (key == "curve") s.curve = std::string(value);
  else throw Error(ErrorCode::kUsage, "unknown key: " + std::string(key));
}

SweepSpec parse_spec(std::string_view text, const SweepSpec& base) {
  SweepSpec s = base;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const char c = text[pos];
    if (c == '#') {
      pos = text.find('\n', pos);
      if (pos == std::string_view::npos) break;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++pos;
      continue;
    }
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    const std::string_view token = text.substr(pos, end - pos);
    const std::size_t eq = token.find('=');
    usage_check(eq != std::string_view::npos && eq > 0,
                "expected key=value, got: " + std::string(token));
    set_spec_value(s, token.substr(0, eq), token.substr(eq + 1));
    pos = end;
  }
  return s;
}

std::vector<std::string> observable_columns(Quantity q) {
  switch (q) {
    case Quantity::kAmplitude: return {"a_re", "a_im", "a_abs"};
    case Quantity::kDecayRate: return {"decay_rate"};
    case Quantity::kCoherence: return {"c_l1", "a_abs"};
    case Quantity::kLgi3: return {"c3", "violated3"};
    case Quantity::kLgi4: return {"c4", "violated4"};
    case Quantity::kWitness: return {"w_q", "envelope", "half_abs_a"};
    case Quantity::kGeometricPhase: return {"phi_g", "error_estimate"};
    case Quantity::kBlp:
      return {"n_measure", "best_alpha", "intervals", "truncation_bound", "horizon"};
    case Quantity::kTraceDistance: return {"trace_distance", "info_flux"};
  }
  return {};
}

namespace {

std::vector<double> evaluate_point(const SweepSpec& spec, double x) {
  const SystemParams p = params_at(spec, x);
  const DerivedParams dp = derive(p);
  switch (spec.quantity) {
    case Quantity::kAmplitude: {
      const Complex a = amplitude(dp, x);
      return {a.real(), a.imag(), std::abs(a)};
    }
    case Quantity::kDecayRate:
      return {decay_rate(dp, x)};
    case Quantity::kCoherence:
      return {coherence_l1(evolve_superposition(dp, p.theta, x)), std::abs(amplitude(dp, x))};
    case Quantity::kLgi3: {
      const LgiResult r = lgi_c3(dp, p.theta, x);
      return {r.c3, r.violated3 ? 1.0 : 0.0};
    }
    case Quantity::kLgi4: {
      const LgiResult r = lgi_c4(dp, p.theta, x);
      return {r.c4, r.violated4 ? 1.0 : 0.0};
    }
    case Quantity::kWitness:
      // Envelope column is filled once the whole grid is known.
      return {quantum_witness(dp, p.theta, x).w_q, 0.0, 0.5 * std::abs(amplitude(dp, x))};
    case Quantity::kGeometricPhase: {
      const GeometricPhaseResult g = geometric_phase(dp, p.theta, spec.tol);
      return {g.phase, g.error_estimate};
    }
    case Quantity::kBlp: {
      // tmax is the starting horizon; it doubles until the tail is negligible.
      double horizon = spec.t_max;
      while (std::abs(amplitude(dp, horizon)) >= kBlpTailTolerance &&
             horizon < kBlpHorizonGrowth * spec.t_max) {
        horizon *= 2.0;
      }
      const BlpResult b = blp_measure(p, horizon, spec.alpha_grid);
      return {b.n_measure, b.best_pair.alpha, static_cast<double>(b.interval_count),
              b.truncation_bound, horizon};
    }
    case Quantity::kTraceDistance: {
      // Orthogonal pair cos(theta)|A> + sin(theta)|B>, -sin(theta)|A> + cos(theta)|B>.
      const double c = std::cos(p.theta);
      const double s = std::sin(p.theta);
      const QubitState s1 = QubitState::pure(c, s);
      const QubitState s2 = QubitState::pure(-s, c);
      const double d = trace_distance(apply_channel(dp, s1, x), apply_channel(dp, s2, x));
      const AntipodalPair pair{2.0 * p.theta, 0.0};
      return {d, info_flux(dp, pair, x)};
    }
  }
  return {};
}

}  // namespace

SweepResult run_sweep(const SweepSpec& spec, unsigned threads) {
  validate(spec);
  const std::vector<double> xs = axis_values(spec);

  SweepResult result;
  result.spec = spec;
  result.observables = observable_columns(spec.quantity);
  result.rows.resize(xs.size());

  auto work = [&](std::size_t i) {
    SweepRecord& row = result.rows[i];
    row.axis_value = xs[i];
    row.params = params_at(spec, xs[i]);
    try {
      row.values = evaluate_point(spec, xs[i]);
      for (double v : row.values) {
        if (!std::isfinite(v)) throw Error(ErrorCode::kIntegrationFailure, "non-finite value");
      }
    } catch (const Error& e) {
      row.status = to_string(e.code());
      row.values.clear();
    }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, xs.size()));
  if (threads <= 1) {
    for (std::size_t i = 0; i < xs.size(); ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < xs.size(); i = next++) work(i);
      });
    }
  }

  if (spec.quantity == Quantity::kWitness) {
    std::vector<double> x_ok;
    std::vector<double> half_ok;
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < result.rows.size(); ++i) {
      if (result.rows[i].status != "ok") continue;
      idx.push_back(i);
      x_ok.push_back(result.rows[i].axis_value);
      half_ok.push_back(result.rows[i].values[2]);
    }
    if (idx.size() >= 3) {
      const std::vector<double> env = upper_envelope(x_ok, half_ok);
      for (std::size_t k = 0; k < idx.size(); ++k) result.rows[idx[k]].values[1] = env[k];
    } else {
      for (std::size_t i : idx) result.rows[i].values[1] = result.rows[i].values[2];
    }
  }

  SweepSummary& sum = result.summary;
  sum.observable = result.observables.front();
  sum.rows = result.rows.size();
  bool first = true;
  for (const SweepRecord& row : result.rows) {
    if (row.status != "ok") {
      ++sum.error_rows;
      continue;
    }
    const double v = row.values.front();
    if (first || v < sum.min) sum.min = v;
    if (first || v > sum.max) {
      sum.max = v;
      sum.argmax = row.axis_value;
    }
    first = false;
  }
  return result;
}

void write_csv(std::ostream& out, const std::vector<SweepResult>& curves) {
  if (curves.empty()) throw Error(ErrorCode::kUsage, "nothing to write");
  const SweepSpec& head = curves.front().spec;
  for (const SweepResult& c : curves) {
    if (c.spec.quantity != head.quantity || c.spec.axis != head.axis) {
      throw Error(ErrorCode::kUsage, "curves in one CSV must share quantity and axis");
    }
  }
  out << "# qdc-csv schema=" << kCsvSchemaVersion << " quantity=" << to_string(head.quantity)
      << " axis=" << to_string(head.axis) << '\n';
  // The axis name lives in the comment line; a parameter axis would otherwise repeat a header.
  out << "curve,status,gamma,lambda,omega,delta,delta_cav,theta,x";
  for (const std::string& col : curves.front().observables) out << ',' << col;
  out << '\n';
  for (const SweepResult& c : curves) {
    for (const SweepRecord& row : c.rows) {
      const SystemParams& p = row.params;
      out << c.spec.curve << ',' << row.status << ',' << format_double(p.gamma) << ','
          << format_double(p.lambda) << ',' << format_double(p.omega_rabi) << ','
          << format_double(p.delta_qc) << ',' << format_double(p.delta_cav) << ','
          << format_double(p.theta) << ',' << format_double(row.axis_value);
      for (std::size_t k = 0; k < c.observables.size(); ++k) {
        out << ',';
        if (k < row.values.size()) out << format_double(row.values[k]);
      }
      out << '\n';
    }
  }
}

}  // namespace qdc
