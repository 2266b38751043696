#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "qdc/params.hpp"

namespace qdc {

enum class Quantity {
  kAmplitude,
  kDecayRate,
  kCoherence,
  kLgi3,
  kLgi4,
  kWitness,
  kGeometricPhase,
  kBlp,
  kTraceDistance,
};

enum class Axis { kTime, kTau, kLambdaRatio, kOmega, kDelta, kTheta };

enum class Spacing { kLinear, kLog };

std::string_view to_string(Quantity q);
std::string_view to_string(Axis a);
std::string_view to_string(Spacing s);
Quantity parse_quantity(std::string_view text);
Axis parse_axis(std::string_view text);
Spacing parse_spacing(std::string_view text);

/// True for observables evaluated along a time/tau grid at fixed parameters.
bool is_time_quantity(Quantity q);

struct SweepSpec {
  Quantity quantity = Quantity::kAmplitude;
  SystemParams fixed;
  Axis axis = Axis::kTime;
  double min = 0.0;
  double max = 10.0;
  std::size_t count = 101;
  Spacing spacing = Spacing::kLinear;
  std::string output_path;
  double t_max = 200.0;          // BLP horizon
  double tol = 1e-9;             // geometric-phase quadrature tolerance
  std::size_t alpha_grid = 91;   // BLP pair grid
  std::string curve;             // curve label inside a figure panel

  bool operator==(const SweepSpec&) const = default;
};

/// Throws Error(kUsage) on an inconsistent spec.
void validate(const SweepSpec& spec);

std::vector<double> axis_values(const SweepSpec& spec);

/// Parameters with the swept axis value substituted.
SystemParams params_at(const SweepSpec& spec, double axis_value);

/// Whitespace-separated key=value tokens; every field is written, floats
/// with 17 significant digits so parse_spec(format_spec(s)) == s.
std::string format_spec(const SweepSpec& spec);

/// Parses key=value tokens (whitespace or newline separated, '#' starts a
/// comment). Keys mirror the CLI flags: quantity axis min max points spacing
/// out gamma lambda omega delta delta-cav theta tmax tol alpha-grid curve.
/// Unknown keys throw Error(kUsage). Missing keys keep `base` values.
SweepSpec parse_spec(std::string_view text, const SweepSpec& base = {});

/// Applies one key=value to `spec`.
void set_spec_value(SweepSpec& spec, std::string_view key, std::string_view value);

struct SweepRecord {
  SystemParams params;
  double axis_value = 0.0;
  std::string status = "ok";
  std::vector<double> values;  // empty on error rows
};

struct SweepSummary {
  std::string observable;
  std::size_t rows = 0;
  std::size_t error_rows = 0;
  double min = 0.0;
  double max = 0.0;
  double argmax = 0.0;  // axis value at the maximum
};

struct SweepResult {
  SweepSpec spec;
  std::vector<std::string> observables;
  std::vector<SweepRecord> rows;
  SweepSummary summary;
};

std::vector<std::string> observable_columns(Quantity q);

/// Evaluates every axis point on a worker pool (`threads` = 0 picks the
/// hardware concurrency). Rows come back in axis order.
SweepResult run_sweep(const SweepSpec& spec, unsigned threads = 0);

inline constexpr int kCsvSchemaVersion = 1;

/// BLP rows extend the horizon by doubling until |A| < kBlpTailTolerance,
/// up to kBlpHorizonGrowth times the spec's tmax.
inline constexpr double kBlpTailTolerance = 1e-4;
inline constexpr double kBlpHorizonGrowth = 16.0;

/// Writes one CSV: a comment line with the schema version, a header row and
/// the rows of every curve in order. All curves must share the quantity.
void write_csv(std::ostream& out, const std::vector<SweepResult>& curves);

/// Formats a double with 17 significant digits.
std::string format_double(double v);

}  // namespace qdc
