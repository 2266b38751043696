#include "qdc/presets.hpp"

#include <fstream>
#include <numbers>
#include <sstream>

#include "qdc/error.hpp"

namespace qdc {

namespace {

constexpr double kPi = std::numbers::pi;

SweepSpec base(Quantity q, Axis axis, double min, double max, std::size_t count,
               Spacing spacing = Spacing::kLinear) {
  SweepSpec s;
  s.quantity = q;
  s.axis = axis;
  s.min = min;
  s.max = max;
  s.count = count;
  s.spacing = spacing;
  return s;
}

std::string label(std::string_view key, double value) {
  return std::string(key) + "=" + format_double(value);
}

// Copies of `proto` with omega (or delta) set per value.
std::vector<SweepSpec> omega_family(const SweepSpec& proto, std::initializer_list<double> values) {
  std::vector<SweepSpec> out;
  for (double v : values) {
    SweepSpec s = proto;
    s.fixed.omega_rabi = v;
    s.curve = label("omega", v);
    out.push_back(s);
  }
  return out;
}

std::vector<SweepSpec> delta_family(const SweepSpec& proto, std::initializer_list<double> values) {
  std::vector<SweepSpec> out;
  for (double v : values) {
    SweepSpec s = proto;
    s.fixed.delta_qc = v;
    s.curve = label("delta", v);
    out.push_back(s);
  }
  return out;
}

const std::initializer_list<double> kOmegaFamily{0.0, 0.1, 0.5, 1.0, 2.0};
const std::initializer_list<double> kDeltaFamily{0.0, 0.1, 1.0, 10.0};

}  // namespace

std::vector<std::string> figure_names() {
  return {"fig2", "fig3", "fig4", "fig5", "fig6", "fig7", "fig8", "fig9", "fig10"};
}

std::vector<FigurePanel> figure_preset(std::string_view name) {
  if (name == "fig2" || name == "fig3") {
    // Leggett-Garg C3 / C4 versus gamma*tau.
    std::vector<FigurePanel> panels;
    for (Quantity q : {Quantity::kLgi3, Quantity::kLgi4}) {
      SweepSpec s = base(q, Axis::kTau, 0.0, 4.0, 401);
      s.fixed.lambda = 0.01;
      s.fixed.theta = 0.0;
      std::vector<SweepSpec> curves;
      if (name == "fig2") {
        curves = omega_family(s, {0.0, 0.5, 1.0, 2.0});
      } else {
        s.fixed.omega_rabi = 0.1;
        curves = delta_family(s, kDeltaFamily);
      }
      panels.push_back({std::string(name) + (q == Quantity::kLgi3 ? "a" : "b"), curves});
    }
    return panels;
  }
  if (name == "fig4") {
    SweepSpec s = base(Quantity::kCoherence, Axis::kTime, 0.0, 100.0, 1001);
    s.fixed.lambda = 0.01;
    s.fixed.theta = kPi / 4;
    return {{"fig4", omega_family(s, kOmegaFamily)}};
  }
  if (name == "fig5") {
    SweepSpec s = base(Quantity::kWitness, Axis::kTau, 0.0, 100.0, 2001);
    s.fixed.lambda = 0.01;
    s.fixed.theta = kPi / 4;
    SweepSpec detuned = s;
    detuned.fixed.omega_rabi = 0.1;
    return {{"fig5a", omega_family(s, kOmegaFamily)},
            {"fig5b", delta_family(detuned, kDeltaFamily)}};
  }
  if (name == "fig6") {
    SweepSpec s = base(Quantity::kDecayRate, Axis::kTime, 0.0, 30.0, 601);
    s.fixed.lambda = 0.01;
    s.fixed.theta = kPi / 4;
    return {{"fig6", omega_family(s, kOmegaFamily)}};
  }
  if (name == "fig7" || name == "fig8") {
    SweepSpec s = base(Quantity::kGeometricPhase, Axis::kLambdaRatio, 0.01, 10.0, 31, Spacing::kLog);
    s.fixed.theta = kPi / 6;
    if (name == "fig7") {
      // Omega = 0 has no dressed period at resonance.
      return {{"fig7a", omega_family(s, {0.01, 0.05, 0.1})},
              {"fig7b", omega_family(s, {0.3, 0.5, 1.0})}};
    }
    s.fixed.omega_rabi = 0.1;
    return {{"fig8", delta_family(s, kDeltaFamily)}};
  }
  if (name == "fig9") {
    std::vector<FigurePanel> panels;
    const char suffix[] = {'a', 'b', 'c', 'd'};
    std::size_t k = 0;
    for (double delta : kDeltaFamily) {
      SweepSpec s = base(Quantity::kBlp, Axis::kLambdaRatio, 0.01, 1.0, 15, Spacing::kLog);
      s.fixed.delta_qc = delta;
      panels.push_back({std::string("fig9") + suffix[k++], omega_family(s, kOmegaFamily)});
    }
    return panels;
  }
  if (name == "fig10") {
    SweepSpec s = base(Quantity::kBlp, Axis::kDelta, 0.0, 10.0, 41);
    s.fixed.lambda = 0.01;
    return {{"fig10", omega_family(s, {0.01, 0.1, 0.5, 1.0})}};
  }
  throw Error(ErrorCode::kUsage, "unknown figure preset: " + std::string(name));
}

std::string format_manifest(const std::vector<FigurePanel>& panels) {
  std::string out = "# qdc-manifest schema=" + std::to_string(kCsvSchemaVersion) + "\n";
  for (const FigurePanel& panel : panels) {
    for (const SweepSpec& spec : panel.curves) {
      out += "panel=" + panel.name + " file=" + panel.name + ".csv " + format_spec(spec) + "\n";
    }
  }
  return out;
}

std::vector<ManifestEntry> parse_manifest(std::string_view text) {
  std::vector<ManifestEntry> entries;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    if (line.empty() || line.front() == '#') continue;

    ManifestEntry entry;
    std::string rest;
    std::istringstream tokens{std::string(line)};
    std::string token;
    while (tokens >> token) {
      if (token.starts_with("panel=")) entry.panel = token.substr(6);
      else if (token.starts_with("file=")) entry.file = token.substr(5);
      else rest += token + " ";
    }
    if (entry.panel.empty() || entry.file.empty()) {
      throw Error(ErrorCode::kUsage, "manifest line lacks panel/file");
    }
    entry.spec = parse_spec(rest);
    entries.push_back(std::move(entry));
  }
  return entries;
}

FigureReport run_figure(std::string_view name, const std::filesystem::path& out_dir,
                        unsigned threads) {
  const std::vector<FigurePanel> panels = figure_preset(name);
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw Error(ErrorCode::kIo, "cannot create " + out_dir.string());

  FigureReport report;
  for (const FigurePanel& panel : panels) {
    std::vector<SweepResult> curves;
    for (const SweepSpec& spec : panel.curves) {
      curves.push_back(run_sweep(spec, threads));
      report.error_rows += curves.back().summary.error_rows;
    }
    const std::filesystem::path file = out_dir / (panel.name + ".csv");
    std::ofstream out(file);
    if (!out) throw Error(ErrorCode::kIo, "cannot write " + file.string());
    write_csv(out, curves);
    report.files.push_back(file);
    report.panels.push_back(std::move(curves));
  }
  const std::filesystem::path manifest = out_dir / (std::string(name) + "_manifest.txt");
  std::ofstream out(manifest);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + manifest.string());
  out << format_manifest(panels);
  report.files.push_back(manifest);
  return report;
}

}  // namespace qdc
