#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "qdc/sweep.hpp"

namespace qdc {

/// One CSV worth of curves. Every curve shares quantity and axis; the curve
/// label names the parameter that varies across the family.
struct FigurePanel {
  std::string name;  // e.g. "fig2a"
  std::vector<SweepSpec> curves;
};

std::vector<std::string> figure_names();

/// Panels of a named figure preset (fig2 ... fig10). Unknown names throw
/// Error(kUsage).
std::vector<FigurePanel> figure_preset(std::string_view name);

struct ManifestEntry {
  std::string panel;
  std::string file;
  SweepSpec spec;

  bool operator==(const ManifestEntry&) const = default;
};

/// Manifest text: a schema comment line, then one line per curve
/// `panel=<name> file=<csv> <format_spec(spec)>`.
std::string format_manifest(const std::vector<FigurePanel>& panels);
std::vector<ManifestEntry> parse_manifest(std::string_view text);

struct FigureReport {
  std::vector<std::filesystem::path> files;  // CSVs then the manifest
  std::vector<std::vector<SweepResult>> panels;
  std::size_t error_rows = 0;
};

/// Runs every curve of a preset and writes `<panel>.csv` per panel plus
/// `<name>_manifest.txt` into `out_dir`.
FigureReport run_figure(std::string_view name, const std::filesystem::path& out_dir,
                        unsigned threads = 0);

}  // namespace qdc
