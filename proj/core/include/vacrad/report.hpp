#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "vacrad/gas_model.hpp"
#include "vacrad/quadrature.hpp"

namespace vacrad {

enum class ReportFormat { human_table, csv, json };

ReportFormat report_format_from_string(const std::string& name);

/// One report field. Keys are dotted paths; JSON output nests on the dots,
/// CSV and the human table use them verbatim, so every format exposes the
/// same field names.
struct ReportField {
  std::string key;
  std::variant<double, std::int64_t, std::string> value;
};

using FlatReport = std::vector<ReportField>;

struct EstimateOptions {
  IntegralMethod integral_method = IntegralMethod::closed_form_factorial;
  std::optional<double> gain_override;
  std::optional<double> calibrate_rmv_over_hbar;
  std::optional<double> calibrate_alpha;
};

/// Full per-state report: gas state, both channels, randomization counts
/// for the kinetic-theory gain and (when supplied) an explicit gain, and
/// the calibrated reproduction when calibration values are injected.
FlatReport build_estimate_report(const GasState& state,
                                 const EstimateOptions& options);

/// Shortest form that round-trips a double exactly (printf %.17g).
std::string format_double(double value);

std::string render_json(const FlatReport& report);
std::string render_csv_header(const FlatReport& report);
std::string render_csv_row(const FlatReport& report);
std::string render_human(const FlatReport& report);
std::string render(const FlatReport& report, ReportFormat format);

}  // namespace vacrad
