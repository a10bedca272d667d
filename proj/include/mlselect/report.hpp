#pragma once

#include "mlselect/grid.hpp"

#include <string>

namespace mlselect {

// Fixed 4-significant-digit rendering shared by every numeric table cell,
// so a cell always equals the JSON value formatted the same way.
std::string format_sig(double value);

// Plain-text tables: per-dataset category averages, per-dataset average
// AIC, and one cross-dataset comparison with an accuracy-based and an
// AIC-based column group.
std::string render_tables(const RunReport& report);

// Machine-readable report. Byte-identical across reruns of an equal config
// (wall time is deliberately not included).
std::string render_report_json(const RunReport& report);

// threshold,fpr,tpr lines; the opening sentinel threshold renders as "inf".
std::string render_roc_csv(const RocCurve& curve);

// Writes tables (to the configured path, stdout otherwise), the JSON report,
// and per-model ROC CSV dumps, as configured.
void write_outputs(const RunReport& report);

} // namespace mlselect
