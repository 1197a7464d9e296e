#pragma once

#include <string>
#include <vector>

#include "herbrand/dataflow.hpp"
#include "herbrand/mop.hpp"

namespace herbrand {

enum class ReportFormat { kText, kJson };

struct ReportOptions {
  ReportFormat format = ReportFormat::kText;
  // Show singleton classes and classes of reserved-constant terms.
  bool full = false;
};

// Sorted class lists of a node value, filtered for display.
std::vector<std::vector<std::string>> visible_classes(const LatticeElem& value, bool full);

// Fix point report. JSON shape:
//   {"solver": ..., "iterations": ..., "points": [
//     {"id": 1, "status": "partition", "classes": [["a", "x"], ...]},
//     {"id": 2, "status": "top"}, ...]}
// `trace`, when non-empty, adds "trace": [{"iteration": l, "points": [...]}].
std::string emit_report(const AnalysisState& state, std::string_view solver,
                        std::size_t iterations, const ReportOptions& options,
                        const std::vector<AnalysisState>& trace = {});

std::string emit_mop_report(const std::vector<MopValue>& values, std::size_t max_len,
                            const ReportOptions& options);

std::string emit_verify_report(const VerifyReport& report, const ReportOptions& options);

}  // namespace herbrand
