#include "herbrand/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace herbrand {

namespace {

using Json = nlohmann::ordered_json;

Json point_json(std::size_t id, const LatticeElem& value, bool full) {
  Json point;
  point["id"] = id;
  if (value.is_top()) {
    point["status"] = "top";
    return point;
  }
  point["status"] = "partition";
  point["classes"] = visible_classes(value, full);
  return point;
}

Json points_json(const AnalysisState& state, bool full) {
  Json points = Json::array();
  for (std::size_t id = 1; id <= state.values.size(); ++id) {
    points.push_back(point_json(id, state.at(id), full));
  }
  return points;
}

void write_point(std::ostream& out, std::size_t id, const LatticeElem& value, bool full) {
  out << "node " << id << ": " << (value.is_top() ? "top" : "partition") << '\n';
  if (value.is_top()) return;
  for (const auto& cls : visible_classes(value, full)) {
    out << "  {";
    for (std::size_t i = 0; i < cls.size(); ++i) out << (i ? ", " : "") << cls[i];
    out << "}\n";
  }
}

void write_points(std::ostream& out, const AnalysisState& state, bool full) {
  for (std::size_t id = 1; id <= state.values.size(); ++id) write_point(out, id, state.at(id), full);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::vector<std::vector<std::string>> visible_classes(const LatticeElem& value, bool full) {
  const Partition& p = value.partition();
  std::vector<std::vector<std::string>> result;
  for (const auto& members : p.classes()) {
    if (!full) {
      if (members.size() < 2) continue;
      bool reserved = std::any_of(members.begin(), members.end(), [&](std::size_t index) {
        return p.universe().mentions_reserved(index);
      });
      if (reserved) continue;
    }
    std::vector<std::string> names;
    for (auto index : members) names.push_back(format_term(p.universe().terms()[index]));
    std::sort(names.begin(), names.end());
    result.push_back(std::move(names));
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::string emit_report(const AnalysisState& state, std::string_view solver,
                        std::size_t iterations, const ReportOptions& options,
                        const std::vector<AnalysisState>& trace) {
  if (options.format == ReportFormat::kJson) {
    Json j;
    j["solver"] = solver;
    j["iterations"] = iterations;
    j["points"] = points_json(state, options.full);
    if (!trace.empty()) {
      Json steps = Json::array();
      for (std::size_t l = 0; l < trace.size(); ++l) {
        Json step;
        step["iteration"] = l;
        step["points"] = points_json(trace[l], options.full);
        steps.push_back(std::move(step));
      }
      j["trace"] = std::move(steps);
    }
    return dump(j);
  }
  std::ostringstream out;
  out << "solver: " << solver << '\n' << "iterations: " << iterations << '\n';
  write_points(out, state, options.full);
  for (std::size_t l = 0; l < trace.size(); ++l) {
    out << "-- iteration " << l << '\n';
    write_points(out, trace[l], options.full);
  }
  return out.str();
}

std::string emit_mop_report(const std::vector<MopValue>& values, std::size_t max_len,
                            const ReportOptions& options) {
  bool stabilized = !values.empty() && values.front().stabilized;
  if (options.format == ReportFormat::kJson) {
    Json j;
    j["max_len"] = max_len;
    j["stabilized"] = stabilized;
    Json points = Json::array();
    for (std::size_t id = 1; id <= values.size(); ++id) {
      points.push_back(point_json(id, values[id - 1].value, options.full));
    }
    j["points"] = std::move(points);
    return dump(j);
  }
  std::ostringstream out;
  out << "max_len: " << max_len << '\n' << "stabilized: " << (stabilized ? "yes" : "no") << '\n';
  for (std::size_t id = 1; id <= values.size(); ++id) {
    write_point(out, id, values[id - 1].value, options.full);
  }
  return out.str();
}

std::string emit_verify_report(const VerifyReport& report, const ReportOptions& options) {
  if (options.format == ReportFormat::kJson) {
    Json j;
    j["max_len"] = report.max_len;
    j["checks"] = report.checks;
    j["stabilized"] = report.stabilized;
    j["jacobi_iterations"] = report.jacobi_iterations;
    j["ok"] = report.ok();
    Json mismatches = Json::array();
    for (const auto& m : report.mismatches) {
      Json item;
      item["node"] = m.node;
      item["l"] = m.l;
      item["final"] = m.final_check;
      item["detail"] = m.detail;
      mismatches.push_back(std::move(item));
    }
    j["mismatches"] = std::move(mismatches);
    return dump(j);
  }
  std::ostringstream out;
  out << "checks: " << report.checks << '\n'
      << "mismatches: " << report.mismatches.size() << '\n'
      << "stabilized: " << (report.stabilized ? "yes" : "no") << '\n'
      << "jacobi iterations: " << report.jacobi_iterations << '\n';
  for (const auto& m : report.mismatches) {
    out << (m.final_check ? "MOP vs fix point" : "M_l vs F^l") << " at node " << m.node
        << ", l = " << m.l << ": " << m.detail << '\n';
  }
  out << (report.ok() ? "PASS" : "FAIL") << '\n';
  return out.str();
}

}  // namespace herbrand
