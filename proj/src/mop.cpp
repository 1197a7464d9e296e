#include "herbrand/mop.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "herbrand/error.hpp"

namespace herbrand {

namespace {

void path_limit(std::size_t cap) {
  throw Error(ErrorCode::kPathLimit, "more than " + std::to_string(cap) + " paths");
}

// Walks from node 1 of length < max_len, counted before any is built so the
// limit fails fast. Saturates just past the cap.
void check_walk_count(const FlowGraph& g, std::size_t max_len, std::size_t cap) {
  std::vector<std::size_t> ending(g.size() + 1, 0);
  ending[1] = 1;
  std::size_t total = 0;
  for (std::size_t len = 0; len < max_len; ++len) {
    std::vector<std::size_t> next(g.size() + 1, 0);
    for (std::size_t v = 1; v <= g.size(); ++v) {
      if (ending[v] == 0) continue;
      total += ending[v];
      if (total > cap) path_limit(cap);
      for (auto succ : g.succs(v)) next[succ] = std::min(next[succ] + ending[v], cap + 1);
    }
    ending = std::move(next);
  }
}

LatticeElem step_into(const LatticeElem& m, const FlowGraph& g, std::size_t v) {
  if (g.is_confluence(v)) return m;
  return apply_statement(m, *g.statement(v));
}

}  // namespace

std::vector<Path> enum_paths(const FlowGraph& g, std::size_t k, std::size_t max_len,
                             std::size_t cap) {
  std::vector<Path> result;
  if (max_len == 0) return result;
  check_walk_count(g, max_len, cap);
  std::vector<Path> layer{Path{{1}}};
  for (std::size_t len = 0; len < max_len && !layer.empty(); ++len) {
    std::vector<Path> next;
    for (const auto& path : layer) {
      if (path.vertices.back() == k) result.push_back(path);
      if (len + 1 == max_len) continue;
      for (auto succ : g.succs(path.vertices.back())) {
        Path longer = path;
        longer.vertices.push_back(succ);
        next.push_back(std::move(longer));
      }
    }
    layer = std::move(next);
  }
  return result;
}

LatticeElem path_congruence(const Path& path, const FlowGraph& g) {
  LatticeElem m = bottom(g.universe_ptr());
  for (std::size_t i = 1; i < path.vertices.size(); ++i) m = step_into(m, g, path.vertices[i]);
  return m;
}

LatticeElem m_l(const FlowGraph& g, std::size_t k, std::size_t l, std::size_t cap) {
  std::vector<LatticeElem> congruences;
  for (const auto& path : enum_paths(g, k, l, cap)) congruences.push_back(path_congruence(path, g));
  return meet_all(congruences);
}

std::vector<AnalysisState> path_meets(const FlowGraph& g, std::size_t max_len, std::size_t cap) {
  const std::size_t n = g.size();
  // by_length[len].at(v): meet of m_alpha over paths to v of length exactly len.
  check_walk_count(g, max_len, cap);
  std::vector<AnalysisState> by_length(max_len, top_state(g));

  std::function<void(std::size_t, std::size_t, const LatticeElem&)> walk =
      [&](std::size_t v, std::size_t len, const LatticeElem& m) {
        auto& slot = by_length[len].values[v - 1];
        slot = meet(slot, m);
        if (len + 1 >= max_len) return;
        for (auto succ : g.succs(v)) walk(succ, len + 1, step_into(m, g, succ));
      };
  if (max_len > 0) walk(1, 0, bottom(g.universe_ptr()));

  std::vector<AnalysisState> table;
  table.reserve(max_len + 1);
  table.push_back(top_state(g));
  for (std::size_t l = 1; l <= max_len; ++l) {
    AnalysisState next = table.back();
    for (std::size_t v = 0; v < n; ++v) {
      next.values[v] = meet(next.values[v], by_length[l - 1].values[v]);
    }
    table.push_back(std::move(next));
  }
  return table;
}

std::vector<MopValue> mop_all(const FlowGraph& g, std::size_t max_len, std::size_t cap) {
  auto table = path_meets(g, max_len, cap);
  bool stabilized = max_len > 0 && table[max_len] == table[max_len - 1];
  std::vector<MopValue> result;
  for (const auto& value : table[max_len].values) result.push_back(MopValue{value, stabilized});
  return result;
}

MopValue mop(const FlowGraph& g, std::size_t k, std::size_t max_len, std::size_t cap) {
  return mop_all(g, max_len, cap)[k - 1];
}

VerifyReport verify_mop_mfp(const FlowGraph& g, std::size_t max_len, std::size_t cap) {
  VerifyReport report;
  report.max_len = max_len;
  SolverConfig cfg;
  cfg.trace = true;
  auto jacobi = solve_jacobi(g, cfg);
  report.jacobi_iterations = jacobi.iterations;
  auto table = path_meets(g, max_len, cap);

  auto describe = [](const LatticeElem& paths, const LatticeElem& solver) {
    if (!partitions_equal(paths, solver)) return std::string("universe partitions differ");
    return std::string("universe partitions agree, congruences differ beyond the universe");
  };
  for (std::size_t l = 0; l <= max_len; ++l) {
    const auto& iterate = trace_at(jacobi, l);
    for (std::size_t k = 1; k <= g.size(); ++k) {
      ++report.checks;
      if (!(table[l].at(k) == iterate.at(k))) {
        report.mismatches.push_back({k, l, false, describe(table[l].at(k), iterate.at(k))});
      }
    }
  }
  report.stabilized = max_len > 0 && table[max_len] == table[max_len - 1];
  if (report.stabilized) {
    for (std::size_t k = 1; k <= g.size(); ++k) {
      ++report.checks;
      if (!(table[max_len].at(k) == jacobi.state.at(k))) {
        report.mismatches.push_back(
            {k, max_len, true, describe(table[max_len].at(k), jacobi.state.at(k))});
      }
    }
  }
  return report;
}

}  // namespace herbrand
