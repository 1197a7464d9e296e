#include "herbrand/dataflow.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

#include "herbrand/error.hpp"

namespace herbrand {

const Statement* FlowGraph::statement(std::size_t id) const {
  const auto* fn = std::get_if<FunctionNode>(&kind(id));
  return fn ? &fn->statement : nullptr;
}

FlowGraph validate_graph(UniversePtr universe, std::vector<RawNode> nodes) {
  const std::size_t n = nodes.size();
  auto fail = [](const std::string& message, std::size_t line = 0) {
    throw Error(ErrorCode::kGraph, message, line);
  };
  if (n == 0) fail("graph has no nodes");

  std::vector<const RawNode*> by_id(n, nullptr);
  for (const auto& node : nodes) {
    if (node.id < 1 || node.id > n) {
      fail("node id " + std::to_string(node.id) + " outside 1.." + std::to_string(n), node.line);
    }
    if (by_id[node.id - 1] != nullptr) fail("duplicate node " + std::to_string(node.id), node.line);
    by_id[node.id - 1] = &node;
  }

  FlowGraph g;
  g.universe_ = universe;
  g.kinds_.reserve(n);
  g.preds_.reserve(n);
  g.succs_.assign(n, {});
  for (std::size_t id = 1; id <= n; ++id) {
    const RawNode& node = *by_id[id - 1];
    const std::string name = "node " + std::to_string(id);
    bool entry = std::holds_alternative<EntryNode>(node.kind);
    if (id == 1 && !entry) fail("node 1 must be the entry", node.line);
    if (id != 1 && entry) fail(name + ": only node 1 may be the entry", node.line);
    std::size_t expected = entry ? 0 : std::holds_alternative<ConfluenceNode>(node.kind) ? 2 : 1;
    if (node.preds.size() != expected) {
      fail(name + " has " + std::to_string(node.preds.size()) + " predecessors, expected " +
               std::to_string(expected),
           node.line);
    }
    for (auto pred : node.preds) {
      if (pred < 1 || pred > n) {
        fail(name + ": predecessor " + std::to_string(pred) + " does not exist", node.line);
      }
      g.succs_[pred - 1].push_back(id);
    }
    if (const auto* fn = std::get_if<FunctionNode>(&node.kind)) {
      try {
        validate_statement(fn->statement, *universe);
      } catch (const Error& e) {
        throw Error(e.code(), name + ": " + e.message(), node.line);
      }
    }
    g.kinds_.push_back(node.kind);
    g.preds_.push_back(node.preds);
  }
  for (auto& succ : g.succs_) {
    std::sort(succ.begin(), succ.end());
    succ.erase(std::unique(succ.begin(), succ.end()), succ.end());
  }

  std::vector<bool> reached(n, false);
  std::deque<std::size_t> queue{1};
  reached[0] = true;
  while (!queue.empty()) {
    auto id = queue.front();
    queue.pop_front();
    for (auto next : g.succs_[id - 1]) {
      if (!reached[next - 1]) {
        reached[next - 1] = true;
        queue.push_back(next);
      }
    }
  }
  for (std::size_t id = 1; id <= n; ++id) {
    if (!reached[id - 1]) fail("node " + std::to_string(id) + " is unreachable from the entry",
                               by_id[id - 1]->line);
  }
  return g;
}

AnalysisState top_state(const FlowGraph& g) {
  return AnalysisState{std::vector<LatticeElem>(g.size(), LatticeElem::top())};
}

bool states_equal(const AnalysisState& a, const AnalysisState& b) { return a == b; }

bool states_partitions_equal(const AnalysisState& a, const AnalysisState& b) {
  if (a.values.size() != b.values.size()) return false;
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    if (!partitions_equal(a.values[i], b.values[i])) return false;
  }
  return true;
}

LatticeElem node_update(const AnalysisState& s, const FlowGraph& g, std::size_t k) {
  if (g.is_entry(k)) return bottom(g.universe_ptr());
  const auto& preds = g.preds(k);
  if (g.is_confluence(k)) return meet(s.at(preds[0]), s.at(preds[1]));
  return apply_statement(s.at(preds[0]), *g.statement(k));
}

AnalysisState composite_step(const AnalysisState& s, const FlowGraph& g) {
  AnalysisState next;
  next.values.reserve(g.size());
  for (std::size_t k = 1; k <= g.size(); ++k) next.values.push_back(node_update(s, g, k));
  return next;
}

std::size_t default_max_iterations(const FlowGraph& g) {
  return g.size() * (g.universe().size() + 1) + 1;
}

namespace {

std::size_t iteration_limit(const FlowGraph& g, const SolverConfig& cfg) {
  return cfg.max_iterations != 0 ? cfg.max_iterations : default_max_iterations(g);
}

// Every node is reachable, so a fix point reached from top has no top left.
void check_no_top(const AnalysisState& s) {
  for (std::size_t i = 0; i < s.values.size(); ++i) {
    if (s.values[i].is_top()) {
      throw std::logic_error("fix point leaves node " + std::to_string(i + 1) + " at top");
    }
  }
}

}  // namespace

SolveResult solve_jacobi(const FlowGraph& g, const SolverConfig& cfg) {
  const std::size_t limit = iteration_limit(g, cfg);
  SolveResult result;
  AnalysisState current = top_state(g);
  if (cfg.trace) result.trace.push_back(current);
  for (std::size_t l = 0;; ++l) {
    if (l > limit) {
      throw Error(ErrorCode::kIterLimit,
                  "no fix point within " + std::to_string(limit) + " iterations");
    }
    AnalysisState next = composite_step(current, g);
    if (next == current) {
      result.iterations = l;
      break;
    }
    current = std::move(next);
    if (cfg.trace) result.trace.push_back(current);
  }
  check_no_top(current);
  result.state = std::move(current);
  return result;
}

SolveResult solve_worklist(const FlowGraph& g, const SolverConfig& cfg) {
  const std::size_t limit = iteration_limit(g, cfg);
  SolveResult result;
  AnalysisState state = top_state(g);
  state.values[0] = bottom(g.universe_ptr());
  for (bool changed = true; changed;) {
    if (++result.iterations > limit) {
      throw Error(ErrorCode::kIterLimit, "no fix point within " + std::to_string(limit) + " sweeps");
    }
    changed = false;
    for (std::size_t k = 2; k <= g.size(); ++k) {
      LatticeElem value = node_update(state, g, k);
      if (!(value == state.values[k - 1])) {
        state.values[k - 1] = std::move(value);
        changed = true;
      }
    }
  }
  check_no_top(state);
  result.state = std::move(state);
  return result;
}

SolveResult solve(const FlowGraph& g, const SolverConfig& cfg) {
  return cfg.mode == SolverMode::kJacobi ? solve_jacobi(g, cfg) : solve_worklist(g, cfg);
}

const AnalysisState& trace_at(const SolveResult& jacobi, std::size_t l) {
  if (jacobi.trace.empty()) throw std::logic_error("solver ran without a trace");
  return jacobi.trace[std::min(l, jacobi.trace.size() - 1)];
}

}  // namespace herbrand
