#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "herbrand/congruence.hpp"
#include "herbrand/transfer.hpp"

namespace herbrand {

struct EntryNode {};
struct ConfluenceNode {};
struct FunctionNode {
  Statement statement;
};

using NodeKind = std::variant<EntryNode, FunctionNode, ConfluenceNode>;

// Unvalidated description of a control flow graph. Ids are 1-based.
struct RawNode {
  std::size_t id = 0;
  NodeKind kind;
  std::vector<std::size_t> preds;
  std::size_t line = 0;  // source line for diagnostics, 0 if none
};

// A control flow graph whose node 1 is the entry (no predecessors), whose
// other nodes are reachable from it, with function points having exactly
// one predecessor and confluence points exactly two.
class FlowGraph {
 public:
  std::size_t size() const { return kinds_.size(); }
  const TermUniverse& universe() const { return *universe_; }
  const UniversePtr& universe_ptr() const { return universe_; }

  // Accessors take 1-based ids.
  const NodeKind& kind(std::size_t id) const { return kinds_[id - 1]; }
  const std::vector<std::size_t>& preds(std::size_t id) const { return preds_[id - 1]; }
  // Ascending, with repeats removed.
  const std::vector<std::size_t>& succs(std::size_t id) const { return succs_[id - 1]; }

  bool is_entry(std::size_t id) const { return std::holds_alternative<EntryNode>(kind(id)); }
  bool is_confluence(std::size_t id) const {
    return std::holds_alternative<ConfluenceNode>(kind(id));
  }
  const Statement* statement(std::size_t id) const;

 private:
  friend FlowGraph validate_graph(UniversePtr, std::vector<RawNode>);
  UniversePtr universe_;
  std::vector<NodeKind> kinds_;
  std::vector<std::vector<std::size_t>> preds_;
  std::vector<std::vector<std::size_t>> succs_;
};

// Throws E_GRAPH (entry has preds, wrong pred count, unreachable node,
// dangling or duplicate id) and statement errors from validate_statement.
FlowGraph validate_graph(UniversePtr universe, std::vector<RawNode> nodes);

// One lattice element per node; values[k - 1] belongs to node k.
struct AnalysisState {
  std::vector<LatticeElem> values;

  const LatticeElem& at(std::size_t id) const { return values[id - 1]; }
  friend bool operator==(const AnalysisState&, const AnalysisState&) = default;
};

AnalysisState top_state(const FlowGraph& g);

// Componentwise exact identity and componentwise universe equality.
bool states_equal(const AnalysisState& a, const AnalysisState& b);
bool states_partitions_equal(const AnalysisState& a, const AnalysisState& b);

// Value of node k computed from `s`: bottom at the entry, the node's
// transfer applied to its predecessor, or the meet of both predecessors.
LatticeElem node_update(const AnalysisState& s, const FlowGraph& g, std::size_t k);

// Synchronous application of every node update to the same input state.
AnalysisState composite_step(const AnalysisState& s, const FlowGraph& g);

enum class SolverMode { kJacobi, kWorklist };

struct SolverConfig {
  SolverMode mode = SolverMode::kJacobi;
  // 0 selects the default n * (|U| + 1) + 1.
  std::size_t max_iterations = 0;
  bool trace = false;
};

std::size_t default_max_iterations(const FlowGraph& g);

struct SolveResult {
  AnalysisState state;
  // Jacobi: the smallest l with F^l(top) = F^(l+1)(top).
  // Worklist: the number of sweeps, the final unchanged one included.
  std::size_t iterations = 0;
  // Jacobi with trace: F^0(top) .. F^iterations(top).
  std::vector<AnalysisState> trace;
};

// Iterates the composite step from top until two consecutive states are the
// same congruences at every node. Throws E_ITER_LIMIT past max_iterations.
SolveResult solve_jacobi(const FlowGraph& g, const SolverConfig& cfg = {});

// In-place sweeps over nodes 2..n in ascending order until a sweep changes
// nothing. Throws E_ITER_LIMIT past max_iterations sweeps.
SolveResult solve_worklist(const FlowGraph& g, const SolverConfig& cfg = {});

SolveResult solve(const FlowGraph& g, const SolverConfig& cfg);

// F^l(top), reading from a Jacobi trace and repeating its last state for l
// past the fix point.
const AnalysisState& trace_at(const SolveResult& jacobi, std::size_t l);

}  // namespace herbrand
