#pragma once

// Meet over all paths, computed from explicit path enumeration and kept
// independent of the fix point solvers.

#include <cstddef>
#include <string>
#include <vector>

#include "herbrand/dataflow.hpp"

namespace herbrand {

// (v0, ..., vl) with v0 = 1 and every consecutive pair an edge. Vertices may
// repeat.
struct Path {
  std::vector<std::size_t> vertices;

  std::size_t length() const { return vertices.size() - 1; }
  friend bool operator==(const Path&, const Path&) = default;
};

inline constexpr std::size_t kDefaultPathCap = 1'000'000;

// Paths from node 1 to k of length < max_len, shortest first and
// lexicographic within one length. Throws E_PATH_LIMIT if more than `cap`
// walks from the entry, to any node, are shorter than max_len.
std::vector<Path> enum_paths(const FlowGraph& g, std::size_t k, std::size_t max_len,
                             std::size_t cap = kDefaultPathCap);

// Bottom at the entry, then each function point's transfer in path order;
// confluence points pass the value through.
LatticeElem path_congruence(const Path& path, const FlowGraph& g);

// Meet of the path congruences of all paths to k of length < l.
LatticeElem m_l(const FlowGraph& g, std::size_t k, std::size_t l,
                std::size_t cap = kDefaultPathCap);

// M_l(k) for every l in 0..max_len and every node, from a single walk over
// the path tree. table[l].at(k) is M_l(k).
std::vector<AnalysisState> path_meets(const FlowGraph& g, std::size_t max_len,
                                      std::size_t cap = kDefaultPathCap);

struct MopValue {
  LatticeElem value = LatticeElem::top();
  // M_L equals M_(L-1) at every node; the value is then the exact meet over
  // all paths, since M_l is a function of M_(l-1).
  bool stabilized = false;
};

MopValue mop(const FlowGraph& g, std::size_t k, std::size_t max_len,
             std::size_t cap = kDefaultPathCap);
std::vector<MopValue> mop_all(const FlowGraph& g, std::size_t max_len,
                              std::size_t cap = kDefaultPathCap);

struct Mismatch {
  std::size_t node = 0;
  std::size_t l = 0;  // iteration index; for the final check, max_len
  bool final_check = false;
  std::string detail;
};

struct VerifyReport {
  std::size_t max_len = 0;
  std::size_t checks = 0;
  bool stabilized = false;
  std::size_t jacobi_iterations = 0;
  std::vector<Mismatch> mismatches;

  bool ok() const { return mismatches.empty(); }
};

// For every node k and l <= max_len, compares M_l(k) from paths with the
// k-th component of F^l(top). If the path meets stabilize by max_len, also
// compares MOP(k) with the solver's fix point at every node.
VerifyReport verify_mop_mfp(const FlowGraph& g, std::size_t max_len,
                            std::size_t cap = kDefaultPathCap);

}  // namespace herbrand
