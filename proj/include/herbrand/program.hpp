#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "herbrand/dataflow.hpp"

namespace herbrand {

// A parsed `.dfg` program:
//
//   vars x y           # declares variables
//   consts a b         # declares constants
//   node 1 entry
//   node 2 assign x := a + b pred 1
//   node 3 nondet y pred 2
//   node 4 confluence pred 2 3
struct Program {
  UniversePtr universe;
  FlowGraph graph;
  std::string origin;
};

// Throws Error (E_PARSE, E_UNDECLARED, E_SELF_REF, E_GRAPH) carrying the
// offending line.
Program parse_program(std::string_view text, std::string origin = "<input>");
Program load_program(const std::filesystem::path& path);

}  // namespace herbrand
