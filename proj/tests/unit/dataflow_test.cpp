#include <gtest/gtest.h>

#include <filesystem>

#include "generators.hpp"
#include "herbrand/dataflow.hpp"
#include "herbrand/error.hpp"
#include "herbrand/program.hpp"

namespace herbrand {
namespace {

const std::filesystem::path kCorpus = HERBRAND_CORPUS_DIR;

FlowGraph corpus(const char* name) { return load_program(kCorpus / name).graph; }

bool has_class(const LatticeElem& l, std::vector<std::string> cls) {
  auto classes = class_strings(l.partition());
  return std::find(classes.begin(), classes.end(), cls) != classes.end();
}

ErrorCode graph_error(std::vector<RawNode> nodes) {
  auto u = testing::make_universe(1, 1);
  try {
    validate_graph(u, std::move(nodes));
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "graph accepted";
  return ErrorCode::kParse;
}

TEST(ValidateGraph, SingleEntry) {
  auto g = validate_graph(testing::make_universe(1, 1), {{1, EntryNode{}, {}, 0}});
  EXPECT_EQ(g.size(), 1u);
  EXPECT_TRUE(g.is_entry(1));
}

TEST(ValidateGraph, Rejections) {
  Atom x{AtomKind::kVariable, "x"};
  FunctionNode nd{NonDet{x}};
  EXPECT_EQ(graph_error({{1, EntryNode{}, {}, 0}, {2, nd, {}, 0}}), ErrorCode::kGraph);
  EXPECT_EQ(graph_error({{1, EntryNode{}, {}, 0}, {2, ConfluenceNode{}, {1}, 0}}),
            ErrorCode::kGraph);
  EXPECT_EQ(graph_error({{1, EntryNode{}, {2}, 0}, {2, nd, {1}, 0}}), ErrorCode::kGraph);
  EXPECT_EQ(graph_error({{1, EntryNode{}, {}, 0}, {2, nd, {3}, 0}}), ErrorCode::kGraph);
  EXPECT_EQ(graph_error({{1, EntryNode{}, {}, 0}, {2, nd, {2}, 0}}), ErrorCode::kGraph);
  EXPECT_EQ(graph_error({{1, nd, {}, 0}}), ErrorCode::kGraph);
  EXPECT_EQ(graph_error({{1, EntryNode{}, {}, 0}, {3, nd, {1}, 0}}), ErrorCode::kGraph);
  EXPECT_EQ(graph_error({{1, EntryNode{}, {}, 0}, {2, EntryNode{}, {}, 0}}), ErrorCode::kGraph);
  EXPECT_EQ(graph_error({{1, EntryNode{}, {}, 0}, {2, nd, {1, 1}, 0}}), ErrorCode::kGraph);
}

TEST(ValidateGraph, SelfConfluenceAccepted) {
  auto g = corpus("self_confluence.dfg");
  EXPECT_TRUE(g.is_confluence(3));
}

TEST(CompositeStep, FirstStepPinsTheEntry) {
  auto g = corpus("diamond.dfg");
  auto s1 = composite_step(top_state(g), g);
  EXPECT_EQ(s1.at(1), LatticeElem(bottom(g.universe_ptr())));
  for (std::size_t k = 2; k <= g.size(); ++k) EXPECT_TRUE(s1.at(k).is_top());
  auto s2 = composite_step(s1, g);
  Atom x{AtomKind::kVariable, "x"};
  EXPECT_EQ(s2.at(2), assign_transfer(bottom(g.universe_ptr()), x, Term::constant("a")));
}

TEST(SolveJacobi, OneNode) {
  auto g = corpus("single.dfg");
  auto r = solve_jacobi(g);
  EXPECT_EQ(r.iterations, 1u);
  EXPECT_EQ(r.state.at(1), LatticeElem(bottom(g.universe_ptr())));
}

TEST(SolveJacobi, StraightLine) {
  auto r = solve_jacobi(corpus("straight.dfg"));
  EXPECT_TRUE(has_class(r.state.at(3), {"a", "x", "y"}));
}

TEST(SolveJacobi, DiamondKeepsTheClass) {
  auto r = solve_jacobi(corpus("diamond.dfg"));
  EXPECT_TRUE(has_class(r.state.at(5), {"a", "x", "y"}));
}

TEST(SolveJacobi, TraceDescendsAndEndsAtFixPoint) {
  auto g = corpus("nested_loop.dfg");
  auto r = solve_jacobi(g, {SolverMode::kJacobi, 0, true});
  ASSERT_EQ(r.trace.size(), r.iterations + 1);
  EXPECT_TRUE(states_equal(r.trace.back(), r.state));
  EXPECT_TRUE(states_equal(composite_step(r.state, g), r.state));
  for (std::size_t l = 0; l + 1 < r.trace.size(); ++l) {
    for (std::size_t k = 1; k <= g.size(); ++k) {
      EXPECT_TRUE(refines_exactly(r.trace[l + 1].at(k), r.trace[l].at(k)));
    }
  }
  EXPECT_TRUE(states_equal(trace_at(r, r.iterations + 5), r.state));
}

TEST(SolveJacobi, IterationLimit) {
  auto g = corpus("loop.dfg");
  try {
    solve_jacobi(g, {SolverMode::kJacobi, 2, false});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIterLimit);
  }
}

// Iterates 7 and 8 agree on the universe; only w = (a+b)+b at the join
// differs, and it decides w ~ y+b at node 12 one step later.
TEST(SolveJacobi, StopsOnlyWhenCongruencesRepeat) {
  auto g = corpus("deep_join.dfg");
  auto r = solve_jacobi(g, {SolverMode::kJacobi, 0, true});
  ASSERT_GT(r.trace.size(), 9u);
  EXPECT_TRUE(states_partitions_equal(r.trace[7], r.trace[8]));
  EXPECT_FALSE(states_equal(r.trace[7], r.trace[8]));
  EXPECT_EQ(r.iterations, 9u);
  auto w = Term::variable("w");
  auto yb = Term::sum(Term::variable("y"), Term::constant("b"));
  EXPECT_TRUE(equivalent(w, yb, r.trace[8].at(12).congruence()));
  EXPECT_FALSE(equivalent(w, yb, r.state.at(12).congruence()));
  EXPECT_TRUE(states_equal(solve_worklist(g).state, r.state));
}

TEST(SolveWorklist, StraightLineSweeps) {
  auto r = solve_worklist(corpus("straight.dfg"));
  EXPECT_LE(r.iterations, 2u);
}

TEST(SolveWorklist, AgreesWithJacobi) {
  for (const char* name : {"straight.dfg", "diamond.dfg", "loop.dfg", "nested_loop.dfg",
                           "nondet_loop.dfg", "relink.dfg", "swap.dfg", "deep_join.dfg"}) {
    auto g = corpus(name);
    EXPECT_TRUE(states_equal(solve_jacobi(g).state, solve_worklist(g).state)) << name;
  }
  testing::Rng rng(61);
  for (int i = 0; i < 40; ++i) {
    auto g = parse_program(testing::random_program_text(rng)).graph;
    auto j = solve_jacobi(g);
    auto w = solve_worklist(g);
    EXPECT_TRUE(states_equal(j.state, w.state));
    EXPECT_LE(j.iterations, default_max_iterations(g));
    EXPECT_EQ(j.state.at(1), LatticeElem(bottom(g.universe_ptr())));
    for (const auto& v : j.state.values) EXPECT_TRUE(is_congruence(v.partition()));
  }
}

}  // namespace
}  // namespace herbrand
