#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "herbrand/program.hpp"
#include "herbrand/report.hpp"

namespace herbrand {
namespace {

const std::filesystem::path kCorpus = HERBRAND_CORPUS_DIR;
const std::filesystem::path kGolden = HERBRAND_GOLDEN_DIR;

ReportOptions json(bool full = false) { return {ReportFormat::kJson, full}; }

nlohmann::json analyze_json(const FlowGraph& g, bool full = false) {
  auto r = solve_jacobi(g);
  return nlohmann::json::parse(emit_report(r.state, "jacobi", r.iterations, json(full)));
}

TEST(Report, BottomHidesEverythingByDefault) {
  auto g = load_program(kCorpus / "single.dfg").graph;
  auto j = analyze_json(g);
  EXPECT_EQ(j["points"][0]["classes"], nlohmann::json::array());
  auto full = analyze_json(g, true);
  EXPECT_EQ(full["points"][0]["classes"].size(), g.universe().size());
}

TEST(Report, FullShowsClosureAndReservedClasses) {
  auto g = load_program(kCorpus / "straight.dfg").graph;
  auto j = analyze_json(g, true);
  auto classes = j["points"][1]["classes"];
  EXPECT_NE(std::find(classes.begin(), classes.end(), nlohmann::json({"a", "x"})), classes.end());
  EXPECT_NE(std::find(classes.begin(), classes.end(), nlohmann::json({"a+a", "a+x", "x+a", "x+x"})),
            classes.end());
  EXPECT_NE(std::find(classes.begin(), classes.end(), nlohmann::json({"$nd1"})), classes.end());
}

TEST(Report, FilteringOnlyHidesClasses) {
  auto g = load_program(kCorpus / "nondet_loop.dfg").graph;
  auto visible = analyze_json(g);
  auto full = analyze_json(g, true);
  for (std::size_t k = 0; k < g.size(); ++k) {
    for (const auto& cls : visible["points"][k]["classes"]) {
      const auto& all = full["points"][k]["classes"];
      EXPECT_NE(std::find(all.begin(), all.end(), cls), all.end());
    }
  }
}

TEST(Report, TopPoint) {
  auto g = load_program(kCorpus / "straight.dfg").graph;
  auto out = emit_report(top_state(g), "jacobi", 0, json());
  auto j = nlohmann::json::parse(out);
  EXPECT_EQ(j["points"][2], nlohmann::json({{"id", 3}, {"status", "top"}}));
}

TEST(Report, SortedAndDeterministic) {
  auto g = load_program(kCorpus / "relink.dfg").graph;
  auto r = solve_jacobi(g);
  auto first = emit_report(r.state, "jacobi", r.iterations, json(true));
  EXPECT_EQ(first, emit_report(solve_jacobi(g).state, "jacobi", r.iterations, json(true)));
  auto j = nlohmann::json::parse(first);
  for (const auto& point : j["points"]) {
    std::vector<std::vector<std::string>> classes = point["classes"];
    EXPECT_TRUE(std::is_sorted(classes.begin(), classes.end()));
    for (const auto& cls : classes) EXPECT_TRUE(std::is_sorted(cls.begin(), cls.end()));
  }
}

TEST(Report, SolverModesGiveTheSamePoints) {
  for (const char* name : {"loop.dfg", "nested_loop.dfg", "swap.dfg"}) {
    auto g = load_program(kCorpus / name).graph;
    auto j = solve(g, {SolverMode::kJacobi});
    auto w = solve(g, {SolverMode::kWorklist});
    auto a = nlohmann::json::parse(emit_report(j.state, "x", 0, json()));
    auto b = nlohmann::json::parse(emit_report(w.state, "x", 0, json()));
    EXPECT_EQ(a["points"].dump(), b["points"].dump()) << name;
  }
}

TEST(Report, TextFormat) {
  auto g = load_program(kCorpus / "straight.dfg").graph;
  auto r = solve_jacobi(g);
  auto text = emit_report(r.state, "jacobi", r.iterations, {});
  EXPECT_NE(text.find("iterations: 3\n"), std::string::npos);
  EXPECT_NE(text.find("node 3: partition\n  {a, x, y}\n"), std::string::npos);
}

TEST(Report, Goldens) {
  for (const char* name : {"straight", "diamond", "nondet"}) {
    auto g = load_program(kCorpus / (std::string(name) + ".dfg")).graph;
    std::ifstream in(kGolden / (std::string(name) + ".json"));
    auto expected = nlohmann::json::parse(in);
    EXPECT_EQ(analyze_json(g), expected) << name;
  }
}

}  // namespace
}  // namespace herbrand
