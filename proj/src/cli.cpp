#include "herbrand/cli.hpp"

#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "herbrand/error.hpp"
#include "herbrand/program.hpp"
#include "herbrand/report.hpp"

namespace herbrand {

namespace {

struct Options {
  std::string file;
  std::string solver = "jacobi";
  std::size_t max_len = 12;
  std::string format = "text";
  bool full = false;
  bool trace = false;
};

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kIterLimit:
    case ErrorCode::kPathLimit:
      return kExitLimit;
    default:
      return kExitInput;
  }
}

ReportOptions report_options(const Options& o) {
  return {o.format == "json" ? ReportFormat::kJson : ReportFormat::kText, o.full};
}

int run_command(const std::string& command, const Options& o, std::ostream& out) {
  Program program = load_program(o.file);
  const FlowGraph& g = program.graph;
  if (command == "check") {
    if (o.format == "json") {
      nlohmann::ordered_json j;
      j["ok"] = true;
      j["nodes"] = g.size();
      j["universe"] = g.universe().size();
      out << j.dump(2) << '\n';
    } else {
      out << "ok: " << g.size() << " nodes, " << g.universe().size() << " terms\n";
    }
    return kExitOk;
  }
  if (command == "analyze") {
    SolverConfig cfg;
    cfg.mode = o.solver == "worklist" ? SolverMode::kWorklist : SolverMode::kJacobi;
    cfg.trace = o.trace;
    SolveResult result = solve(g, cfg);
    out << emit_report(result.state, o.solver, result.iterations, report_options(o), result.trace);
    return kExitOk;
  }
  if (command == "mop") {
    out << emit_mop_report(mop_all(g, o.max_len), o.max_len, report_options(o));
    return kExitOk;
  }
  VerifyReport report = verify_mop_mfp(g, o.max_len);
  out << emit_verify_report(report, report_options(o));
  return report.ok() ? kExitOk : kExitMismatch;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Herbrand equivalence analysis of data-flow programs"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("file", o.file, "program in the .dfg format")->required();
    sub->add_option("--format", o.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
  };
  auto add_classes = [&](CLI::App* sub) {
    sub->add_flag("--full", o.full, "include singleton and reserved-constant classes");
  };

  auto* analyze = app.add_subcommand("analyze", "compute the fix point and report classes");
  add_common(analyze);
  add_classes(analyze);
  analyze->add_option("--solver", o.solver, "jacobi or worklist")
      ->check(CLI::IsMember({"jacobi", "worklist"}));
  analyze->add_flag("--trace", o.trace, "report every Jacobi iterate");

  auto* mop_cmd = app.add_subcommand("mop", "meet over paths up to a length bound");
  add_common(mop_cmd);
  add_classes(mop_cmd);
  mop_cmd->add_option("--max-len", o.max_len, "path length bound")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "compare path meets with the fix point iterates");
  add_common(verify);
  verify->add_option("--max-len", o.max_len, "path length bound")->check(CLI::PositiveNumber);

  auto* check = app.add_subcommand("check", "parse and validate only");
  add_common(check);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  std::string command = app.get_subcommands().front()->get_name();
  if (command == "analyze" && o.trace && o.solver != "jacobi") {
    err << "error: --trace needs --solver jacobi\n";
    return kExitInput;
  }
  try {
    return run_command(command, o, out);
  } catch (const Error& e) {
    err << o.file << ':';
    if (e.line() != 0) err << e.line() << ':';
    err << ' ' << e.what() << '\n';
    return exit_code_for(e.code());
  }
}

}  // namespace herbrand
