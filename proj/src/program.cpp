#include "herbrand/program.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "herbrand/error.hpp"

namespace herbrand {

namespace {

std::vector<std::string> tokenize(std::string_view line, std::size_t line_no) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  auto word_char = [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  };
  while (i < line.size()) {
    char c = line[i];
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '+') {
      tokens.emplace_back("+");
      ++i;
    } else if (c == ':' && i + 1 < line.size() && line[i + 1] == '=') {
      tokens.emplace_back(":=");
      i += 2;
    } else if (word_char(c)) {
      std::size_t start = i;
      while (i < line.size() && word_char(line[i])) ++i;
      tokens.emplace_back(line.substr(start, i - start));
    } else {
      throw Error(ErrorCode::kParse, std::string("unexpected character '") + c + "'", line_no);
    }
  }
  return tokens;
}

struct PendingStatement {
  std::string target;
  std::vector<std::string> rhs;  // one atom, or two for a sum
  bool nondet = false;
};

struct PendingNode {
  std::size_t id = 0;
  std::size_t line = 0;
  enum { kEntry, kStatement, kConfluence } kind = kEntry;
  PendingStatement statement;
  std::vector<std::size_t> preds;
};

class LineParser {
 public:
  LineParser(std::vector<std::string> tokens, std::size_t line)
      : tokens_(std::move(tokens)), line_(line) {}

  bool done() const { return pos_ == tokens_.size(); }

  const std::string& next(std::string_view what) {
    if (done()) fail("expected " + std::string(what) + " at end of line");
    return tokens_[pos_++];
  }

  void expect(std::string_view keyword) {
    const auto& token = next(keyword);
    if (token != keyword) fail("expected '" + std::string(keyword) + "', found '" + token + "'");
  }

  std::string identifier() {
    const auto& token = next("identifier");
    if (!is_identifier(token) || is_keyword(token)) fail("expected identifier, found '" + token + "'");
    return token;
  }

  std::size_t integer() {
    const auto& token = next("node id");
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      fail("expected node id, found '" + token + "'");
    }
    return value;
  }

  bool peek(std::string_view token) const { return !done() && tokens_[pos_] == token; }

  void finish() {
    if (!done()) fail("unexpected '" + tokens_[pos_] + "'");
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw Error(ErrorCode::kParse, message, line_);
  }

 private:
  std::vector<std::string> tokens_;
  std::size_t pos_ = 0;
  std::size_t line_;
};

PendingNode parse_node(LineParser& p, std::size_t line) {
  PendingNode node;
  node.line = line;
  node.id = p.integer();
  const std::string kind = p.next("node kind");
  if (kind == "entry") {
    node.kind = PendingNode::kEntry;
  } else if (kind == "assign") {
    node.kind = PendingNode::kStatement;
    node.statement.target = p.identifier();
    p.expect(":=");
    node.statement.rhs.push_back(p.identifier());
    if (p.peek("+")) {
      p.expect("+");
      node.statement.rhs.push_back(p.identifier());
    }
    p.expect("pred");
    node.preds.push_back(p.integer());
  } else if (kind == "nondet") {
    node.kind = PendingNode::kStatement;
    node.statement.nondet = true;
    node.statement.target = p.identifier();
    p.expect("pred");
    node.preds.push_back(p.integer());
  } else if (kind == "confluence") {
    node.kind = PendingNode::kConfluence;
    p.expect("pred");
    node.preds.push_back(p.integer());
    node.preds.push_back(p.integer());
  } else {
    p.fail("unknown node kind '" + kind + "'");
  }
  p.finish();
  return node;
}

Statement resolve_statement(const PendingStatement& s, const TermUniverse& universe,
                            std::size_t line) {
  auto atom = [&](const std::string& name) {
    const Atom* found = universe.find_atom(name);
    if (found == nullptr) throw Error(ErrorCode::kUndeclared, "undeclared name '" + name + "'", line);
    return *found;
  };
  Atom target = atom(s.target);
  if (!target.is_variable()) {
    throw Error(ErrorCode::kUndeclared, "assignment to constant '" + s.target + "'", line);
  }
  if (s.nondet) return NonDet{target};
  Term rhs = Term::atom(atom(s.rhs[0]));
  if (s.rhs.size() == 2) rhs = Term::sum(rhs, Term::atom(atom(s.rhs[1])));
  if (occurs(rhs, target)) {
    throw Error(ErrorCode::kSelfRef,
                "'" + s.target + "' occurs in its own right-hand side " + format_term(rhs), line);
  }
  return Assign{target, rhs};
}

}  // namespace

Program parse_program(std::string_view text, std::string origin) {
  std::vector<std::string> vars;
  std::vector<std::string> consts;
  std::vector<std::pair<std::string, std::size_t>> declared;  // name, line
  std::vector<PendingNode> pending;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    LineParser p(tokenize(text.substr(start, end - start), line_no), line_no);
    start = end + 1;
    if (p.done()) continue;
    const std::string head = p.next("declaration");
    if (head == "vars" || head == "consts") {
      auto& names = head == "vars" ? vars : consts;
      do {
        names.push_back(p.identifier());
        declared.emplace_back(names.back(), line_no);
      } while (!p.done());
    } else if (head == "node") {
      pending.push_back(parse_node(p, line_no));
    } else {
      p.fail("expected 'vars', 'consts' or 'node', found '" + head + "'");
    }
  }

  UniversePtr universe;
  try {
    universe = build_universe(vars, consts);
  } catch (const Error& e) {
    // Point at the second declaration of the offending name.
    std::size_t line = 0;
    for (std::size_t i = 0; i < declared.size() && line == 0; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (declared[j].first == declared[i].first) line = declared[i].second;
      }
    }
    throw Error(e.code(), e.message(), line);
  }

  std::vector<RawNode> raw;
  raw.reserve(pending.size());
  for (const auto& node : pending) {
    RawNode r;
    r.id = node.id;
    r.line = node.line;
    r.preds = node.preds;
    switch (node.kind) {
      case PendingNode::kEntry: r.kind = EntryNode{}; break;
      case PendingNode::kConfluence: r.kind = ConfluenceNode{}; break;
      case PendingNode::kStatement:
        r.kind = FunctionNode{resolve_statement(node.statement, *universe, node.line)};
        break;
    }
    raw.push_back(std::move(r));
  }
  FlowGraph graph = validate_graph(universe, std::move(raw));
  return Program{universe, std::move(graph), std::move(origin)};
}

Program load_program(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParse, "cannot read " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_program(text.str(), path.string());
}

}  // namespace herbrand
