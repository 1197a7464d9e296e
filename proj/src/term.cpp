#include "herbrand/term.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "herbrand/error.hpp"

namespace herbrand {

namespace {

constexpr std::array<std::string_view, 2> kReservedNames = {"$nd1", "$nd2"};

constexpr std::array<std::string_view, 9> kKeywords = {
    "vars", "consts", "node", "entry", "assign", "nondet", "confluence", "pred", ":="};

std::size_t mix(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

struct Term::Node {
  std::optional<Atom> atom;
  std::shared_ptr<const Term> lhs;
  std::shared_ptr<const Term> rhs;
  std::size_t depth = 0;
};

Term::Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {
  if (node_->atom) {
    hash_ = mix(std::hash<std::string>{}(node_->atom->name),
                static_cast<std::size_t>(node_->atom->kind));
  } else {
    hash_ = mix(mix(0x5bd1e995, node_->lhs->hash()), node_->rhs->hash());
  }
}

Term Term::atom(Atom a) {
  auto node = std::make_shared<Node>();
  node->atom = std::move(a);
  return Term(std::move(node));
}

Term Term::variable(std::string name) {
  return atom(Atom{AtomKind::kVariable, std::move(name)});
}

Term Term::constant(std::string name) {
  return atom(Atom{AtomKind::kConstant, std::move(name)});
}

Term Term::sum(Term lhs, Term rhs) {
  auto node = std::make_shared<Node>();
  node->depth = 1 + std::max(lhs.depth(), rhs.depth());
  node->lhs = std::make_shared<const Term>(std::move(lhs));
  node->rhs = std::make_shared<const Term>(std::move(rhs));
  return Term(std::move(node));
}

bool Term::is_atom() const { return node_->atom.has_value(); }
const Atom& Term::as_atom() const { return *node_->atom; }
const Term& Term::lhs() const { return *node_->lhs; }
const Term& Term::rhs() const { return *node_->rhs; }
std::size_t Term::depth() const { return node_->depth; }

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash_ != b.hash_ || a.is_atom() != b.is_atom()) return false;
  if (a.is_atom()) return a.as_atom() == b.as_atom();
  return a.lhs() == b.lhs() && a.rhs() == b.rhs();
}

Term substitute(const Term& t, const Atom& x, const Term& alpha) {
  if (t.is_atom()) return t.as_atom() == x ? alpha : t;
  if (!occurs(t, x)) return t;
  return Term::sum(substitute(t.lhs(), x, alpha), substitute(t.rhs(), x, alpha));
}

bool occurs(const Term& t, const Atom& x) {
  if (t.is_atom()) return t.as_atom() == x;
  return occurs(t.lhs(), x) || occurs(t.rhs(), x);
}

std::string format_term(const Term& t) {
  if (t.is_atom()) return t.as_atom().name;
  auto operand = [](const Term& s) {
    return s.is_atom() ? format_term(s) : "(" + format_term(s) + ")";
  };
  return operand(t.lhs()) + "+" + operand(t.rhs());
}

std::string_view reserved_constant_name(int which) { return kReservedNames.at(which); }

bool is_identifier(std::string_view text) {
  if (text.empty()) return false;
  auto head = static_cast<unsigned char>(text.front());
  if (!std::isalpha(head) && head != '_') return false;
  return std::all_of(text.begin() + 1, text.end(), [](char c) {
    auto u = static_cast<unsigned char>(c);
    return std::isalnum(u) || u == '_';
  });
}

bool is_keyword(std::string_view text) {
  return std::find(kKeywords.begin(), kKeywords.end(), text) != kKeywords.end();
}

std::optional<std::size_t> TermUniverse::atom_index(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

const Atom* TermUniverse::find_atom(std::string_view name) const {
  auto index = atom_index(name);
  return index ? &atoms_[*index] : nullptr;
}

std::optional<std::size_t> TermUniverse::index_of(const Term& t) const {
  auto atom_of = [this](const Term& s) -> std::optional<std::size_t> {
    if (!s.is_atom()) return std::nullopt;
    auto index = atom_index(s.as_atom().name);
    if (!index || atoms_[*index].kind != s.as_atom().kind) return std::nullopt;
    return index;
  };
  if (t.is_atom()) return atom_of(t);
  auto lhs = atom_of(t.lhs());
  auto rhs = atom_of(t.rhs());
  if (!lhs || !rhs) return std::nullopt;
  return sum_index(*lhs, *rhs);
}

std::pair<std::size_t, std::size_t> TermUniverse::sum_operands(std::size_t index) const {
  std::size_t offset = index - atoms_.size();
  return {offset / atoms_.size(), offset % atoms_.size()};
}

std::size_t TermUniverse::reserved_index(int which) const {
  return atoms_.size() - 2 + static_cast<std::size_t>(which);
}

bool TermUniverse::mentions_reserved(std::size_t index) const {
  auto reserved = [this](std::size_t atom) { return atoms_[atom].kind == AtomKind::kReserved; };
  if (!is_sum_index(index)) return reserved(index);
  auto [lhs, rhs] = sum_operands(index);
  return reserved(lhs) || reserved(rhs);
}

UniversePtr build_universe(std::span<const std::string> vars,
                           std::span<const std::string> consts) {
  auto universe = std::make_shared<TermUniverse>();
  auto add = [&](std::string_view name, AtomKind kind) {
    if (kind != AtomKind::kReserved && (!is_identifier(name) || is_keyword(name))) {
      throw Error(ErrorCode::kParse, "invalid identifier '" + std::string(name) + "'");
    }
    auto [it, inserted] = universe->by_name_.emplace(name, universe->atoms_.size());
    if (!inserted) {
      throw Error(ErrorCode::kUndeclared, "duplicate declaration of '" + std::string(name) + "'");
    }
    universe->atoms_.push_back(Atom{kind, std::string(name)});
  };
  for (const auto& name : vars) add(name, AtomKind::kVariable);
  for (const auto& name : consts) add(name, AtomKind::kConstant);
  for (auto name : kReservedNames) add(name, AtomKind::kReserved);

  const auto& atoms = universe->atoms_;
  universe->terms_.reserve(atoms.size() + atoms.size() * atoms.size());
  for (const auto& a : atoms) universe->terms_.push_back(Term::atom(a));
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    for (std::size_t j = 0; j < atoms.size(); ++j) {
      universe->terms_.push_back(Term::sum(universe->terms_[i], universe->terms_[j]));
    }
  }
  return universe;
}

Term parse_term(std::string_view text, const TermUniverse& universe) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  auto resolve = [&](std::string_view name) {
    name = trim(name);
    if (!is_identifier(name)) {
      throw Error(ErrorCode::kParse, "expected identifier in term '" + std::string(text) + "'");
    }
    const Atom* atom = universe.find_atom(name);
    if (atom == nullptr) {
      throw Error(ErrorCode::kUndeclared, "undeclared name '" + std::string(name) + "'");
    }
    return Term::atom(*atom);
  };
  auto plus = text.find('+');
  if (plus == std::string_view::npos) return resolve(text);
  if (text.find('+', plus + 1) != std::string_view::npos) {
    throw Error(ErrorCode::kParse, "term deeper than one '+': '" + std::string(text) + "'");
  }
  return Term::sum(resolve(text.substr(0, plus)), resolve(text.substr(plus + 1)));
}

}  // namespace herbrand
