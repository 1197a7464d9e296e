#include "herbrand/transfer.hpp"

#include "herbrand/error.hpp"

namespace herbrand {

namespace {

std::size_t variable_index(const TermUniverse& universe, const Atom& y) {
  auto index = universe.atom_index(y.name);
  if (!index || !universe.atoms()[*index].is_variable() || !y.is_variable()) {
    throw Error(ErrorCode::kUndeclared, "'" + y.name + "' is not a declared variable");
  }
  return *index;
}

void check_rhs(const TermUniverse& universe, const Atom& y, const Term& beta) {
  if (occurs(beta, y)) {
    throw Error(ErrorCode::kSelfRef,
                "right-hand side " + format_term(beta) + " mentions its target " + y.name);
  }
  if (!universe.contains(beta)) {
    throw Error(ErrorCode::kUndeclared, "'" + format_term(beta) + "' is not a universe term");
  }
}

}  // namespace

void validate_statement(const Statement& s, const TermUniverse& universe) {
  std::visit(
      [&](const auto& stmt) {
        variable_index(universe, stmt.target);
        if constexpr (std::is_same_v<std::decay_t<decltype(stmt)>, Assign>) {
          check_rhs(universe, stmt.target, stmt.rhs);
        }
      },
      s);
}

std::string format_statement(const Statement& s) {
  if (const auto* assign = std::get_if<Assign>(&s)) {
    return assign->target.name + " := " + format_term(assign->rhs);
  }
  return std::get<NonDet>(s).target.name + " := *";
}

LatticeElem assign_transfer(const LatticeElem& l, const Atom& y, const Term& beta) {
  if (l.is_top()) return l;
  const auto& p = l.congruence();
  auto index = variable_index(p.universe(), y);
  check_rhs(p.universe(), y, beta);
  return p.rebind(index, beta);
}

LatticeElem nondet_transfer_with(const LatticeElem& l, const Atom& y, const Atom& c1,
                                 const Atom& c2) {
  if (l.is_top()) return l;
  if (!c1.is_constant() || !c2.is_constant() || c1 == c2) {
    throw Error(ErrorCode::kUndeclared, "non-deterministic assignment needs two distinct constants");
  }
  const auto& p = l.congruence();
  auto index = variable_index(p.universe(), y);
  auto first = p.rebind(index, Term::atom(c1));
  auto second = p.rebind(index, Term::atom(c2));
  return meet(meet(p, first), second);
}

LatticeElem nondet_transfer(const LatticeElem& l, const Atom& y) {
  if (l.is_top()) return l;
  const auto& universe = l.congruence().universe();
  return nondet_transfer_with(l, y, universe.reserved(0), universe.reserved(1));
}

LatticeElem apply_statement(const LatticeElem& l, const Statement& s) {
  if (const auto* assign = std::get_if<Assign>(&s)) {
    return assign_transfer(l, assign->target, assign->rhs);
  }
  return nondet_transfer(l, std::get<NonDet>(s).target);
}

Partition nondet_definitional(const Congruence& p, const Atom& y, std::span<const Term> betas) {
  const auto& universe = p.universe();
  variable_index(universe, y);
  for (const auto& beta : betas) {
    if (occurs(beta, y)) {
      throw Error(ErrorCode::kSelfRef, "replacement " + format_term(beta) + " mentions " + y.name);
    }
  }
  // Each universe term's signature: its value before, then its value under
  // every replacement. Equal signatures are exactly the surviving pairs.
  std::vector<std::vector<ExtendedValue>> seen;
  std::vector<std::uint32_t> labels;
  labels.reserve(universe.size());
  for (const auto& t : universe.terms()) {
    std::vector<ExtendedValue> signature;
    signature.push_back(p.term_value(t));
    for (const auto& beta : betas) signature.push_back(p.term_value(substitute(t, y, beta)));
    std::uint32_t label = 0;
    while (label < seen.size() && !(seen[label] == signature)) ++label;
    if (label == seen.size()) seen.push_back(std::move(signature));
    labels.push_back(label);
  }
  return Partition(p.universe_ptr(), labels);
}

}  // namespace herbrand
