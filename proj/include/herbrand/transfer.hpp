#pragma once

#include <span>
#include <variant>

#include "herbrand/congruence.hpp"
#include "herbrand/term.hpp"

namespace herbrand {

// target := rhs, with rhs a universe term not mentioning target.
struct Assign {
  Atom target;
  Term rhs;
};

// target := *  (an input or otherwise unknown value)
struct NonDet {
  Atom target;
};

using Statement = std::variant<Assign, NonDet>;

// Throws E_SELF_REF if the statement's right-hand side mentions its target,
// E_UNDECLARED if any atom is outside the universe or the target is not a
// variable.
void validate_statement(const Statement& s, const TermUniverse& universe);

std::string format_statement(const Statement& s);

// After y := beta, t and t' are congruent iff t[y<-beta] and t'[y<-beta]
// were congruent before. Top maps to top without looking at the statement.
LatticeElem assign_transfer(const LatticeElem& l, const Atom& y, const Term& beta);

// P meet f_{y<-c1}(P) meet f_{y<-c2}(P) for the two reserved constants.
LatticeElem nondet_transfer(const LatticeElem& l, const Atom& y);

// Same characterization with a caller-chosen pair of distinct constants.
LatticeElem nondet_transfer_with(const LatticeElem& l, const Atom& y, const Atom& c1,
                                 const Atom& c2);

LatticeElem apply_statement(const LatticeElem& l, const Statement& s);

// Definitional form of y := * restricted to a finite set of replacement
// terms: t ~ t' iff t ~ t' before and t[y<-beta] ~ t'[y<-beta] before for
// every beta. Only the universe restriction is produced. Throws E_SELF_REF
// if some beta mentions y. Intended as an oracle.
Partition nondet_definitional(const Congruence& p, const Atom& y, std::span<const Term> betas);

}  // namespace herbrand
