#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace herbrand {

enum class AtomKind { kVariable, kConstant, kReserved };

struct Atom {
  AtomKind kind = AtomKind::kVariable;
  std::string name;

  bool is_variable() const { return kind == AtomKind::kVariable; }
  // Reserved constants behave as constants everywhere.
  bool is_constant() const { return kind != AtomKind::kVariable; }

  friend bool operator==(const Atom&, const Atom&) = default;
};

// A finite term over atoms and the single binary operator `+`. Terms are
// immutable and share subterms; copying is cheap.
class Term {
 public:
  static Term atom(Atom a);
  static Term variable(std::string name);
  static Term constant(std::string name);
  static Term sum(Term lhs, Term rhs);

  bool is_atom() const;
  // Precondition: is_atom().
  const Atom& as_atom() const;
  // Precondition: !is_atom().
  const Term& lhs() const;
  const Term& rhs() const;

  // Atoms have depth 0.
  std::size_t depth() const;
  std::size_t hash() const { return hash_; }

  friend bool operator==(const Term& a, const Term& b);

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node);

  std::shared_ptr<const Node> node_;
  std::size_t hash_ = 0;
};

struct TermHash {
  std::size_t operator()(const Term& t) const { return t.hash(); }
};

// t[x <- alpha]. Precondition: x is a variable.
Term substitute(const Term& t, const Atom& x, const Term& alpha);

// True iff x appears in t.
bool occurs(const Term& t, const Atom& x);

// Fully parenthesized except at the top level: "(a+b)+c".
std::string format_term(const Term& t);

std::string_view reserved_constant_name(int which);  // which in {0, 1}

bool is_identifier(std::string_view text);
bool is_keyword(std::string_view text);

// The finite set of program expressions the analysis works over: every atom
// (user variables, user constants, two reserved constants) and every ordered
// sum of two atoms.
class TermUniverse {
 public:
  const std::vector<Atom>& atoms() const { return atoms_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  std::size_t atom_count() const { return atoms_.size(); }

  std::optional<std::size_t> index_of(const Term& t) const;
  std::optional<std::size_t> atom_index(std::string_view name) const;
  const Atom* find_atom(std::string_view name) const;

  bool contains(const Term& t) const { return index_of(t).has_value(); }

  // Index of the depth-1 term atoms()[i] + atoms()[j].
  std::size_t sum_index(std::size_t i, std::size_t j) const {
    return atoms_.size() + i * atoms_.size() + j;
  }
  bool is_sum_index(std::size_t index) const { return index >= atoms_.size(); }
  // Operand atom indices of a sum term.
  std::pair<std::size_t, std::size_t> sum_operands(std::size_t index) const;

  std::size_t reserved_index(int which) const;
  const Atom& reserved(int which) const { return atoms_[reserved_index(which)]; }

  // True if the term at `index` mentions a reserved constant.
  bool mentions_reserved(std::size_t index) const;

  friend bool operator==(const TermUniverse& a, const TermUniverse& b) {
    return a.atoms_ == b.atoms_;
  }

 private:
  friend std::shared_ptr<const TermUniverse> build_universe(
      std::span<const std::string>, std::span<const std::string>);

  std::vector<Atom> atoms_;
  std::vector<Term> terms_;
  std::unordered_map<std::string, std::size_t> by_name_;
};

using UniversePtr = std::shared_ptr<const TermUniverse>;

// Declaration order: variables, constants, then the two reserved constants;
// sums follow in row-major atom order. Throws E_UNDECLARED on duplicates and
// E_PARSE on names that are not identifiers.
UniversePtr build_universe(std::span<const std::string> vars,
                           std::span<const std::string> consts);

// `atom` or `atom + atom`; atoms resolved against the universe.
// Throws E_PARSE on malformed text and E_UNDECLARED on unknown names.
Term parse_term(std::string_view text, const TermUniverse& universe);

}  // namespace herbrand
