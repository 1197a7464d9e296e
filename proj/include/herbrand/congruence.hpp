#pragma once

// Congruences of terms and the lattice built from them.
//
// A congruence is stored exactly, as a symbolic store: every atom maps to a
// node of a hash-consed DAG whose leaves are constants or opaque values and
// whose inner nodes are sums. Two terms are congruent iff they evaluate to
// the same node. Hash-consing makes the operator axiom hold by construction,
// distinct constants evaluate to distinct leaves, and a sum never evaluates
// to a leaf, so every store denotes a valid congruence over all terms.
//
// The observable Partition is the restriction of that congruence to the
// finite universe. Storing more than the restriction is what keeps meet and
// the transfer functions exact: two partitions with the same restriction can
// still disagree on terms like (a+b)+b, and a later assignment can bring such
// a term back into the universe.

#include <cstdint>
#include <compare>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "herbrand/term.hpp"

namespace herbrand {

struct ClassId {
  std::uint32_t value = 0;
  friend auto operator<=>(const ClassId&, const ClassId&) = default;
};

// A labeling of every universe term by a dense class id. Labels are
// normalized to first-occurrence order, so two partitions inducing the same
// equivalence relation compare equal whatever labels they were built from.
// A Partition need not be a congruence; see is_congruence().
class Partition {
 public:
  Partition(UniversePtr universe, std::span<const std::uint32_t> labels);

  const TermUniverse& universe() const { return *universe_; }
  const UniversePtr& universe_ptr() const { return universe_; }

  ClassId class_of(std::size_t term_index) const { return labels_[term_index]; }
  std::size_t class_count() const { return class_count_; }
  std::span<const ClassId> labels() const { return labels_; }

  // Term indices of each class, in class id order.
  std::vector<std::vector<std::size_t>> classes() const;

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.labels_ == b.labels_;
  }

 private:
  UniversePtr universe_;
  std::vector<ClassId> labels_;
  std::size_t class_count_ = 0;
};

// Canonical value of an arbitrary term under a congruence: the class of a
// universe term it is congruent to, or the pair of its operands' values.
class ExtendedValue {
 public:
  static ExtendedValue base(ClassId id);
  static ExtendedValue pair(ExtendedValue lhs, ExtendedValue rhs);

  bool is_base() const { return !lhs_; }
  ClassId base_class() const { return id_; }
  const ExtendedValue& lhs() const { return *lhs_; }
  const ExtendedValue& rhs() const { return *rhs_; }

  friend bool operator==(const ExtendedValue& a, const ExtendedValue& b);

 private:
  ClassId id_;
  std::shared_ptr<const ExtendedValue> lhs_;
  std::shared_ptr<const ExtendedValue> rhs_;
};

class Congruence {
 public:
  // Every term is alone in its class.
  static Congruence bottom(UniversePtr universe);

  // Starting from bottom, binds each named variable to the value its term has
  // under bottom, simultaneously. {x -> a} merges x and a; {x -> a+b} puts x
  // into the class of a+b. Throws E_UNDECLARED for unknown or non-variable
  // names.
  static Congruence with_bindings(UniversePtr universe,
                                  std::span<const std::pair<std::string, Term>> bindings);

  const TermUniverse& universe() const { return *universe_; }
  const UniversePtr& universe_ptr() const { return universe_; }
  const Partition& partition() const { return partition_; }

  // Throws E_UNDECLARED if t is not a universe term.
  ClassId class_of(const Term& t) const;
  // Throws E_UNDECLARED if t mentions an atom outside the universe.
  ExtendedValue term_value(const Term& t) const;
  bool equivalent(const Term& a, const Term& b) const;
  std::vector<Term> get_class(const Term& t) const;

  // The store after `variable := rhs`, where rhs is evaluated in this store.
  // The caller has checked that rhs does not mention the variable.
  Congruence rebind(std::size_t variable_atom, const Term& rhs) const;

  // Exact meet: the congruence of the least general generalization of both
  // stores. Its restriction is the pairwise class intersection.
  friend Congruence meet(const Congruence& a, const Congruence& b);

  // Identity as congruences over all terms, not just the universe.
  friend bool operator==(const Congruence& a, const Congruence& b);

  std::size_t node_count() const { return nodes_.size(); }

 private:
  enum class NodeKind : std::uint8_t { kConstant, kOpaque, kSum };
  struct Node {
    NodeKind kind;
    std::uint32_t lhs;  // atom index for constants; operand for sums
    std::uint32_t rhs;
    friend bool operator==(const Node&, const Node&) = default;
  };

  // Universe class lookup key: a node id, or a sum of two nodes that has no
  // node of its own.
  using Key = std::uint64_t;
  static Key node_key(std::uint32_t node) { return node; }
  static Key sum_key(std::uint32_t lhs, std::uint32_t rhs) {
    return ((static_cast<Key>(lhs) + 1) << 32) | rhs;
  }

  explicit Congruence(UniversePtr universe);

  std::uint32_t add_node(Node node);
  std::optional<std::uint32_t> find_sum(std::uint32_t lhs, std::uint32_t rhs) const;
  std::uint32_t intern_sum(std::uint32_t lhs, std::uint32_t rhs);
  // Node of t, creating sum nodes as needed.
  std::uint32_t materialize(const Term& t);
  // Key of t if it is expressible without new nodes.
  std::optional<Key> lookup_key(const Term& t) const;
  std::optional<std::uint32_t> lookup_node(const Term& t) const;

  // Renumbers reachable nodes in a canonical order and recomputes the
  // universe partition. Must run after every mutation.
  void finish();

  UniversePtr universe_;
  std::vector<Node> nodes_;
  std::vector<std::uint32_t> store_;
  std::unordered_map<Key, std::uint32_t> sums_;
  std::unordered_map<Key, ClassId> class_by_key_;
  Partition partition_;
};

// Bottom or an exact congruence, or the artificial top element.
class LatticeElem {
 public:
  static LatticeElem top() { return LatticeElem(); }
  LatticeElem(Congruence congruence) : value_(std::move(congruence)) {}  // NOLINT

  bool is_top() const { return !value_.has_value(); }
  // Precondition: !is_top().
  const Congruence& congruence() const { return *value_; }
  const Partition& partition() const { return value_->partition(); }

  // Exact identity; see operator== on Congruence.
  friend bool operator==(const LatticeElem& a, const LatticeElem& b) {
    return a.value_ == b.value_;
  }

 private:
  LatticeElem() = default;
  std::optional<Congruence> value_;
};

Congruence bottom(UniversePtr universe);

ExtendedValue term_value(const Term& t, const Congruence& p);
bool equivalent(const Term& a, const Term& b, const Congruence& p);
std::vector<Term> get_class(const Term& t, const Congruence& p);

// Top absorbs. Throws E_UNIVERSE when the universes differ.
LatticeElem meet(const LatticeElem& a, const LatticeElem& b);
// Empty input gives top.
LatticeElem meet_all(std::span<const LatticeElem> elems);

// Every class of `finer` lies inside a class of `coarser`, over the universe.
bool refines(const Partition& finer, const Partition& coarser);
bool refines(const LatticeElem& finer, const LatticeElem& coarser);
// Refinement over all terms: meet(finer, coarser) == finer.
bool refines_exactly(const LatticeElem& finer, const LatticeElem& coarser);

// Same equivalence relation on the universe, or both top.
bool partitions_equal(const Partition& a, const Partition& b);
bool partitions_equal(const LatticeElem& a, const LatticeElem& b);

enum class Axiom { kDistinctConstants, kRespectsOperator, kConstantClasses };

struct CongruenceCheck {
  bool ok = true;
  Axiom axiom = Axiom::kDistinctConstants;
  std::vector<Term> witnesses;
  std::string message;

  explicit operator bool() const { return ok; }
};

// Checks the three congruence axioms exhaustively over the universe.
CongruenceCheck is_congruence(const Partition& p);

// Class lists of a partition as formatted, sorted terms.
std::vector<std::vector<std::string>> class_strings(const Partition& p);

void require_same_universe(const TermUniverse& a, const TermUniverse& b);

}  // namespace herbrand
