#include "herbrand/congruence.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "herbrand/error.hpp"

namespace herbrand {

void require_same_universe(const TermUniverse& a, const TermUniverse& b) {
  if (&a != &b && !(a == b)) {
    throw Error(ErrorCode::kUniverse, "operands belong to different term universes");
  }
}

// ---------------------------------------------------------------------------
// Partition

Partition::Partition(UniversePtr universe, std::span<const std::uint32_t> labels)
    : universe_(std::move(universe)) {
  if (labels.size() != universe_->size()) {
    throw Error(ErrorCode::kUniverse, "partition labels do not cover the universe");
  }
  std::unordered_map<std::uint32_t, std::uint32_t> dense;
  labels_.reserve(labels.size());
  for (auto label : labels) {
    auto [it, inserted] = dense.emplace(label, static_cast<std::uint32_t>(dense.size()));
    labels_.push_back(ClassId{it->second});
  }
  class_count_ = dense.size();
}

std::vector<std::vector<std::size_t>> Partition::classes() const {
  std::vector<std::vector<std::size_t>> result(class_count_);
  for (std::size_t i = 0; i < labels_.size(); ++i) result[labels_[i].value].push_back(i);
  return result;
}

std::vector<std::vector<std::string>> class_strings(const Partition& p) {
  std::vector<std::vector<std::string>> result;
  for (const auto& members : p.classes()) {
    std::vector<std::string> names;
    names.reserve(members.size());
    for (auto index : members) names.push_back(format_term(p.universe().terms()[index]));
    std::sort(names.begin(), names.end());
    result.push_back(std::move(names));
  }
  std::sort(result.begin(), result.end());
  return result;
}

// ---------------------------------------------------------------------------
// ExtendedValue

ExtendedValue ExtendedValue::base(ClassId id) {
  ExtendedValue v;
  v.id_ = id;
  return v;
}

ExtendedValue ExtendedValue::pair(ExtendedValue lhs, ExtendedValue rhs) {
  ExtendedValue v;
  v.lhs_ = std::make_shared<const ExtendedValue>(std::move(lhs));
  v.rhs_ = std::make_shared<const ExtendedValue>(std::move(rhs));
  return v;
}

bool operator==(const ExtendedValue& a, const ExtendedValue& b) {
  if (a.is_base() != b.is_base()) return false;
  if (a.is_base()) return a.id_ == b.id_;
  return a.lhs() == b.lhs() && a.rhs() == b.rhs();
}

// ---------------------------------------------------------------------------
// Congruence

Congruence::Congruence(UniversePtr universe)
    : universe_(universe),
      store_(universe->atom_count(), 0),
      partition_(universe, std::vector<std::uint32_t>(universe->size(), 0)) {}

std::uint32_t Congruence::add_node(Node node) {
  nodes_.push_back(node);
  return static_cast<std::uint32_t>(nodes_.size() - 1);
}

std::optional<std::uint32_t> Congruence::find_sum(std::uint32_t lhs, std::uint32_t rhs) const {
  auto it = sums_.find(sum_key(lhs, rhs));
  if (it == sums_.end()) return std::nullopt;
  return it->second;
}

std::uint32_t Congruence::intern_sum(std::uint32_t lhs, std::uint32_t rhs) {
  if (auto found = find_sum(lhs, rhs)) return *found;
  auto id = add_node(Node{NodeKind::kSum, lhs, rhs});
  sums_.emplace(sum_key(lhs, rhs), id);
  return id;
}

namespace {

std::size_t atom_or_throw(const TermUniverse& universe, const Atom& atom) {
  auto index = universe.atom_index(atom.name);
  if (!index || universe.atoms()[*index].kind != atom.kind) {
    throw Error(ErrorCode::kUndeclared, "'" + atom.name + "' is not in the term universe");
  }
  return *index;
}

void check_atoms(const TermUniverse& universe, const Term& t) {
  if (t.is_atom()) {
    atom_or_throw(universe, t.as_atom());
    return;
  }
  check_atoms(universe, t.lhs());
  check_atoms(universe, t.rhs());
}

}  // namespace

std::uint32_t Congruence::materialize(const Term& t) {
  if (t.is_atom()) return store_[atom_or_throw(*universe_, t.as_atom())];
  auto lhs = materialize(t.lhs());
  auto rhs = materialize(t.rhs());
  return intern_sum(lhs, rhs);
}

std::optional<std::uint32_t> Congruence::lookup_node(const Term& t) const {
  if (t.is_atom()) return store_[atom_or_throw(*universe_, t.as_atom())];
  auto lhs = lookup_node(t.lhs());
  if (!lhs) return std::nullopt;
  auto rhs = lookup_node(t.rhs());
  if (!rhs) return std::nullopt;
  return find_sum(*lhs, *rhs);
}

std::optional<Congruence::Key> Congruence::lookup_key(const Term& t) const {
  if (t.is_atom()) return node_key(store_[atom_or_throw(*universe_, t.as_atom())]);
  auto lhs = lookup_node(t.lhs());
  auto rhs = lookup_node(t.rhs());
  if (!lhs || !rhs) return std::nullopt;
  if (auto sum = find_sum(*lhs, *rhs)) return node_key(*sum);
  return sum_key(*lhs, *rhs);
}

void Congruence::finish() {
  constexpr auto kUnvisited = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> renumber(nodes_.size(), kUnvisited);
  std::vector<Node> ordered;
  ordered.reserve(nodes_.size());

  // Post-order from the atoms in universe order; the numbering depends only
  // on the congruence, which makes operator== a plain comparison.
  std::function<std::uint32_t(std::uint32_t)> visit = [&](std::uint32_t id) {
    if (renumber[id] != kUnvisited) return renumber[id];
    Node node = nodes_[id];
    if (node.kind == NodeKind::kSum) {
      node.lhs = visit(node.lhs);
      node.rhs = visit(node.rhs);
    }
    renumber[id] = static_cast<std::uint32_t>(ordered.size());
    ordered.push_back(node);
    return renumber[id];
  };
  for (auto& slot : store_) slot = visit(slot);

  nodes_ = std::move(ordered);
  sums_.clear();
  for (std::uint32_t id = 0; id < nodes_.size(); ++id) {
    if (nodes_[id].kind == NodeKind::kSum) sums_.emplace(sum_key(nodes_[id].lhs, nodes_[id].rhs), id);
  }

  const auto& universe = *universe_;
  std::vector<std::uint32_t> labels(universe.size());
  class_by_key_.clear();
  auto label_for = [&](Key key) {
    auto next = ClassId{static_cast<std::uint32_t>(class_by_key_.size())};
    return class_by_key_.emplace(key, next).first->second.value;
  };
  for (std::size_t i = 0; i < universe.atom_count(); ++i) labels[i] = label_for(node_key(store_[i]));
  for (std::size_t i = 0; i < universe.atom_count(); ++i) {
    for (std::size_t j = 0; j < universe.atom_count(); ++j) {
      auto lhs = store_[i];
      auto rhs = store_[j];
      auto sum = find_sum(lhs, rhs);
      labels[universe.sum_index(i, j)] = label_for(sum ? node_key(*sum) : sum_key(lhs, rhs));
    }
  }
  partition_ = Partition(universe_, labels);
}

Congruence Congruence::bottom(UniversePtr universe) {
  Congruence result(universe);
  const auto& atoms = universe->atoms();
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    Node leaf = atoms[i].is_variable()
                    ? Node{NodeKind::kOpaque, 0, 0}
                    : Node{NodeKind::kConstant, static_cast<std::uint32_t>(i), 0};
    result.store_[i] = result.add_node(leaf);
  }
  result.finish();
  return result;
}

Congruence Congruence::with_bindings(
    UniversePtr universe, std::span<const std::pair<std::string, Term>> bindings) {
  Congruence result = bottom(universe);
  std::vector<std::pair<std::size_t, std::uint32_t>> updates;
  for (const auto& [name, term] : bindings) {
    const Atom* atom = universe->find_atom(name);
    if (atom == nullptr || !atom->is_variable()) {
      throw Error(ErrorCode::kUndeclared, "'" + name + "' is not a declared variable");
    }
    updates.emplace_back(*universe->atom_index(name), result.materialize(term));
  }
  for (auto [atom, node] : updates) result.store_[atom] = node;
  result.finish();
  return result;
}

Congruence Congruence::rebind(std::size_t variable_atom, const Term& rhs) const {
  Congruence result = *this;
  auto node = result.materialize(rhs);
  result.store_[variable_atom] = node;
  result.finish();
  return result;
}

Congruence meet(const Congruence& a, const Congruence& b) {
  require_same_universe(*a.universe_, *b.universe_);
  using Node = Congruence::Node;
  using Kind = Congruence::NodeKind;
  Congruence result(a.universe_);
  std::unordered_map<Congruence::Key, std::uint32_t> memo;

  // Anti-unification: matching sums stay sums, equal constants stay
  // constants, and every other distinct pair becomes a fresh opaque leaf.
  std::function<std::uint32_t(std::uint32_t, std::uint32_t)> generalize =
      [&](std::uint32_t x, std::uint32_t y) -> std::uint32_t {
    auto key = Congruence::sum_key(x, y);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const Node& nx = a.nodes_[x];
    const Node& ny = b.nodes_[y];
    std::uint32_t id;
    if (nx.kind == Kind::kSum && ny.kind == Kind::kSum) {
      auto lhs = generalize(nx.lhs, ny.lhs);
      auto rhs = generalize(nx.rhs, ny.rhs);
      id = result.intern_sum(lhs, rhs);
    } else if (nx.kind == Kind::kConstant && ny.kind == Kind::kConstant && nx.lhs == ny.lhs) {
      id = result.add_node(nx);
    } else {
      id = result.add_node(Node{Kind::kOpaque, 0, 0});
    }
    memo.emplace(key, id);
    return id;
  };
  for (std::size_t i = 0; i < a.store_.size(); ++i) {
    result.store_[i] = generalize(a.store_[i], b.store_[i]);
  }
  result.finish();
  return result;
}

bool operator==(const Congruence& a, const Congruence& b) {
  return *a.universe_ == *b.universe_ && a.store_ == b.store_ && a.nodes_ == b.nodes_;
}

ClassId Congruence::class_of(const Term& t) const {
  auto index = universe_->index_of(t);
  if (!index) {
    throw Error(ErrorCode::kUndeclared, "'" + format_term(t) + "' is not a universe term");
  }
  return partition_.class_of(*index);
}

ExtendedValue Congruence::term_value(const Term& t) const {
  check_atoms(*universe_, t);
  if (auto index = universe_->index_of(t)) return ExtendedValue::base(partition_.class_of(*index));
  if (auto key = lookup_key(t)) {
    if (auto it = class_by_key_.find(*key); it != class_by_key_.end()) {
      return ExtendedValue::base(it->second);
    }
  }
  return ExtendedValue::pair(term_value(t.lhs()), term_value(t.rhs()));
}

bool Congruence::equivalent(const Term& a, const Term& b) const {
  return term_value(a) == term_value(b);
}

std::vector<Term> Congruence::get_class(const Term& t) const {
  auto id = class_of(t);
  std::vector<Term> result;
  for (std::size_t i = 0; i < universe_->size(); ++i) {
    if (partition_.class_of(i) == id) result.push_back(universe_->terms()[i]);
  }
  return result;
}

// ---------------------------------------------------------------------------
// Lattice operations

Congruence bottom(UniversePtr universe) { return Congruence::bottom(std::move(universe)); }

ExtendedValue term_value(const Term& t, const Congruence& p) { return p.term_value(t); }
bool equivalent(const Term& a, const Term& b, const Congruence& p) { return p.equivalent(a, b); }
std::vector<Term> get_class(const Term& t, const Congruence& p) { return p.get_class(t); }

LatticeElem meet(const LatticeElem& a, const LatticeElem& b) {
  if (a.is_top()) return b;
  if (b.is_top()) return a;
  return meet(a.congruence(), b.congruence());
}

LatticeElem meet_all(std::span<const LatticeElem> elems) {
  LatticeElem result = LatticeElem::top();
  for (const auto& e : elems) result = meet(result, e);
  return result;
}

bool refines(const Partition& finer, const Partition& coarser) {
  require_same_universe(finer.universe(), coarser.universe());
  std::vector<std::optional<ClassId>> image(finer.class_count());
  for (std::size_t i = 0; i < finer.universe().size(); ++i) {
    auto& slot = image[finer.class_of(i).value];
    if (!slot) {
      slot = coarser.class_of(i);
    } else if (*slot != coarser.class_of(i)) {
      return false;
    }
  }
  return true;
}

bool refines(const LatticeElem& finer, const LatticeElem& coarser) {
  if (coarser.is_top()) return true;
  if (finer.is_top()) return false;
  return refines(finer.partition(), coarser.partition());
}

bool refines_exactly(const LatticeElem& finer, const LatticeElem& coarser) {
  if (coarser.is_top()) return true;
  if (finer.is_top()) return false;
  return meet(finer, coarser) == finer;
}

bool partitions_equal(const Partition& a, const Partition& b) {
  require_same_universe(a.universe(), b.universe());
  return a == b;
}

bool partitions_equal(const LatticeElem& a, const LatticeElem& b) {
  if (a.is_top() || b.is_top()) return a.is_top() && b.is_top();
  return partitions_equal(a.partition(), b.partition());
}

CongruenceCheck is_congruence(const Partition& p) {
  const auto& universe = p.universe();
  const auto& atoms = universe.atoms();
  const auto& terms = universe.terms();
  auto violation = [](Axiom axiom, std::vector<Term> witnesses, std::string message) {
    CongruenceCheck check;
    check.ok = false;
    check.axiom = axiom;
    check.witnesses = std::move(witnesses);
    check.message = std::move(message);
    return check;
  };

  std::map<ClassId, std::size_t> constant_in_class;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (!atoms[i].is_constant()) continue;
    auto [it, inserted] = constant_in_class.emplace(p.class_of(i), i);
    if (!inserted) {
      return violation(Axiom::kDistinctConstants, {terms[it->second], terms[i]},
                       "distinct constants " + atoms[it->second].name + " and " + atoms[i].name +
                           " share a class");
    }
  }

  std::map<std::pair<ClassId, ClassId>, std::size_t> sum_by_operands;
  std::map<ClassId, std::size_t> operands_by_sum;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    for (std::size_t j = 0; j < atoms.size(); ++j) {
      auto index = universe.sum_index(i, j);
      auto operands = std::make_pair(p.class_of(i), p.class_of(j));
      auto [by_ops, fresh_ops] = sum_by_operands.emplace(operands, index);
      if (!fresh_ops && p.class_of(by_ops->second) != p.class_of(index)) {
        return violation(Axiom::kRespectsOperator, {terms[by_ops->second], terms[index]},
                         "sums of congruent operands are not congruent");
      }
      auto [by_sum, fresh_sum] = operands_by_sum.emplace(p.class_of(index), index);
      if (!fresh_sum) {
        auto [k, l] = universe.sum_operands(by_sum->second);
        if (p.class_of(k) != p.class_of(i) || p.class_of(l) != p.class_of(j)) {
          return violation(Axiom::kRespectsOperator, {terms[by_sum->second], terms[index]},
                           "congruent sums have non-congruent operands");
        }
      }
    }
  }

  for (std::size_t i = 0; i < terms.size(); ++i) {
    auto it = constant_in_class.find(p.class_of(i));
    if (it == constant_in_class.end() || it->second == i) continue;
    if (universe.is_sum_index(i) || atoms[i].is_constant()) {
      return violation(Axiom::kConstantClasses, {terms[it->second], terms[i]},
                       "constant " + atoms[it->second].name + " is congruent to non-variable " +
                           format_term(terms[i]));
    }
  }
  return {};
}

}  // namespace herbrand
