#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "herbrand/error.hpp"
#include "herbrand/term.hpp"

namespace herbrand {
namespace {

Term v(const char* name) { return Term::variable(name); }
Term c(const char* name) { return Term::constant(name); }
Term sum(Term a, Term b) { return Term::sum(std::move(a), std::move(b)); }

Atom var_atom(const char* name) { return {AtomKind::kVariable, name}; }

TEST(Substitute, ReplacesTheVariableItself) {
  EXPECT_EQ(substitute(v("y"), var_atom("y"), sum(c("a"), c("b"))), sum(c("a"), c("b")));
}

TEST(Substitute, RecursesIntoSums) {
  EXPECT_EQ(substitute(sum(v("x"), v("y")), var_atom("y"), c("a")), sum(v("x"), c("a")));
}

TEST(Substitute, LeavesOtherAtoms) {
  EXPECT_EQ(substitute(c("b"), var_atom("y"), c("a")), c("b"));
  EXPECT_EQ(substitute(v("x"), var_atom("y"), c("a")), v("x"));
}

TEST(Substitute, DepthIsBounded) {
  std::mt19937 rng(7);
  const char* names[] = {"x", "y", "a"};
  std::function<Term(int)> gen = [&](int depth) -> Term {
    if (depth == 0 || rng() % 3 == 0) {
      int i = static_cast<int>(rng() % 3);
      return i == 2 ? c(names[i]) : v(names[i]);
    }
    return sum(gen(depth - 1), gen(depth - 1));
  };
  for (int i = 0; i < 300; ++i) {
    Term t = gen(4);
    Term alpha = gen(3);
    Term out = substitute(t, var_atom("y"), alpha);
    EXPECT_LE(out.depth(), t.depth() + alpha.depth());
    if (!occurs(t, var_atom("y"))) {
      EXPECT_EQ(out, t);
    }
  }
}

TEST(Occurs, Examples) {
  EXPECT_TRUE(occurs(sum(v("x"), v("y")), var_atom("x")));
  EXPECT_FALSE(occurs(sum(c("a"), c("b")), var_atom("x")));
  EXPECT_TRUE(occurs(v("y"), var_atom("y")));
}

TEST(Term, ConstantAndVariableOfSameNameDiffer) {
  EXPECT_FALSE(v("a") == c("a"));
}

TEST(BuildUniverse, Sizes) {
  std::vector<std::string> xy{"x", "y"}, a{"a"}, x{"x"}, ab{"a", "b"}, none;
  EXPECT_EQ(build_universe(xy, a)->atom_count(), 5u);
  EXPECT_EQ(build_universe(xy, a)->size(), 30u);
  EXPECT_EQ(build_universe(none, none)->atom_count(), 2u);
  EXPECT_EQ(build_universe(none, none)->size(), 6u);
  EXPECT_EQ(build_universe(x, ab)->size(), 30u);
}

TEST(BuildUniverse, OrderingIsDeterministic) {
  std::vector<std::string> vars{"x", "y"}, consts{"a"};
  auto u = build_universe(vars, consts);
  auto again = build_universe(vars, consts);
  EXPECT_EQ(u->terms(), again->terms());

  std::vector<std::string> names;
  for (const auto& atom : u->atoms()) names.push_back(atom.name);
  EXPECT_EQ(names, (std::vector<std::string>{"x", "y", "a", "$nd1", "$nd2"}));
  EXPECT_EQ(u->terms()[5], sum(v("x"), v("x")));
  EXPECT_EQ(u->terms()[6], sum(v("x"), v("y")));
  EXPECT_EQ(u->terms()[u->sum_index(2, 0)], sum(c("a"), v("x")));
  for (std::size_t i = 0; i < u->size(); ++i) {
    EXPECT_EQ(u->index_of(u->terms()[i]), i);
    EXPECT_LE(u->terms()[i].depth(), 1u);
  }
  EXPECT_TRUE(u->reserved(0).is_constant());
  EXPECT_TRUE(u->mentions_reserved(u->sum_index(0, u->reserved_index(1))));
  EXPECT_FALSE(u->mentions_reserved(u->sum_index(0, 2)));
}

TEST(BuildUniverse, RejectsDuplicatesAndBadNames) {
  std::vector<std::string> dup{"x", "x"}, none, clash_v{"x"}, clash_c{"x"};
  EXPECT_THROW(build_universe(dup, none), Error);
  try {
    build_universe(clash_v, clash_c);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUndeclared);
  }
  std::vector<std::string> bad{"$nd1"};
  try {
    build_universe(bad, none);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParse);
  }
}

TEST(ParseTerm, RoundTrip) {
  std::vector<std::string> vars{"x", "y"}, consts{"a"};
  auto u = build_universe(vars, consts);
  EXPECT_EQ(parse_term("x+a", *u), sum(v("x"), c("a")));
  EXPECT_EQ(parse_term("  y ", *u), v("y"));
  EXPECT_EQ(format_term(parse_term("x + a", *u)), "x+a");
  for (const auto& t : u->terms()) {
    if (u->mentions_reserved(*u->index_of(t))) continue;
    EXPECT_EQ(parse_term(format_term(t), *u), t);
  }
}

TEST(ParseTerm, Errors) {
  std::vector<std::string> vars{"x"}, consts{"a"};
  auto u = build_universe(vars, consts);
  auto code_of = [&](const char* text) {
    try {
      parse_term(text, *u);
    } catch (const Error& e) {
      return e.code();
    }
    ADD_FAILURE() << text << " parsed";
    return ErrorCode::kGraph;
  };
  EXPECT_EQ(code_of("x+"), ErrorCode::kParse);
  EXPECT_EQ(code_of("+x"), ErrorCode::kParse);
  EXPECT_EQ(code_of("x+a+a"), ErrorCode::kParse);
  EXPECT_EQ(code_of(""), ErrorCode::kParse);
  EXPECT_EQ(code_of("q"), ErrorCode::kUndeclared);
  EXPECT_EQ(code_of("$nd1"), ErrorCode::kParse);
}

TEST(FormatTerm, ParenthesizesCompoundOperands) {
  EXPECT_EQ(format_term(sum(sum(c("a"), c("b")), c("c"))), "(a+b)+c");
  EXPECT_EQ(format_term(sum(v("x"), sum(v("y"), c("a")))), "x+(y+a)");
}

TEST(Identifiers, GrammarAndKeywords) {
  EXPECT_TRUE(is_identifier("_x1"));
  EXPECT_FALSE(is_identifier("1x"));
  EXPECT_FALSE(is_identifier("$nd1"));
  EXPECT_TRUE(is_keyword("pred"));
  EXPECT_FALSE(is_keyword("x"));
}

}  // namespace
}  // namespace herbrand
