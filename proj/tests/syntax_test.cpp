#include <gtest/gtest.h>

#include <random>

#include "idl/error.hpp"
#include "idl/random.hpp"
#include "idl/text.hpp"

using namespace idl;

namespace {

const char* kFamily = R"(
vocab { pred male/1, female/1, father/2, mother/2, parent/2. }
define father { father(X, Y) <- parent(X, Y) & male(X). }
define mother { mother(X, Y) <- parent(X, Y) & female(X). }
define parent {
  parent(X, Y) <- father(X, Y).
  parent(X, Y) <- mother(X, Y).
}
)";

TEST(Parse, EvenDefinition) {
  Theory t = parse_theory("vocab { const 0. func s/1. pred even/1. } define even { even(0). even(s(X)) <- ~even(X). }");
  ASSERT_EQ(t.definitions.size(), 1u);
  EXPECT_EQ(t.definitions[0].defined, std::set<std::string>{"even"});
  ASSERT_EQ(t.definitions[0].rules.size(), 2u);
  EXPECT_EQ(t.definitions[0].rules[0].body, Formula::top());
  EXPECT_EQ(t.definitions[0].rules[1].free_vars, std::vector<std::string>{"X"});
}

TEST(Parse, EmptyInput) {
  Theory t = parse_theory("vocab { }");
  EXPECT_TRUE(t.sentences.empty());
  EXPECT_TRUE(t.definitions.empty());
  EXPECT_TRUE(parse_theory("").definitions.empty());
}

TEST(Parse, FamilyHasThreeSingleDefinitions) {
  Theory t = parse_theory(kFamily);
  ASSERT_EQ(t.definitions.size(), 3u);
  for (const auto& d : t.definitions) EXPECT_EQ(d.defined.size(), 1u);
}

TEST(Parse, Precedence) {
  Vocabulary v;
  Formula f = parse_formula("~p & q | r => s <=> t", v, true);
  ASSERT_EQ(f.kind, Formula::Kind::Iff);
  const Formula& imp = f.children[0];
  ASSERT_EQ(imp.kind, Formula::Kind::Implies);
  ASSERT_EQ(imp.children[0].kind, Formula::Kind::Or);
  EXPECT_EQ(imp.children[0].children[0].kind, Formula::Kind::And);
  EXPECT_EQ(imp.children[0].children[0].children[0].kind, Formula::Kind::Not);
}

TEST(Parse, ImplicationIsRightAssociative) {
  Vocabulary v;
  Formula f = parse_formula("p => q => r", v, true);
  ASSERT_EQ(f.kind, Formula::Kind::Implies);
  EXPECT_EQ(f.children[1].kind, Formula::Kind::Implies);
}

TEST(Parse, QuantifierScopeExtendsRight) {
  Vocabulary v;
  v.add_predicate("p", 1);
  v.add_predicate("q", 1);
  Formula f = parse_formula("! X : p(X) & q(X)", v);
  ASSERT_EQ(f.kind, Formula::Kind::Forall);
  EXPECT_EQ(f.body().kind, Formula::Kind::And);
  EXPECT_TRUE(is_closed(f));
}

std::string parse_error(const char* text) {
  try {
    parse_theory(text);
  } catch (const SyntaxError& e) {
    return e.what();
  }
  return "";
}

TEST(Parse, UndeclaredSymbol) {
  EXPECT_NE(parse_error("vocab { pred p/0. } define p { p <- q. }").find("undeclared predicate 'q'"),
            std::string::npos);
}

TEST(Parse, ArityMismatch) {
  EXPECT_NE(parse_error("vocab { pred p/1. } define p { p(X, Y) <- true. }").find("arity mismatch"),
            std::string::npos);
}

TEST(Parse, SyntaxErrorCarriesPosition) {
  try {
    parse_theory("vocab { pred p/0. }\ndefine p { p <- & }");
    FAIL() << "expected a syntax error";
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_GT(e.column(), 1u);
  }
}

TEST(Parse, HeadOutsideDefinedSet) {
  EXPECT_THROW(parse_theory("vocab { pred p/0, q/0. } define p { q <- true. }"), Error);
}

TEST(Render, SentenceText) {
  Theory t;
  t.vocabulary.add_predicate("U", 1);
  t.sentences.push_back(Formula::forall("X", Formula::atom("U", {Term::variable("X")})));
  EXPECT_NE(render_theory(t).find("! X : U(X)."), std::string::npos);
}

TEST(Render, EmptyTheoryHasVocabularyHeader) {
  EXPECT_EQ(render_theory(Theory{}), "vocab { }\n");
}

TEST(Render, SimultaneousDefinitionIsOneGroup) {
  Theory t = parse_theory(
      "vocab { const 0. func s/1. pred even/1, odd/1. }"
      "define even, odd { even(0). odd(s(X)) <- even(X). even(s(X)) <- odd(X). }");
  std::string text = render_theory(t);
  EXPECT_NE(text.find("define even, odd {"), std::string::npos);
}

TEST(FreeVars, Examples) {
  Vocabulary v;
  EXPECT_EQ(free_vars(parse_formula("p(X) & ? Y : q(X, Y)", v, true)), std::set<std::string>{"X"});
  EXPECT_TRUE(free_vars(parse_formula("! X : p(X)", v, true)).empty());
  EXPECT_EQ(free_vars(parse_formula("~even(X)", v, true)), std::set<std::string>{"X"});
}

TEST(Substitute, AvoidsCapture) {
  Vocabulary v;
  Formula f = parse_formula("? Y : q(X, Y)", v, true);
  Formula g = substitute(f, {{"X", Term::variable("Y")}});
  EXPECT_EQ(free_vars(g), std::set<std::string>{"Y"});
  EXPECT_NE(g.name, "Y");
}

TEST(AlphaEquivalence, BoundNamesDoNotMatter) {
  Vocabulary v;
  Formula a = parse_formula("! X : ? Y : r(X, Y)", v, true);
  Formula b = parse_formula("! A : ? B : r(A, B)", v, true);
  Formula c = parse_formula("! A : ? B : r(B, A)", v, true);
  EXPECT_TRUE(alpha_equivalent(a, b));
  EXPECT_FALSE(alpha_equivalent(a, c));
}

TEST(Vocabulary, ClashesAreRejected) {
  Vocabulary v;
  v.add_predicate("p", 1);
  EXPECT_THROW(v.add_constant("p"), VocabularyError);
  EXPECT_THROW(v.add_predicate("p", 2), VocabularyError);
  EXPECT_EQ(v.fresh_name("p"), "p_1");
  EXPECT_EQ(v.fresh_name("U"), "U");
}

// Printing then parsing gives back the same theory.
TEST(RoundTrip, RandomTheories) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    RandomInstance inst = random_theory(rng, 1 + i % 2, i % 3);
    std::string text = render_theory(inst.theory);
    Theory back = parse_theory(text);
    EXPECT_EQ(render_theory(back), text);
    EXPECT_EQ(back, inst.theory) << text;
  }
}

TEST(RoundTrip, ComparisonIsATotalOrder) {
  std::mt19937_64 rng(5);
  std::vector<Formula> fs;
  for (int i = 0; i < 40; ++i) {
    RandomInstance inst = random_definition(rng);
    for (const auto& r : inst.theory.definitions[0].rules) fs.push_back(r.body);
  }
  for (const auto& a : fs) {
    EXPECT_EQ(compare(a, a), 0);
    for (const auto& b : fs) {
      EXPECT_EQ(compare(a, b) == 0, a == b);
      EXPECT_EQ(compare(a, b) < 0, compare(b, a) > 0);
    }
  }
}

}  // namespace
