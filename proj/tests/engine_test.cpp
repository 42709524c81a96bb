#include <gtest/gtest.h>

#include <random>

#include "idl/engine.hpp"
#include "idl/error.hpp"
#include "idl/grounder.hpp"
#include "idl/random.hpp"
#include "idl/structure_text.hpp"
#include "idl/text.hpp"
#include "oracles.hpp"

using namespace idl;

namespace {

constexpr TruthValue F = TruthValue::False;
constexpr TruthValue U = TruthValue::Unknown;
constexpr TruthValue T = TruthValue::True;

TruthValue value0(const Structure& s, const char* p) { return s.value(p, std::vector<Element>{}); }

Structure wfm_of(const char* text) {
  Theory t = parse_theory(text);
  Structure s = Structure::for_vocabulary(t.vocabulary, {"d"});
  for (const auto& d : t.definitions) s = justified_extension(d, s);
  return s;
}

TEST(WellFounded, Fact) { EXPECT_EQ(value0(wfm_of("vocab { pred p/0. } define p { p <- true. }"), "p"), T); }

TEST(WellFounded, PositiveLoopIsFalse) {
  EXPECT_EQ(value0(wfm_of("vocab { pred p/0. } define p { p <- p. }"), "p"), F);
}

TEST(WellFounded, EvenLoopIsUnknown) {
  Structure s = wfm_of("vocab { pred p/0, q/0. } define p, q { p <- ~q. q <- ~p. }");
  EXPECT_EQ(value0(s, "p"), U);
  EXPECT_EQ(value0(s, "q"), U);
}

TEST(WellFounded, ExcludedMiddleBodyIsUnknown) {
  EXPECT_EQ(value0(wfm_of("vocab { pred p/0. } define p { p <- p | ~p. }"), "p"), U);
}

TEST(WellFounded, EmptyDefinitionIsFalse) {
  EXPECT_EQ(value0(wfm_of("vocab { pred p/0. } define p { }"), "p"), F);
}

TEST(WellFounded, EvenOverSelfLoop) {
  Theory t = parse_theory("vocab { const 0. func s/1. pred even/1. } define even { even(0). even(s(X)) <- ~even(X). }");
  Structure s =
      parse_structure("structure { domain = {d0, d1}. const 0 = d0. func s = {d0 -> d1, d1 -> d1}. }", t.vocabulary);
  StableRevisionState state;
  Structure w = well_founded_model(ground_definition(t.definitions[0], s), &state);
  EXPECT_EQ(w.value("even", std::vector<Element>{0}), T);
  EXPECT_EQ(w.value("even", std::vector<Element>{1}), U);
  ASSERT_FALSE(state.trace.empty());
  EXPECT_EQ(state.trace.back(), w);
  EXPECT_EQ(state.current, w);
}

TEST(WellFounded, TwoDefinitionsOfEven) {
  Theory t = parse_theory(
      "vocab { const 0. func s/1. pred even/1, odd/1. }"
      "define even { even(X) <- ~odd(X). }"
      "define even { even(0). even(s(s(X))) <- even(X). }");
  Structure chain = parse_structure(
      "structure { domain = {n0, n1, n2, n3}. const 0 = n0. func s = {n0 -> n1, n1 -> n2, n2 -> n3, n3 -> n3}. }",
      t.vocabulary);
  // s saturates at n3, so s(s(n2)) = n3 is even as well.
  Structure evens = justified_extension(t.definitions[1], chain);
  EXPECT_EQ(evens.predicate("even").values, (std::vector<TruthValue>{T, F, T, T}));

  Structure odd = chain;
  odd.fill_predicate("odd", F);
  odd.set_value("odd", std::vector<Element>{1}, T);
  Structure complement = justified_extension(t.definitions[0], odd);
  EXPECT_EQ(complement.predicate("even").values, (std::vector<TruthValue>{T, F, T, T}));
}

TEST(Justified, Examples) {
  Theory t = parse_theory("vocab { pred p/0. } define p { p <- true. }");
  Structure s = Structure::for_vocabulary(t.vocabulary, {"d"});
  s.set_value("p", {}, T);
  EXPECT_TRUE(is_justified(t.definitions[0], s));
  s.set_value("p", {}, F);
  EXPECT_FALSE(is_justified(t.definitions[0], s));

  Theory merged = parse_theory(
      "vocab { pred male/1, female/1, father/2, mother/2, parent/2. }"
      "define father, mother, parent { father(X, Y) <- parent(X, Y) & male(X)."
      " mother(X, Y) <- parent(X, Y) & female(X). parent(X, Y) <- father(X, Y). parent(X, Y) <- mother(X, Y). }");
  Structure empty = parse_structure(
      "structure { domain = {a, b}. pred male = total false except {a}. pred female = total false except {b}."
      " pred father = total false except {}. pred mother = total false except {}."
      " pred parent = total false except {}. }",
      merged.vocabulary);
  EXPECT_TRUE(is_justified(merged.definitions[0], empty));
}

const char* kFamily3 = R"(
vocab { pred male/1, female/1, father/2, mother/2, parent/2. }
define father { father(X, Y) <- parent(X, Y) & male(X). }
define mother { mother(X, Y) <- parent(X, Y) & female(X). }
define parent { parent(X, Y) <- father(X, Y). parent(X, Y) <- mother(X, Y). }
)";

const char* kFamilyMerged = R"(
vocab { pred male/1, female/1, father/2, mother/2, parent/2. }
define father, mother, parent {
  father(X, Y) <- parent(X, Y) & male(X).
  mother(X, Y) <- parent(X, Y) & female(X).
  parent(X, Y) <- father(X, Y).
  parent(X, Y) <- mother(X, Y).
}
)";

const char* kFamilyStructure =
    "structure { domain = {ann, bob}. pred male = total false except {bob}. pred female = total false except {ann}."
    " pred parent = total false except {(bob, ann)}. pred father = total false except {(bob, ann)}."
    " pred mother = total false except {}. }";

TEST(Model, Family) {
  Theory three = parse_theory(kFamily3);
  Theory merged = parse_theory(kFamilyMerged);
  EXPECT_TRUE(is_model(three, parse_structure(kFamilyStructure, three.vocabulary)));
  Structure s = parse_structure(kFamilyStructure, merged.vocabulary);
  EXPECT_FALSE(is_model(merged, s));
  ModelVerdict v = check_model(merged, s);
  EXPECT_EQ(v.status, ModelStatus::NotModel);
  EXPECT_NE(v.reason.find("justified value is false"), std::string::npos) << v.reason;
}

TEST(Model, FalseAxiom) {
  Theory t = parse_theory("vocab { pred p/0. } axiom false.");
  for (TruthValue v : {F, T}) {
    Structure s = Structure::for_vocabulary(t.vocabulary, {"d"});
    s.set_value("p", {}, v);
    EXPECT_FALSE(is_model(t, s));
  }
  EXPECT_TRUE(enumerate_models(t, Structure::for_vocabulary(t.vocabulary, {"d"})).empty());
}

TEST(Model, PartialStructure) {
  Theory t = parse_theory("vocab { pred p/0. } define p { p <- p | ~p. }");
  Structure s = Structure::for_vocabulary(t.vocabulary, {"d"});
  EXPECT_THROW(is_model(t, s), SemanticError);
  EXPECT_EQ(check_model(t, s).status, ModelStatus::Partial);
}

TEST(Model, UnknownSentenceStrictAndLenient) {
  Theory t = parse_theory("vocab { pred p/0, q/0. } define p { p <- ~p. } axiom p | q.");
  Structure s = Structure::for_vocabulary(t.vocabulary, {"d"});
  s.set_value("q", {}, F);
  // The justified extension leaves p unknown, so the interpretation is not
  // total; the sentence p | q is unknown in it.
  Structure j = justified_extension(t.definitions[0], s);
  ModelCheckOptions strict;
  ModelCheckOptions lenient;
  lenient.lenient_sentences = true;
  EXPECT_NE(check_model(t, j, strict).reason.find("unknown"), std::string::npos);
  EXPECT_EQ(check_model(t, j, lenient).status, ModelStatus::Partial);
}

TEST(Enumerate, EvenOddChainHasOneModel) {
  Theory t = parse_theory(
      "vocab { const 0. func s/1. pred even/1, odd/1. }"
      "define even { even(X) <- ~odd(X). }"
      "define even { even(0). even(s(s(X))) <- even(X). }");
  Structure chain = parse_structure(
      "structure { domain = {n0, n1, n2}. const 0 = n0. func s = {n0 -> n1, n1 -> n2, n2 -> n2}. }", t.vocabulary);
  auto models = enumerate_models(t, chain);
  ASSERT_EQ(models.size(), 1u);
  EXPECT_EQ(models[0].predicate("even").values, (std::vector<TruthValue>{T, F, T}));
  EXPECT_EQ(models[0].predicate("odd").values, (std::vector<TruthValue>{F, T, F}));
  EXPECT_EQ(enumerate_models_naive(t, chain), models);
}

TEST(Enumerate, LimitAndNodeCap) {
  Theory t = parse_theory("vocab { pred p/1. }");
  Structure s = Structure::for_vocabulary(t.vocabulary, {"a", "b", "c"});
  EXPECT_EQ(enumerate_models(t, s).size(), 8u);
  SearchOptions opts;
  opts.limit = 3;
  auto first = enumerate_models(t, s, opts);
  ASSERT_EQ(first.size(), 3u);
  EXPECT_TRUE(canonical_less(first[0], first[1]));
  opts.limit = 0;
  opts.max_nodes = 4;
  EXPECT_THROW(enumerate_models(t, s, opts), ResourceLimitError);
}

// ---- properties --------------------------------------------------------------

TEST(Properties, WellFoundedModelIsAFixpoint) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 200; ++i) {
    RandomConfig cfg;
    cfg.unknown_open = i % 2 ? 0.3 : 0.0;
    RandomInstance inst = random_definition(rng, cfg);
    GroundDefinition g = ground_definition(inst.theory.definitions[0], inst.structure);
    Structure w = well_founded_model(g);
    EXPECT_EQ(stable_operator(g, w), w);
    EXPECT_TRUE(precision_leq(g.base, w));
  }
}

// The stable operator is monotone in precision on the defined atoms. (An
// unknown open atom is not a placeholder for either value, so refining the
// open part may change the well-founded model non-monotonically:
// p <- q | ~q gives p false for q unknown and p true for q true.)
TEST(Properties, StableOperatorIsPrecisionMonotone) {
  std::mt19937_64 rng(32);
  for (int i = 0; i < 200; ++i) {
    RandomConfig cfg;
    cfg.unknown_open = 0.4;
    RandomInstance inst = random_definition(rng, cfg);
    const Definition& d = inst.theory.definitions[0];
    GroundDefinition g = ground_definition(d, inst.structure);
    Structure w = well_founded_model(g);
    Structure below = w;
    for (const auto& a : g.defined_atoms) {
      if (std::bernoulli_distribution(0.5)(rng)) below.set_value(a, U);
    }
    EXPECT_TRUE(precision_leq(stable_operator(g, below), stable_operator(g, w)));
  }
}

TEST(Properties, EnumerationMatchesGenerateAndTest) {
  std::mt19937_64 rng(33);
  RandomConfig cfg;
  cfg.max_defined_atoms = 4;
  cfg.max_open_atoms = 4;
  for (int i = 0; i < 120; ++i) {
    RandomInstance inst = random_theory(rng, 1 + i % 2, i % 3, cfg);
    auto fast = enumerate_models(inst.theory, inst.structure);
    auto slow = enumerate_models_naive(inst.theory, inst.structure);
    EXPECT_EQ(fast, slow) << render_theory(inst.theory);
    for (std::size_t k = 1; k < fast.size(); ++k) EXPECT_TRUE(canonical_less(fast[k - 1], fast[k]));
  }
}

// A total structure is a model iff each defined part is the oracle's
// well-founded model and every sentence is true.
TEST(Properties, ModelCheckAgreesWithOracle) {
  std::mt19937_64 rng(34);
  RandomConfig cfg;
  cfg.max_defined_atoms = 4;
  for (int i = 0; i < 200; ++i) {
    RandomInstance inst = random_theory(rng, 1, i % 2, cfg);
    Structure s = inst.structure;
    std::bernoulli_distribution coin(0.5);
    for (const auto& [p, n] : inst.theory.vocabulary.predicates()) {
      for (const auto& a : s.atoms_of(p)) s.set_value(a, truth_of(coin(rng)));
    }
    // Half the time start from the justified extension so models occur.
    const Definition& d = inst.theory.definitions[0];
    if (coin(rng)) {
      Structure j = literal_well_founded_model(ground_literal_oracle(d, s));
      if (j.is_total()) s = j;
    }
    Structure oracle_wfm = literal_well_founded_model(ground_literal_oracle(d, s));
    bool expected = true;
    for (const auto& p : d.defined) expected = expected && oracle_wfm.predicate(p) == s.predicate(p);
    for (const auto& f : inst.theory.sentences) expected = expected && eval_formula(f, s) == T;
    EXPECT_EQ(is_model(inst.theory, s), expected) << render_theory(inst.theory) << render_structure(s);
  }
}

TEST(Properties, PositiveDefinitionsGiveLeastModels) {
  std::mt19937_64 rng(35);
  RandomConfig cfg;
  cfg.shape = RuleShape::Positive;
  for (int i = 0; i < 150; ++i) {
    RandomInstance inst = random_definition(rng, cfg);
    const Definition& d = inst.theory.definitions[0];
    Structure w = justified_extension(d, inst.structure);
    auto least = oracle::positive_least_model(d, inst.structure);
    ASSERT_TRUE(least.has_value());
    EXPECT_EQ(w, *least) << render_theory(inst.theory);
  }
}

}  // namespace
