#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "idl/engine.hpp"
#include "idl/error.hpp"
#include "idl/grounder.hpp"
#include "idl/random.hpp"
#include "idl/structure_text.hpp"
#include "idl/text.hpp"

using namespace idl;

namespace {

struct Case {
  Theory theory;
  Structure structure;
};

Case even_cycle() {
  Theory t = parse_theory("vocab { const 0. func s/1. pred even/1. } define even { even(0). even(s(X)) <- ~even(X). }");
  Structure s =
      parse_structure("structure { domain = {d0, d1}. const 0 = d0. func s = {d0 -> d1, d1 -> d1}. }", t.vocabulary);
  return {t, s};
}

std::vector<std::string> rule_texts(const GroundDefinition& g) {
  std::vector<std::string> out;
  for (const auto& r : g.rules) out.push_back(g.base.atom_string(r.head) + " <- " + render_formula(r.body, {true}));
  return out;
}

TEST(Ground, EvenOverSelfLoop) {
  Case c = even_cycle();
  GroundDefinition g = ground_definition(c.theory.definitions[0], c.structure);
  EXPECT_EQ(rule_texts(g),
            (std::vector<std::string>{"even(d0) <- true", "even(d1) <- ~even(d0)", "even(d1) <- ~even(d1)"}));
  EXPECT_EQ(g.defined_atoms.size(), 2u);
}

TEST(Ground, NoRules) {
  Theory t = parse_theory("vocab { pred p/1. } define p { }");
  Structure s = Structure::for_vocabulary(t.vocabulary, {"a"});
  GroundDefinition g = ground_definition(t.definitions[0], s);
  EXPECT_TRUE(g.rules.empty());
  EXPECT_EQ(g.defined_atoms, (std::vector<GroundAtom>{{"p", {0}}}));
}

TEST(Ground, FatherHasFourInstances) {
  Theory t = parse_theory(
      "vocab { pred male/1, father/2, parent/2. } define father { father(X, Y) <- parent(X, Y) & male(X). }");
  Structure s = Structure::for_vocabulary(t.vocabulary, {"a", "b"});
  EXPECT_EQ(ground_definition(t.definitions[0], s).rules.size(), 4u);
}

TEST(Ground, RuleCap) {
  Theory t = parse_theory(
      "vocab { pred male/1, father/2, parent/2. } define father { father(X, Y) <- parent(X, Y) & male(X). }");
  Structure s = Structure::for_vocabulary(t.vocabulary, {"a", "b", "c"});
  GroundingOptions opts;
  opts.max_rules = 8;
  EXPECT_THROW(ground_definition(t.definitions[0], s, opts), ResourceLimitError);
  opts.max_rules = 9;
  EXPECT_NO_THROW(ground_definition(t.definitions[0], s, opts));
}

TEST(Ground, MissingInterpretation) {
  Theory t = parse_theory("vocab { const c. pred p/1. } define p { p(c). }");
  Structure s({"a"});
  s.declare_predicate("p", 1);
  EXPECT_THROW(ground_definition(t.definitions[0], s), SemanticError);
}

TEST(Ground, RuleCountIsInstanceCount) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 200; ++i) {
    RandomInstance inst = random_definition(rng);
    const Definition& d = inst.theory.definitions[0];
    std::size_t expected = 0;
    for (const auto& r : d.rules) expected += inst.structure.tuple_count(r.free_vars.size());
    GroundDefinition g = ground_definition(d, inst.structure);
    EXPECT_EQ(g.rules.size(), expected);
    for (const auto& r : g.rules) {
      EXPECT_TRUE(free_vars(r.body).empty());
      EXPECT_TRUE(d.defines(r.head.predicate));
    }
  }
}

TEST(GroundSentence, Examples) {
  Vocabulary v;
  v.add_predicate("U", 1);
  v.add_predicate("male", 1);
  v.add_predicate("female", 1);
  Structure ab = Structure::for_vocabulary(v, {"a", "b"});
  Structure a = Structure::for_vocabulary(v, {"a"});
  RenderOptions bare{true};
  EXPECT_EQ(render_formula(ground_sentence(parse_formula("! X : U(X)", v), ab), bare), "U(a) & U(b)");
  Formula none = ground_sentence(parse_formula("? X : false", v), ab);
  EXPECT_EQ(eval_formula(none, ab), TruthValue::False);
  EXPECT_EQ(render_formula(ground_sentence(parse_formula("! X : (male(X) <=> ~female(X))", v), a), bare),
            "male(a) <=> ~female(a)");
}

// Ground sentences evaluate like the originals.
TEST(GroundSentence, PreservesValue) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 300; ++i) {
    RandomConfig cfg;
    cfg.unknown_open = 0.3;
    RandomInstance inst = random_theory(rng, 0, 1, cfg);
    Structure s = inst.structure;
    std::bernoulli_distribution coin(0.5);
    for (const auto& [p, n] : inst.theory.vocabulary.predicates()) {
      for (const auto& atom : s.atoms_of(p)) {
        s.set_value(atom, coin(rng) ? TruthValue::Unknown : truth_of(coin(rng)));
      }
    }
    const Formula& f = inst.theory.sentences[0];
    EXPECT_EQ(eval_formula(ground_sentence(f, s), s), eval_formula(f, s)) << render_formula(f);
  }
}

TEST(LiteralOracle, OpenBodyTrue) {
  Theory t = parse_theory("vocab { pred p/0, q/0, r/0. } define p { p <- q | r. }");
  Structure s = parse_structure("structure { domain = {d}. pred q = true. pred r = true. }", t.vocabulary);
  LiteralGroundDefinition g = ground_literal_oracle(t.definitions[0], s);
  std::vector<std::string> rules;
  for (const auto& r : g.rules) rules.push_back(g.rule_string(r));
  EXPECT_EQ(rules, (std::vector<std::string>{"p.", "p <- ~p.", "p <- p."}));
}

TEST(LiteralOracle, FactHasEmptyMinimalBody) {
  Theory t = parse_theory("vocab { pred p/0, q/0. } define p, q { p <- true. }");
  Structure s = Structure::for_vocabulary(t.vocabulary, {"d"});
  LiteralGroundDefinition g = ground_literal_oracle(t.definitions[0], s);
  // Every consistent literal set over {p, q}.
  EXPECT_EQ(g.rules.size(), 9u);
  EXPECT_TRUE(std::any_of(g.rules.begin(), g.rules.end(), [](const LiteralRule& r) { return r.body.empty(); }));
}

TEST(LiteralOracle, EvenCycleMatchesFormulaGrounding) {
  Case c = even_cycle();
  LiteralGroundDefinition lg = ground_literal_oracle(c.theory.definitions[0], c.structure);
  GroundDefinition g = ground_definition(c.theory.definitions[0], c.structure);
  EXPECT_EQ(literal_well_founded_model(lg), well_founded_model(g));
  // The minimal literal bodies are exactly the hand grounding.
  std::vector<std::string> minimal;
  for (const auto& r : lg.rules) {
    bool subsumed = false;
    for (const auto& o : lg.rules) {
      std::set<std::int32_t> big(r.body.begin(), r.body.end());
      if (o.head == r.head && o.body.size() < r.body.size() &&
          std::all_of(o.body.begin(), o.body.end(), [&](std::int32_t l) { return big.count(l) != 0; })) {
        subsumed = true;
      }
    }
    if (!subsumed) minimal.push_back(lg.rule_string(r));
  }
  std::sort(minimal.begin(), minimal.end());
  EXPECT_EQ(minimal, (std::vector<std::string>{"even(d0).", "even(d1) <- ~even(d0).", "even(d1) <- ~even(d1)."}));
}

TEST(LiteralOracle, CheckCap) {
  std::mt19937_64 rng(2);
  RandomConfig cfg;
  cfg.max_domain = 3;
  cfg.min_domain = 3;
  RandomInstance inst = random_definition(rng, cfg);
  OracleOptions opts;
  opts.max_checks = 1;
  EXPECT_THROW(ground_literal_oracle(inst.theory.definitions[0], inst.structure, opts), ResourceLimitError);
}

}  // namespace
