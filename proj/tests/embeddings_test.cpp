#include <gtest/gtest.h>

#include <map>
#include <random>
#include <sstream>

#include "idl/analysis.hpp"
#include "idl/embeddings.hpp"
#include "idl/engine.hpp"
#include "idl/error.hpp"
#include "idl/formats.hpp"
#include "idl/text.hpp"
#include "oracles.hpp"

using namespace idl;

namespace {

constexpr TruthValue F = TruthValue::False;
constexpr TruthValue T = TruthValue::True;

TruthValue value(const Structure& s, const std::string& p, std::initializer_list<const char*> args) {
  std::vector<Element> es;
  for (const char* a : args) es.push_back(s.element(a));
  return s.value(p, es);
}

// Herbrand structure over the constants with every definition applied in order.
Structure herbrand(const Theory& t) {
  std::vector<std::string> names(t.vocabulary.constants().begin(), t.vocabulary.constants().end());
  Structure s = Structure::for_vocabulary(t.vocabulary, names);
  for (const auto& c : names) s.set_constant(c, s.element(c));
  for (const auto& d : t.definitions) s = justified_extension(d, s);
  return s;
}

TEST(LogicProgram, EvenOverSuccessorTable) {
  LogicProgram lp = parse_logic_program(
      "succ(n0, n1). succ(n1, n2). succ(n2, n3). zero(n0).\n"
      "even(X) <- zero(X).\n"
      "even(Y) <- succ(X, Y) & ~even(X).\n");
  Theory t = import_logic_program(lp.rules, lp.vocabulary);
  ASSERT_EQ(t.definitions.size(), 1u);
  EXPECT_EQ(t.definitions[0].defined, (std::set<std::string>{"even", "succ", "zero"}));
  Structure s = herbrand(t);
  ASSERT_TRUE(s.is_total());
  EXPECT_EQ(value(s, "even", {"n0"}), T);
  EXPECT_EQ(value(s, "even", {"n1"}), F);
  EXPECT_EQ(value(s, "even", {"n2"}), T);
  EXPECT_EQ(value(s, "even", {"n3"}), F);
  EXPECT_EQ(value(s, "succ", {"n1", "n0"}), F);
}

TEST(LogicProgram, EmptyProgramHasNoDefinition) {
  LogicProgram lp = parse_logic_program("// nothing\n");
  EXPECT_TRUE(import_logic_program(lp.rules, lp.vocabulary).definitions.empty());
}

TEST(Abductive, EveryNonAbducibleIsDefined) {
  AbductiveFramework fw = parse_abductive(
      "abducible ab/1.\n"
      "flies(X) <- bird(X) & ~ab(X).\n"
      "constraint <- flies(X) & ab(X).\n");
  Theory t = import_abductive(fw);
  ASSERT_EQ(t.definitions.size(), 1u);
  EXPECT_EQ(t.definitions[0].defined, (std::set<std::string>{"bird", "flies"}));
  EXPECT_EQ(t.sentences.size(), 1u);
}

// The explanations of the sprinkler example, against brute force over the
// two abducibles.
TEST(Abductive, SprinklerExplanations) {
  AbductiveFramework fw = parse_abductive(
      "abducible rain/0, sprinkler/0.\n"
      "wet <- rain.\nwet <- sprinkler.\n"
      "constraint wet.\nconstraint <- rain & sprinkler.\n");
  Theory t = import_abductive(fw);
  Structure templ = Structure::for_vocabulary(t.vocabulary, {"d"});
  std::vector<Structure> models = enumerate_models(t, templ);
  std::set<std::pair<bool, bool>> found, expected;
  for (const auto& m : models) found.insert({value(m, "rain", {}) == T, value(m, "sprinkler", {}) == T});
  for (bool rain : {false, true}) {
    for (bool spr : {false, true}) {
      bool wet = rain || spr;
      if (wet && !(rain && spr)) expected.insert({rain, spr});
    }
  }
  EXPECT_EQ(found, expected);
  EXPECT_EQ(models.size(), expected.size());
}

TEST(Table, FactsOnly) {
  Definition d = table_definition("parent", {{Term::constant("a"), Term::constant("b")},
                                             {Term::constant("b"), Term::constant("c")}});
  EXPECT_EQ(d.rules.size(), 2u);
  Vocabulary v;
  v.add_constant("a");
  v.add_constant("b");
  v.add_constant("c");
  v.add_predicate("parent", 2);
  Theory t;
  t.vocabulary = v;
  t.definitions.push_back(d);
  Structure s = herbrand(t);
  for (Element x = 0; x < 3; ++x) {
    for (Element y = 0; y < 3; ++y) {
      bool in = (x == 0 && y == 1) || (x == 1 && y == 2);
      EXPECT_EQ(s.value("parent", std::vector<Element>{x, y}), truth_of(in));
    }
  }
}

// Over constants {a, b} the models of DCA+UNA are exactly the bijective
// interpretations.
TEST(DcaUna, ConstantsOnly) {
  Vocabulary v;
  v.add_constant("a");
  v.add_constant("b");
  DcaUna du = dca_una(v);
  EXPECT_FALSE(du.approximate);
  const Definition& universe = du.theory.definitions.at(0);
  EXPECT_TRUE(universe.defines(du.predicate));
  for (std::size_t n = 1; n <= 3; ++n) {
    std::vector<std::string> dom;
    for (std::size_t i = 0; i < n; ++i) dom.push_back("e" + std::to_string(i));
    for (Element ca = 0; ca < n; ++ca) {
      for (Element cb = 0; cb < n; ++cb) {
        Structure s = Structure::for_vocabulary(du.theory.vocabulary, dom);
        s.set_constant("a", ca);
        s.set_constant("b", cb);
        s = justified_extension(universe, s);
        bool bijective = n == 2 && ca != cb;
        EXPECT_EQ(is_model(du.theory, s), bijective) << n << " " << ca << " " << cb;
      }
    }
  }
}

TEST(DcaUna, FunctionsAreApproximate) {
  Vocabulary v;
  v.add_constant("0");
  v.add_function("s", 1);
  DcaUna du = dca_una(v);
  EXPECT_TRUE(du.approximate);
  // 0 and s(0) differ, s is injective on them.
  Vocabulary big = du.theory.vocabulary;
  Formula probe = parse_formula("~(0 = s(0))", big);
  bool found = false;
  for (const auto& f : du.theory.sentences) found = found || alpha_equivalent(f, probe);
  EXPECT_TRUE(found);
  UnaOptions tight;
  tight.max_terms = 1;
  EXPECT_THROW(dca_una(v, tight), ResourceLimitError);
}

// Transitive closure of random graphs against reachability.
TEST(DeductiveDb, TransitiveClosure) {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 40; ++i) {
    std::size_t n = 1 + i % 5;
    std::bernoulli_distribution coin(0.3);
    std::ostringstream text;
    std::vector<std::vector<bool>> edge(n, std::vector<bool>(n, false));
    text << "vocab { const";
    for (std::size_t k = 0; k < n; ++k) text << (k ? ", " : " ") << "v" << k;
    text << ". pred link/2, path/2. }\nedb link/2.\n";
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (coin(rng)) {
          edge[a][b] = true;
          text << "edb link(v" << a << ", v" << b << ").\n";
        }
      }
    }
    text << "path(X, Y) <- link(X, Y).\npath(X, Y) <- ? Z : (path(X, Z) & link(Z, Y)).\n";
    Theory t = import_deductive_db(parse_deductive_db(text.str()));
    Structure s = herbrand(t);
    ASSERT_TRUE(s.is_total());
    EXPECT_TRUE(is_model(t, s)) << text.str();
    auto reach = oracle::reachability(edge);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        EXPECT_EQ(value(s, "path", {("v" + std::to_string(a)).c_str(), ("v" + std::to_string(b)).c_str()}),
                  truth_of(reach[a][b]))
            << text.str();
      }
    }
  }
}

TEST(DeductiveDb, IntegrityConstraintFails) {
  Theory t = import_deductive_db(parse_deductive_db("edb link(a, a).\nic <- link(X, X).\n"));
  EXPECT_FALSE(is_model(t, herbrand(t)));
}

// ---- situation calculus ----

struct Evaluated {
  Theory theory;
  Structure structure;
};

Evaluated evaluate_sitcalc(const std::string& text, std::size_t depth, const std::set<std::string>& initially) {
  SitcalcSpec spec = parse_sitcalc(text);
  Theory t = build_frame_theory(spec);
  std::vector<std::string> actions(spec.vocabulary.constants().begin(), spec.vocabulary.constants().end());
  Structure s = situation_structure(t.vocabulary, actions, {}, depth);
  const Definition& frame = t.definitions.front();
  for (const auto& [p, n] : t.vocabulary.predicates()) {
    if (!frame.defines(p) && p != "action" && p != "situation") s.fill_predicate(p, F);
  }
  for (const auto& f : initially) s.set_value("initially_" + f, std::vector<Element>{}, T);
  return {t, justified_extension(frame, s)};
}

std::vector<std::vector<std::string>> paths(const std::vector<std::string>& actions, std::size_t depth) {
  std::vector<std::vector<std::string>> out{{}};
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].size() == depth) continue;
    for (const auto& a : actions) {
      auto p = out[i];
      p.push_back(a);
      out.push_back(p);
    }
  }
  return out;
}

TEST(Sitcalc, FluentWithoutEffectsPersists) {
  const std::string text = "vocab { const go. }\nfluent g/0.\nfluent h/0.\ninitiates h on go.\n";
  for (bool init : {false, true}) {
    Evaluated e = evaluate_sitcalc(text, 2, init ? std::set<std::string>{"g"} : std::set<std::string>{});
    for (const auto& p : paths({"go"}, 2)) {
      EXPECT_EQ(value(e.structure, "g", {situation_name(p).c_str()}), truth_of(init));
      EXPECT_EQ(value(e.structure, "h", {situation_name(p).c_str()}), truth_of(!p.empty()));
    }
  }
}

TEST(Sitcalc, SituationOutsideFluentsIsRejected) {
  SitcalcSpec spec = parse_sitcalc("vocab { const a. pred r/1. }\nfluent f/0.\ninitiates f on a when r(S).\n");
  EXPECT_THROW(build_frame_definition(spec), SemanticError);
}

// Direct simulation of the suitcase with simultaneous causes.
std::map<std::string, bool> suitcase_step(std::map<std::string, bool> st, const std::string& a) {
  bool c1 = a == "open1", n1 = a == "close1" || a == "swap";
  bool c2 = a == "open2" || a == "swap", n2 = a == "close2";
  bool cs = (c2 && st["latch1"] && !n1) || (c1 && st["latch2"] && !n2);
  st["latch1"] = c1 || (st["latch1"] && !n1);
  st["latch2"] = c2 || (st["latch2"] && !n2);
  st["suitcase_open"] = cs || st["suitcase_open"];
  return st;
}

TEST(Sitcalc, SuitcaseMatchesSimulation) {
  std::ostringstream text;
  text << "vocab { const open1, open2, close1, close2, swap. }\n"
          "fluent latch1/0.\nfluent latch2/0.\nfluent suitcase_open/0.\n"
          "initiates latch1 on open1.\ninitiates latch2 on open2.\n"
          "terminates latch1 on close1.\nterminates latch2 on close2.\n"
          "terminates latch1 on swap.\ninitiates latch2 on swap.\n"
          "initiates suitcase_open on A when cause_latch2(A, S) & latch1(S) & ~cause_not_latch1(A, S).\n"
          "initiates suitcase_open on A when cause_latch1(A, S) & latch2(S) & ~cause_not_latch2(A, S).\n";
  const std::vector<std::string> fluents{"latch1", "latch2", "suitcase_open"};
  const std::vector<std::string> actions{"open1", "open2", "close1", "close2", "swap"};
  for (int mask = 0; mask < 8; ++mask) {
    std::set<std::string> init;
    std::map<std::string, bool> st0;
    for (int k = 0; k < 3; ++k) {
      st0[fluents[k]] = (mask >> k) & 1;
      if (st0[fluents[k]]) init.insert(fluents[k]);
    }
    Evaluated e = evaluate_sitcalc(text.str(), 2, init);
    EXPECT_TRUE(is_model(e.theory, e.structure));
    for (const auto& p : paths(actions, 2)) {
      auto st = st0;
      for (const auto& a : p) st = suitcase_step(st, a);
      for (const auto& f : fluents) {
        EXPECT_EQ(value(e.structure, f, {situation_name(p).c_str()}), truth_of(st[f]))
            << f << " at " << situation_name(p) << " from mask " << mask;
      }
    }
  }
}

// Random effect axioms over two actions and three fluents; conditions are
// conjunctions of fluent literals. Each action either initiates or
// terminates a given fluent, never both.
TEST(Sitcalc, RandomDomainsMatchSimulation) {
  std::mt19937_64 rng(43);
  const std::vector<std::string> actions{"a", "b"}, fluents{"f", "g", "h"};
  for (int round = 0; round < 25; ++round) {
    std::ostringstream text;
    text << "vocab { const a, b. }\n";
    for (const auto& f : fluents) text << "fluent " << f << "/0.\n";
    struct Eff {
      std::string action, fluent;
      bool initiates;
      std::vector<std::pair<std::string, bool>> cond;
    };
    std::vector<Eff> effects;
    std::bernoulli_distribution coin(0.5);
    for (const auto& f : fluents) {
      for (const auto& a : actions) {
        if (!coin(rng)) continue;
        Eff e{a, f, coin(rng), {}};
        for (const auto& g : fluents) {
          if (coin(rng)) e.cond.push_back({g, coin(rng)});
        }
        text << (e.initiates ? "initiates " : "terminates ") << f << " on " << a;
        for (std::size_t k = 0; k < e.cond.size(); ++k) {
          text << (k ? " & " : " when ") << (e.cond[k].second ? "" : "~") << e.cond[k].first << "(S)";
        }
        text << ".\n";
        effects.push_back(e);
      }
    }
    std::set<std::string> init;
    std::map<std::string, bool> st0;
    for (const auto& f : fluents) {
      st0[f] = coin(rng);
      if (st0[f]) init.insert(f);
    }
    Evaluated ev = evaluate_sitcalc(text.str(), 3, init);
    for (const auto& p : paths(actions, 3)) {
      auto st = st0;
      for (const auto& a : p) {
        auto next = st;
        for (const auto& e : effects) {
          bool holds = e.action == a;
          for (const auto& [g, pos] : e.cond) holds = holds && st[g] == pos;
          if (holds) next[e.fluent] = e.initiates;
        }
        st = next;
      }
      for (const auto& f : fluents) {
        EXPECT_EQ(value(ev.structure, f, {situation_name(p).c_str()}), truth_of(st[f])) << text.str();
      }
    }
  }
}

TEST(Formats, CommentsAndErrors) {
  EXPECT_EQ(parse_logic_program("// c\np. // trailing\nq <- p.\n").rules.size(), 2u);
  EXPECT_THROW(parse_logic_program("p <- ."), SyntaxError);
  EXPECT_THROW(parse_sitcalc("fluent f/0.\ninitiates f on a.\n"), Error);
  DeductiveDatabase db = parse_deductive_db("edb link/2.\nedb node(a).\nic ! X : node(X).\n");
  EXPECT_TRUE(db.edb.at("link").empty());
  EXPECT_EQ(db.edb.at("node").size(), 1u);
  EXPECT_EQ(db.ic.size(), 1u);
}

}  // namespace

namespace {

// The frame definition is well-founded on the finite situation tree.
TEST(Sitcalc, FrameIsWellFounded) {
  for (const char* text : {"vocab { const a. }\nfluent f/0.\ninitiates f on a when ~f(S).\nterminates f on a when f(S).\n",
                           "vocab { const a, b. }\nfluent f/0.\nfluent g/0.\ninitiates f on a when g(S).\n"
                           "terminates g on b.\ninitiates g on a when ~cause_f(A, S).\n"}) {
    SitcalcSpec spec = parse_sitcalc(text);
    Theory t = build_frame_theory(spec);
    std::vector<std::string> actions(spec.vocabulary.constants().begin(), spec.vocabulary.constants().end());
    Structure s = situation_structure(t.vocabulary, actions, {}, 3);
    for (const auto& f : spec.fluents) s.fill_predicate("initially_" + f.name, F);
    EXPECT_TRUE(check_well_founded(t.definitions.front(), s).well_founded) << text;
  }
}

}  // namespace
