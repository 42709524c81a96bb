#include "idl/embeddings.hpp"

#include <algorithm>

#include "idl/error.hpp"
#include "idl/text.hpp"

namespace idl {

Theory import_logic_program(const std::vector<Rule>& rules, const Vocabulary& vocabulary) {
  Theory t;
  t.vocabulary = vocabulary;
  if (rules.empty()) return t;
  Definition d;
  for (const auto& r : rules) d.defined.insert(r.head);
  d.rules = rules;
  check_vocabulary(vocabulary, d);
  t.definitions.push_back(std::move(d));
  return t;
}

Theory import_abductive(const AbductiveFramework& fw) {
  for (const auto& r : fw.program) {
    if (fw.abducibles.count(r.head)) {
      throw SemanticError("abducible predicate '" + r.head + "' occurs in a rule head");
    }
  }
  for (const auto& a : fw.abducibles) {
    if (!fw.vocabulary.has_predicate(a)) throw VocabularyError("undeclared abducible '" + a + "'");
  }
  Theory t;
  t.vocabulary = fw.vocabulary;
  t.sentences = fw.constraints;
  Definition d;
  for (const auto& [p, arity] : fw.vocabulary.predicates()) {
    if (!fw.abducibles.count(p)) d.defined.insert(p);
  }
  d.rules = fw.program;
  if (!d.defined.empty()) {
    check_vocabulary(fw.vocabulary, d);
    t.definitions.push_back(std::move(d));
  }
  return t;
}

Definition table_definition(const std::string& predicate, const std::vector<std::vector<Term>>& tuples) {
  Definition d;
  d.defined.insert(predicate);
  for (const auto& tuple : tuples) {
    if (!tuples.empty() && tuple.size() != tuples.front().size()) {
      throw VocabularyError("table for '" + predicate + "' has tuples of different arities");
    }
    d.rules.push_back(Rule::fact(predicate, tuple));
  }
  return d;
}

namespace {

/// Ground terms of nesting depth at most `depth`, shallowest first.
std::vector<Term> ground_terms(const Vocabulary& v, std::size_t depth, std::size_t cap) {
  std::vector<Term> out;
  for (const auto& c : v.constants()) out.push_back(Term::constant(c));
  std::size_t level_start = 0;
  for (std::size_t level = 1; level <= depth && !v.functions().empty(); ++level) {
    const std::vector<Term> previous = out;
    const std::size_t level_end = out.size();
    for (const auto& [f, arity] : v.functions()) {
      // Argument tuples over all earlier terms with at least one from the
      // newest level, so each term is produced once.
      std::vector<std::size_t> idx(arity, 0);
      while (true) {
        bool fresh = std::any_of(idx.begin(), idx.end(), [&](std::size_t i) { return i >= level_start; });
        if (fresh) {
          std::vector<Term> args;
          for (auto i : idx) args.push_back(previous[i]);
          out.push_back(Term::apply(f, std::move(args)));
          if (out.size() > cap) throw ResourceLimitError("unique-names axioms exceed " + std::to_string(cap) + " terms");
        }
        std::size_t k = arity;
        while (k-- > 0) {
          if (++idx[k] < level_end) break;
          idx[k] = 0;
        }
        if (k == static_cast<std::size_t>(-1)) break;
      }
    }
    level_start = level_end;
  }
  return out;
}

}  // namespace

DcaUna dca_una(const Vocabulary& vocabulary, const UnaOptions& options) {
  DcaUna out;
  out.predicate = vocabulary.fresh_name("U");
  out.theory.vocabulary = vocabulary;
  out.theory.vocabulary.add_predicate(out.predicate, 1);

  Definition u;
  u.defined.insert(out.predicate);
  for (const auto& c : vocabulary.constants()) u.rules.push_back(Rule::fact(out.predicate, {Term::constant(c)}));
  for (const auto& [f, arity] : vocabulary.functions()) {
    std::vector<Term> xs;
    std::vector<Formula> body;
    for (std::size_t i = 0; i < arity; ++i) {
      Term x = Term::variable("X" + std::to_string(i + 1));
      body.push_back(Formula::atom(out.predicate, {x}));
      xs.push_back(std::move(x));
    }
    u.rules.push_back(Rule::make(out.predicate, {Term::apply(f, xs)}, Formula::conjunction(std::move(body))));
  }
  out.theory.definitions.push_back(std::move(u));
  out.theory.sentences.push_back(Formula::forall("X", Formula::atom(out.predicate, {Term::variable("X")})));

  out.approximate = !vocabulary.functions().empty();
  auto terms = ground_terms(vocabulary, options.depth, options.max_terms);
  for (std::size_t i = 0; i < terms.size(); ++i) {
    for (std::size_t j = i + 1; j < terms.size(); ++j) {
      out.theory.sentences.push_back(Formula::negate(Formula::equal(terms[i], terms[j])));
    }
  }
  return out;
}

Theory import_deductive_db(const DeductiveDatabase& db, const UnaOptions& options) {
  Theory t;
  t.vocabulary = db.vocabulary;
  std::set<std::string> intensional;
  for (const auto& r : db.idb) intensional.insert(r.head);
  for (const auto& [p, tuples] : db.edb) {
    if (intensional.count(p)) throw SemanticError("predicate '" + p + "' is both extensional and intensional");
    Definition table = table_definition(p, tuples);
    check_vocabulary(db.vocabulary, table);
    t.definitions.push_back(std::move(table));
  }
  if (!db.idb.empty()) {
    Definition idb;
    idb.defined = intensional;
    idb.rules = db.idb;
    check_vocabulary(db.vocabulary, idb);
    t.definitions.push_back(std::move(idb));
  }
  t.sentences = db.ic;
  DcaUna closure = dca_una(db.vocabulary, options);
  t.vocabulary = closure.theory.vocabulary;
  for (auto& d : closure.theory.definitions) t.definitions.push_back(std::move(d));
  for (auto& f : closure.theory.sentences) t.sentences.push_back(std::move(f));
  return t;
}

// ---- situation calculus --------------------------------------------------------------

namespace {

std::string initially(const std::string& f) { return "initially_" + f; }
std::string cause(const std::string& f) { return "cause_" + f; }
std::string cause_not(const std::string& f) { return "cause_not_" + f; }
std::string open_copy(const std::string& f) { return f + "_o"; }

void add_generated(Vocabulary& v, const std::string& name, std::size_t arity, const Vocabulary& user) {
  if (user.kind_of(name)) throw VocabularyError("generated symbol '" + name + "' clashes with the vocabulary");
  v.add_predicate(name, arity);
}

bool term_mentions(const Term& t, const std::string& name) {
  if (t.name == name && (t.kind == Term::Kind::Variable || t.kind == Term::Kind::Constant)) return true;
  if (t.kind == Term::Kind::Application && t.name == "do") return true;
  return std::any_of(t.args.begin(), t.args.end(), [&](const Term& a) { return term_mentions(a, name); });
}

bool situation_free(const Term& t) { return !term_mentions(t, kSituationVariable) && !term_mentions(t, "s0"); }

/// The situation variable occurs only as last argument of fluent atoms or
/// as second argument of cause atoms, and no other situation term occurs.
void check_condition(const Formula& f, const std::map<std::string, std::size_t>& fluents,
                     const std::map<std::string, std::size_t>& causes) {
  auto bad = [&](const std::string& why) {
    throw SemanticError("effect condition " + render_formula(f) + ": " + why);
  };
  switch (f.kind) {
    case Formula::Kind::Atom: {
      std::optional<std::size_t> slot;
      if (auto it = fluents.find(f.name); it != fluents.end()) slot = it->second;
      if (auto it = causes.find(f.name); it != causes.end()) slot = it->second;
      for (std::size_t i = 0; i < f.terms.size(); ++i) {
        if (slot && i == *slot) {
          if (!f.terms[i].is_variable() || f.terms[i].name != kSituationVariable) {
            bad("the situation argument must be the variable S");
          }
        } else if (!situation_free(f.terms[i])) {
          bad("situation terms may only appear as situation arguments of fluents");
        }
      }
      return;
    }
    case Formula::Kind::Equal:
      for (const auto& t : f.terms) {
        if (!situation_free(t)) bad("situation terms may not appear in equalities");
      }
      return;
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
      if (f.name == kSituationVariable) bad("the situation variable may not be quantified");
      check_condition(f.body(), fluents, causes);
      return;
    default:
      for (const auto& c : f.children) check_condition(c, fluents, causes);
  }
}

std::vector<Term> object_variables(std::size_t n) {
  std::vector<Term> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(Term::variable("X" + std::to_string(i + 1)));
  return out;
}

std::vector<Term> with(std::vector<Term> front, const std::vector<Term>& back) {
  front.insert(front.end(), back.begin(), back.end());
  return front;
}

}  // namespace

Vocabulary frame_vocabulary(const SitcalcSpec& spec) {
  const Vocabulary& user = spec.vocabulary;
  Vocabulary v = user;
  if (!user.has_predicate("action")) v.add_predicate("action", 1);
  if (!user.has_predicate("situation")) v.add_predicate("situation", 1);
  if (!user.has_constant("s0")) v.add_constant("s0");
  if (!user.has_function("do")) v.add_function("do", 2);
  if (spec.preconditions && !user.has_predicate("poss")) v.add_predicate("poss", 2);
  for (const auto& f : spec.fluents) {
    add_generated(v, f.name, f.arity + 1, user);
    add_generated(v, initially(f.name), f.arity, user);
    add_generated(v, cause(f.name), f.arity + 2, user);
    add_generated(v, cause_not(f.name), f.arity + 2, user);
    if (spec.preconditions) add_generated(v, open_copy(f.name), f.arity + 1, user);
  }
  return v;
}

Definition build_frame_definition(const SitcalcSpec& spec) {
  const Term a = Term::variable("A");
  const Term s = Term::variable(kSituationVariable);
  const Term next = Term::apply("do", {a, s});
  const Formula guard = Formula::conjunction({Formula::atom("action", {a}), Formula::atom("situation", {s})});

  std::map<std::string, std::size_t> fluent_slots, cause_slots;
  for (const auto& f : spec.fluents) {
    fluent_slots[f.name] = f.arity;
    cause_slots[cause(f.name)] = 1;
    cause_slots[cause_not(f.name)] = 1;
  }

  Definition d;
  for (const auto& f : spec.fluents) {
    d.defined.insert(f.name);
    d.defined.insert(cause(f.name));
    d.defined.insert(cause_not(f.name));
    const auto xs = object_variables(f.arity);
    const Formula poss = Formula::atom("poss", {a, s});
    auto guarded = [&](Formula body) {
      std::vector<Formula> parts{Formula::atom("action", {a}), Formula::atom("situation", {s})};
      if (spec.preconditions) parts.push_back(poss);
      parts.push_back(std::move(body));
      return Formula::conjunction(std::move(parts));
    };
    d.rules.push_back(Rule::make(f.name, with(xs, {Term::constant("s0")}), Formula::atom(initially(f.name), xs)));
    d.rules.push_back(Rule::make(f.name, with(xs, {next}), guarded(Formula::atom(cause(f.name), with({a, s}, xs)))));
    d.rules.push_back(Rule::make(
        f.name, with(xs, {next}),
        guarded(Formula::conjunction({Formula::atom(f.name, with(xs, {s})),
                                      Formula::negate(Formula::atom(cause_not(f.name), with({a, s}, xs)))}))));
    if (spec.preconditions) {
      d.rules.push_back(Rule::make(
          f.name, with(xs, {next}),
          Formula::conjunction({guard, Formula::atom(open_copy(f.name), with(xs, {next})), Formula::negate(poss)})));
    }
    auto effect_rules = [&](const std::vector<Effect>& effects, const std::string& head) {
      for (const auto& e : effects) {
        if (e.args.size() != f.arity) {
          throw SemanticError("effect on '" + f.name + "' has the wrong number of arguments");
        }
        if (!situation_free(e.action) ||
            !std::all_of(e.args.begin(), e.args.end(), [](const Term& t) { return situation_free(t); })) {
          throw SemanticError("effect on '" + f.name + "' mentions a situation outside its condition");
        }
        check_condition(e.condition, fluent_slots, cause_slots);
        Formula body = Formula::conjunction(
            {Formula::atom("action", {e.action}), Formula::atom("situation", {s}), e.condition});
        d.rules.push_back(Rule::make(head, with({e.action, s}, e.args), std::move(body)));
      }
    };
    effect_rules(f.initiates, cause(f.name));
    effect_rules(f.terminates, cause_not(f.name));
  }
  if (spec.preconditions) {
    d.defined.insert("poss");
    for (const auto& c : spec.poss) {
      if (!situation_free(c.action)) throw SemanticError("precondition action mentions a situation");
      check_condition(c.condition, fluent_slots, cause_slots);
      d.rules.push_back(Rule::make(
          "poss", {c.action, s},
          Formula::conjunction({Formula::atom("action", {c.action}), Formula::atom("situation", {s}), c.condition})));
    }
  }
  return d;
}

Theory build_frame_theory(const SitcalcSpec& spec) {
  Theory t;
  t.vocabulary = frame_vocabulary(spec);
  Definition d = build_frame_definition(spec);
  check_vocabulary(t.vocabulary, d);
  t.definitions.push_back(std::move(d));
  for (const auto& f : spec.fluents) {
    std::vector<std::string> vars{"A", kSituationVariable};
    std::vector<Term> args{Term::variable("A"), Term::variable(kSituationVariable)};
    for (const auto& x : object_variables(f.arity)) {
      vars.push_back(x.name);
      args.push_back(x);
    }
    Formula both = Formula::conjunction({Formula::atom(cause(f.name), args), Formula::atom(cause_not(f.name), args)});
    t.sentences.push_back(Formula::forall(vars, Formula::negate(std::move(both))));
  }
  return t;
}

std::string situation_name(const std::vector<std::string>& path) {
  std::string out = "s0";
  for (const auto& a : path) out += "_" + a;
  return out;
}

Structure situation_structure(const Vocabulary& vocabulary, const std::vector<std::string>& actions,
                              const std::vector<std::string>& objects, std::size_t depth) {
  for (const auto& [f, arity] : vocabulary.functions()) {
    if (f != "do") throw SemanticError("situation structures support no function besides do/2");
  }
  std::vector<std::vector<std::string>> paths{{}};
  for (std::size_t level = 0, begin = 0; level < depth; ++level) {
    const std::size_t end = paths.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (const auto& a : actions) {
        auto p = paths[i];
        p.push_back(a);
        paths.push_back(std::move(p));
      }
    }
    begin = end;
  }
  std::vector<std::string> domain = objects;
  domain.insert(domain.end(), actions.begin(), actions.end());
  for (const auto& p : paths) domain.push_back(situation_name(p));
  domain.push_back("z");
  Structure s = Structure::for_vocabulary(vocabulary, domain);

  for (const auto& c : vocabulary.constants()) {
    auto e = s.find_element(c);
    if (!e) throw SemanticError("constant '" + c + "' is neither an action nor an object");
    s.set_constant(c, *e);
  }
  const Element junk = s.element("z");
  std::vector<Element> table(s.tuple_count(2), junk);
  for (std::size_t i = 0; i < paths.size(); ++i) {
    if (paths[i].size() >= depth) continue;
    for (const auto& a : actions) {
      auto p = paths[i];
      p.push_back(a);
      std::vector<Element> args{s.element(a), s.element(situation_name(paths[i]))};
      table[s.tuple_index(args)] = s.element(situation_name(p));
    }
  }
  s.set_function("do", 2, std::move(table));
  if (vocabulary.has_predicate("action")) {
    s.fill_predicate("action", TruthValue::False);
    for (const auto& a : actions) s.set_value(GroundAtom{"action", {s.element(a)}}, TruthValue::True);
  }
  if (vocabulary.has_predicate("situation")) {
    s.fill_predicate("situation", TruthValue::False);
    for (const auto& p : paths) s.set_value(GroundAtom{"situation", {s.element(situation_name(p))}}, TruthValue::True);
  }
  return s;
}

}  // namespace idl
