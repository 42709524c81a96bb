#include "idl/formats.hpp"

#include "idl/error.hpp"
#include "parser_impl.hpp"

namespace idl {

namespace {

using detail::Tok;

/// `<- B.` as the sentence ~? x̄ : B.
Formula denial(detail::Parser& p) {
  Formula body = p.formula();
  p.expect(Tok::Dot, "'.' after denial");
  std::vector<std::string> vars;
  for (const auto& v : free_vars(body)) vars.push_back(v);
  return Formula::negate(Formula::exists(vars, std::move(body)));
}

Formula closed_sentence(detail::Parser& p, const char* what) {
  detail::Token start = p.peek();
  if (p.accept(Tok::Arrow)) return denial(p);
  Formula f = p.formula();
  if (!is_closed(f)) throw SyntaxError(std::string(what) + " has free variables", start.line, start.column);
  p.expect(Tok::Dot, "'.'");
  return f;
}

void optional_vocab(detail::Parser& p) {
  if (p.accept_keyword("vocab")) p.vocab_block();
}

/// `name/arity`, declaring the predicate if needed.
std::string predicate_signature(detail::Parser& p) {
  detail::Token name = p.expect(Tok::Ident, "predicate name");
  p.expect(Tok::Slash, "'/' and arity");
  std::size_t arity = p.integer("arity");
  Vocabulary& v = p.vocabulary();
  if (v.has_predicate(name.text)) {
    if (v.predicate_arity(name.text) != arity) p.fail_at(name, "arity mismatch for '" + name.text + "'");
  } else {
    try {
      v.add_predicate(name.text, arity);
    } catch (const VocabularyError& e) {
      p.fail_at(name, e.what());
    }
  }
  return name.text;
}

}  // namespace

LogicProgram parse_logic_program(std::string_view text) {
  LogicProgram out;
  detail::Parser p(text, out.vocabulary, true);
  optional_vocab(p);
  while (!p.at(Tok::End)) out.rules.push_back(p.rule(nullptr));
  return out;
}

AbductiveFramework parse_abductive(std::string_view text) {
  AbductiveFramework fw;
  detail::Parser p(text, fw.vocabulary, true);
  optional_vocab(p);
  while (!p.at(Tok::End)) {
    if (p.at_keyword("abducible") && p.peek(1).kind == Tok::Ident && p.peek(2).kind == Tok::Slash) {
      p.next();
      do {
        fw.abducibles.insert(predicate_signature(p));
      } while (p.accept(Tok::Comma));
      p.expect(Tok::Dot, "'.'");
    } else if (p.at_keyword("constraint") && p.peek(1).kind != Tok::LParen && p.peek(1).kind != Tok::Arrow &&
               p.peek(1).kind != Tok::Dot) {
      p.next();
      fw.constraints.push_back(closed_sentence(p, "constraint"));
    } else if (p.at_keyword("constraint") && p.peek(1).kind == Tok::Arrow) {
      p.next();
      p.next();
      fw.constraints.push_back(denial(p));
    } else {
      fw.program.push_back(p.rule(nullptr));
    }
  }
  return fw;
}

DeductiveDatabase parse_deductive_db(std::string_view text) {
  DeductiveDatabase db;
  detail::Parser p(text, db.vocabulary, true);
  optional_vocab(p);
  while (!p.at(Tok::End)) {
    if (p.at_keyword("edb") && p.peek(1).kind == Tok::Ident) {
      p.next();
      if (p.peek(1).kind == Tok::Slash) {
        db.edb[predicate_signature(p)];
      } else {
        detail::Token start = p.peek();
        Formula a = p.atom_formula();
        if (a.kind != Formula::Kind::Atom) p.fail_at(start, "expected a table entry");
        for (const auto& t : a.terms) {
          if (!t.is_ground()) p.fail_at(start, "table entries must be ground");
        }
        db.edb[a.name].push_back(a.terms);
      }
      p.expect(Tok::Dot, "'.'");
    } else if (p.at_keyword("ic") && p.peek(1).kind != Tok::LParen && p.peek(1).kind != Tok::Dot) {
      p.next();
      db.ic.push_back(closed_sentence(p, "integrity constraint"));
    } else {
      db.idb.push_back(p.rule(nullptr));
    }
  }
  return db;
}

SitcalcSpec parse_sitcalc(std::string_view text) {
  Vocabulary full;
  std::set<std::string> generated{"action", "situation", "s0", "do", "poss"};
  full.add_predicate("action", 1);
  full.add_predicate("situation", 1);
  full.add_constant("s0");
  full.add_function("do", 2);
  SitcalcSpec spec;
  std::map<std::string, std::size_t> index;  // fluent -> position in spec.fluents
  detail::Parser p(text, full, false);

  auto effect = [&](bool initiating) {
    detail::Token name = p.expect(Tok::Ident, "fluent name");
    auto it = index.find(name.text);
    if (it == index.end()) p.fail_at(name, "undeclared fluent '" + name.text + "'");
    FluentSpec& f = spec.fluents[it->second];
    Effect e{Term::constant(""), {}, Formula::top()};
    if (p.accept(Tok::LParen)) {
      if (!p.at(Tok::RParen)) {
        do {
          e.args.push_back(p.term());
        } while (p.accept(Tok::Comma));
      }
      p.expect(Tok::RParen, "')'");
    }
    if (e.args.size() != f.arity) p.fail_at(name, "fluent '" + f.name + "' takes " + std::to_string(f.arity) + " objects");
    p.expect_keyword("on");
    e.action = p.term();
    if (p.accept_keyword("when")) e.condition = p.formula();
    p.expect(Tok::Dot, "'.'");
    (initiating ? f.initiates : f.terminates).push_back(std::move(e));
  };

  while (!p.at(Tok::End)) {
    detail::Token kw = p.expect(Tok::Ident, "a statement");
    if (kw.text == "vocab") {
      p.vocab_block();
    } else if (kw.text == "fluent") {
      detail::Token name = p.expect(Tok::Ident, "fluent name");
      p.expect(Tok::Slash, "'/' and arity");
      std::size_t arity = p.integer("arity");
      p.expect(Tok::Dot, "'.'");
      if (index.count(name.text)) p.fail_at(name, "fluent '" + name.text + "' declared twice");
      try {
        for (const auto& [n, k] : std::vector<std::pair<std::string, std::size_t>>{
                 {name.text, arity + 1},
                 {"initially_" + name.text, arity},
                 {"cause_" + name.text, arity + 2},
                 {"cause_not_" + name.text, arity + 2},
                 {name.text + "_o", arity + 1}}) {
          full.add_predicate(n, k);
          generated.insert(n);
        }
      } catch (const VocabularyError& e) {
        p.fail_at(name, e.what());
      }
      index[name.text] = spec.fluents.size();
      spec.fluents.push_back({name.text, arity, {}, {}});
    } else if (kw.text == "preconditions") {
      p.expect(Tok::Dot, "'.'");
      spec.preconditions = true;
      if (!full.has_predicate("poss")) full.add_predicate("poss", 2);
    } else if (kw.text == "initiates" || kw.text == "terminates") {
      effect(kw.text == "initiates");
    } else if (kw.text == "poss") {
      if (!spec.preconditions) p.fail_at(kw, "'poss' requires a preceding 'preconditions.'");
      PossCase c{p.term(), Formula::top()};
      if (p.accept_keyword("when")) c.condition = p.formula();
      p.expect(Tok::Dot, "'.'");
      spec.poss.push_back(std::move(c));
    } else {
      p.fail_at(kw, "expected 'vocab', 'fluent', 'preconditions', 'initiates', 'terminates' or 'poss'");
    }
  }
  for (const auto& c : full.constants()) {
    if (!generated.count(c)) spec.vocabulary.add_constant(c);
  }
  for (const auto& [f, n] : full.functions()) {
    if (!generated.count(f)) spec.vocabulary.add_function(f, n);
  }
  for (const auto& [q, n] : full.predicates()) {
    if (!generated.count(q)) spec.vocabulary.add_predicate(q, n);
  }
  return spec;
}

}  // namespace idl
