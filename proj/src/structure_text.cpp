#include "idl/structure_text.hpp"

#include <algorithm>
#include <sstream>

#include "idl/error.hpp"
#include "parser_impl.hpp"

namespace idl {

namespace {

using detail::Tok;

std::vector<Element> element_tuple(detail::Parser& p, const Structure& s) {
  std::vector<Element> out;
  auto one = [&] {
    detail::Token t = p.expect(Tok::Ident, "domain element");
    auto e = s.find_element(t.text);
    if (!e) p.fail_at(t, "unknown domain element '" + t.text + "'");
    out.push_back(*e);
  };
  if (p.accept(Tok::LParen)) {
    if (!p.at(Tok::RParen)) {
      do {
        one();
      } while (p.accept(Tok::Comma));
    }
    p.expect(Tok::RParen, "')'");
  } else {
    one();
  }
  return out;
}

TruthValue truth_keyword(detail::Parser& p) {
  detail::Token t = p.expect(Tok::Ident, "'true', 'false' or 'unknown'");
  if (t.text == "true") return TruthValue::True;
  if (t.text == "false") return TruthValue::False;
  if (t.text == "unknown") return TruthValue::Unknown;
  p.fail_at(t, "expected 'true', 'false' or 'unknown'");
}

void predicate_entries(detail::Parser& p, Structure& s, const std::string& name, std::size_t arity) {
  p.expect(Tok::LBrace, "'{'");
  if (!p.at(Tok::RBrace)) {
    do {
      detail::Token start = p.peek();
      std::vector<Element> tuple = element_tuple(p, s);
      if (tuple.size() != arity) p.fail_at(start, "tuple arity does not match predicate '" + name + "'");
      TruthValue v = TruthValue::True;
      if (p.accept(Tok::Colon)) v = truth_keyword(p);
      s.set_value(name, tuple, v);
    } while (p.accept(Tok::Comma));
  }
  p.expect(Tok::RBrace, "'}'");
}

}  // namespace

Structure parse_structure(std::string_view text, const Vocabulary& vocabulary) {
  Vocabulary scratch = vocabulary;
  detail::Parser p(text, scratch, false);
  p.expect_keyword("structure");
  p.expect(Tok::LBrace, "'{' after 'structure'");
  p.expect_keyword("domain");
  p.expect(Tok::Eq, "'=' after 'domain'");
  p.expect(Tok::LBrace, "'{'");
  std::vector<std::string> domain;
  if (!p.at(Tok::RBrace)) {
    do {
      domain.push_back(p.identifier("domain element"));
    } while (p.accept(Tok::Comma));
  }
  p.expect(Tok::RBrace, "'}'");
  p.expect(Tok::Dot, "'.'");
  if (domain.empty()) p.fail("the domain must not be empty");

  Structure s;
  try {
    s = Structure(domain);
  } catch (const SemanticError& e) {
    p.fail(e.what());
  }
  for (const auto& [name, arity] : vocabulary.predicates()) s.declare_predicate(name, arity);

  while (!p.accept(Tok::RBrace)) {
    detail::Token kw = p.expect(Tok::Ident, "'const', 'func' or 'pred'");
    if (kw.text == "const") {
      do {
        detail::Token name = p.expect(Tok::Ident, "constant name");
        if (!vocabulary.has_constant(name.text)) p.fail_at(name, "undeclared constant '" + name.text + "'");
        p.expect(Tok::Eq, "'='");
        auto e = element_tuple(p, s);
        if (e.size() != 1) p.fail_at(name, "a constant denotes a single element");
        s.set_constant(name.text, e[0]);
      } while (p.accept(Tok::Comma));
    } else if (kw.text == "func") {
      detail::Token name = p.expect(Tok::Ident, "function name");
      if (!vocabulary.has_function(name.text)) p.fail_at(name, "undeclared function '" + name.text + "'");
      std::size_t arity = vocabulary.function_arity(name.text);
      p.expect(Tok::Eq, "'='");
      p.expect(Tok::LBrace, "'{'");
      std::vector<bool> seen(s.tuple_count(arity), false);
      std::vector<Element> table(s.tuple_count(arity), 0);
      if (!p.at(Tok::RBrace)) {
        do {
          detail::Token start = p.peek();
          auto args = element_tuple(p, s);
          if (args.size() != arity) p.fail_at(start, "argument count does not match function '" + name.text + "'");
          p.expect(Tok::MapsTo, "'->'");
          auto value = element_tuple(p, s);
          if (value.size() != 1) p.fail_at(start, "a function value is a single element");
          std::size_t index = s.tuple_index(args);
          seen[index] = true;
          table[index] = value[0];
        } while (p.accept(Tok::Comma));
      }
      p.expect(Tok::RBrace, "'}'");
      if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
        p.fail_at(name, "function '" + name.text + "' is not total on the domain");
      }
      s.set_function(name.text, arity, std::move(table));
    } else if (kw.text == "pred") {
      detail::Token name = p.expect(Tok::Ident, "predicate name");
      if (!vocabulary.has_predicate(name.text)) p.fail_at(name, "undeclared predicate '" + name.text + "'");
      std::size_t arity = vocabulary.predicate_arity(name.text);
      p.expect(Tok::Eq, "'='");
      if (p.accept_keyword("total")) {
        s.fill_predicate(name.text, truth_keyword(p));
        if (p.accept_keyword("except")) predicate_entries(p, s, name.text, arity);
      } else if (p.at(Tok::LBrace)) {
        predicate_entries(p, s, name.text, arity);
      } else {
        if (arity != 0) p.fail_at(name, "only nullary predicates take a bare truth value");
        s.set_value(name.text, {}, truth_keyword(p));
      }
    } else {
      p.fail_at(kw, "expected 'const', 'func' or 'pred'");
    }
    p.expect(Tok::Dot, "'.'");
  }
  if (!p.at(Tok::End)) p.fail("unexpected input after structure");
  try {
    s.conform_to(vocabulary);
  } catch (const SemanticError& e) {
    p.fail(e.what());
  }
  return s;
}

namespace {

std::string tuple_text(const Structure& s, const std::vector<Element>& tuple) {
  std::string out = "(";
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i) out += ", ";
    out += s.element_name(tuple[i]);
  }
  return out + ")";
}

}  // namespace

std::string render_structure(const Structure& s) {
  std::ostringstream os;
  os << "structure {\n  domain = {";
  for (std::size_t i = 0; i < s.domain_size(); ++i) os << (i ? ", " : "") << s.element_name(i);
  os << "}.\n";
  for (const auto& [name, e] : s.constants()) os << "  const " << name << " = " << s.element_name(e) << ".\n";
  for (const auto& [name, table] : s.functions()) {
    os << "  func " << name << " = {";
    for (std::size_t i = 0; i < table.values.size(); ++i) {
      auto args = s.tuple_at(table.arity, i);
      os << (i ? ", " : "") << (table.arity == 1 ? s.element_name(args[0]) : tuple_text(s, args)) << "->"
         << s.element_name(table.values[i]);
    }
    os << "}.\n";
  }
  for (const auto& [name, table] : s.predicates()) {
    bool total = std::find(table.values.begin(), table.values.end(), TruthValue::Unknown) == table.values.end();
    os << "  pred " << name << " = ";
    std::vector<std::string> entries;
    for (std::size_t i = 0; i < table.values.size(); ++i) {
      TruthValue v = table.values[i];
      std::string tuple = tuple_text(s, s.tuple_at(table.arity, i));
      if (total) {
        if (v == TruthValue::True) entries.push_back(tuple);
      } else if (v != TruthValue::Unknown) {
        entries.push_back(tuple + ": " + to_string(v));
      }
    }
    if (total) os << "total false except ";
    os << "{";
    for (std::size_t i = 0; i < entries.size(); ++i) os << (i ? ", " : "") << entries[i];
    os << "}.\n";
  }
  os << "}\n";
  return os.str();
}

std::string render_atoms(const Structure& s, TruthValue value, const std::set<std::string>* only) {
  std::string out = "{";
  bool first = true;
  for (const auto& [name, table] : s.predicates()) {
    if (only && !only->count(name)) continue;
    for (std::size_t i = 0; i < table.values.size(); ++i) {
      if (table.values[i] != value) continue;
      if (!first) out += ", ";
      out += s.atom_string({name, s.tuple_at(table.arity, i)});
      first = false;
    }
  }
  return out + "}";
}

}  // namespace idl
