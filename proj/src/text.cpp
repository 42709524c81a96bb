#include "idl/text.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "parser_impl.hpp"

namespace idl {
namespace detail {

namespace {

bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

}  // namespace

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1, column = 1, i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
  };
  auto starts = [&](std::string_view s) { return text.substr(i, s.size()) == s; };

  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (starts("//")) {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    std::size_t l = line, col = column;
    if (ident_char(c)) {
      std::size_t j = i;
      while (j < text.size() && ident_char(text[j])) ++j;
      out.push_back({Tok::Ident, std::string(text.substr(i, j - i)), l, col});
      advance(j - i);
      continue;
    }
    if (c == '#') {
      std::size_t j = i + 1;
      while (j < text.size() && ident_char(text[j])) ++j;
      if (j == i + 1) throw SyntaxError("expected element name after '#'", l, col);
      out.push_back({Tok::ElementLit, std::string(text.substr(i + 1, j - i - 1)), l, col});
      advance(j - i);
      continue;
    }
    struct Punct {
      std::string_view text;
      Tok kind;
    };
    static constexpr Punct puncts[] = {
        {"<=>", Tok::Iff}, {"<-", Tok::Arrow}, {"=>", Tok::Implies}, {"->", Tok::MapsTo},
        {"~=", Tok::Neq},  {"=", Tok::Eq},     {"~", Tok::Tilde},    {"(", Tok::LParen},
        {")", Tok::RParen}, {"{", Tok::LBrace}, {"}", Tok::RBrace},  {",", Tok::Comma},
        {".", Tok::Dot},   {":", Tok::Colon},  {"/", Tok::Slash},    {"!", Tok::Bang},
        {"?", Tok::Question}, {"&", Tok::Amp}, {"|", Tok::Bar},
    };
    bool matched = false;
    for (const auto& p : puncts) {
      if (starts(p.text)) {
        out.push_back({p.kind, std::string(p.text), l, col});
        advance(p.text.size());
        matched = true;
        break;
      }
    }
    if (!matched) throw SyntaxError(std::string("unexpected character '") + c + "'", l, col);
  }
  out.push_back({Tok::End, "", line, column});
  return out;
}

Parser::Parser(std::string_view text, Vocabulary& vocab, bool infer)
    : tokens_(tokenize(text)), vocab_(vocab), infer_(infer) {}

const Token& Parser::peek(std::size_t ahead) const {
  return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
}

Token Parser::next() {
  Token t = peek();
  if (pos_ < tokens_.size() - 1) ++pos_;
  return t;
}

bool Parser::at_keyword(std::string_view word) const { return at(Tok::Ident) && peek().text == word; }

bool Parser::accept(Tok kind) {
  if (!at(kind)) return false;
  next();
  return true;
}

bool Parser::accept_keyword(std::string_view word) {
  if (!at_keyword(word)) return false;
  next();
  return true;
}

Token Parser::expect(Tok kind, std::string_view what) {
  if (!at(kind)) fail("expected " + std::string(what));
  return next();
}

void Parser::expect_keyword(std::string_view word) {
  if (!accept_keyword(word)) fail("expected '" + std::string(word) + "'");
}

void Parser::fail(const std::string& message) const { fail_at(peek(), message); }

void Parser::fail_at(const Token& t, const std::string& message) const {
  std::string found = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
  throw SyntaxError(message + " (found " + found + ")", t.line, t.column);
}

std::string Parser::identifier(std::string_view what) { return expect(Tok::Ident, what).text; }

std::size_t Parser::integer(std::string_view what) {
  Token t = expect(Tok::Ident, what);
  if (t.text.empty() || !std::all_of(t.text.begin(), t.text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    fail_at(t, "expected " + std::string(what));
  }
  return static_cast<std::size_t>(std::stoul(t.text));
}

bool Parser::looks_like_variable(const std::string& name) {
  return !name.empty() && std::isupper(static_cast<unsigned char>(name[0]));
}

bool Parser::is_bound(const std::string& name) const {
  return std::find(bound_.begin(), bound_.end(), name) != bound_.end();
}

Formula Parser::formula() { return iff_level(); }

Formula Parser::iff_level() {
  Formula lhs = implies_level();
  if (accept(Tok::Iff)) {
    Formula rhs = implies_level();
    if (at(Tok::Iff)) fail("'<=>' is not associative; add parentheses");
    return Formula::iff(std::move(lhs), std::move(rhs));
  }
  return lhs;
}

Formula Parser::implies_level() {
  Formula lhs = or_level();
  if (accept(Tok::Implies)) return Formula::implies(std::move(lhs), implies_level());
  return lhs;
}

Formula Parser::or_level() {
  std::vector<Formula> parts{and_level()};
  while (accept(Tok::Bar)) parts.push_back(and_level());
  return Formula::disjunction(std::move(parts));
}

Formula Parser::and_level() {
  std::vector<Formula> parts{unary_level()};
  while (accept(Tok::Amp)) parts.push_back(unary_level());
  return Formula::conjunction(std::move(parts));
}

Formula Parser::unary_level() {
  if (accept(Tok::Tilde)) return Formula::negate(unary_level());
  if (at(Tok::Bang) || at(Tok::Question)) {
    bool universal = next().kind == Tok::Bang;
    std::vector<std::string> vars;
    do {
      Token v = expect(Tok::Ident, "quantified variable");
      if (!looks_like_variable(v.text)) fail_at(v, "quantified variables must start with an uppercase letter");
      vars.push_back(v.text);
      accept(Tok::Comma);
    } while (at(Tok::Ident));
    expect(Tok::Colon, "':' after quantified variables");
    for (const auto& v : vars) bound_.push_back(v);
    Formula body = formula();
    bound_.resize(bound_.size() - vars.size());
    return universal ? Formula::forall(vars, std::move(body)) : Formula::exists(vars, std::move(body));
  }
  return primary();
}

Formula Parser::primary() {
  if (accept_keyword("true")) return Formula::top();
  if (accept_keyword("false")) return Formula::bottom();
  if (accept(Tok::LParen)) {
    Formula f = formula();
    expect(Tok::RParen, "')'");
    return f;
  }
  if (!at(Tok::Ident) && !at(Tok::ElementLit)) fail("expected a formula");
  Raw raw = raw_application();
  if (at(Tok::Eq) || at(Tok::Neq)) {
    bool negated = next().kind == Tok::Neq;
    Term lhs = term_from_raw(std::move(raw));
    Formula eq = Formula::equal(std::move(lhs), term());
    return negated ? Formula::negate(std::move(eq)) : eq;
  }
  return atom_from_raw(std::move(raw));
}

Parser::Raw Parser::raw_application() {
  Raw raw;
  raw.token = next();
  if (raw.token.kind != Tok::Ident && raw.token.kind != Tok::ElementLit) fail_at(raw.token, "expected a symbol");
  if (raw.token.kind == Tok::Ident && accept(Tok::LParen)) {
    raw.applied = true;
    if (!at(Tok::RParen)) {
      do {
        raw.args.push_back(term());
      } while (accept(Tok::Comma));
    }
    expect(Tok::RParen, "')' after arguments");
  }
  return raw;
}

Term Parser::term() {
  if (!at(Tok::Ident) && !at(Tok::ElementLit)) fail("expected a term");
  return term_from_raw(raw_application());
}

Term Parser::term_from_raw(Raw raw) {
  const Token& t = raw.token;
  if (t.kind == Tok::ElementLit) return Term::element(t.text);
  if (raw.applied) {
    auto kind = vocab_.kind_of(t.text);
    if (!kind && infer_) {
      vocab_.add_function(t.text, raw.args.size());
      kind = SymbolKind::Function;
    }
    if (!kind) fail_at(t, "undeclared function '" + t.text + "'");
    if (*kind != SymbolKind::Function) fail_at(t, "'" + t.text + "' is not a function symbol");
    if (vocab_.function_arity(t.text) != raw.args.size()) {
      fail_at(t, "arity mismatch for function '" + t.text + "': expected " +
                     std::to_string(vocab_.function_arity(t.text)));
    }
    return Term::apply(t.text, std::move(raw.args));
  }
  if (is_bound(t.text)) return Term::variable(t.text);
  auto kind = vocab_.kind_of(t.text);
  if (kind == SymbolKind::Constant) return Term::constant(t.text);
  if (kind) fail_at(t, "'" + t.text + "' is not a constant");
  if (looks_like_variable(t.text)) return Term::variable(t.text);
  if (infer_) {
    vocab_.add_constant(t.text);
    return Term::constant(t.text);
  }
  fail_at(t, "undeclared constant '" + t.text + "'");
}

Formula Parser::atom_from_raw(Raw raw) {
  const Token& t = raw.token;
  if (t.kind == Tok::ElementLit) fail_at(t, "a domain element is not a formula");
  if (!raw.applied && (is_bound(t.text) || (looks_like_variable(t.text) && !vocab_.kind_of(t.text)))) {
    fail_at(t, "variable '" + t.text + "' used as a formula");
  }
  auto kind = vocab_.kind_of(t.text);
  if (!kind && infer_) {
    vocab_.add_predicate(t.text, raw.args.size());
    kind = SymbolKind::Predicate;
  }
  if (!kind) fail_at(t, "undeclared predicate '" + t.text + "'");
  if (*kind != SymbolKind::Predicate) fail_at(t, "'" + t.text + "' is not a predicate");
  if (vocab_.predicate_arity(t.text) != raw.args.size()) {
    fail_at(t, "arity mismatch for predicate '" + t.text + "': expected " +
                   std::to_string(vocab_.predicate_arity(t.text)));
  }
  return Formula::atom(t.text, std::move(raw.args));
}

Formula Parser::atom_formula() {
  if (!at(Tok::Ident)) fail("expected an atom");
  return atom_from_raw(raw_application());
}

Rule Parser::rule(const std::set<std::string>* allowed) {
  Token head_token = peek();
  Formula head = atom_formula();
  if (allowed && !allowed->count(head.name)) {
    fail_at(head_token, "rule head '" + head.name + "' is not a defined predicate of this definition");
  }
  Formula body = Formula::top();
  if (accept(Tok::Arrow)) body = formula();
  expect(Tok::Dot, "'.' after rule");
  return Rule::make(head.name, std::move(head.terms), std::move(body));
}

void Parser::vocab_block() {
  expect(Tok::LBrace, "'{' after 'vocab'");
  while (!accept(Tok::RBrace)) {
    Token kw = expect(Tok::Ident, "'const', 'func' or 'pred'");
    if (kw.text != "const" && kw.text != "func" && kw.text != "pred") {
      fail_at(kw, "expected 'const', 'func' or 'pred'");
    }
    do {
      Token name = expect(Tok::Ident, "symbol name");
      try {
        if (kw.text == "const") {
          vocab_.add_constant(name.text);
        } else {
          expect(Tok::Slash, "'/' and arity");
          std::size_t arity = integer("arity");
          if (kw.text == "func") {
            vocab_.add_function(name.text, arity);
          } else {
            vocab_.add_predicate(name.text, arity);
          }
        }
      } catch (const VocabularyError& e) {
        fail_at(name, e.what());
      }
    } while (accept(Tok::Comma));
    expect(Tok::Dot, "'.' after declaration");
  }
}

Definition Parser::definition_block() {
  Definition d;
  while (at(Tok::Ident)) {
    Token name = next();
    if (vocab_.kind_of(name.text) != SymbolKind::Predicate) {
      fail_at(name, "'" + name.text + "' is not a declared predicate");
    }
    d.defined.insert(name.text);
    if (!accept(Tok::Comma)) break;
  }
  expect(Tok::LBrace, "'{' opening the definition");
  while (!accept(Tok::RBrace)) d.rules.push_back(rule(&d.defined));
  return d;
}

}  // namespace detail

// ---- public parsing API --------------------------------------------------------

Theory parse_theory(std::string_view text) {
  Theory theory;
  detail::Parser p(text, theory.vocabulary, false);
  while (!p.at(detail::Tok::End)) {
    if (p.accept_keyword("vocab")) {
      p.vocab_block();
    } else if (p.accept_keyword("define")) {
      theory.definitions.push_back(p.definition_block());
    } else if (p.accept_keyword("axiom")) {
      detail::Token start = p.peek();
      Formula f = p.formula();
      if (!is_closed(f)) {
        throw SyntaxError("axiom has free variables", start.line, start.column);
      }
      p.expect(detail::Tok::Dot, "'.' after axiom");
      theory.sentences.push_back(std::move(f));
    } else {
      p.fail("expected 'vocab', 'define' or 'axiom'");
    }
  }
  return theory;
}

Formula parse_formula(std::string_view text, Vocabulary& vocabulary, bool infer) {
  detail::Parser p(text, vocabulary, infer);
  Formula f = p.formula();
  p.accept(detail::Tok::Dot);
  if (!p.at(detail::Tok::End)) p.fail("unexpected trailing input");
  return f;
}

Formula parse_formula(std::string_view text, const Vocabulary& vocabulary) {
  Vocabulary copy = vocabulary;
  return parse_formula(text, copy, false);
}

// ---- rendering -------------------------------------------------------------------

namespace {

int precedence(const Formula& f) {
  switch (f.kind) {
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
      return 0;
    case Formula::Kind::Iff:
      return 1;
    case Formula::Kind::Implies:
      return 2;
    case Formula::Kind::Or:
      return 3;
    case Formula::Kind::And:
      return 4;
    case Formula::Kind::Not:
      return 5;
    default:
      return 6;
  }
}

void write_term(std::ostream& os, const Term& t, const RenderOptions& o) {
  if (t.kind == Term::Kind::Element && !o.bare_elements) os << '#';
  os << t.name;
  if (t.kind == Term::Kind::Application) {
    os << '(';
    for (std::size_t i = 0; i < t.args.size(); ++i) {
      if (i) os << ", ";
      write_term(os, t.args[i], o);
    }
    os << ')';
  }
}

void write_formula(std::ostream& os, const Formula& f, const RenderOptions& o);

void write_child(std::ostream& os, const Formula& f, bool parens, const RenderOptions& o) {
  if (parens) os << '(';
  write_formula(os, f, o);
  if (parens) os << ')';
}

void write_formula(std::ostream& os, const Formula& f, const RenderOptions& o) {
  switch (f.kind) {
    case Formula::Kind::True:
      os << "true";
      return;
    case Formula::Kind::False:
      os << "false";
      return;
    case Formula::Kind::Atom:
      os << f.name;
      if (!f.terms.empty()) {
        os << '(';
        for (std::size_t i = 0; i < f.terms.size(); ++i) {
          if (i) os << ", ";
          write_term(os, f.terms[i], o);
        }
        os << ')';
      }
      return;
    case Formula::Kind::Equal:
      write_term(os, f.terms[0], o);
      os << " = ";
      write_term(os, f.terms[1], o);
      return;
    case Formula::Kind::Not:
      if (f.body().kind == Formula::Kind::Equal) {
        write_term(os, f.body().terms[0], o);
        os << " ~= ";
        write_term(os, f.body().terms[1], o);
        return;
      }
      os << '~';
      write_child(os, f.body(), precedence(f.body()) < 5, o);
      return;
    case Formula::Kind::And:
    case Formula::Kind::Or: {
      const char* op = f.kind == Formula::Kind::And ? " & " : " | ";
      for (std::size_t i = 0; i < f.children.size(); ++i) {
        if (i) os << op;
        write_child(os, f.children[i], precedence(f.children[i]) <= precedence(f), o);
      }
      return;
    }
    case Formula::Kind::Implies:
      write_child(os, f.children[0], precedence(f.children[0]) <= 2, o);
      os << " => ";
      write_child(os, f.children[1], precedence(f.children[1]) < 2, o);
      return;
    case Formula::Kind::Iff:
      write_child(os, f.children[0], precedence(f.children[0]) <= 1, o);
      os << " <=> ";
      write_child(os, f.children[1], precedence(f.children[1]) <= 1, o);
      return;
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
      os << (f.kind == Formula::Kind::Forall ? "! " : "? ") << f.name << " : ";
      write_formula(os, f.body(), o);
      return;
  }
}

template <typename Range>
std::string join(const Range& items, const std::string& sep) {
  std::string out;
  bool first = true;
  for (const auto& item : items) {
    if (!first) out += sep;
    out += item;
    first = false;
  }
  return out;
}

}  // namespace

std::string render_term(const Term& t, const RenderOptions& options) {
  std::ostringstream os;
  write_term(os, t, options);
  return os.str();
}

std::string render_formula(const Formula& f, const RenderOptions& options) {
  std::ostringstream os;
  write_formula(os, f, options);
  return os.str();
}

std::string render_rule(const Rule& r, const RenderOptions& options) {
  std::string out = render_formula(Formula::atom(r.head, r.head_terms), options);
  if (r.body.kind != Formula::Kind::True) out += " <- " + render_formula(r.body, options);
  return out + ".";
}

std::string render_vocabulary(const Vocabulary& v) {
  std::string out = "vocab {";
  if (!v.constants().empty()) out += " const " + join(v.constants(), ", ") + ".";
  auto with_arity = [](const std::map<std::string, std::size_t>& m) {
    std::vector<std::string> items;
    for (const auto& [name, arity] : m) items.push_back(name + "/" + std::to_string(arity));
    return items;
  };
  if (!v.functions().empty()) out += " func " + join(with_arity(v.functions()), ", ") + ".";
  if (!v.predicates().empty()) out += " pred " + join(with_arity(v.predicates()), ", ") + ".";
  return out + " }";
}

std::string render_definition(const Definition& d) {
  std::string out = "define ";
  if (!d.defined.empty()) out += join(d.defined, ", ") + " ";
  out += "{";
  if (d.rules.empty()) return out + " }";
  out += "\n";
  for (const auto& r : d.rules) out += "  " + render_rule(r) + "\n";
  return out + "}";
}

std::string render_theory(const Theory& t) {
  std::string out = render_vocabulary(t.vocabulary) + "\n";
  for (const auto& d : t.definitions) out += render_definition(d) + "\n";
  for (const auto& s : t.sentences) out += "axiom " + render_formula(s) + ".\n";
  return out;
}

}  // namespace idl
