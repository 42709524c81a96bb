#pragma once

// Lexer and recursive-descent parser shared by the theory reader and the
// line-oriented import formats.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "idl/error.hpp"
#include "idl/syntax.hpp"

namespace idl::detail {

enum class Tok {
  Ident,
  ElementLit,  // #name
  LParen,
  RParen,
  LBrace,
  RBrace,
  Comma,
  Dot,
  Colon,
  Slash,
  Bang,
  Question,
  Tilde,
  Amp,
  Bar,
  Implies,    // =>
  Iff,        // <=>
  Arrow,      // <-
  MapsTo,     // ->
  Eq,         // =
  Neq,        // ~=
  End,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view text);

class Parser {
 public:
  /// With `infer`, unknown symbols are declared in `vocab` on first use.
  Parser(std::string_view text, Vocabulary& vocab, bool infer);

  const Token& peek(std::size_t ahead = 0) const;
  Token next();
  bool at(Tok kind) const { return peek().kind == kind; }
  bool at_keyword(std::string_view word) const;
  bool accept(Tok kind);
  bool accept_keyword(std::string_view word);
  Token expect(Tok kind, std::string_view what);
  void expect_keyword(std::string_view word);
  [[noreturn]] void fail(const std::string& message) const;
  [[noreturn]] void fail_at(const Token& t, const std::string& message) const;

  std::string identifier(std::string_view what);
  std::size_t integer(std::string_view what);

  Formula formula();
  Term term();
  /// `p(t1,..,tn)` or `p`; the predicate must be declared (or is inferred).
  Formula atom_formula();
  /// Parses a rule head and optional body ending in `.`; `allowed` limits
  /// the head predicates unless it is empty and `any_head` is set.
  Rule rule(const std::set<std::string>* allowed);

  void vocab_block();
  Definition definition_block();

  Vocabulary& vocabulary() { return vocab_; }

 private:
  Formula iff_level();
  Formula implies_level();
  Formula or_level();
  Formula and_level();
  Formula unary_level();
  Formula primary();

  struct Raw {
    Token token;
    std::vector<Term> args;
    bool applied = false;
  };
  Raw raw_application();
  Term term_from_raw(Raw raw);
  Formula atom_from_raw(Raw raw);
  bool is_bound(const std::string& name) const;
  static bool looks_like_variable(const std::string& name);

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  Vocabulary& vocab_;
  bool infer_;
  std::vector<std::string> bound_;
};

}  // namespace idl::detail
