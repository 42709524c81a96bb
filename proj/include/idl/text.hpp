#pragma once

// Concrete syntax for theories and formulas.
//
//   vocab { const a, b. func s/1. pred even/1, odd/1. }
//   define even, odd { even(0). odd(s(X)) <- even(X). even(s(X)) <- odd(X). }
//   axiom ! X : U(X).
//
// Connectives, tightest first: ~, &, |, => (right assoc), <=> (non assoc).
// Quantifiers `! X :` and `? X :` extend as far right as possible.
// Identifiers starting with an uppercase letter are variables unless they
// are applied to arguments or declared as symbols. `#name` is a domain
// element literal. `//` starts a comment.

#include <string>
#include <string_view>

#include "idl/syntax.hpp"

namespace idl {

Theory parse_theory(std::string_view text);

/// Parses a standalone formula. With `infer` set, undeclared symbols are
/// added to `vocabulary` based on where they occur; otherwise they are errors.
Formula parse_formula(std::string_view text, Vocabulary& vocabulary, bool infer = false);
Formula parse_formula(std::string_view text, const Vocabulary& vocabulary);

struct RenderOptions {
  /// Print domain elements without the `#` marker (used for ground output).
  bool bare_elements = false;
};

std::string render_term(const Term& t, const RenderOptions& options = {});
std::string render_formula(const Formula& f, const RenderOptions& options = {});
std::string render_rule(const Rule& r, const RenderOptions& options = {});
std::string render_vocabulary(const Vocabulary& v);
std::string render_definition(const Definition& d);
std::string render_theory(const Theory& t);

}  // namespace idl
