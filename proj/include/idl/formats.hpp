#pragma once

// Line-oriented input formats for the import and sitcalc commands. Every
// statement ends in `.`; `//` starts a comment. Symbols are inferred from
// use (lowercase: constant or predicate, uppercase: variable) unless an
// optional leading `vocab { ... }` block declares them.
//
// Logic program:   p(X) <- q(X) & ~r(X).
// Abductive:       abducible ab/1.   constraint ~? X : (p(X) & q(X)).
//                  constraint <- p(X) & q(X).     (denial)
//                  other statements are program rules
// Deductive DB:    edb parent(a, b).   edb link/2.   (empty table)
//                  ic <- anc(X, X).    ic ! X : p(X).
//                  other statements are intensional rules
// Situation calculus (symbols must be declared):
//                  vocab { const open1, close1. }
//                  fluent latch/0.
//                  preconditions.
//                  initiates latch on open1.
//                  terminates latch on close1 when latch(S).
//                  poss open1 when ~latch(S).
//   `S` is the situation variable.

#include <string_view>
#include <vector>

#include "idl/embeddings.hpp"
#include "idl/syntax.hpp"

namespace idl {

struct LogicProgram {
  Vocabulary vocabulary;
  std::vector<Rule> rules;
};

LogicProgram parse_logic_program(std::string_view text);
AbductiveFramework parse_abductive(std::string_view text);
DeductiveDatabase parse_deductive_db(std::string_view text);
SitcalcSpec parse_sitcalc(std::string_view text);

}  // namespace idl
