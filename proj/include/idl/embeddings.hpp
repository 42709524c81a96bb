#pragma once

// Builders for logic programs, abductive frameworks, deductive databases,
// tables, domain closure with unique names, and situation-calculus frame
// definitions.

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "idl/structure.hpp"
#include "idl/syntax.hpp"

namespace idl {

/// One definition defining exactly the head predicates. An empty program
/// gives a theory without definitions.
Theory import_logic_program(const std::vector<Rule>& rules, const Vocabulary& vocabulary);

struct AbductiveFramework {
  Vocabulary vocabulary;
  std::set<std::string> abducibles;
  std::vector<Rule> program;
  std::vector<Formula> constraints;
};

/// T plus one definition of every non-abducible predicate of the
/// vocabulary, including those without rules.
Theory import_abductive(const AbductiveFramework& fw);

/// Definition by exhaustive enumeration: one fact per tuple.
Definition table_definition(const std::string& predicate, const std::vector<std::vector<Term>>& tuples);

struct UnaOptions {
  /// Nesting depth of the ground terms that receive inequations when the
  /// vocabulary has function symbols.
  std::size_t depth = 1;
  /// Cap on the number of ground terms.
  std::size_t max_terms = 200;
};

struct DcaUna {
  /// Vocabulary extended with the universe predicate; one definition of it;
  /// the sentence ! X : U(X) followed by the inequations.
  Theory theory;
  std::string predicate;
  /// Inequations cover only terms up to the depth bound.
  bool approximate = false;
};

DcaUna dca_una(const Vocabulary& vocabulary, const UnaOptions& options = {});

struct DeductiveDatabase {
  Vocabulary vocabulary;
  /// Extensional tables; every listed predicate is extensional even if empty.
  std::map<std::string, std::vector<std::vector<Term>>> edb;
  std::vector<Rule> idb;
  std::vector<Formula> ic;
};

/// Table definitions, one simultaneous IDB definition, IC as axioms and DCA+UNA.
Theory import_deductive_db(const DeductiveDatabase& db, const UnaOptions& options = {});

// ---- situation calculus --------------------------------------------------------------

struct Effect {
  Term action;
  /// Object arguments of the fluent.
  std::vector<Term> args;
  /// May mention fluents with the situation variable `S` as last argument,
  /// and cause atoms with `S` as second argument.
  Formula condition = Formula::top();
};

struct FluentSpec {
  std::string name;
  std::size_t arity = 0;
  std::vector<Effect> initiates;
  std::vector<Effect> terminates;
};

struct PossCase {
  Term action;
  Formula condition = Formula::top();
};

struct SitcalcSpec {
  /// User symbols: actions, objects and static predicates.
  Vocabulary vocabulary;
  std::vector<FluentSpec> fluents;
  /// Adds poss(a,s) to the effect cases and the f_o rule per fluent.
  bool preconditions = false;
  std::vector<PossCase> poss;
};

inline const char* const kSituationVariable = "S";

/// User vocabulary plus action/1, situation/1, s0, do/2 and the per-fluent
/// predicates f, initially_f, cause_f, cause_not_f (and poss, f_o).
Vocabulary frame_vocabulary(const SitcalcSpec& spec);

/// Throws SemanticError when an effect condition uses the situation
/// outside fluent and cause atoms.
Definition build_frame_definition(const SitcalcSpec& spec);

/// Frame vocabulary, the frame definition and, per fluent, the sentence
/// ! A S X̄ : ~(cause_f(A,S,X̄) & cause_not_f(A,S,X̄)).
Theory build_frame_theory(const SitcalcSpec& spec);

/// Finite situation tree: `objects`, `actions` (constants of the
/// vocabulary), situations reachable from s0 by at most `depth` actions and
/// one extra element `z` that absorbs do(a, s) beyond the depth and on
/// non-actions. Situation elements are named by their action path.
Structure situation_structure(const Vocabulary& vocabulary, const std::vector<std::string>& actions,
                              const std::vector<std::string>& objects, std::size_t depth);

/// Element of the situation reached from s0 by `path`.
std::string situation_name(const std::vector<std::string>& path);

}  // namespace idl
