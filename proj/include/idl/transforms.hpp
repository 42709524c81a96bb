#pragma once

// Equivalence-preserving rewrites of definitions, Clark completion and the
// three-valued tautology check that gates body substitutions.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "idl/structure.hpp"
#include "idl/syntax.hpp"

namespace idl {

/// p(t̄) <- F  becomes  p(ȳ) <- ? x̄ : (ȳ = t̄ & F), with x̄ the rule variables.
Rule normalize_head(const Rule& r);

/// One rule per defined predicate whose body is the disjunction of the
/// normalized bodies. Predicates without rules get the body `false` when
/// `vocabulary` gives their arity.
Definition merge_cases(const Definition& d, const Vocabulary* vocabulary = nullptr);

/// ∀ȳ. p(ȳ) <=> ∨_i ∃x̄_i. (ȳ = t̄_i ∧ F_i) per defined predicate, and
/// ∀ȳ. ~p(ȳ) for predicates without rules. Rules whose head arguments are
/// distinct variables are renamed onto ȳ instead of using equations.
struct CompletionTheory {
  std::vector<Formula> sentences;
};

CompletionTheory clark_completion(const Definition& d, const Vocabulary& vocabulary);

/// The definition whose single rule per predicate is p(ȳ) <- (completion body).
Definition completion_definition(const Definition& d, const Vocabulary& vocabulary);

/// The theory with every definition replaced by its completion sentences.
Theory completion_theory(const Theory& t);

struct TautologyOptions {
  /// Cap on skeleton assignments examined.
  std::size_t max_assignments = 10'000'000;
};

/// True iff `f` is true under every three-valued assignment of its
/// propositional skeleton. Atoms and quantified subformulas (modulo
/// renaming of bound variables) are three-valued symbols, equalities are
/// two-valued symbols.
bool three_valued_tautology(const Formula& f, const TautologyOptions& options = {});

struct Equivalence {
  bool equivalent = true;
  /// A distinguishing assignment (symbol text, value) when not equivalent.
  std::vector<std::pair<std::string, TruthValue>> countermodel;
  TruthValue left = TruthValue::Unknown;
  TruthValue right = TruthValue::Unknown;
};

/// Identical values under every three-valued assignment of the joint skeleton.
Equivalence three_valued_equivalent(const Formula& f, const Formula& g, const TautologyOptions& options = {});

/// Replaces every body subformula alpha-equivalent to `from` by `to`.
/// Throws SemanticError unless the two are three-valued equivalent or
/// `force` is set.
Definition substitute_equivalent(const Definition& d, const Formula& from, const Formula& to, bool force = false);

/// Union of defined predicates and of rules.
Definition compose(const std::vector<Definition>& ds);

}  // namespace idl
