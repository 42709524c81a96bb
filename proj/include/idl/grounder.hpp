#pragma once

// Instantiation of definitions and sentences over a finite structure.
//
// `ground_definition` keeps first-order bodies (with domain elements
// substituted for the rule variables); this is what the engine evaluates.
// `ground_literal_oracle` materializes the propositional grounding whose
// bodies are consistent literal sets: one rule `h <- S_J` for every partial
// interpretation J of the defined atoms (open part fixed) in which the
// instantiated body is true. It is exponential and exists to cross-check
// the engine.

#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "idl/structure.hpp"
#include "idl/syntax.hpp"

namespace idl {

struct GroundRule {
  GroundAtom head;
  /// Closed formula over the vocabulary extended with domain elements.
  Formula body;

  friend bool operator==(const GroundRule&, const GroundRule&) = default;
};

struct GroundDefinition {
  std::set<std::string> defined;
  /// Every atom of a defined predicate, in canonical order.
  std::vector<GroundAtom> defined_atoms;
  /// Sorted by head atom, then body.
  std::vector<GroundRule> rules;
  /// Open part: the input structure with defined predicates erased.
  Structure base;
};

struct GroundingOptions {
  std::size_t max_rules = 1'000'000;
};

GroundDefinition ground_definition(const Definition& d, const Structure& s, const GroundingOptions& options = {});

/// Expands quantifiers over the domain into finite conjunctions and
/// disjunctions; terms are reduced to domain elements where possible.
Formula ground_sentence(const Formula& f, const Structure& s);

/// Replaces the listed variables by domain-element literals.
Formula instantiate(const Formula& f, const std::vector<std::string>& vars, const std::vector<Element>& values,
                    const Structure& s);

/// Literal-set grounding. Literals are encoded as +(atom+1) / -(atom+1)
/// with atom an index into `atoms`.
struct LiteralRule {
  std::size_t head;
  std::vector<std::int32_t> body;

  friend bool operator==(const LiteralRule&, const LiteralRule&) = default;
  friend auto operator<=>(const LiteralRule&, const LiteralRule&) = default;
};

struct LiteralGroundDefinition {
  std::set<std::string> defined;
  std::vector<GroundAtom> atoms;
  /// Sorted and duplicate-free.
  std::vector<LiteralRule> rules;
  Structure base;

  std::string rule_string(const LiteralRule& r) const;
};

struct OracleOptions {
  /// Cap on the number of (rule instance, interpretation) pairs examined.
  std::size_t max_checks = 20'000'000;
};

LiteralGroundDefinition ground_literal_oracle(const Definition& d, const Structure& s,
                                              const OracleOptions& options = {});

/// Well-founded model of a literal-set grounding by the alternating
/// fixpoint of the Gelfond-Lifschitz operator. Returns `base` with the
/// defined atoms filled in.
Structure literal_well_founded_model(const LiteralGroundDefinition& g);

}  // namespace idl
