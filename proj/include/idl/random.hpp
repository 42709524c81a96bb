#pragma once

// Seeded generators of small random definitions, theories and structures
// for property tests and the self-test.

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "idl/structure.hpp"
#include "idl/syntax.hpp"

namespace idl {

enum class RuleShape { Any, Positive, Stratified };

struct RandomConfig {
  std::size_t max_defined = 3;
  std::size_t max_open = 2;
  std::size_t max_rules = 4;
  std::size_t min_domain = 1;
  std::size_t max_domain = 3;
  /// Bound on the number of defined ground atoms.
  std::size_t max_defined_atoms = 7;
  std::size_t max_open_atoms = 6;
  std::size_t max_body_depth = 3;
  bool quantifiers = true;
  bool functions = true;
  RuleShape shape = RuleShape::Any;
  /// Probability that an open-predicate entry is left unknown.
  double unknown_open = 0.0;
};

struct RandomInstance {
  Theory theory;
  /// Open predicates filled in, defined predicates unknown.
  Structure structure;
};

/// A theory with a single definition and a structure for it.
RandomInstance random_definition(std::mt19937_64& rng, const RandomConfig& config = {});

/// A theory with `definitions` definitions over disjoint defined predicates
/// and `sentences` axioms; the structure fixes domain, constants and
/// functions and leaves every predicate unknown.
RandomInstance random_theory(std::mt19937_64& rng, std::size_t definitions, std::size_t sentences,
                             const RandomConfig& config = {});

/// Random definitions (and sentences) over the vocabulary of `base`,
/// defining only predicates `base` leaves open. Used to extend a theory.
Theory random_extension(std::mt19937_64& rng, const Theory& base, std::size_t definitions, std::size_t sentences,
                        const RandomConfig& config = {});

}  // namespace idl
