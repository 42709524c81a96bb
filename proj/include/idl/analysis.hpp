#pragma once

// Dependency graphs, definition classes, well-foundedness, well-defining
// checks and theory splitting.

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "idl/grounder.hpp"
#include "idl/structure.hpp"
#include "idl/syntax.hpp"

namespace idl {

enum class Polarity { Positive, Negative };

struct DependencyEdge {
  std::string from;
  std::string to;
  Polarity sign = Polarity::Positive;

  friend bool operator==(const DependencyEdge&, const DependencyEdge&) = default;
  friend auto operator<=>(const DependencyEdge&, const DependencyEdge&) = default;
};

/// Edge q -> p with sign s when defined predicate q occurs with polarity s
/// in the body of a rule for p. Negation and the left side of => flip the
/// polarity; both sides of <=> occur with both polarities.
struct SignedDependencyGraph {
  std::set<std::string> nodes;
  std::set<DependencyEdge> edges;

  bool has_edge(const std::string& from, const std::string& to, Polarity sign) const {
    return edges.count({from, to, sign}) != 0;
  }
};

SignedDependencyGraph dependency_graph(const Definition& d);

/// Polarities with which each predicate occurs in `f`.
std::map<std::string, std::set<Polarity>> occurrence_polarities(const Formula& f);

struct DefinitionClass {
  bool non_recursive = false;
  bool positive_recursive = false;
  bool stratified = false;
  /// Order predicate for which the definition is relativized, if any.
  std::optional<std::string> relativized;
  /// Strongly connected components of the dependency graph, lowest first.
  std::vector<std::set<std::string>> strata;

  bool unclassified() const { return !stratified && !relativized; }
};

/// With `order` unset, every binary predicate of the definition that it
/// does not define is tried as the order of a relativized definition.
DefinitionClass classify(const Definition& d, const std::optional<std::string>& order = std::nullopt);

std::string describe(const DefinitionClass& c);

bool check_relativized(const Definition& d, const std::string& order_pred);

struct WellFoundedness {
  bool well_founded = false;
  /// Witness order as layers: every body of an atom is determined by the
  /// atoms of earlier layers.
  std::vector<std::vector<GroundAtom>> layers;
  /// Atoms left over when extraction got stuck.
  std::vector<GroundAtom> residue;
};

struct WellFoundedOptions {
  GroundingOptions grounding;
  /// Cap on body evaluations during extraction.
  std::size_t max_evaluations = 5'000'000;
};

WellFoundedness check_well_founded(const Definition& d, const Structure& s, const WellFoundedOptions& options = {});

struct WellDefining {
  bool well_defining = true;
  /// Index into the inputs and the partial justified extension.
  std::optional<std::size_t> index;
  std::optional<Structure> counterexample;
};

WellDefining check_well_defining(const Definition& d, const std::vector<Structure>& opens,
                                 const GroundingOptions& options = {});

struct TheorySplit {
  /// Layers in dependency order. Mutually dependent definitions share a layer.
  std::vector<Theory> layers;
  /// Every layer holds at most one definition.
  bool complete = true;
  std::string reason;
};

TheorySplit split_theory(const Theory& t);

/// No open predicate of a definition is defined by a later one.
bool is_definition_hierarchy(const std::vector<Definition>& ds);

}  // namespace idl
