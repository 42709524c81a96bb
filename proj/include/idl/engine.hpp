#pragma once

// Well-founded models of ground definitions, justified interpretations,
// model checking and finite model expansion.
//
// Γ(X), the least model of the reduct of the instance grounding with
// respect to a two-valued set X, is computed directly on formula bodies: an
// instance h <- F fires when some consistent J over the defined atoms makes
// F true, with J's true atoms already derived and its false atoms outside X.
// The three-valued stable operator maps p to (Γ(U_p), Γ(L_p)) where L_p is
// the set of true and U_p the set of non-false atoms.

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "idl/grounder.hpp"
#include "idl/structure.hpp"
#include "idl/syntax.hpp"

namespace idl {

struct StableRevisionState {
  PartialInterpretation current;
  std::size_t iteration = 0;
  /// Iterates from the all-unknown defined part up to the fixpoint.
  std::vector<PartialInterpretation> trace;
};

PartialInterpretation stable_operator(const GroundDefinition& g, const PartialInterpretation& p);

/// Least precision fixpoint of `stable_operator` above `g.base`. When
/// `state` is given, the iteration trace is recorded there.
PartialInterpretation well_founded_model(const GroundDefinition& g, StableRevisionState* state = nullptr);

/// The unique justified interpretation of `d` extending the open part of
/// `open_part`. Defined predicates missing from the structure are declared
/// from the rule heads.
PartialInterpretation justified_extension(const Definition& d, const PartialInterpretation& open_part,
                                          const GroundingOptions& options = {});

bool is_justified(const Definition& d, const PartialInterpretation& i, const GroundingOptions& options = {});

struct ModelCheckOptions {
  /// Accept sentences that are unknown rather than true (only matters for
  /// partial interpretations).
  bool lenient_sentences = false;
  GroundingOptions grounding;
};

enum class ModelStatus { Model, NotModel, Partial };

struct ModelVerdict {
  ModelStatus status = ModelStatus::Model;
  /// Empty for models; otherwise the first violated condition.
  std::string reason;
};

std::string to_string(ModelStatus status);

/// Model, NotModel, or Partial when `s` is a justified interpretation of
/// every definition and satisfies the sentences but is not total.
ModelVerdict check_model(const Theory& t, const Structure& s, const ModelCheckOptions& options = {});

/// Throws SemanticError when `s` is not total.
bool is_model(const Theory& t, const Structure& s, const ModelCheckOptions& options = {});

struct SearchOptions {
  std::size_t max_nodes = 1'000'000;
  /// Stop after this many models (0 = all).
  std::size_t limit = 0;
  ModelCheckOptions check;
};

/// Total completions of `templ` that are models of `t`, in canonical order.
/// Unknown entries of `templ` (and predicates of the vocabulary it lacks)
/// are the search variables.
std::vector<Structure> enumerate_models(const Theory& t, const Structure& templ, const SearchOptions& options = {});

/// Generate-and-test over every completion; reference for `enumerate_models`.
std::vector<Structure> enumerate_models_naive(const Theory& t, const Structure& templ,
                                              const SearchOptions& options = {});

/// Strict total order on structures over the same domain and vocabulary,
/// comparing predicate tables in name order.
bool canonical_less(const Structure& a, const Structure& b);

}  // namespace idl
