#include "idl/analysis.hpp"

#include <algorithm>
#include <functional>
#include <queue>

#include "idl/engine.hpp"
#include "idl/error.hpp"

namespace idl {

namespace {

using Polarities = std::set<Polarity>;

Polarities flip(const Polarities& p) {
  Polarities out;
  for (auto x : p) out.insert(x == Polarity::Positive ? Polarity::Negative : Polarity::Positive);
  return out;
}

void walk_polarities(const Formula& f, const Polarities& pols, std::map<std::string, Polarities>& out) {
  switch (f.kind) {
    case Formula::Kind::Atom:
      out[f.name].insert(pols.begin(), pols.end());
      return;
    case Formula::Kind::Not:
      walk_polarities(f.body(), flip(pols), out);
      return;
    case Formula::Kind::Implies:
      walk_polarities(f.children[0], flip(pols), out);
      walk_polarities(f.children[1], pols, out);
      return;
    case Formula::Kind::Iff:
      for (const auto& c : f.children) walk_polarities(c, {Polarity::Positive, Polarity::Negative}, out);
      return;
    default:
      for (const auto& c : f.children) walk_polarities(c, pols, out);
  }
}

/// Strongly connected components of a graph on 0..n-1, in a topological
/// order of the condensation (sources first). Ties go to the component
/// with the smallest member.
std::vector<std::vector<std::size_t>> ordered_components(std::size_t n,
                                                         const std::vector<std::set<std::size_t>>& succ) {
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
  std::vector<char> on_stack(n, 0);
  std::vector<std::size_t> stack;
  int counter = 0, components = 0;
  std::function<void(std::size_t)> visit = [&](std::size_t v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = 1;
    for (auto w : succ[v]) {
      if (index[w] < 0) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      while (true) {
        auto w = stack.back();
        stack.pop_back();
        on_stack[w] = 0;
        comp[w] = components;
        if (w == v) break;
      }
      ++components;
    }
  };
  for (std::size_t v = 0; v < n; ++v) {
    if (index[v] < 0) visit(v);
  }

  std::vector<std::vector<std::size_t>> members(components);
  for (std::size_t v = 0; v < n; ++v) members[comp[v]].push_back(v);
  std::vector<std::set<int>> csucc(components);
  std::vector<int> indegree(components, 0);
  for (std::size_t v = 0; v < n; ++v) {
    for (auto w : succ[v]) {
      if (comp[v] != comp[w] && csucc[comp[v]].insert(comp[w]).second) ++indegree[comp[w]];
    }
  }
  using Entry = std::pair<std::size_t, int>;  // smallest member, component
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> ready;
  for (int c = 0; c < components; ++c) {
    if (indegree[c] == 0) ready.push({members[c].front(), c});
  }
  std::vector<std::vector<std::size_t>> out;
  while (!ready.empty()) {
    int c = ready.top().second;
    ready.pop();
    out.push_back(members[c]);
    for (int d : csucc[c]) {
      if (--indegree[d] == 0) ready.push({members[d].front(), d});
    }
  }
  return out;
}

}  // namespace

std::map<std::string, std::set<Polarity>> occurrence_polarities(const Formula& f) {
  std::map<std::string, Polarities> out;
  walk_polarities(f, {Polarity::Positive}, out);
  return out;
}

SignedDependencyGraph dependency_graph(const Definition& d) {
  SignedDependencyGraph g;
  g.nodes = d.defined;
  for (const auto& r : d.rules) {
    for (const auto& [q, pols] : occurrence_polarities(r.body)) {
      if (!d.defines(q)) continue;
      for (auto sign : pols) g.edges.insert({q, r.head, sign});
    }
  }
  return g;
}

// ---- relativized definitions -----------------------------------------------------

namespace {

class RelativizedCheck {
 public:
  RelativizedCheck(const Definition& d, const std::string& order) : d_(d), order_(order) {}

  bool rule(const Rule& r) {
    std::optional<std::string> x;
    if (!r.head_terms.empty() && r.head_terms.front().is_variable()) x = r.head_terms.front().name;
    return walk(r.body, {}, x);
  }

 private:
  /// `f` is order(z, b) with b the head variable or an already guarded one.
  bool is_guard(const Formula& f, const std::string& z, const std::set<std::string>& guarded,
                const std::optional<std::string>& x) const {
    if (f.kind != Formula::Kind::Atom || f.name != order_ || f.terms.size() != 2) return false;
    const Term& a = f.terms[0];
    const Term& b = f.terms[1];
    if (!a.is_variable() || a.name != z || !b.is_variable() || b.name == z) return false;
    return (x && b.name == *x) || guarded.count(b.name);
  }

  bool walk(const Formula& f, std::set<std::string> guarded, std::optional<std::string> x) {
    switch (f.kind) {
      case Formula::Kind::Atom: {
        if (!d_.defines(f.name)) return true;
        return !f.terms.empty() && f.terms.front().is_variable() && guarded.count(f.terms.front().name);
      }
      case Formula::Kind::Forall:
      case Formula::Kind::Exists: {
        const std::string& z = f.name;
        const Formula& body = f.body();
        std::set<std::string> outer = guarded;
        std::optional<std::string> inner_x = x;
        guarded.erase(z);
        if (x && *x == z) inner_x.reset();
        if (f.kind == Formula::Kind::Forall && body.kind == Formula::Kind::Implies &&
            is_guard(body.children[0], z, outer, x)) {
          guarded.insert(z);
          return walk(body.children[1], guarded, inner_x);
        }
        if (f.kind == Formula::Kind::Exists && body.kind == Formula::Kind::And) {
          auto guard = std::find_if(body.children.begin(), body.children.end(),
                                    [&](const Formula& c) { return is_guard(c, z, outer, x); });
          if (guard != body.children.end()) {
            guarded.insert(z);
            for (auto it = body.children.begin(); it != body.children.end(); ++it) {
              if (it != guard && !walk(*it, guarded, inner_x)) return false;
            }
            return true;
          }
        }
        return walk(body, guarded, inner_x);
      }
      default:
        for (const auto& c : f.children) {
          if (!walk(c, guarded, x)) return false;
        }
        return true;
    }
  }

  const Definition& d_;
  const std::string& order_;
};

void binary_atoms(const Formula& f, std::set<std::string>& out) {
  if (f.kind == Formula::Kind::Atom && f.terms.size() == 2) out.insert(f.name);
  for (const auto& c : f.children) binary_atoms(c, out);
}

}  // namespace

bool check_relativized(const Definition& d, const std::string& order_pred) {
  if (d.defines(order_pred)) return false;
  RelativizedCheck check(d, order_pred);
  return std::all_of(d.rules.begin(), d.rules.end(), [&](const Rule& r) { return check.rule(r); });
}

DefinitionClass classify(const Definition& d, const std::optional<std::string>& order) {
  DefinitionClass c;
  SignedDependencyGraph g = dependency_graph(d);
  c.non_recursive = g.edges.empty();
  c.positive_recursive = std::none_of(g.edges.begin(), g.edges.end(),
                                      [](const DependencyEdge& e) { return e.sign == Polarity::Negative; });

  std::vector<std::string> names(g.nodes.begin(), g.nodes.end());
  std::map<std::string, std::size_t> id;
  for (std::size_t i = 0; i < names.size(); ++i) id[names[i]] = i;
  std::vector<std::set<std::size_t>> succ(names.size());
  for (const auto& e : g.edges) succ[id[e.from]].insert(id[e.to]);
  std::vector<int> comp(names.size(), -1);
  auto components = ordered_components(names.size(), succ);
  for (std::size_t k = 0; k < components.size(); ++k) {
    std::set<std::string> stratum;
    for (auto v : components[k]) {
      comp[v] = static_cast<int>(k);
      stratum.insert(names[v]);
    }
    c.strata.push_back(std::move(stratum));
  }
  c.stratified = std::none_of(g.edges.begin(), g.edges.end(), [&](const DependencyEdge& e) {
    return e.sign == Polarity::Negative && comp[id[e.from]] == comp[id[e.to]];
  });

  if (order) {
    if (check_relativized(d, *order)) c.relativized = *order;
  } else if (!c.non_recursive) {
    std::set<std::string> candidates;
    for (const auto& r : d.rules) binary_atoms(r.body, candidates);
    for (const auto& p : candidates) {
      if (!d.defines(p) && check_relativized(d, p)) {
        c.relativized = p;
        break;
      }
    }
  }
  return c;
}

std::string describe(const DefinitionClass& c) {
  std::vector<std::string> flags;
  if (c.non_recursive) flags.push_back("non-recursive");
  if (c.positive_recursive) flags.push_back("positive-recursive");
  if (c.stratified) flags.push_back("stratified");
  if (c.relativized) flags.push_back("relativized(" + *c.relativized + ")");
  if (flags.empty()) return "unclassified";
  std::string out;
  for (std::size_t i = 0; i < flags.size(); ++i) out += (i ? " " : "") + flags[i];
  return out;
}

// ---- well-founded definitions ------------------------------------------------------

namespace {

void defined_atoms_in(const Formula& f, const Structure& s, const std::set<std::string>& defined,
                      std::set<GroundAtom>& out) {
  if (f.kind == Formula::Kind::Atom && defined.count(f.name)) {
    GroundAtom a{f.name, {}};
    for (const auto& t : f.terms) a.args.push_back(eval_term(t, s));
    out.insert(std::move(a));
  }
  for (const auto& c : f.children) defined_atoms_in(c, s, defined, out);
}

class Extraction {
 public:
  Extraction(const GroundDefinition& g, const WellFoundedOptions& options) : g_(g), options_(options), j_(g.base) {
    for (const auto& r : g.rules) {
      std::set<GroundAtom> atoms;
      defined_atoms_in(r.body, g.base, g.defined, atoms);
      bodies_[r.head].push_back({&r.body, std::vector<GroundAtom>(atoms.begin(), atoms.end())});
    }
  }

  WellFoundedness run() {
    WellFoundedness out;
    std::set<GroundAtom> placed;
    std::vector<GroundAtom> pending = g_.defined_atoms;
    while (!pending.empty()) {
      std::vector<GroundAtom> layer, rest;
      for (const auto& a : pending) (determined(a, placed) ? layer : rest).push_back(a);
      if (layer.empty()) break;
      placed.insert(layer.begin(), layer.end());
      out.layers.push_back(std::move(layer));
      pending = std::move(rest);
    }
    out.residue = pending;
    out.well_founded = pending.empty();
    return out;
  }

 private:
  struct Body {
    const Formula* formula;
    std::vector<GroundAtom> atoms;
  };

  bool determined(const GroundAtom& a, const std::set<GroundAtom>& placed) {
    auto it = bodies_.find(a);
    if (it == bodies_.end()) return true;
    for (const auto& b : it->second) {
      if (!body_determined(b, placed)) return false;
    }
    return true;
  }

  TruthValue eval(const Formula& f) {
    if (++evaluations_ > options_.max_evaluations) {
      throw ResourceLimitError("well-foundedness check exceeds " + std::to_string(options_.max_evaluations) +
                               " evaluations");
    }
    return eval_formula(f, j_);
  }

  /// For every three-valued assignment of the placed atoms, the body takes
  /// one value over all partial assignments of the others.
  bool body_determined(const Body& b, const std::set<GroundAtom>& placed) {
    std::vector<GroundAtom> fixed, others;
    for (const auto& a : b.atoms) (placed.count(a) ? fixed : others).push_back(a);
    for (const auto& a : b.atoms) j_.set_value(a, TruthValue::Unknown);
    std::vector<TruthValue> sigma(fixed.size(), TruthValue::Unknown);
    bool ok = true;
    while (ok) {
      for (std::size_t i = 0; i < fixed.size(); ++i) j_.set_value(fixed[i], sigma[i]);
      if (eval(*b.formula) == TruthValue::Unknown && !others.empty()) {
        // Unknown at the bottom: constant only if no total refinement decides it.
        if (others.size() >= 24) throw ResourceLimitError("rule body mentions too many defined atoms");
        for (std::size_t mask = 0; ok && mask < (std::size_t{1} << others.size()); ++mask) {
          for (std::size_t i = 0; i < others.size(); ++i) j_.set_value(others[i], truth_of((mask >> i) & 1));
          if (eval(*b.formula) != TruthValue::Unknown) ok = false;
        }
        for (const auto& a : others) j_.set_value(a, TruthValue::Unknown);
      }
      std::size_t k = 0;
      for (; k < sigma.size(); ++k) {
        if (sigma[k] == TruthValue::True) {
          sigma[k] = TruthValue::Unknown;
          continue;
        }
        sigma[k] = sigma[k] == TruthValue::Unknown ? TruthValue::False : TruthValue::True;
        break;
      }
      if (k == sigma.size()) break;
    }
    for (const auto& a : b.atoms) j_.set_value(a, TruthValue::Unknown);
    return ok;
  }

  const GroundDefinition& g_;
  const WellFoundedOptions& options_;
  Structure j_;
  std::map<GroundAtom, std::vector<Body>> bodies_;
  std::size_t evaluations_ = 0;
};

}  // namespace

WellFoundedness check_well_founded(const Definition& d, const Structure& s, const WellFoundedOptions& options) {
  GroundDefinition g = ground_definition(d, s, options.grounding);
  return Extraction(g, options).run();
}

WellDefining check_well_defining(const Definition& d, const std::vector<Structure>& opens,
                                 const GroundingOptions& options) {
  for (std::size_t i = 0; i < opens.size(); ++i) {
    Structure w = justified_extension(d, opens[i], options);
    if (!w.is_total(d.defined)) return {false, i, std::move(w)};
  }
  return {};
}

// ---- splitting -------------------------------------------------------------------

TheorySplit split_theory(const Theory& t) {
  TheorySplit out;
  const auto& ds = t.definitions;
  const std::size_t n = ds.size();
  std::vector<std::set<std::size_t>> succ(n);
  for (std::size_t x = 0; x < n; ++x) {
    auto mentioned = predicates_in(ds[x]);
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y) continue;
      bool uses = std::any_of(ds[y].defined.begin(), ds[y].defined.end(),
                              [&](const std::string& p) { return mentioned.count(p) != 0; });
      if (uses) succ[y].insert(x);
    }
  }
  auto components = ordered_components(n, succ);
  std::map<std::string, std::size_t> layer_of;
  for (std::size_t k = 0; k < components.size(); ++k) {
    Theory layer;
    layer.vocabulary = t.vocabulary;
    auto members = components[k];
    std::sort(members.begin(), members.end());
    for (auto i : members) {
      layer.definitions.push_back(ds[i]);
      for (const auto& p : ds[i].defined) layer_of[p] = k;
    }
    if (members.size() > 1 && out.complete) {
      out.complete = false;
      out.reason = "definitions";
      for (std::size_t i = 0; i < members.size(); ++i) out.reason += (i ? ", " : " ") + std::to_string(members[i] + 1);
      out.reason += " depend on each other";
    }
    out.layers.push_back(std::move(layer));
  }
  if (out.layers.empty() && !t.sentences.empty()) {
    out.layers.emplace_back();
    out.layers.back().vocabulary = t.vocabulary;
  }
  for (const auto& f : t.sentences) {
    std::size_t k = 0;
    for (const auto& p : predicates_in(f)) {
      auto it = layer_of.find(p);
      if (it != layer_of.end()) k = std::max(k, it->second);
    }
    out.layers[k].sentences.push_back(f);
  }
  return out;
}

bool is_definition_hierarchy(const std::vector<Definition>& ds) {
  for (std::size_t i = 0; i < ds.size(); ++i) {
    auto mentioned = predicates_in(ds[i]);
    for (std::size_t j = i + 1; j < ds.size(); ++j) {
      for (const auto& p : ds[j].defined) {
        if (mentioned.count(p) && !ds[i].defines(p)) return false;
      }
    }
  }
  return true;
}

}  // namespace idl
