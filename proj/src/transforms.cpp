#include "idl/transforms.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "idl/error.hpp"
#include "idl/text.hpp"

namespace idl {

namespace {

std::set<std::string> variables_of(const Rule& r) {
  std::set<std::string> out(r.free_vars.begin(), r.free_vars.end());
  for (const auto& v : all_variables(r.body)) out.insert(v);
  return out;
}

std::vector<std::string> fresh_heads(std::size_t arity, std::set<std::string>& taken) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < arity; ++i) {
    std::string name = fresh_variable(arity == 1 ? "Y" : "Y" + std::to_string(i + 1), taken);
    taken.insert(name);
    out.push_back(name);
  }
  return out;
}

std::vector<Term> as_terms(const std::vector<std::string>& vars) {
  std::vector<Term> out;
  for (const auto& v : vars) out.push_back(Term::variable(v));
  return out;
}

/// ? x̄ : (ȳ = t̄ & F) for a rule, with ȳ given.
Formula normalized_body(const Rule& r, const std::vector<std::string>& ys) {
  // Rule variables that collide with ȳ are renamed first.
  std::set<std::string> taken = variables_of(r);
  taken.insert(ys.begin(), ys.end());
  std::map<std::string, Term> sigma;
  std::vector<std::string> xs;
  for (const auto& v : r.free_vars) {
    if (std::find(ys.begin(), ys.end(), v) != ys.end()) {
      std::string renamed = fresh_variable(v, taken);
      taken.insert(renamed);
      sigma.emplace(v, Term::variable(renamed));
      xs.push_back(renamed);
    } else {
      xs.push_back(v);
    }
  }
  std::vector<Formula> parts;
  for (std::size_t i = 0; i < ys.size(); ++i) {
    parts.push_back(Formula::equal(Term::variable(ys[i]), substitute(r.head_terms[i], sigma)));
  }
  parts.push_back(substitute(r.body, sigma));
  return Formula::exists(xs, Formula::conjunction(std::move(parts)));
}

/// Body of rule `r` over head variables ȳ, renaming instead of equations
/// when the head arguments are distinct variables.
Formula completion_disjunct(const Rule& r, const std::vector<std::string>& ys) {
  std::set<std::string> head_vars;
  bool plain = true;
  for (const auto& t : r.head_terms) {
    if (!t.is_variable() || !head_vars.insert(t.name).second) plain = false;
  }
  if (!plain) return normalized_body(r, ys);
  std::set<std::string> taken = variables_of(r);
  taken.insert(ys.begin(), ys.end());
  std::map<std::string, Term> sigma;
  for (std::size_t i = 0; i < ys.size(); ++i) sigma.emplace(r.head_terms[i].name, Term::variable(ys[i]));
  std::vector<std::string> xs;
  for (const auto& v : r.free_vars) {
    if (head_vars.count(v)) continue;
    std::string name = v;
    if (std::find(ys.begin(), ys.end(), v) != ys.end()) {
      name = fresh_variable(v, taken);
      taken.insert(name);
    }
    sigma.emplace(v, Term::variable(name));
    xs.push_back(name);
  }
  return Formula::exists(xs, substitute(r.body, sigma));
}

std::size_t arity_of(const Definition& d, const std::string& p, const Vocabulary* v, bool* known) {
  for (const auto& r : d.rules) {
    if (r.head == p) {
      *known = true;
      return r.head_terms.size();
    }
  }
  *known = v && v->has_predicate(p);
  return *known ? v->predicate_arity(p) : 0;
}

struct Completed {
  std::string predicate;
  std::vector<std::string> ys;
  std::optional<Formula> body;  // unset when the predicate has no rules
};

std::vector<Completed> complete(const Definition& d, const Vocabulary& v) {
  std::vector<Completed> out;
  for (const auto& p : d.defined) {
    bool known = false;
    std::size_t arity = arity_of(d, p, &v, &known);
    if (!known) throw VocabularyError("unknown arity of defined predicate '" + p + "'");
    std::vector<const Rule*> rules;
    for (const auto& r : d.rules) {
      if (r.head == p) rules.push_back(&r);
    }
    Completed c{p, {}, std::nullopt};
    const Rule* first = rules.empty() ? nullptr : rules.front();
    std::set<std::string> seen;
    bool reuse = first != nullptr;
    if (first) {
      for (const auto& t : first->head_terms) {
        if (!t.is_variable() || !seen.insert(t.name).second) reuse = false;
      }
    }
    if (reuse) {
      for (const auto& t : first->head_terms) c.ys.push_back(t.name);
    } else {
      std::set<std::string> taken;
      c.ys = fresh_heads(arity, taken);
    }
    if (!rules.empty()) {
      std::vector<Formula> disjuncts;
      for (const Rule* r : rules) disjuncts.push_back(completion_disjunct(*r, c.ys));
      c.body = Formula::disjunction(std::move(disjuncts));
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

Rule normalize_head(const Rule& r) {
  std::set<std::string> taken = variables_of(r);
  auto ys = fresh_heads(r.head_terms.size(), taken);
  return Rule::make(r.head, as_terms(ys), normalized_body(r, ys));
}

Definition merge_cases(const Definition& d, const Vocabulary* vocabulary) {
  Definition out;
  out.defined = d.defined;
  for (const auto& p : d.defined) {
    std::set<std::string> taken;
    std::vector<const Rule*> rules;
    for (const auto& r : d.rules) {
      if (r.head != p) continue;
      rules.push_back(&r);
      auto vars = variables_of(r);
      taken.insert(vars.begin(), vars.end());
    }
    bool known = false;
    std::size_t arity = arity_of(d, p, vocabulary, &known);
    if (!known) continue;
    auto ys = fresh_heads(arity, taken);
    std::vector<Formula> bodies;
    for (const Rule* r : rules) bodies.push_back(normalized_body(*r, ys));
    out.rules.push_back(Rule::make(p, as_terms(ys), Formula::disjunction(std::move(bodies))));
  }
  return out;
}

CompletionTheory clark_completion(const Definition& d, const Vocabulary& vocabulary) {
  CompletionTheory out;
  for (auto& c : complete(d, vocabulary)) {
    Formula head = Formula::atom(c.predicate, as_terms(c.ys));
    Formula f = c.body ? Formula::iff(std::move(head), std::move(*c.body)) : Formula::negate(std::move(head));
    out.sentences.push_back(Formula::forall(c.ys, std::move(f)));
  }
  return out;
}

Definition completion_definition(const Definition& d, const Vocabulary& vocabulary) {
  Definition out;
  out.defined = d.defined;
  for (auto& c : complete(d, vocabulary)) {
    out.rules.push_back(Rule::make(c.predicate, as_terms(c.ys), c.body ? std::move(*c.body) : Formula::bottom()));
  }
  return out;
}

Theory completion_theory(const Theory& t) {
  Theory out;
  out.vocabulary = t.vocabulary;
  out.sentences = t.sentences;
  for (const auto& d : t.definitions) {
    auto c = clark_completion(d, t.vocabulary);
    out.sentences.insert(out.sentences.end(), c.sentences.begin(), c.sentences.end());
  }
  return out;
}

// ---- three-valued tautologies ------------------------------------------------------

namespace {

/// Propositional skeleton: maximal non-connective subformulas become
/// symbols; quantified ones are identified up to bound-variable renaming.
class Skeleton {
 public:
  struct Symbol {
    Formula formula;
    bool two_valued;
  };

  std::size_t symbol(const Formula& f) {
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
      const Formula& g = symbols_[i].formula;
      if (f.is_quantifier() ? alpha_equivalent(f, g) : f == g) return i;
    }
    symbols_.push_back({f, f.kind == Formula::Kind::Equal});
    return symbols_.size() - 1;
  }

  void scan(const Formula& f) {
    switch (f.kind) {
      case Formula::Kind::True:
      case Formula::Kind::False:
        return;
      case Formula::Kind::Atom:
      case Formula::Kind::Equal:
      case Formula::Kind::Forall:
      case Formula::Kind::Exists:
        symbol(f);
        return;
      default:
        for (const auto& c : f.children) scan(c);
    }
  }

  TruthValue eval(const Formula& f, const std::vector<TruthValue>& values) {
    switch (f.kind) {
      case Formula::Kind::True:
        return TruthValue::True;
      case Formula::Kind::False:
        return TruthValue::False;
      case Formula::Kind::Atom:
      case Formula::Kind::Equal:
      case Formula::Kind::Forall:
      case Formula::Kind::Exists:
        return values[symbol(f)];
      case Formula::Kind::Not:
        return kleene_not(eval(f.body(), values));
      case Formula::Kind::And: {
        TruthValue v = TruthValue::True;
        for (const auto& c : f.children) v = kleene_and(v, eval(c, values));
        return v;
      }
      case Formula::Kind::Or: {
        TruthValue v = TruthValue::False;
        for (const auto& c : f.children) v = kleene_or(v, eval(c, values));
        return v;
      }
      case Formula::Kind::Implies:
        return kleene_implies(eval(f.children[0], values), eval(f.children[1], values));
      case Formula::Kind::Iff:
        return kleene_iff(eval(f.children[0], values), eval(f.children[1], values));
    }
    return TruthValue::Unknown;
  }

  /// Calls `visit` on every assignment until it returns false.
  template <typename Visit>
  void enumerate(const TautologyOptions& options, Visit visit) {
    double total = 1;
    for (const auto& s : symbols_) total *= s.two_valued ? 2 : 3;
    if (total > static_cast<double>(options.max_assignments)) {
      throw ResourceLimitError("skeleton with " + std::to_string(symbols_.size()) + " symbols exceeds the cap");
    }
    std::vector<TruthValue> values(symbols_.size());
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
      values[i] = symbols_[i].two_valued ? TruthValue::False : TruthValue::Unknown;
    }
    while (true) {
      if (!visit(values)) return;
      std::size_t k = 0;
      for (; k < values.size(); ++k) {
        TruthValue& v = values[k];
        if (v == TruthValue::True) {
          v = symbols_[k].two_valued ? TruthValue::False : TruthValue::Unknown;
          continue;
        }
        v = v == TruthValue::Unknown ? TruthValue::False : TruthValue::True;
        break;
      }
      if (k == values.size()) return;
    }
  }

  const std::vector<Symbol>& symbols() const { return symbols_; }

 private:
  std::vector<Symbol> symbols_;
};

}  // namespace

bool three_valued_tautology(const Formula& f, const TautologyOptions& options) {
  // Free variables are read as universally closed: each distinct atom is
  // an independent symbol, so the check covers ∀x̄. F[x̄].
  Skeleton skeleton;
  const Formula& g = f;
  skeleton.scan(g);
  bool tautology = true;
  skeleton.enumerate(options, [&](const std::vector<TruthValue>& values) {
    if (skeleton.eval(g, values) != TruthValue::True) tautology = false;
    return tautology;
  });
  return tautology;
}

Equivalence three_valued_equivalent(const Formula& f, const Formula& g, const TautologyOptions& options) {
  Skeleton skeleton;
  skeleton.scan(f);
  skeleton.scan(g);
  Equivalence out;
  skeleton.enumerate(options, [&](const std::vector<TruthValue>& values) {
    TruthValue a = skeleton.eval(f, values), b = skeleton.eval(g, values);
    if (a == b) return true;
    out.equivalent = false;
    out.left = a;
    out.right = b;
    for (std::size_t i = 0; i < values.size(); ++i) {
      out.countermodel.emplace_back(render_formula(skeleton.symbols()[i].formula), values[i]);
    }
    return false;
  });
  return out;
}

// ---- substitution and composition -----------------------------------------------

namespace {

Formula replace(const Formula& f, const Formula& from, const Formula& to) {
  if (alpha_equivalent(f, from)) return to;
  Formula out = f;
  for (auto& c : out.children) c = replace(c, from, to);
  return out;
}

}  // namespace

Definition substitute_equivalent(const Definition& d, const Formula& from, const Formula& to, bool force) {
  if (!force) {
    Equivalence e = three_valued_equivalent(from, to);
    if (!e.equivalent) {
      throw SemanticError("substitution rejected: " + render_formula(from) + " and " + render_formula(to) +
                          " are not equivalent in three-valued logic");
    }
  }
  Definition out = d;
  for (auto& r : out.rules) r = Rule::make(r.head, r.head_terms, replace(r.body, from, to));
  return out;
}

Definition compose(const std::vector<Definition>& ds) {
  Definition out;
  for (const auto& d : ds) {
    out.defined.insert(d.defined.begin(), d.defined.end());
    out.rules.insert(out.rules.end(), d.rules.begin(), d.rules.end());
  }
  return out;
}

}  // namespace idl
