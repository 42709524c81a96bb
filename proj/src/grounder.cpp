#include "idl/grounder.hpp"

#include <algorithm>
#include <deque>

#include "idl/error.hpp"

namespace idl {

namespace {

/// Odometer over all tuples of length `n` on a domain of size `size`.
class TupleOdometer {
 public:
  TupleOdometer(std::size_t n, std::size_t size) : values_(n, 0), size_(size), done_(size == 0 && n > 0) {}
  bool done() const { return done_; }
  const std::vector<Element>& values() const { return values_; }
  void advance() {
    for (std::size_t i = values_.size(); i-- > 0;) {
      if (++values_[i] < size_) return;
      values_[i] = 0;
    }
    done_ = true;
  }

 private:
  std::vector<Element> values_;
  std::size_t size_;
  bool done_;
};

void require_defined_tables(const Definition& d, const Structure& s) {
  for (const auto& p : d.defined) {
    if (!s.has_predicate(p)) throw SemanticError("structure does not declare defined predicate '" + p + "'");
  }
}

Term reduce_term(const Term& t, const Structure& s) {
  if (t.is_ground()) return Term::element(s.element_name(eval_term(t, s)));
  if (t.kind != Term::Kind::Application) return t;
  Term out = t;
  for (auto& a : out.args) a = reduce_term(a, s);
  return out;
}

}  // namespace

Formula instantiate(const Formula& f, const std::vector<std::string>& vars, const std::vector<Element>& values,
                    const Structure& s) {
  std::map<std::string, Term> sigma;
  for (std::size_t i = 0; i < vars.size(); ++i) sigma.emplace(vars[i], Term::element(s.element_name(values[i])));
  return substitute(f, sigma);
}

Formula ground_sentence(const Formula& f, const Structure& s) {
  switch (f.kind) {
    case Formula::Kind::True:
    case Formula::Kind::False:
      return f;
    case Formula::Kind::Atom:
    case Formula::Kind::Equal: {
      Formula out = f;
      for (auto& t : out.terms) t = reduce_term(t, s);
      return out;
    }
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      std::vector<Formula> parts;
      parts.reserve(s.domain_size());
      for (Element e = 0; e < s.domain_size(); ++e) {
        parts.push_back(ground_sentence(instantiate(f.body(), {f.name}, {e}, s), s));
      }
      return f.kind == Formula::Kind::Forall ? Formula::conjunction(std::move(parts))
                                             : Formula::disjunction(std::move(parts));
    }
    default: {
      Formula out = f;
      for (auto& c : out.children) c = ground_sentence(c, s);
      return out;
    }
  }
}

GroundDefinition ground_definition(const Definition& d, const Structure& s, const GroundingOptions& options) {
  require_defined_tables(d, s);
  GroundDefinition g;
  g.defined = d.defined;
  g.base = restrict_open(s, d);
  for (const auto& p : d.defined) {
    auto atoms = s.atoms_of(p);
    g.defined_atoms.insert(g.defined_atoms.end(), atoms.begin(), atoms.end());
  }
  for (const auto& rule : d.rules) {
    for (TupleOdometer it(rule.free_vars.size(), s.domain_size()); !it.done(); it.advance()) {
      if (g.rules.size() >= options.max_rules) {
        throw ResourceLimitError("grounding exceeds " + std::to_string(options.max_rules) + " rules");
      }
      GroundAtom head{rule.head, {}};
      for (const auto& t : rule.head_terms) {
        head.args.push_back(eval_term(substitute(t, [&] {
                                        std::map<std::string, Term> sigma;
                                        for (std::size_t i = 0; i < rule.free_vars.size(); ++i) {
                                          sigma.emplace(rule.free_vars[i],
                                                        Term::element(s.element_name(it.values()[i])));
                                        }
                                        return sigma;
                                      }()),
                                      s));
      }
      Formula body = ground_sentence(instantiate(rule.body, rule.free_vars, it.values(), s), s);
      g.rules.push_back({std::move(head), std::move(body)});
    }
  }
  std::sort(g.rules.begin(), g.rules.end(), [](const GroundRule& a, const GroundRule& b) {
    if (a.head != b.head) return a.head < b.head;
    return compare(a.body, b.body) < 0;
  });
  return g;
}

// ---- literal oracle ----------------------------------------------------------------

std::string LiteralGroundDefinition::rule_string(const LiteralRule& r) const {
  std::string out = base.atom_string(atoms[r.head]);
  if (r.body.empty()) return out + ".";
  out += " <- ";
  for (std::size_t i = 0; i < r.body.size(); ++i) {
    if (i) out += ", ";
    std::int32_t lit = r.body[i];
    if (lit < 0) out += "~";
    out += base.atom_string(atoms[static_cast<std::size_t>(std::abs(lit)) - 1]);
  }
  return out + ".";
}

namespace {

/// Defined atoms an instantiated body may read. Atoms with ground
/// arguments are resolved exactly; otherwise the whole predicate counts.
void relevant_atoms(const Formula& f, const Structure& s, const std::map<GroundAtom, std::size_t>& index,
                    const std::set<std::string>& defined, std::set<std::size_t>& out) {
  if (f.kind == Formula::Kind::Atom && defined.count(f.name)) {
    bool ground = std::all_of(f.terms.begin(), f.terms.end(), [](const Term& t) { return t.is_ground(); });
    if (ground) {
      GroundAtom a{f.name, {}};
      for (const auto& t : f.terms) a.args.push_back(eval_term(t, s));
      out.insert(index.at(a));
    } else {
      for (const auto& [atom, i] : index) {
        if (atom.predicate == f.name) out.insert(i);
      }
    }
  }
  for (const auto& c : f.children) relevant_atoms(c, s, index, defined, out);
}

}  // namespace

LiteralGroundDefinition ground_literal_oracle(const Definition& d, const Structure& s, const OracleOptions& options) {
  require_defined_tables(d, s);
  LiteralGroundDefinition g;
  g.defined = d.defined;
  g.base = restrict_open(s, d);
  std::map<GroundAtom, std::size_t> index;
  for (const auto& p : d.defined) {
    for (auto& a : s.atoms_of(p)) {
      index.emplace(a, g.atoms.size());
      g.atoms.push_back(std::move(a));
    }
  }
  const std::size_t n = g.atoms.size();
  std::size_t checks = 0;
  auto charge = [&](std::size_t amount) {
    checks += amount;
    if (checks > options.max_checks) {
      throw ResourceLimitError("literal grounding exceeds " + std::to_string(options.max_checks) + " checks");
    }
  };

  Structure j = g.base;
  for (const auto& rule : d.rules) {
    for (TupleOdometer it(rule.free_vars.size(), s.domain_size()); !it.done(); it.advance()) {
      std::map<std::string, Term> sigma;
      for (std::size_t i = 0; i < rule.free_vars.size(); ++i) {
        sigma.emplace(rule.free_vars[i], Term::element(s.element_name(it.values()[i])));
      }
      GroundAtom head{rule.head, {}};
      for (const auto& t : rule.head_terms) head.args.push_back(eval_term(substitute(t, sigma), s));
      const std::size_t head_index = index.at(head);
      const Formula body = substitute(rule.body, sigma);

      std::set<std::size_t> relevant_set;
      relevant_atoms(body, s, index, d.defined, relevant_set);
      std::vector<std::size_t> relevant(relevant_set.begin(), relevant_set.end());
      std::vector<std::size_t> rest;
      for (std::size_t a = 0; a < n; ++a) {
        if (!relevant_set.count(a)) rest.push_back(a);
      }

      // Enumerate the three-valued assignments J of the relevant atoms.
      std::vector<TruthValue> assignment(relevant.size(), TruthValue::Unknown);
      for (auto a : relevant) j.set_value(g.atoms[a], TruthValue::Unknown);
      while (true) {
        charge(1);
        if (eval_formula(body, j) == TruthValue::True) {
          // Every extension over the remaining atoms yields its own S_J.
          std::vector<TruthValue> others(rest.size(), TruthValue::Unknown);
          while (true) {
            charge(1);
            LiteralRule r{head_index, {}};
            std::vector<std::pair<std::size_t, TruthValue>> lits;
            for (std::size_t k = 0; k < relevant.size(); ++k) lits.emplace_back(relevant[k], assignment[k]);
            for (std::size_t k = 0; k < rest.size(); ++k) lits.emplace_back(rest[k], others[k]);
            std::sort(lits.begin(), lits.end());
            for (auto [atom, v] : lits) {
              if (v == TruthValue::True) r.body.push_back(static_cast<std::int32_t>(atom + 1));
              if (v == TruthValue::False) r.body.push_back(-static_cast<std::int32_t>(atom + 1));
            }
            g.rules.push_back(std::move(r));
            std::size_t k = 0;
            for (; k < others.size(); ++k) {
              if (others[k] == TruthValue::True) {
                others[k] = TruthValue::Unknown;
                continue;
              }
              others[k] = others[k] == TruthValue::Unknown ? TruthValue::False : TruthValue::True;
              break;
            }
            if (k == others.size()) break;
          }
        }
        std::size_t k = 0;
        for (; k < assignment.size(); ++k) {
          TruthValue& v = assignment[k];
          if (v == TruthValue::True) {
            v = TruthValue::Unknown;
            j.set_value(g.atoms[relevant[k]], v);
            continue;
          }
          v = v == TruthValue::Unknown ? TruthValue::False : TruthValue::True;
          j.set_value(g.atoms[relevant[k]], v);
          break;
        }
        if (k == assignment.size()) break;
      }
    }
  }
  std::sort(g.rules.begin(), g.rules.end());
  g.rules.erase(std::unique(g.rules.begin(), g.rules.end()), g.rules.end());
  return g;
}

// ---- propositional well-founded model --------------------------------------------

namespace {

class LiteralProgram {
 public:
  explicit LiteralProgram(const LiteralGroundDefinition& g) : g_(g), watches_(g.atoms.size()) {
    for (std::size_t r = 0; r < g.rules.size(); ++r) {
      for (auto lit : g.rules[r].body) {
        if (lit > 0) watches_[static_cast<std::size_t>(lit - 1)].push_back(r);
      }
    }
  }

  /// Least model of the reduct of the program w.r.t. `x`.
  std::vector<char> gamma(const std::vector<char>& x) const {
    const auto& rules = g_.rules;
    std::vector<char> model(g_.atoms.size(), 0);
    std::vector<std::size_t> missing(rules.size(), 0);
    std::vector<char> blocked(rules.size(), 0);
    std::deque<std::size_t> queue;
    auto derive = [&](std::size_t atom) {
      if (!model[atom]) {
        model[atom] = 1;
        queue.push_back(atom);
      }
    };
    for (std::size_t r = 0; r < rules.size(); ++r) {
      for (auto lit : rules[r].body) {
        if (lit < 0 && x[static_cast<std::size_t>(-lit - 1)]) blocked[r] = 1;
        if (lit > 0) ++missing[r];
      }
      if (!blocked[r] && missing[r] == 0) derive(rules[r].head);
    }
    while (!queue.empty()) {
      std::size_t atom = queue.front();
      queue.pop_front();
      for (std::size_t r : watches_[atom]) {
        if (blocked[r]) continue;
        if (--missing[r] == 0) derive(rules[r].head);
      }
    }
    return model;
  }

 private:
  const LiteralGroundDefinition& g_;
  std::vector<std::vector<std::size_t>> watches_;
};

}  // namespace

Structure literal_well_founded_model(const LiteralGroundDefinition& g) {
  LiteralProgram program(g);
  std::vector<char> lower(g.atoms.size(), 0), upper(g.atoms.size(), 1);
  while (true) {
    auto next_lower = program.gamma(upper);
    auto next_upper = program.gamma(lower);
    if (next_lower == lower && next_upper == upper) break;
    lower = std::move(next_lower);
    upper = std::move(next_upper);
  }
  Structure out = g.base;
  for (std::size_t a = 0; a < g.atoms.size(); ++a) {
    TruthValue v = lower[a] ? TruthValue::True : (upper[a] ? TruthValue::Unknown : TruthValue::False);
    out.set_value(g.atoms[a], v);
  }
  return out;
}

}  // namespace idl
