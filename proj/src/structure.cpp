#include "idl/structure.hpp"

#include <algorithm>

#include "idl/error.hpp"

namespace idl {

std::string to_string(TruthValue v) {
  switch (v) {
    case TruthValue::False:
      return "false";
    case TruthValue::Unknown:
      return "unknown";
    case TruthValue::True:
      return "true";
  }
  return "?";
}

Structure::Structure(std::vector<std::string> domain) : domain_(std::move(domain)) {
  for (Element e = 0; e < domain_.size(); ++e) {
    if (!element_index_.emplace(domain_[e], e).second) {
      throw SemanticError("duplicate domain element '" + domain_[e] + "'");
    }
  }
}

Structure Structure::for_vocabulary(const Vocabulary& v, std::vector<std::string> domain) {
  Structure s(std::move(domain));
  for (const auto& [p, n] : v.predicates()) s.declare_predicate(p, n);
  return s;
}

std::optional<Element> Structure::find_element(std::string_view name) const {
  auto it = element_index_.find(std::string(name));
  if (it == element_index_.end()) return std::nullopt;
  return it->second;
}

Element Structure::element(std::string_view name) const {
  auto e = find_element(name);
  if (!e) throw SemanticError("unknown domain element '" + std::string(name) + "'");
  return *e;
}

void Structure::set_constant(const std::string& name, Element e) {
  if (e >= domain_.size()) throw SemanticError("constant '" + name + "' mapped outside the domain");
  constants_[name] = e;
}

Element Structure::constant(const std::string& name) const {
  auto it = constants_.find(name);
  if (it == constants_.end()) throw SemanticError("structure does not interpret constant '" + name + "'");
  return it->second;
}

std::size_t Structure::tuple_count(std::size_t arity) const {
  std::size_t n = 1;
  for (std::size_t i = 0; i < arity; ++i) n *= domain_.size();
  return n;
}

std::size_t Structure::tuple_index(std::span<const Element> args) const {
  std::size_t index = 0;
  for (Element e : args) {
    if (e >= domain_.size()) throw SemanticError("tuple element outside the domain");
    index = index * domain_.size() + e;
  }
  return index;
}

std::vector<Element> Structure::tuple_at(std::size_t arity, std::size_t index) const {
  std::vector<Element> out(arity);
  for (std::size_t i = arity; i-- > 0;) {
    out[i] = index % domain_.size();
    index /= domain_.size();
  }
  return out;
}

void Structure::set_function(const std::string& name, std::size_t arity, std::vector<Element> values) {
  if (values.size() != tuple_count(arity)) {
    throw SemanticError("function '" + name + "' table is not total on the domain");
  }
  for (Element e : values) {
    if (e >= domain_.size()) throw SemanticError("function '" + name + "' maps outside the domain");
  }
  functions_[name] = FunctionTable{arity, std::move(values)};
}

void Structure::set_function_value(const std::string& name, std::span<const Element> args, Element value) {
  auto it = functions_.find(name);
  if (it == functions_.end()) {
    it = functions_.emplace(name, FunctionTable{args.size(), std::vector<Element>(tuple_count(args.size()), 0)}).first;
  }
  if (it->second.arity != args.size()) throw SemanticError("arity mismatch for function '" + name + "'");
  if (value >= domain_.size()) throw SemanticError("function '" + name + "' maps outside the domain");
  it->second.values[tuple_index(args)] = value;
}

Element Structure::apply(const std::string& name, std::span<const Element> args) const {
  auto it = functions_.find(name);
  if (it == functions_.end()) throw SemanticError("structure does not interpret function '" + name + "'");
  if (it->second.arity != args.size()) throw SemanticError("arity mismatch for function '" + name + "'");
  return it->second.values[tuple_index(args)];
}

void Structure::declare_predicate(const std::string& name, std::size_t arity, TruthValue fill) {
  predicates_[name] = PredicateTable{arity, std::vector<TruthValue>(tuple_count(arity), fill)};
}

const PredicateTable& Structure::predicate(const std::string& name) const {
  auto it = predicates_.find(name);
  if (it == predicates_.end()) throw SemanticError("structure does not interpret predicate '" + name + "'");
  return it->second;
}

TruthValue Structure::value(const std::string& name, std::span<const Element> args) const {
  const auto& table = predicate(name);
  if (table.arity != args.size()) throw SemanticError("arity mismatch for predicate '" + name + "'");
  return table.values[tuple_index(args)];
}

void Structure::set_value(const std::string& name, std::span<const Element> args, TruthValue v) {
  auto it = predicates_.find(name);
  if (it == predicates_.end()) throw SemanticError("structure does not interpret predicate '" + name + "'");
  if (it->second.arity != args.size()) throw SemanticError("arity mismatch for predicate '" + name + "'");
  it->second.values[tuple_index(args)] = v;
}

void Structure::fill_predicate(const std::string& name, TruthValue v) {
  auto it = predicates_.find(name);
  if (it == predicates_.end()) throw SemanticError("structure does not interpret predicate '" + name + "'");
  std::fill(it->second.values.begin(), it->second.values.end(), v);
}

std::vector<GroundAtom> Structure::atoms_of(const std::string& name) const {
  const auto& table = predicate(name);
  std::vector<GroundAtom> out;
  out.reserve(table.values.size());
  for (std::size_t i = 0; i < table.values.size(); ++i) out.push_back({name, tuple_at(table.arity, i)});
  return out;
}

bool Structure::is_total() const {
  for (const auto& [name, table] : predicates_) {
    if (std::find(table.values.begin(), table.values.end(), TruthValue::Unknown) != table.values.end()) return false;
  }
  return true;
}

bool Structure::is_total(const std::set<std::string>& names) const {
  for (const auto& name : names) {
    const auto& values = predicate(name).values;
    if (std::find(values.begin(), values.end(), TruthValue::Unknown) != values.end()) return false;
  }
  return true;
}

void Structure::conform_to(const Vocabulary& v) {
  for (const auto& c : v.constants()) {
    if (!has_constant(c)) throw SemanticError("structure does not interpret constant '" + c + "'");
  }
  for (const auto& [f, n] : v.functions()) {
    auto it = functions_.find(f);
    if (it == functions_.end()) throw SemanticError("structure does not interpret function '" + f + "'");
    if (it->second.arity != n) throw SemanticError("arity mismatch for function '" + f + "'");
  }
  for (const auto& [p, n] : v.predicates()) {
    auto it = predicates_.find(p);
    if (it == predicates_.end()) {
      declare_predicate(p, n);
    } else if (it->second.arity != n) {
      throw SemanticError("arity mismatch for predicate '" + p + "'");
    }
  }
}

std::string Structure::atom_string(const GroundAtom& a) const {
  std::string out = a.predicate;
  if (a.args.empty()) return out;
  out += '(';
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (i) out += ", ";
    out += element_name(a.args[i]);
  }
  return out + ')';
}

// ---- evaluation ----------------------------------------------------------------

namespace {

class Evaluator {
 public:
  explicit Evaluator(const Structure& s) : s_(s) {}

  Element term(const Term& t) {
    switch (t.kind) {
      case Term::Kind::Variable:
        for (auto it = env_.rbegin(); it != env_.rend(); ++it) {
          if (it->first == t.name) return it->second;
        }
        throw SemanticError("free variable '" + t.name + "' during evaluation");
      case Term::Kind::Constant:
        return s_.constant(t.name);
      case Term::Kind::Element:
        return s_.element(t.name);
      case Term::Kind::Application: {
        std::vector<Element> args;
        args.reserve(t.args.size());
        for (const auto& a : t.args) args.push_back(term(a));
        return s_.apply(t.name, args);
      }
    }
    throw SemanticError("malformed term");
  }

  TruthValue formula(const Formula& f) {
    switch (f.kind) {
      case Formula::Kind::True:
        return TruthValue::True;
      case Formula::Kind::False:
        return TruthValue::False;
      case Formula::Kind::Atom: {
        std::vector<Element> args;
        args.reserve(f.terms.size());
        for (const auto& t : f.terms) args.push_back(term(t));
        return s_.value(f.name, args);
      }
      case Formula::Kind::Equal:
        return truth_of(term(f.terms[0]) == term(f.terms[1]));
      case Formula::Kind::Not:
        return kleene_not(formula(f.body()));
      case Formula::Kind::And: {
        TruthValue v = TruthValue::True;
        for (const auto& c : f.children) {
          v = kleene_and(v, formula(c));
          if (v == TruthValue::False) break;
        }
        return v;
      }
      case Formula::Kind::Or: {
        TruthValue v = TruthValue::False;
        for (const auto& c : f.children) {
          v = kleene_or(v, formula(c));
          if (v == TruthValue::True) break;
        }
        return v;
      }
      case Formula::Kind::Implies:
        return kleene_implies(formula(f.children[0]), formula(f.children[1]));
      case Formula::Kind::Iff:
        return kleene_iff(formula(f.children[0]), formula(f.children[1]));
      case Formula::Kind::Forall:
      case Formula::Kind::Exists: {
        bool universal = f.kind == Formula::Kind::Forall;
        TruthValue v = universal ? TruthValue::True : TruthValue::False;
        env_.emplace_back(f.name, 0);
        for (Element e = 0; e < s_.domain_size(); ++e) {
          env_.back().second = e;
          TruthValue b = formula(f.body());
          v = universal ? kleene_and(v, b) : kleene_or(v, b);
          if (v == (universal ? TruthValue::False : TruthValue::True)) break;
        }
        env_.pop_back();
        return v;
      }
    }
    throw SemanticError("malformed formula");
  }

 private:
  const Structure& s_;
  std::vector<std::pair<std::string, Element>> env_;
};

}  // namespace

Element eval_term(const Term& t, const Structure& s) {
  if (!t.is_ground()) throw SemanticError("cannot evaluate a term with variables");
  return Evaluator(s).term(t);
}

TruthValue eval_formula(const Formula& f, const Structure& s) {
  if (!is_closed(f)) throw SemanticError("cannot evaluate a formula with free variables");
  return Evaluator(s).formula(f);
}

Structure restrict_open(const Structure& s, const Definition& d) {
  Structure out = s;
  for (const auto& p : d.defined) out.fill_predicate(p, TruthValue::Unknown);
  return out;
}

bool precision_leq(const Structure& a, const Structure& b) {
  if (a.domain() != b.domain()) throw SemanticError("precision comparison across different domains");
  for (const auto& [name, table] : a.predicates()) {
    const auto& other = b.predicate(name);
    if (other.arity != table.arity) throw SemanticError("arity mismatch for predicate '" + name + "'");
    for (std::size_t i = 0; i < table.values.size(); ++i) {
      if (!precision_leq(table.values[i], other.values[i])) return false;
    }
  }
  return true;
}

std::set<GroundLiteral> literal_set(const Structure& s, const std::set<std::string>& predicates) {
  std::set<GroundLiteral> out;
  for (const auto& p : predicates) {
    const auto& table = s.predicate(p);
    for (std::size_t i = 0; i < table.values.size(); ++i) {
      if (table.values[i] == TruthValue::Unknown) continue;
      out.insert({{p, s.tuple_at(table.arity, i)}, table.values[i] == TruthValue::True});
    }
  }
  return out;
}

Structure from_literal_set(const Structure& base, const std::set<std::string>& predicates,
                           const std::set<GroundLiteral>& literals) {
  Structure out = base;
  for (const auto& p : predicates) out.fill_predicate(p, TruthValue::Unknown);
  for (const auto& l : literals) {
    if (!predicates.count(l.atom.predicate)) throw SemanticError("literal outside the given predicates");
    TruthValue want = truth_of(l.positive);
    TruthValue have = out.value(l.atom);
    if (have != TruthValue::Unknown && have != want) throw SemanticError("inconsistent literal set");
    out.set_value(l.atom, want);
  }
  return out;
}

}  // namespace idl
