#include "idl/syntax.hpp"

#include <algorithm>
#include <cctype>

#include "idl/error.hpp"

namespace idl {

// ---- Vocabulary ------------------------------------------------------------

namespace {

void ensure_fresh(const Vocabulary& v, const std::string& name, SymbolKind kind, std::size_t arity) {
  auto existing = v.kind_of(name);
  if (!existing) return;
  bool same = *existing == kind;
  if (same && kind == SymbolKind::Function) same = v.function_arity(name) == arity;
  if (same && kind == SymbolKind::Predicate) same = v.predicate_arity(name) == arity;
  if (!same) throw VocabularyError("symbol '" + name + "' is already declared differently");
}

}  // namespace

void Vocabulary::add_constant(const std::string& name) {
  ensure_fresh(*this, name, SymbolKind::Constant, 0);
  constants_.insert(name);
}

void Vocabulary::add_function(const std::string& name, std::size_t arity) {
  if (arity == 0) throw VocabularyError("function '" + name + "' must have arity >= 1");
  ensure_fresh(*this, name, SymbolKind::Function, arity);
  functions_[name] = arity;
}

void Vocabulary::add_predicate(const std::string& name, std::size_t arity) {
  ensure_fresh(*this, name, SymbolKind::Predicate, arity);
  predicates_[name] = arity;
}

void Vocabulary::merge(const Vocabulary& other) {
  for (const auto& c : other.constants_) add_constant(c);
  for (const auto& [f, n] : other.functions_) add_function(f, n);
  for (const auto& [p, n] : other.predicates_) add_predicate(p, n);
}

std::optional<SymbolKind> Vocabulary::kind_of(const std::string& name) const {
  if (constants_.count(name)) return SymbolKind::Constant;
  if (functions_.count(name)) return SymbolKind::Function;
  if (predicates_.count(name)) return SymbolKind::Predicate;
  return std::nullopt;
}

std::size_t Vocabulary::function_arity(const std::string& name) const {
  auto it = functions_.find(name);
  if (it == functions_.end()) throw VocabularyError("undeclared function '" + name + "'");
  return it->second;
}

std::size_t Vocabulary::predicate_arity(const std::string& name) const {
  auto it = predicates_.find(name);
  if (it == predicates_.end()) throw VocabularyError("undeclared predicate '" + name + "'");
  return it->second;
}

std::string Vocabulary::fresh_name(const std::string& stem) const {
  if (!kind_of(stem)) return stem;
  for (std::size_t i = 1;; ++i) {
    std::string candidate = stem + "_" + std::to_string(i);
    if (!kind_of(candidate)) return candidate;
  }
}

// ---- Term ------------------------------------------------------------------

Term Term::variable(std::string name) { return Term{Kind::Variable, std::move(name), {}}; }
Term Term::constant(std::string name) { return Term{Kind::Constant, std::move(name), {}}; }
Term Term::apply(std::string function, std::vector<Term> args) {
  return Term{Kind::Application, std::move(function), std::move(args)};
}
Term Term::element(std::string name) { return Term{Kind::Element, std::move(name), {}}; }

bool Term::is_ground() const {
  if (kind == Kind::Variable) return false;
  return std::all_of(args.begin(), args.end(), [](const Term& a) { return a.is_ground(); });
}

namespace {

template <typename T>
int compare_vectors(const std::vector<T>& a, const std::vector<T>& b) {
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (int c = compare(a[i], b[i]); c != 0) return c;
  }
  return a.size() < b.size() ? -1 : (a.size() > b.size() ? 1 : 0);
}

int compare_strings(const std::string& a, const std::string& b) {
  int c = a.compare(b);
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

}  // namespace

int compare(const Term& a, const Term& b) {
  if (a.kind != b.kind) return a.kind < b.kind ? -1 : 1;
  if (int c = compare_strings(a.name, b.name); c != 0) return c;
  return compare_vectors(a.args, b.args);
}

// ---- Formula ---------------------------------------------------------------

Formula Formula::truth(bool value) { return Formula{value ? Kind::True : Kind::False, {}, {}, {}}; }

Formula Formula::atom(std::string predicate, std::vector<Term> args) {
  return Formula{Kind::Atom, std::move(predicate), std::move(args), {}};
}

Formula Formula::equal(Term lhs, Term rhs) {
  return Formula{Kind::Equal, {}, {std::move(lhs), std::move(rhs)}, {}};
}

Formula Formula::negate(Formula f) { return Formula{Kind::Not, {}, {}, {std::move(f)}}; }

Formula Formula::conjunction(std::vector<Formula> operands) {
  if (operands.empty()) return top();
  if (operands.size() == 1) return std::move(operands.front());
  return Formula{Kind::And, {}, {}, std::move(operands)};
}

Formula Formula::disjunction(std::vector<Formula> operands) {
  if (operands.empty()) return bottom();
  if (operands.size() == 1) return std::move(operands.front());
  return Formula{Kind::Or, {}, {}, std::move(operands)};
}

Formula Formula::implies(Formula lhs, Formula rhs) {
  return Formula{Kind::Implies, {}, {}, {std::move(lhs), std::move(rhs)}};
}

Formula Formula::iff(Formula lhs, Formula rhs) {
  return Formula{Kind::Iff, {}, {}, {std::move(lhs), std::move(rhs)}};
}

Formula Formula::forall(std::string var, Formula body) {
  return Formula{Kind::Forall, std::move(var), {}, {std::move(body)}};
}

Formula Formula::exists(std::string var, Formula body) {
  return Formula{Kind::Exists, std::move(var), {}, {std::move(body)}};
}

Formula Formula::forall(const std::vector<std::string>& vars, Formula body) {
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) body = forall(*it, std::move(body));
  return body;
}

Formula Formula::exists(const std::vector<std::string>& vars, Formula body) {
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) body = exists(*it, std::move(body));
  return body;
}

int compare(const Formula& a, const Formula& b) {
  if (a.kind != b.kind) return a.kind < b.kind ? -1 : 1;
  if (int c = compare_strings(a.name, b.name); c != 0) return c;
  if (int c = compare_vectors(a.terms, b.terms); c != 0) return c;
  return compare_vectors(a.children, b.children);
}

// ---- Rule ------------------------------------------------------------------

Rule Rule::make(std::string head, std::vector<Term> head_terms, Formula body) {
  Rule r;
  r.free_vars = rule_variables(head_terms, body);
  r.head = std::move(head);
  r.head_terms = std::move(head_terms);
  r.body = std::move(body);
  return r;
}

// ---- free variables ----------------------------------------------------------

namespace {

void collect_term_vars(const Term& t, std::vector<std::string>& out) {
  if (t.kind == Term::Kind::Variable) {
    if (std::find(out.begin(), out.end(), t.name) == out.end()) out.push_back(t.name);
    return;
  }
  for (const auto& a : t.args) collect_term_vars(a, out);
}

void collect_free_vars(const Formula& f, std::vector<std::string>& bound, std::vector<std::string>& out) {
  switch (f.kind) {
    case Formula::Kind::Atom:
    case Formula::Kind::Equal: {
      std::vector<std::string> vars;
      for (const auto& t : f.terms) collect_term_vars(t, vars);
      for (auto& v : vars) {
        if (std::find(bound.begin(), bound.end(), v) != bound.end()) continue;
        if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
      }
      return;
    }
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
      bound.push_back(f.name);
      collect_free_vars(f.body(), bound, out);
      bound.pop_back();
      return;
    default:
      for (const auto& c : f.children) collect_free_vars(c, bound, out);
  }
}

}  // namespace

std::set<std::string> free_vars(const Term& t) {
  std::vector<std::string> vars;
  collect_term_vars(t, vars);
  return {vars.begin(), vars.end()};
}

std::set<std::string> free_vars(const Formula& f) {
  std::vector<std::string> bound, out;
  collect_free_vars(f, bound, out);
  return {out.begin(), out.end()};
}

std::vector<std::string> rule_variables(const std::vector<Term>& head_terms, const Formula& body) {
  std::vector<std::string> out;
  for (const auto& t : head_terms) collect_term_vars(t, out);
  std::vector<std::string> bound;
  collect_free_vars(body, bound, out);
  return out;
}

bool is_closed(const Formula& f) { return free_vars(f).empty(); }

namespace {

void collect_predicates(const Formula& f, std::set<std::string>& out) {
  if (f.kind == Formula::Kind::Atom) out.insert(f.name);
  for (const auto& c : f.children) collect_predicates(c, out);
}

void collect_all_vars(const Formula& f, std::set<std::string>& out) {
  if (f.is_quantifier()) out.insert(f.name);
  std::vector<std::string> vars;
  for (const auto& t : f.terms) collect_term_vars(t, vars);
  out.insert(vars.begin(), vars.end());
  for (const auto& c : f.children) collect_all_vars(c, out);
}

}  // namespace

std::set<std::string> predicates_in(const Formula& f) {
  std::set<std::string> out;
  collect_predicates(f, out);
  return out;
}

std::set<std::string> predicates_in(const Definition& d) {
  std::set<std::string> out = d.defined;
  for (const auto& r : d.rules) {
    out.insert(r.head);
    collect_predicates(r.body, out);
  }
  return out;
}

std::set<std::string> open_predicates(const Definition& d) {
  std::set<std::string> out;
  for (const auto& r : d.rules) collect_predicates(r.body, out);
  for (const auto& p : d.defined) out.erase(p);
  return out;
}

std::set<std::string> all_variables(const Formula& f) {
  std::set<std::string> out;
  collect_all_vars(f, out);
  return out;
}

// ---- substitution ------------------------------------------------------------

Term substitute(const Term& t, const std::map<std::string, Term>& sigma) {
  if (t.kind == Term::Kind::Variable) {
    auto it = sigma.find(t.name);
    return it == sigma.end() ? t : it->second;
  }
  if (t.args.empty()) return t;
  Term out = t;
  for (auto& a : out.args) a = substitute(a, sigma);
  return out;
}

std::string fresh_variable(const std::string& stem, const std::set<std::string>& taken) {
  if (!taken.count(stem)) return stem;
  for (std::size_t i = 1;; ++i) {
    std::string candidate = stem + std::to_string(i);
    if (!taken.count(candidate)) return candidate;
  }
}

Formula substitute(const Formula& f, const std::map<std::string, Term>& sigma) {
  if (sigma.empty()) return f;
  switch (f.kind) {
    case Formula::Kind::True:
    case Formula::Kind::False:
      return f;
    case Formula::Kind::Atom:
    case Formula::Kind::Equal: {
      Formula out = f;
      for (auto& t : out.terms) t = substitute(t, sigma);
      return out;
    }
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      std::map<std::string, Term> inner = sigma;
      inner.erase(f.name);
      if (inner.empty()) return f;
      // Rename the bound variable if a substituted term would be captured.
      std::set<std::string> incoming;
      std::set<std::string> body_free = free_vars(f.body());
      for (const auto& [v, t] : inner) {
        if (!body_free.count(v)) continue;
        auto fv = free_vars(t);
        incoming.insert(fv.begin(), fv.end());
      }
      Formula out = f;
      if (incoming.count(f.name)) {
        std::set<std::string> taken = all_variables(f.body());
        taken.insert(incoming.begin(), incoming.end());
        for (const auto& [v, t] : inner) taken.insert(v);
        std::string renamed = fresh_variable(f.name, taken);
        inner[f.name] = Term::variable(renamed);
        out.name = renamed;
      }
      out.children[0] = substitute(f.body(), inner);
      return out;
    }
    default: {
      Formula out = f;
      for (auto& c : out.children) c = substitute(c, sigma);
      return out;
    }
  }
}

// ---- alpha equivalence ---------------------------------------------------------

namespace {

bool alpha_terms(const Term& a, const Term& b, const std::vector<std::pair<std::string, std::string>>& env) {
  if (a.kind != b.kind) return false;
  if (a.kind == Term::Kind::Variable) {
    for (auto it = env.rbegin(); it != env.rend(); ++it) {
      bool left = it->first == a.name;
      bool right = it->second == b.name;
      if (left || right) return left && right;
    }
    return a.name == b.name;
  }
  if (a.name != b.name || a.args.size() != b.args.size()) return false;
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (!alpha_terms(a.args[i], b.args[i], env)) return false;
  }
  return true;
}

bool alpha(const Formula& a, const Formula& b, std::vector<std::pair<std::string, std::string>>& env) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Formula::Kind::True:
    case Formula::Kind::False:
      return true;
    case Formula::Kind::Atom:
    case Formula::Kind::Equal:
      if (a.name != b.name || a.terms.size() != b.terms.size()) return false;
      for (std::size_t i = 0; i < a.terms.size(); ++i) {
        if (!alpha_terms(a.terms[i], b.terms[i], env)) return false;
      }
      return true;
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      env.emplace_back(a.name, b.name);
      bool ok = alpha(a.body(), b.body(), env);
      env.pop_back();
      return ok;
    }
    default:
      if (a.children.size() != b.children.size()) return false;
      for (std::size_t i = 0; i < a.children.size(); ++i) {
        if (!alpha(a.children[i], b.children[i], env)) return false;
      }
      return true;
  }
}

}  // namespace

bool alpha_equivalent(const Formula& a, const Formula& b) {
  std::vector<std::pair<std::string, std::string>> env;
  return alpha(a, b, env);
}

// ---- vocabulary checks ---------------------------------------------------------

namespace {

void check_term(const Vocabulary& v, const Term& t) {
  switch (t.kind) {
    case Term::Kind::Variable:
    case Term::Kind::Element:
      return;
    case Term::Kind::Constant:
      if (!v.has_constant(t.name)) throw VocabularyError("undeclared constant '" + t.name + "'");
      return;
    case Term::Kind::Application:
      if (v.function_arity(t.name) != t.args.size()) {
        throw VocabularyError("arity mismatch for function '" + t.name + "'");
      }
      for (const auto& a : t.args) check_term(v, a);
      return;
  }
}

}  // namespace

void check_vocabulary(const Vocabulary& v, const Formula& f) {
  if (f.kind == Formula::Kind::Atom && v.predicate_arity(f.name) != f.terms.size()) {
    throw VocabularyError("arity mismatch for predicate '" + f.name + "'");
  }
  for (const auto& t : f.terms) check_term(v, t);
  for (const auto& c : f.children) check_vocabulary(v, c);
}

void check_vocabulary(const Vocabulary& v, const Definition& d) {
  if (d.defined.empty() && !d.rules.empty()) {
    throw VocabularyError("a definition with rules must define at least one predicate");
  }
  for (const auto& p : d.defined) v.predicate_arity(p);
  for (const auto& r : d.rules) {
    if (!d.defines(r.head)) throw VocabularyError("rule head '" + r.head + "' is not defined by its definition");
    if (v.predicate_arity(r.head) != r.head_terms.size()) {
      throw VocabularyError("arity mismatch for predicate '" + r.head + "'");
    }
    for (const auto& t : r.head_terms) check_term(v, t);
    check_vocabulary(v, r.body);
  }
}

void check_theory(const Theory& t) {
  for (const auto& s : t.sentences) {
    check_vocabulary(t.vocabulary, s);
    if (!is_closed(s)) throw SemanticError("sentence has free variables");
  }
  for (const auto& d : t.definitions) check_vocabulary(t.vocabulary, d);
}

}  // namespace idl
