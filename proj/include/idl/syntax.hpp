#pragma once

// Abstract syntax of ID-logic: vocabularies, terms, formulas, rules,
// definitions and theories. All values are plain immutable-by-convention
// aggregates with value semantics.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace idl {

enum class SymbolKind { Constant, Function, Predicate };

class Vocabulary {
 public:
  void add_constant(const std::string& name);
  void add_function(const std::string& name, std::size_t arity);
  void add_predicate(const std::string& name, std::size_t arity);

  /// Adds every symbol of `other`; clashing declarations throw.
  void merge(const Vocabulary& other);

  std::optional<SymbolKind> kind_of(const std::string& name) const;
  bool has_constant(const std::string& name) const { return constants_.count(name) != 0; }
  bool has_function(const std::string& name) const { return functions_.count(name) != 0; }
  bool has_predicate(const std::string& name) const { return predicates_.count(name) != 0; }
  std::size_t function_arity(const std::string& name) const;
  std::size_t predicate_arity(const std::string& name) const;

  const std::set<std::string>& constants() const { return constants_; }
  const std::map<std::string, std::size_t>& functions() const { return functions_; }
  const std::map<std::string, std::size_t>& predicates() const { return predicates_; }

  bool empty() const { return constants_.empty() && functions_.empty() && predicates_.empty(); }

  /// A predicate name not yet used by any symbol, derived from `stem`.
  std::string fresh_name(const std::string& stem) const;

  friend bool operator==(const Vocabulary&, const Vocabulary&) = default;

 private:
  std::set<std::string> constants_;
  std::map<std::string, std::size_t> functions_;
  std::map<std::string, std::size_t> predicates_;
};

struct Term {
  enum class Kind : std::uint8_t { Variable, Constant, Application, Element };

  Kind kind = Kind::Constant;
  std::string name;
  std::vector<Term> args;

  static Term variable(std::string name);
  static Term constant(std::string name);
  static Term apply(std::string function, std::vector<Term> args);
  /// A domain element injected as a constant symbol.
  static Term element(std::string name);

  bool is_variable() const { return kind == Kind::Variable; }
  bool is_ground() const;

  friend bool operator==(const Term&, const Term&) = default;
};

int compare(const Term& a, const Term& b);
inline bool operator<(const Term& a, const Term& b) { return compare(a, b) < 0; }

struct Formula {
  enum class Kind : std::uint8_t {
    True,
    False,
    Atom,
    Equal,
    Not,
    And,
    Or,
    Implies,
    Iff,
    Forall,
    Exists,
  };

  Kind kind = Kind::True;
  /// Predicate name for atoms, bound variable for quantifiers.
  std::string name;
  /// Atom arguments, or the two sides of an equality.
  std::vector<Term> terms;
  std::vector<Formula> children;

  static Formula truth(bool value);
  static Formula top() { return truth(true); }
  static Formula bottom() { return truth(false); }
  static Formula atom(std::string predicate, std::vector<Term> args = {});
  static Formula equal(Term lhs, Term rhs);
  static Formula negate(Formula f);
  /// n-ary; zero operands give `true`, one operand is returned unchanged.
  static Formula conjunction(std::vector<Formula> operands);
  /// n-ary; zero operands give `false`, one operand is returned unchanged.
  static Formula disjunction(std::vector<Formula> operands);
  static Formula implies(Formula lhs, Formula rhs);
  static Formula iff(Formula lhs, Formula rhs);
  static Formula forall(std::string var, Formula body);
  static Formula exists(std::string var, Formula body);
  static Formula forall(const std::vector<std::string>& vars, Formula body);
  static Formula exists(const std::vector<std::string>& vars, Formula body);

  bool is_quantifier() const { return kind == Kind::Forall || kind == Kind::Exists; }
  bool is_truth() const { return kind == Kind::True || kind == Kind::False; }
  const Formula& body() const { return children.front(); }

  friend bool operator==(const Formula&, const Formula&) = default;
};

int compare(const Formula& a, const Formula& b);
inline bool operator<(const Formula& a, const Formula& b) { return compare(a, b) < 0; }

/// p(t1,..,tn) <- body. `free_vars` is maintained by `Rule::make`.
struct Rule {
  std::string head;
  std::vector<Term> head_terms;
  Formula body;
  std::vector<std::string> free_vars;

  static Rule make(std::string head, std::vector<Term> head_terms, Formula body);
  static Rule fact(std::string head, std::vector<Term> head_terms) {
    return make(std::move(head), std::move(head_terms), Formula::top());
  }

  friend bool operator==(const Rule&, const Rule&) = default;
};

struct Definition {
  std::set<std::string> defined;
  std::vector<Rule> rules;

  bool defines(const std::string& predicate) const { return defined.count(predicate) != 0; }

  friend bool operator==(const Definition&, const Definition&) = default;
};

struct Theory {
  Vocabulary vocabulary;
  std::vector<Formula> sentences;
  std::vector<Definition> definitions;

  friend bool operator==(const Theory&, const Theory&) = default;
};

// ---- syntactic utilities -------------------------------------------------

std::set<std::string> free_vars(const Term& t);
std::set<std::string> free_vars(const Formula& f);
/// Variables of a rule in order of first occurrence: head terms, then body.
std::vector<std::string> rule_variables(const std::vector<Term>& head_terms, const Formula& body);

bool is_closed(const Formula& f);

/// Predicates occurring in atoms of `f`.
std::set<std::string> predicates_in(const Formula& f);
/// Predicates occurring in a definition: heads, defined set and bodies.
std::set<std::string> predicates_in(const Definition& d);
/// Predicates occurring in rule bodies of `d` that it does not define.
std::set<std::string> open_predicates(const Definition& d);

/// All variable names occurring anywhere in `f`, bound or free.
std::set<std::string> all_variables(const Formula& f);

Term substitute(const Term& t, const std::map<std::string, Term>& sigma);
/// Capture-avoiding substitution of free variables.
Formula substitute(const Formula& f, const std::map<std::string, Term>& sigma);

bool alpha_equivalent(const Formula& a, const Formula& b);

/// A variable name based on `stem` that is not in `taken`.
std::string fresh_variable(const std::string& stem, const std::set<std::string>& taken);

/// Checks every symbol use against the vocabulary; throws VocabularyError.
void check_vocabulary(const Vocabulary& v, const Formula& f);
void check_vocabulary(const Vocabulary& v, const Definition& d);
void check_theory(const Theory& t);

}  // namespace idl
