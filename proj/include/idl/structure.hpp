#pragma once

// Finite structures, three-valued (partial) interpretations and strong
// Kleene evaluation.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "idl/syntax.hpp"

namespace idl {

/// Truth order: False < Unknown < True. Precision order: Unknown below both.
enum class TruthValue : std::uint8_t { False = 0, Unknown = 1, True = 2 };

constexpr TruthValue truth_of(bool b) { return b ? TruthValue::True : TruthValue::False; }
constexpr bool is_definite(TruthValue v) { return v != TruthValue::Unknown; }

constexpr TruthValue kleene_not(TruthValue v) {
  return static_cast<TruthValue>(2 - static_cast<std::uint8_t>(v));
}
constexpr TruthValue kleene_and(TruthValue a, TruthValue b) { return a < b ? a : b; }
constexpr TruthValue kleene_or(TruthValue a, TruthValue b) { return a < b ? b : a; }
constexpr TruthValue kleene_implies(TruthValue a, TruthValue b) { return kleene_or(kleene_not(a), b); }
constexpr TruthValue kleene_iff(TruthValue a, TruthValue b) {
  return kleene_and(kleene_implies(a, b), kleene_implies(b, a));
}
/// a is at most as precise as b.
constexpr bool precision_leq(TruthValue a, TruthValue b) { return a == TruthValue::Unknown || a == b; }

std::string to_string(TruthValue v);

using Element = std::size_t;

struct FunctionTable {
  std::size_t arity = 0;
  std::vector<Element> values;  // indexed by tuple index
  friend bool operator==(const FunctionTable&, const FunctionTable&) = default;
};

struct PredicateTable {
  std::size_t arity = 0;
  std::vector<TruthValue> values;  // indexed by tuple index
  friend bool operator==(const PredicateTable&, const PredicateTable&) = default;
};

/// p(d1,..,dn) with elements of some structure's domain.
struct GroundAtom {
  std::string predicate;
  std::vector<Element> args;

  friend bool operator==(const GroundAtom&, const GroundAtom&) = default;
  friend auto operator<=>(const GroundAtom&, const GroundAtom&) = default;
};

struct GroundLiteral {
  GroundAtom atom;
  bool positive = true;

  friend bool operator==(const GroundLiteral&, const GroundLiteral&) = default;
  friend auto operator<=>(const GroundLiteral&, const GroundLiteral&) = default;
};

/// A finite domain with total constant and function interpretations and
/// three-valued predicate tables. Tuples are indexed lexicographically
/// (first argument most significant).
class Structure {
 public:
  Structure() = default;
  explicit Structure(std::vector<std::string> domain);

  /// Domain plus every predicate of `v` declared all-unknown.
  static Structure for_vocabulary(const Vocabulary& v, std::vector<std::string> domain);

  std::size_t domain_size() const { return domain_.size(); }
  const std::vector<std::string>& domain() const { return domain_; }
  const std::string& element_name(Element e) const { return domain_.at(e); }
  std::optional<Element> find_element(std::string_view name) const;
  Element element(std::string_view name) const;

  void set_constant(const std::string& name, Element e);
  bool has_constant(const std::string& name) const { return constants_.count(name) != 0; }
  Element constant(const std::string& name) const;
  const std::map<std::string, Element>& constants() const { return constants_; }

  void set_function(const std::string& name, std::size_t arity, std::vector<Element> values);
  void set_function_value(const std::string& name, std::span<const Element> args, Element value);
  bool has_function(const std::string& name) const { return functions_.count(name) != 0; }
  Element apply(const std::string& name, std::span<const Element> args) const;
  const std::map<std::string, FunctionTable>& functions() const { return functions_; }

  void declare_predicate(const std::string& name, std::size_t arity, TruthValue fill = TruthValue::Unknown);
  bool has_predicate(const std::string& name) const { return predicates_.count(name) != 0; }
  const PredicateTable& predicate(const std::string& name) const;
  TruthValue value(const std::string& name, std::span<const Element> args) const;
  TruthValue value(const GroundAtom& a) const { return value(a.predicate, a.args); }
  void set_value(const std::string& name, std::span<const Element> args, TruthValue v);
  void set_value(const GroundAtom& a, TruthValue v) { set_value(a.predicate, a.args, v); }
  void fill_predicate(const std::string& name, TruthValue v);
  const std::map<std::string, PredicateTable>& predicates() const { return predicates_; }

  std::size_t tuple_count(std::size_t arity) const;
  std::size_t tuple_index(std::span<const Element> args) const;
  std::vector<Element> tuple_at(std::size_t arity, std::size_t index) const;

  /// All atoms of `predicate`, in tuple order.
  std::vector<GroundAtom> atoms_of(const std::string& predicate) const;

  /// No predicate entry is unknown.
  bool is_total() const;
  bool is_total(const std::set<std::string>& predicates) const;

  /// Checks that every constant and function of `v` is interpreted and that
  /// predicate arities agree. Missing predicates are declared all-unknown.
  void conform_to(const Vocabulary& v);

  std::string atom_string(const GroundAtom& a) const;

  friend bool operator==(const Structure&, const Structure&) = default;

 private:
  std::vector<std::string> domain_;
  std::map<std::string, Element> element_index_;
  std::map<std::string, Element> constants_;
  std::map<std::string, FunctionTable> functions_;
  std::map<std::string, PredicateTable> predicates_;
};

/// Partial interpretations are structures whose tables may hold Unknown.
using PartialInterpretation = Structure;

/// Evaluates a ground term over Σ_I (domain elements may appear as literals).
Element eval_term(const Term& t, const Structure& s);

/// Strong Kleene evaluation of a closed formula; quantifiers range over the
/// finite domain and equality is identity on elements.
TruthValue eval_formula(const Formula& f, const Structure& s);

/// Erases every predicate defined by `d` to all-unknown.
Structure restrict_open(const Structure& s, const Definition& d);

/// Every entry of `a` is unknown or equal to the entry in `b`.
bool precision_leq(const Structure& a, const Structure& b);

/// The consistent literal set of atoms of `predicates` true in `s`.
std::set<GroundLiteral> literal_set(const Structure& s, const std::set<std::string>& predicates);
/// The partial interpretation extending `base` in which exactly the literals
/// of `literals` are true on `predicates`. Throws on a complementary pair.
Structure from_literal_set(const Structure& base, const std::set<std::string>& predicates,
                           const std::set<GroundLiteral>& literals);

}  // namespace idl
