#include "idl/engine.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "idl/error.hpp"
#include "idl/text.hpp"

namespace idl {

namespace {

/// Ground body with open atoms and equalities folded to constants.
struct Node {
  enum class Op : std::uint8_t { Const, Var, Not, And, Or };
  Op op = Op::Const;
  TruthValue value = TruthValue::True;
  std::size_t atom = 0;
  std::vector<Node> kids;

  static Node constant(TruthValue v) { return Node{Op::Const, v, 0, {}}; }
};

Node negate(Node n) {
  if (n.op == Node::Op::Const) return Node::constant(kleene_not(n.value));
  if (n.op == Node::Op::Not) return std::move(n.kids.front());
  Node out{Node::Op::Not, TruthValue::True, 0, {}};
  out.kids.push_back(std::move(n));
  return out;
}

Node combine(Node::Op op, std::vector<Node> kids) {
  const TruthValue absorbing = op == Node::Op::And ? TruthValue::False : TruthValue::True;
  const TruthValue neutral = op == Node::Op::And ? TruthValue::True : TruthValue::False;
  std::vector<Node> kept;
  bool unknown_const = false;
  for (auto& k : kids) {
    if (k.op == Node::Op::Const) {
      if (k.value == absorbing) return Node::constant(absorbing);
      if (k.value == TruthValue::Unknown) unknown_const = true;
      continue;
    }
    if (k.op == op) {
      for (auto& g : k.kids) kept.push_back(std::move(g));
    } else {
      kept.push_back(std::move(k));
    }
  }
  if (unknown_const) kept.push_back(Node::constant(TruthValue::Unknown));
  if (kept.empty()) return Node::constant(neutral);
  if (kept.size() == 1) return std::move(kept.front());
  Node out{op, TruthValue::True, 0, std::move(kept)};
  return out;
}

class Compiler {
 public:
  Compiler(const Structure& base, const std::map<GroundAtom, std::size_t>& index) : base_(base), index_(index) {}

  Node compile(const Formula& f) {
    switch (f.kind) {
      case Formula::Kind::True:
        return Node::constant(TruthValue::True);
      case Formula::Kind::False:
        return Node::constant(TruthValue::False);
      case Formula::Kind::Atom: {
        GroundAtom a{f.name, {}};
        for (const auto& t : f.terms) a.args.push_back(eval_term(t, base_));
        auto it = index_.find(a);
        if (it != index_.end()) return Node{Node::Op::Var, TruthValue::Unknown, it->second, {}};
        return Node::constant(base_.value(a));
      }
      case Formula::Kind::Equal:
        return Node::constant(truth_of(eval_term(f.terms[0], base_) == eval_term(f.terms[1], base_)));
      case Formula::Kind::Not:
        return negate(compile(f.body()));
      case Formula::Kind::And:
      case Formula::Kind::Or: {
        std::vector<Node> kids;
        for (const auto& c : f.children) kids.push_back(compile(c));
        return combine(f.kind == Formula::Kind::And ? Node::Op::And : Node::Op::Or, std::move(kids));
      }
      case Formula::Kind::Implies: {
        std::vector<Node> kids;
        kids.push_back(negate(compile(f.children[0])));
        kids.push_back(compile(f.children[1]));
        return combine(Node::Op::Or, std::move(kids));
      }
      case Formula::Kind::Iff: {
        Node a = compile(f.children[0]);
        Node b = compile(f.children[1]);
        std::vector<Node> left, right;
        left.push_back(negate(a));
        left.push_back(b);
        right.push_back(negate(std::move(b)));
        right.push_back(std::move(a));
        std::vector<Node> both;
        both.push_back(combine(Node::Op::Or, std::move(left)));
        both.push_back(combine(Node::Op::Or, std::move(right)));
        return combine(Node::Op::And, std::move(both));
      }
      case Formula::Kind::Forall:
      case Formula::Kind::Exists:
        return compile(ground_sentence(f, base_));
    }
    throw SemanticError("malformed formula");
  }

 private:
  const Structure& base_;
  const std::map<GroundAtom, std::size_t>& index_;
};

void collect_atoms(const Node& n, std::vector<std::size_t>& out) {
  if (n.op == Node::Op::Var) out.push_back(n.atom);
  for (const auto& k : n.kids) collect_atoms(k, out);
}

TruthValue evaluate(const Node& n, const std::vector<TruthValue>& vals) {
  switch (n.op) {
    case Node::Op::Const:
      return n.value;
    case Node::Op::Var:
      return vals[n.atom];
    case Node::Op::Not:
      return kleene_not(evaluate(n.kids.front(), vals));
    case Node::Op::And: {
      TruthValue v = TruthValue::True;
      for (const auto& k : n.kids) {
        v = kleene_and(v, evaluate(k, vals));
        if (v == TruthValue::False) break;
      }
      return v;
    }
    case Node::Op::Or: {
      TruthValue v = TruthValue::False;
      for (const auto& k : n.kids) {
        v = kleene_or(v, evaluate(k, vals));
        if (v == TruthValue::True) break;
      }
      return v;
    }
  }
  return TruthValue::Unknown;
}

struct CompiledRule {
  std::size_t head;
  Node body;
  std::vector<std::size_t> atoms;
};

class Program {
 public:
  explicit Program(const GroundDefinition& g) : g_(g), occurs_(g.defined_atoms.size()) {
    for (std::size_t i = 0; i < g.defined_atoms.size(); ++i) index_.emplace(g.defined_atoms[i], i);
    Compiler compiler(g.base, index_);
    for (const auto& r : g.rules) {
      auto head = index_.find(r.head);
      if (head == index_.end()) throw SemanticError("ground rule head is not a defined atom");
      CompiledRule c{head->second, compiler.compile(r.body), {}};
      if (c.body.op == Node::Op::Const && c.body.value != TruthValue::True) continue;
      collect_atoms(c.body, c.atoms);
      std::sort(c.atoms.begin(), c.atoms.end());
      c.atoms.erase(std::unique(c.atoms.begin(), c.atoms.end()), c.atoms.end());
      for (auto a : c.atoms) occurs_[a].push_back(rules_.size());
      rules_.push_back(std::move(c));
    }
  }

  std::size_t size() const { return g_.defined_atoms.size(); }

  /// Least model of the reduct with respect to the two-valued set `x`.
  std::vector<char> gamma(const std::vector<char>& x) const {
    const std::size_t n = size();
    std::vector<char> model(n, 0);
    // Values available to a witness J: derived atoms may be true, atoms
    // outside x may be false, free atoms may be either.
    std::vector<TruthValue> vals(n);
    std::vector<char> free(n, 0);
    for (std::size_t a = 0; a < n; ++a) vals[a] = x[a] ? TruthValue::Unknown : TruthValue::False;

    std::deque<std::size_t> work;
    std::vector<char> queued(rules_.size(), 1);
    for (std::size_t r = 0; r < rules_.size(); ++r) work.push_back(r);
    while (!work.empty()) {
      std::size_t r = work.front();
      work.pop_front();
      queued[r] = 0;
      const CompiledRule& rule = rules_[r];
      if (model[rule.head] || !witness(rule, vals, free)) continue;
      const std::size_t h = rule.head;
      model[h] = 1;
      if (x[h]) {
        vals[h] = TruthValue::True;
      } else {
        vals[h] = TruthValue::Unknown;
        free[h] = 1;
      }
      for (std::size_t other : occurs_[h]) {
        if (!queued[other] && !model[rules_[other].head]) {
          queued[other] = 1;
          work.push_back(other);
        }
      }
    }
    return model;
  }

  Structure to_structure(const std::vector<char>& lower, const std::vector<char>& upper, Structure out) const {
    for (std::size_t a = 0; a < size(); ++a) {
      TruthValue v = lower[a] ? TruthValue::True : (upper[a] ? TruthValue::Unknown : TruthValue::False);
      out.set_value(g_.defined_atoms[a], v);
    }
    return out;
  }

  std::vector<char> atoms_where(const Structure& p, bool include_unknown) const {
    std::vector<char> out(size(), 0);
    for (std::size_t a = 0; a < size(); ++a) {
      TruthValue v = p.value(g_.defined_atoms[a]);
      out[a] = v == TruthValue::True || (include_unknown && v == TruthValue::Unknown);
    }
    return out;
  }

 private:
  static bool witness(const CompiledRule& rule, std::vector<TruthValue>& vals, std::vector<char>& free) {
    TruthValue v = evaluate(rule.body, vals);
    if (v != TruthValue::Unknown) return v == TruthValue::True;
    for (std::size_t a : rule.atoms) {
      if (!free[a] || vals[a] != TruthValue::Unknown) continue;
      free[a] = 0;
      bool found = false;
      for (TruthValue choice : {TruthValue::True, TruthValue::False}) {
        vals[a] = choice;
        if (witness(rule, vals, free)) {
          found = true;
          break;
        }
      }
      vals[a] = TruthValue::Unknown;
      free[a] = 1;
      return found;
    }
    return false;
  }

  const GroundDefinition& g_;
  std::map<GroundAtom, std::size_t> index_;
  std::vector<CompiledRule> rules_;
  std::vector<std::vector<std::size_t>> occurs_;
};

std::string atom_text(const Structure& s, const GroundAtom& a) { return s.atom_string(a); }

}  // namespace

PartialInterpretation stable_operator(const GroundDefinition& g, const PartialInterpretation& p) {
  Program program(g);
  auto lower = program.gamma(program.atoms_where(p, true));
  auto upper = program.gamma(program.atoms_where(p, false));
  return program.to_structure(lower, upper, p);
}

PartialInterpretation well_founded_model(const GroundDefinition& g, StableRevisionState* state) {
  Program program(g);
  std::vector<char> lower(program.size(), 0), upper(program.size(), 1);
  if (state) {
    state->trace.clear();
    state->iteration = 0;
    state->trace.push_back(program.to_structure(lower, upper, g.base));
  }
  while (true) {
    auto next_lower = program.gamma(upper);
    auto next_upper = program.gamma(lower);
    if (next_lower == lower && next_upper == upper) break;
    lower = std::move(next_lower);
    upper = std::move(next_upper);
    if (state) {
      ++state->iteration;
      state->trace.push_back(program.to_structure(lower, upper, g.base));
    }
  }
  Structure out = program.to_structure(lower, upper, g.base);
  if (state) state->current = out;
  return out;
}

PartialInterpretation justified_extension(const Definition& d, const PartialInterpretation& open_part,
                                          const GroundingOptions& options) {
  Structure s = open_part;
  for (const auto& p : d.defined) {
    if (s.has_predicate(p)) continue;
    auto rule = std::find_if(d.rules.begin(), d.rules.end(), [&](const Rule& r) { return r.head == p; });
    if (rule == d.rules.end()) {
      throw SemanticError("cannot infer the arity of defined predicate '" + p + "'");
    }
    s.declare_predicate(p, rule->head_terms.size());
  }
  return well_founded_model(ground_definition(d, s, options));
}

bool is_justified(const Definition& d, const PartialInterpretation& i, const GroundingOptions& options) {
  Structure w = justified_extension(d, i, options);
  for (const auto& p : d.defined) {
    if (w.predicate(p) != i.predicate(p)) return false;
  }
  return true;
}

std::string to_string(ModelStatus status) {
  switch (status) {
    case ModelStatus::Model:
      return "MODEL";
    case ModelStatus::NotModel:
      return "NOT-MODEL";
    case ModelStatus::Partial:
      return "PARTIAL";
  }
  return "?";
}

ModelVerdict check_model(const Theory& t, const Structure& s, const ModelCheckOptions& options) {
  Structure i = s;
  i.conform_to(t.vocabulary);
  for (std::size_t k = 0; k < t.definitions.size(); ++k) {
    const Definition& d = t.definitions[k];
    Structure w = justified_extension(d, i, options.grounding);
    for (const auto& p : d.defined) {
      for (const auto& a : i.atoms_of(p)) {
        TruthValue have = i.value(a), want = w.value(a);
        if (have != want) {
          return {ModelStatus::NotModel, "definition " + std::to_string(k + 1) + ": " + atom_text(i, a) + " is " +
                                             to_string(have) + " but its justified value is " + to_string(want)};
        }
      }
    }
  }
  for (std::size_t k = 0; k < t.sentences.size(); ++k) {
    TruthValue v = eval_formula(t.sentences[k], i);
    bool ok = options.lenient_sentences ? v != TruthValue::False : v == TruthValue::True;
    if (!ok) {
      return {ModelStatus::NotModel,
              "axiom " + std::to_string(k + 1) + " is " + to_string(v) + ": " + render_formula(t.sentences[k])};
    }
  }
  for (const auto& [name, table] : i.predicates()) {
    for (std::size_t k = 0; k < table.values.size(); ++k) {
      if (table.values[k] == TruthValue::Unknown) {
        return {ModelStatus::Partial, atom_text(i, {name, i.tuple_at(table.arity, k)}) + " is unknown"};
      }
    }
  }
  return {};
}

bool is_model(const Theory& t, const Structure& s, const ModelCheckOptions& options) {
  Structure i = s;
  i.conform_to(t.vocabulary);
  if (!i.is_total()) throw SemanticError("model checking requires a total structure");
  return check_model(t, i, options).status == ModelStatus::Model;
}

bool canonical_less(const Structure& a, const Structure& b) {
  auto key = [](const Structure& s) {
    return std::tie(s.predicates(), s.constants(), s.functions());
  };
  auto table_key = [](const auto& m) {
    std::vector<std::pair<std::string, std::vector<std::uint8_t>>> out;
    for (const auto& [name, table] : m) {
      std::vector<std::uint8_t> v;
      for (auto x : table.values) v.push_back(static_cast<std::uint8_t>(x));
      out.emplace_back(name, std::move(v));
    }
    return out;
  };
  auto [pa, ca, fa] = key(a);
  auto [pb, cb, fb] = key(b);
  auto ta = table_key(pa), tb = table_key(pb);
  if (ta != tb) return ta < tb;
  if (ca != cb) return ca < cb;
  std::vector<std::pair<std::string, std::vector<Element>>> ga, gb;
  for (const auto& [n, f] : fa) ga.emplace_back(n, f.values);
  for (const auto& [n, f] : fb) gb.emplace_back(n, f.values);
  return ga < gb;
}

namespace {

void split_conjuncts(const Formula& f, std::vector<Formula>& out) {
  if (f.kind == Formula::Kind::And) {
    for (const auto& c : f.children) split_conjuncts(c, out);
  } else if (f.kind != Formula::Kind::True) {
    out.push_back(f);
  }
}

std::vector<GroundAtom> unknown_atoms(const Structure& s, const std::set<std::string>& first) {
  std::vector<GroundAtom> head, tail;
  for (const auto& [name, table] : s.predicates()) {
    for (std::size_t k = 0; k < table.values.size(); ++k) {
      if (table.values[k] != TruthValue::Unknown) continue;
      (first.count(name) ? head : tail).push_back({name, s.tuple_at(table.arity, k)});
    }
  }
  head.insert(head.end(), tail.begin(), tail.end());
  return head;
}

class ModelSearch {
 public:
  ModelSearch(const Theory& t, const Structure& root, const SearchOptions& options)
      : t_(t), options_(options) {
    for (const auto& f : t.sentences) split_conjuncts(ground_sentence(f, root), parts_);
    for (const auto& d : t.definitions) opens_.push_back(open_predicates(d));
    std::set<std::string> defined;
    for (const auto& d : t.definitions) defined.insert(d.defined.begin(), d.defined.end());
    std::set<std::string> undefined;
    for (const auto& [name, table] : root.predicates()) {
      if (!defined.count(name)) undefined.insert(name);
    }
    vars_ = unknown_atoms(root, undefined);
  }

  void run(Structure cur) {
    if (++nodes_ > options_.max_nodes) {
      throw ResourceLimitError("model search exceeds " + std::to_string(options_.max_nodes) + " nodes");
    }
    if (!propagate(cur)) return;
    auto next = std::find_if(vars_.begin(), vars_.end(),
                             [&](const GroundAtom& a) { return cur.value(a) == TruthValue::Unknown; });
    if (next == vars_.end()) {
      if (check_model(t_, cur, options_.check).status == ModelStatus::Model) models_.push_back(std::move(cur));
      return;
    }
    for (TruthValue v : {TruthValue::False, TruthValue::True}) {
      Structure branch = cur;
      branch.set_value(*next, v);
      run(std::move(branch));
    }
  }

  std::vector<Structure> take() { return std::move(models_); }

 private:
  bool propagate(Structure& cur) {
    std::vector<char> done(t_.definitions.size(), 0);
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& part : parts_) {
        if (eval_formula(part, cur) == TruthValue::False) return false;
      }
      for (std::size_t k = 0; k < t_.definitions.size(); ++k) {
        if (done[k] || !cur.is_total(opens_[k])) continue;
        done[k] = 1;
        const Definition& d = t_.definitions[k];
        Structure w = justified_extension(d, cur, options_.check.grounding);
        for (const auto& p : d.defined) {
          const auto& want = w.predicate(p).values;
          const auto& have = cur.predicate(p).values;
          for (std::size_t i = 0; i < want.size(); ++i) {
            if (want[i] == TruthValue::Unknown) return false;
            if (have[i] == want[i]) continue;
            if (have[i] != TruthValue::Unknown) return false;
            cur.set_value(p, cur.tuple_at(cur.predicate(p).arity, i), want[i]);
            changed = true;
          }
        }
      }
    }
    return true;
  }

  const Theory& t_;
  const SearchOptions& options_;
  std::vector<Formula> parts_;
  std::vector<std::set<std::string>> opens_;
  std::vector<GroundAtom> vars_;
  std::vector<Structure> models_;
  std::size_t nodes_ = 0;
};

std::vector<Structure> finish(std::vector<Structure> models, const SearchOptions& options) {
  std::sort(models.begin(), models.end(), canonical_less);
  if (options.limit && models.size() > options.limit) models.resize(options.limit);
  return models;
}

}  // namespace

std::vector<Structure> enumerate_models(const Theory& t, const Structure& templ, const SearchOptions& options) {
  Structure root = templ;
  root.conform_to(t.vocabulary);
  ModelSearch search(t, root, options);
  search.run(root);
  return finish(search.take(), options);
}

std::vector<Structure> enumerate_models_naive(const Theory& t, const Structure& templ, const SearchOptions& options) {
  Structure root = templ;
  root.conform_to(t.vocabulary);
  auto vars = unknown_atoms(root, {});
  if (vars.size() >= 63 || (std::size_t{1} << vars.size()) > options.max_nodes) {
    throw ResourceLimitError("generate-and-test over " + std::to_string(vars.size()) + " atoms exceeds the node cap");
  }
  std::vector<Structure> models;
  for (std::size_t mask = 0; mask < (std::size_t{1} << vars.size()); ++mask) {
    Structure s = root;
    for (std::size_t i = 0; i < vars.size(); ++i) s.set_value(vars[i], truth_of((mask >> i) & 1));
    if (check_model(t, s, options.check).status == ModelStatus::Model) models.push_back(std::move(s));
  }
  return finish(std::move(models), options);
}

}  // namespace idl
