#include "idl/random.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace idl {

namespace {

enum class Ctx { Pos, Neg, Both };

Ctx flip(Ctx c) {
  if (c == Ctx::Pos) return Ctx::Neg;
  if (c == Ctx::Neg) return Ctx::Pos;
  return Ctx::Both;
}

std::size_t power(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

class Gen {
 public:
  Gen(std::mt19937_64& rng, const RandomConfig& c) : rng_(rng), c_(c) {}

  bool coin(double p) { return std::bernoulli_distribution(p)(rng_); }
  std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
  std::size_t range(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, std::max(lo, hi))(rng_);
  }

  /// Vocabulary with p0.. (defined) and q0.. (open), c0 and possibly c1, f/1.
  void vocabulary(std::size_t defined_count) {
    domain_ = range(std::max<std::size_t>(1, c_.min_domain), std::max<std::size_t>(1, c_.max_domain));
    v_.add_constant("c0");
    if (coin(0.4)) v_.add_constant("c1");
    if (c_.functions && coin(0.35)) v_.add_function("f", 1);
    add_predicates("p", defined_count, c_.max_defined_atoms, defined_);
    add_predicates("q", range(c_.max_open > 0 ? 1 : 0, c_.max_open), c_.max_open_atoms, open_);
  }

  void add_predicates(const std::string& stem, std::size_t count, std::size_t budget, std::vector<std::string>& out) {
    for (std::size_t i = 0; i < count; ++i) {
      std::size_t arity = range(0, 2);
      while (arity > 0 && power(domain_, arity) > budget) --arity;
      if (power(domain_, arity) > budget) break;
      budget -= power(domain_, arity);
      std::string name = stem + std::to_string(i);
      v_.add_predicate(name, arity);
      out.push_back(name);
    }
  }

  Structure structure() {
    std::vector<std::string> dom;
    for (std::size_t i = 0; i < domain_; ++i) dom.push_back("d" + std::to_string(i));
    Structure s = Structure::for_vocabulary(v_, dom);
    for (const auto& c : v_.constants()) s.set_constant(c, pick(domain_));
    for (const auto& [f, n] : v_.functions()) {
      std::vector<Element> vals(power(domain_, n));
      for (auto& e : vals) e = pick(domain_);
      s.set_function(f, n, std::move(vals));
    }
    return s;
  }

  void fill_open(Structure& s, const std::set<std::string>& defined) {
    for (const auto& [q, n] : v_.predicates()) {
      if (defined.count(q)) continue;
      for (const auto& a : s.atoms_of(q)) {
        TruthValue val = coin(c_.unknown_open) ? TruthValue::Unknown : truth_of(coin(0.5));
        s.set_value(a, val);
      }
    }
  }

  Term term(const std::vector<std::string>& vars) {
    if (!vars.empty() && coin(0.65)) return Term::variable(vars[pick(vars.size())]);
    if (v_.has_function("f") && coin(0.25)) return Term::apply("f", {term(vars)});
    std::vector<std::string> cs(v_.constants().begin(), v_.constants().end());
    if (cs.empty()) return Term::variable(vars.empty() ? "X" : vars[pick(vars.size())]);
    return Term::constant(cs[pick(cs.size())]);
  }

  /// Whether predicate `p` may occur in context `ctx` of a rule for the
  /// defined predicate at position `head` of `group`.
  bool allowed(const std::string& p, Ctx ctx, std::size_t head, const std::vector<std::string>& group) const {
    auto it = std::find(group.begin(), group.end(), p);
    if (it == group.end()) return true;
    std::size_t j = static_cast<std::size_t>(it - group.begin());
    switch (c_.shape) {
      case RuleShape::Any:
        return true;
      case RuleShape::Positive:
        return ctx == Ctx::Pos;
      case RuleShape::Stratified:
        return ctx == Ctx::Pos ? j <= head : j < head;
    }
    return true;
  }

  Formula atom(const std::vector<std::string>& vars, Ctx ctx, std::size_t head, const std::vector<std::string>& group) {
    std::vector<std::string> candidates;
    for (const auto& [p, n] : v_.predicates()) {
      if (allowed(p, ctx, head, group)) candidates.push_back(p);
    }
    if (candidates.empty() || coin(0.1)) {
      if (coin(0.5)) return Formula::equal(term(vars), term(vars));
      return Formula::truth(coin(0.5));
    }
    // Bias towards the group so recursion is common.
    std::string p = candidates[pick(candidates.size())];
    if (!group.empty() && coin(0.4)) {
      const std::string& g = group[pick(group.size())];
      if (allowed(g, ctx, head, group)) p = g;
    }
    std::vector<Term> args;
    for (std::size_t i = 0; i < v_.predicate_arity(p); ++i) args.push_back(term(vars));
    return Formula::atom(p, std::move(args));
  }

  Formula body(std::size_t depth, std::vector<std::string> vars, Ctx ctx, std::size_t head,
               const std::vector<std::string>& group) {
    if (depth == 0 || coin(0.3)) return atom(vars, ctx, head, group);
    std::size_t op = pick(c_.quantifiers ? 7 : 5);
    auto sub = [&](Ctx c) { return body(depth - 1, vars, c, head, group); };
    switch (op) {
      case 0:
        return Formula::negate(sub(flip(ctx)));
      case 1:
        return Formula::conjunction({sub(ctx), sub(ctx)});
      case 2:
        return Formula::disjunction({sub(ctx), sub(ctx)});
      case 3: {
        Formula lhs = sub(flip(ctx));
        return Formula::implies(std::move(lhs), sub(ctx));
      }
      case 4: {
        Formula lhs = sub(Ctx::Both);
        return Formula::iff(std::move(lhs), sub(Ctx::Both));
      }
      default: {
        std::string z = vars.size() < 3 ? "Z" : "W";
        if (std::find(vars.begin(), vars.end(), z) == vars.end()) vars.push_back(z);
        Formula b = body(depth - 1, vars, ctx, head, group);
        return op == 5 ? Formula::exists(z, std::move(b)) : Formula::forall(z, std::move(b));
      }
    }
  }

  Definition definition(const std::vector<std::string>& group) {
    Definition d;
    d.defined.insert(group.begin(), group.end());
    if (group.empty()) return d;
    std::size_t rules = range(1, c_.max_rules);
    for (std::size_t r = 0; r < rules; ++r) {
      std::size_t h = pick(group.size());
      const std::string& p = group[h];
      std::vector<Term> head;
      std::vector<std::string> vars;
      for (std::size_t i = 0; i < v_.predicate_arity(p); ++i) {
        std::string x = i == 0 ? "X" : "Y";
        if (coin(0.75)) {
          if (i > 0 && coin(0.25)) x = "X";
          head.push_back(Term::variable(x));
          if (std::find(vars.begin(), vars.end(), x) == vars.end()) vars.push_back(x);
        } else {
          head.push_back(term({}));
        }
      }
      // Body may also use a second free variable absent from the head.
      std::vector<std::string> body_vars = vars;
      if (body_vars.size() < 2 && coin(0.3)) {
        body_vars.push_back(std::find(vars.begin(), vars.end(), "X") == vars.end() ? "X" : "Y");
      }
      Formula b = body(c_.max_body_depth, body_vars, Ctx::Pos, h, group);
      d.rules.push_back(Rule::make(p, std::move(head), std::move(b)));
    }
    return d;
  }

  Formula sentence() {
    std::vector<std::string> vars;
    bool quantify = v_.constants().empty() || coin(0.6);
    if (quantify) vars.push_back("X");
    Formula b = body(2, vars, Ctx::Pos, 0, {});
    if (!quantify) return b;
    return coin(0.5) ? Formula::forall("X", std::move(b)) : Formula::exists("X", std::move(b));
  }

  Vocabulary& vocab() { return v_; }
  const std::vector<std::string>& defined() const { return defined_; }

 private:
  std::mt19937_64& rng_;
  const RandomConfig& c_;
  Vocabulary v_;
  std::size_t domain_ = 1;
  std::vector<std::string> defined_;
  std::vector<std::string> open_;
};

}  // namespace

RandomInstance random_definition(std::mt19937_64& rng, const RandomConfig& config) {
  Gen g(rng, config);
  g.vocabulary(g.range(1, std::max<std::size_t>(1, config.max_defined)));
  Definition d = g.definition(g.defined());
  RandomInstance out{{g.vocab(), {}, {d}}, g.structure()};
  g.fill_open(out.structure, d.defined);
  return out;
}

RandomInstance random_theory(std::mt19937_64& rng, std::size_t definitions, std::size_t sentences,
                             const RandomConfig& config) {
  Gen g(rng, config);
  g.vocabulary(std::max<std::size_t>(definitions, g.range(1, std::max<std::size_t>(1, config.max_defined))));
  RandomInstance out{{g.vocab(), {}, {}}, g.structure()};
  std::vector<std::vector<std::string>> groups(definitions);
  const auto& defined = g.defined();
  for (std::size_t i = 0; i < defined.size() && definitions > 0; ++i) {
    groups[i < definitions ? i : g.pick(definitions)].push_back(defined[i]);
  }
  for (const auto& grp : groups) {
    if (!grp.empty()) out.theory.definitions.push_back(g.definition(grp));
  }
  for (std::size_t i = 0; i < sentences; ++i) out.theory.sentences.push_back(g.sentence());
  return out;
}

Theory random_extension(std::mt19937_64& rng, const Theory& base, std::size_t definitions, std::size_t sentences,
                        const RandomConfig& config) {
  Gen g(rng, config);
  g.vocab() = base.vocabulary;
  std::vector<std::string> free;
  for (const auto& [p, n] : base.vocabulary.predicates()) {
    bool taken = std::any_of(base.definitions.begin(), base.definitions.end(),
                             [&](const Definition& d) { return d.defines(p); });
    if (!taken) free.push_back(p);
  }
  std::shuffle(free.begin(), free.end(), rng);
  Theory out{base.vocabulary, {}, {}};
  for (std::size_t i = 0; i < definitions && !free.empty(); ++i) {
    std::vector<std::string> grp{free.back()};
    free.pop_back();
    out.definitions.push_back(g.definition(grp));
  }
  for (std::size_t i = 0; i < sentences; ++i) out.sentences.push_back(g.sentence());
  return out;
}

}  // namespace idl
