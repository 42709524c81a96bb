#include "idl/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "idl/analysis.hpp"
#include "idl/embeddings.hpp"
#include "idl/engine.hpp"
#include "idl/error.hpp"
#include "idl/formats.hpp"
#include "idl/grounder.hpp"
#include "idl/random.hpp"
#include "idl/structure_text.hpp"
#include "idl/text.hpp"
#include "idl/transforms.hpp"

#ifndef IDL_CORPUS_DIR
#define IDL_CORPUS_DIR "corpus"
#endif

namespace idl {

namespace {

using Json = nlohmann::ordered_json;
namespace fs = std::filesystem;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

/// Atom strings of `s` with value `v`, restricted to `only` when given.
std::vector<std::string> atoms_with(const Structure& s, TruthValue v, const std::set<std::string>* only = nullptr) {
  std::vector<std::string> out;
  for (const auto& [p, table] : s.predicates()) {
    if (only && !only->count(p)) continue;
    for (const auto& a : s.atoms_of(p)) {
      if (s.value(a) == v) out.push_back(s.atom_string(a));
    }
  }
  return out;
}

std::string braces(const std::vector<std::string>& items) {
  std::string out = "{";
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? ", " : "") + items[i];
  return out + "}";
}

std::set<std::string> defined_predicates(const Theory& t) {
  std::set<std::string> out;
  for (const auto& d : t.definitions) out.insert(d.defined.begin(), d.defined.end());
  return out;
}

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int main(const std::vector<std::string>& args);

 private:
  bool json() const { return config_.format == OutputFormat::JsonLines; }
  void emit(const Json& j) { out_ << j.dump() << '\n'; }

  GroundingOptions grounding() const { return {config_.max_ground_rules}; }
  ModelCheckOptions checking() const { return {config_.lenient_sentences, grounding()}; }

  Theory load_theory(const std::string& path) { return parse_theory(read_file(path)); }
  Structure load_structure(const std::string& path, const Vocabulary& v) {
    return parse_structure(read_file(path), v);
  }

  int parse_cmd();
  int ground_cmd();
  int wfm_cmd();
  int check_cmd();
  int models_cmd();
  int classify_cmd();
  int complete_cmd();
  int compose_cmd();
  int equiv_cmd();
  int import_cmd();
  int sitcalc_cmd();
  int selftest_cmd();

  int print_theory(const char* command, const Theory& t) {
    if (json()) {
      emit({{"command", command}, {"theory", render_theory(t)}});
    } else {
      out_ << render_theory(t);
    }
    return kExitOk;
  }

  std::ostream& out_;
  std::ostream& err_;
  RunConfig config_;
  std::string format_ = "text";

  std::string theory_path_;
  std::string structure_path_;
  bool literal_oracle_ = false;
  std::size_t limit_ = 0;
  std::string order_;
  std::string defs_;
  std::string lhs_, rhs_;
  std::string import_kind_;
  bool evaluate_ = false;
  std::size_t una_depth_ = 1;
  std::size_t depth_ = 1;
  std::string objects_;
  std::string initially_;
  bool print_frame_ = false;
  std::string corpus_ = IDL_CORPUS_DIR;
  std::size_t count_ = 200;
};

int Runner::main(const std::vector<std::string>& args) {
  CLI::App app{"Inductive definitions under the well-founded semantics", "idl"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", format_, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", config_.seed, "Seed for randomized suites");
  app.add_option("--max-rules", config_.max_ground_rules, "Cap on ground rules per definition")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-nodes", config_.max_search_nodes, "Cap on search nodes")->check(CLI::PositiveNumber);
  app.add_flag("--lenient-sentences", config_.lenient_sentences,
               "Accept sentences that are unknown rather than true");

  auto* parse = app.add_subcommand("parse", "Parse a theory and print it back");
  parse->add_option("theory", theory_path_)->required();

  auto* ground = app.add_subcommand("ground", "Print the grounding of each definition");
  ground->add_option("theory", theory_path_)->required();
  ground->add_option("structure", structure_path_)->required();
  ground->add_flag("--literal-oracle", literal_oracle_, "Literal rules from truth-table enumeration");

  auto* wfm = app.add_subcommand("wfm", "Well-founded model of the definitions, in order");
  wfm->add_option("theory", theory_path_)->required();
  wfm->add_option("structure", structure_path_)->required();

  auto* check = app.add_subcommand("check", "Decide whether a structure is a model");
  check->add_option("theory", theory_path_)->required();
  check->add_option("structure", structure_path_)->required();

  auto* models = app.add_subcommand("models", "Enumerate the models completing a structure");
  models->add_option("theory", theory_path_)->required();
  models->add_option("structure", structure_path_)->required();
  models->add_option("--limit", limit_, "Stop after this many models");

  auto* classify = app.add_subcommand("classify", "Classify each definition");
  classify->add_option("theory", theory_path_)->required();
  classify->add_option("--structure", structure_path_, "Also test well-foundedness in this structure");
  classify->add_option("--order", order_, "Order predicate for the relativized test");

  auto* complete = app.add_subcommand("complete", "Replace definitions by their completions");
  complete->add_option("theory", theory_path_)->required();

  auto* compose = app.add_subcommand("compose", "Merge definitions into one");
  compose->add_option("theory", theory_path_)->required();
  compose->add_option("--defs", defs_, "Definitions by 1-based index or defined predicate")->required();

  auto* equiv = app.add_subcommand("equiv", "Three-valued equivalence of two formulas");
  equiv->add_option("lhs", lhs_)->required();
  equiv->add_option("rhs", rhs_)->required();

  auto* import = app.add_subcommand("import", "Translate a program, framework or database");
  import->add_option("kind", import_kind_)->required()->check(CLI::IsMember({"lp", "abd", "ddb"}));
  import->add_option("file", theory_path_)->required();
  import->add_option("--una-depth", una_depth_, "Term depth for the unique names axioms");
  import->add_flag("--evaluate", evaluate_, "Database only: compute the Herbrand model");

  auto* sitcalc = app.add_subcommand("sitcalc", "Frame definition of a situation calculus domain");
  sitcalc->add_option("file", theory_path_)->required();
  sitcalc->add_option("--depth", depth_, "Situations reachable in at most this many actions");
  sitcalc->add_option("--objects", objects_, "Comma-separated object constants");
  sitcalc->add_option("--initially", initially_, "Comma-separated fluent atoms true in s0");
  sitcalc->add_flag("--theory", print_frame_, "Print the frame theory instead of evaluating it");

  auto* selftest = app.add_subcommand("selftest", "Run the corpus and the oracle suite");
  selftest->add_option("--corpus", corpus_, "Corpus directory");
  selftest->add_option("--count", count_, "Random definitions for the oracle suite");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out_, err_);
    return code == 0 ? kExitOk : kExitError;
  }
  config_.format = format_ == "json" ? OutputFormat::JsonLines : OutputFormat::Text;

  try {
    if (*parse) return parse_cmd();
    if (*ground) return ground_cmd();
    if (*wfm) return wfm_cmd();
    if (*check) return check_cmd();
    if (*models) return models_cmd();
    if (*classify) return classify_cmd();
    if (*complete) return complete_cmd();
    if (*compose) return compose_cmd();
    if (*equiv) return equiv_cmd();
    if (*import) return import_cmd();
    if (*sitcalc) return sitcalc_cmd();
    if (*selftest) return selftest_cmd();
  } catch (const std::exception& e) {
    err_ << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

int Runner::parse_cmd() {
  Theory t = load_theory(theory_path_);
  if (!json()) {
    out_ << render_theory(t);
    return kExitOk;
  }
  Json defs = Json::array();
  for (const auto& d : t.definitions) {
    Json rules = Json::array();
    for (const auto& r : d.rules) rules.push_back(render_rule(r));
    defs.push_back({{"defined", d.defined}, {"rules", rules}});
  }
  Json sentences = Json::array();
  for (const auto& f : t.sentences) sentences.push_back(render_formula(f));
  emit({{"command", "parse"},
        {"vocabulary",
         {{"constants", t.vocabulary.constants()},
          {"functions", t.vocabulary.functions()},
          {"predicates", t.vocabulary.predicates()}}},
        {"definitions", defs},
        {"sentences", sentences}});
  return kExitOk;
}

int Runner::ground_cmd() {
  Theory t = load_theory(theory_path_);
  Structure s = load_structure(structure_path_, t.vocabulary);
  RenderOptions bare{true};
  for (std::size_t k = 0; k < t.definitions.size(); ++k) {
    if (!json() && t.definitions.size() > 1) out_ << "// definition " << k + 1 << '\n';
    if (literal_oracle_) {
      LiteralGroundDefinition g = ground_literal_oracle(t.definitions[k], s);
      for (const auto& r : g.rules) {
        if (json()) {
          Json body = Json::array();
          for (auto lit : r.body) {
            std::string a = s.atom_string(g.atoms[static_cast<std::size_t>(std::abs(lit)) - 1]);
            body.push_back(lit < 0 ? "~" + a : a);
          }
          emit({{"command", "ground"}, {"definition", k + 1}, {"head", s.atom_string(g.atoms[r.head])}, {"body", body}});
        } else {
          out_ << g.rule_string(r) << '\n';
        }
      }
    } else {
      GroundDefinition g = ground_definition(t.definitions[k], s, grounding());
      for (const auto& r : g.rules) {
        std::string head = s.atom_string(r.head);
        std::string body = render_formula(r.body, bare);
        if (json()) {
          emit({{"command", "ground"}, {"definition", k + 1}, {"head", head}, {"body", body}});
        } else {
          out_ << head << " <- " << body << ".\n";
        }
      }
    }
  }
  return kExitOk;
}

int Runner::wfm_cmd() {
  Theory t = load_theory(theory_path_);
  Structure s = load_structure(structure_path_, t.vocabulary);
  for (const auto& d : t.definitions) s = justified_extension(d, s, grounding());
  std::set<std::string> defined = defined_predicates(t);
  auto t_atoms = atoms_with(s, TruthValue::True, &defined);
  auto f_atoms = atoms_with(s, TruthValue::False, &defined);
  auto u_atoms = atoms_with(s, TruthValue::Unknown, &defined);
  if (json()) {
    emit({{"command", "wfm"}, {"true", t_atoms}, {"false", f_atoms}, {"unknown", u_atoms}});
  } else {
    out_ << "true: " << braces(t_atoms) << "\nfalse: " << braces(f_atoms) << "\nunknown: " << braces(u_atoms)
         << '\n';
  }
  return kExitOk;
}

int Runner::check_cmd() {
  Theory t = load_theory(theory_path_);
  Structure s = load_structure(structure_path_, t.vocabulary);
  ModelVerdict v = check_model(t, s, checking());
  if (json()) {
    emit({{"command", "check"}, {"verdict", to_string(v.status)}, {"reason", v.reason}});
  } else {
    out_ << to_string(v.status);
    if (!v.reason.empty()) out_ << ": " << v.reason;
    out_ << '\n';
  }
  return v.status == ModelStatus::Model ? kExitOk : kExitNegative;
}

int Runner::models_cmd() {
  Theory t = load_theory(theory_path_);
  Structure s = load_structure(structure_path_, t.vocabulary);
  SearchOptions opts;
  opts.max_nodes = config_.max_search_nodes;
  opts.limit = limit_;
  opts.check = checking();
  std::vector<Structure> found = enumerate_models(t, s, opts);
  for (std::size_t i = 0; i < found.size(); ++i) {
    auto atoms = atoms_with(found[i], TruthValue::True);
    if (json()) {
      emit({{"command", "models"}, {"index", i + 1}, {"true", atoms}});
    } else {
      out_ << "model " << i + 1 << ": " << braces(atoms) << '\n';
    }
  }
  if (json()) {
    emit({{"command", "models"}, {"count", found.size()}});
  } else {
    out_ << "models: " << found.size() << '\n';
  }
  return found.empty() ? kExitNegative : kExitOk;
}

int Runner::classify_cmd() {
  Theory t = load_theory(theory_path_);
  std::optional<Structure> s;
  if (!structure_path_.empty()) s = load_structure(structure_path_, t.vocabulary);
  std::optional<std::string> order;
  if (!order_.empty()) order = order_;
  for (std::size_t k = 0; k < t.definitions.size(); ++k) {
    const Definition& d = t.definitions[k];
    DefinitionClass c = classify(d, order);
    Json rec{{"command", "classify"}, {"definition", k + 1}, {"defined", d.defined}, {"class", describe(c)}};
    std::vector<std::string> strata;
    for (const auto& st : c.strata) strata.push_back(braces({st.begin(), st.end()}));
    if (c.stratified) rec["strata"] = strata;
    if (c.relativized) rec["relativized"] = *c.relativized;
    std::optional<WellFoundedness> wf;
    std::optional<WellDefining> wd;
    std::vector<std::string> residue;
    if (s) {
      WellFoundedOptions opts;
      opts.grounding = grounding();
      wf = check_well_founded(d, *s, opts);
      wd = check_well_defining(d, {*s}, grounding());
      rec["well_founded"] = wf->well_founded;
      rec["layers"] = wf->layers.size();
      for (const auto& a : wf->residue) residue.push_back(s->atom_string(a));
      rec["residue"] = residue;
      rec["well_defining"] = wd->well_defining;
    }
    if (json()) {
      emit(rec);
      continue;
    }
    std::vector<std::string> defined(d.defined.begin(), d.defined.end());
    out_ << "definition " << k + 1 << " " << braces(defined) << ": " << describe(c) << '\n';
    if (c.stratified && c.strata.size() > 1) {
      out_ << "  strata:";
      for (const auto& st : strata) out_ << ' ' << st;
      out_ << '\n';
    }
    if (c.relativized) out_ << "  relativized to " << *c.relativized << '\n';
    if (wf) {
      if (wf->well_founded) {
        out_ << "  well-founded in the structure (" << wf->layers.size() << " layers)\n";
      } else {
        out_ << "  not well-founded in the structure; undetermined: " << braces(residue) << '\n';
      }
      out_ << "  " << (wd->well_defining ? "total" : "partial") << " justified extension\n";
    }
  }
  return kExitOk;
}

int Runner::complete_cmd() {
  return print_theory("complete", completion_theory(load_theory(theory_path_)));
}

int Runner::compose_cmd() {
  Theory t = load_theory(theory_path_);
  std::set<std::size_t> chosen;
  for (const auto& item : split_list(defs_)) {
    if (std::all_of(item.begin(), item.end(), [](unsigned char c) { return std::isdigit(c); })) {
      std::size_t k = std::stoul(item);
      if (k == 0 || k > t.definitions.size()) throw Error("no definition " + item);
      chosen.insert(k - 1);
      continue;
    }
    bool found = false;
    for (std::size_t k = 0; k < t.definitions.size() && !found; ++k) {
      if (t.definitions[k].defines(item)) {
        chosen.insert(k);
        found = true;
      }
    }
    if (!found) throw Error("no definition defines '" + item + "'");
  }
  if (chosen.empty()) throw Error("--defs selects no definition");
  std::vector<Definition> parts;
  for (auto k : chosen) parts.push_back(t.definitions[k]);
  Theory out{t.vocabulary, t.sentences, {}};
  for (std::size_t k = 0; k < t.definitions.size(); ++k) {
    if (k == *chosen.begin()) {
      out.definitions.push_back(compose(parts));
    } else if (!chosen.count(k)) {
      out.definitions.push_back(t.definitions[k]);
    }
  }
  return print_theory("compose", out);
}

int Runner::equiv_cmd() {
  Vocabulary v;
  Formula f = parse_formula(lhs_, v, true);
  Formula g = parse_formula(rhs_, v, true);
  Equivalence e = three_valued_equivalent(f, g);
  if (json()) {
    Json cm = Json::object();
    for (const auto& [sym, val] : e.countermodel) cm[sym] = to_string(val);
    Json rec{{"command", "equiv"}, {"equivalent", e.equivalent}};
    if (!e.equivalent) {
      rec["countermodel"] = cm;
      rec["left"] = to_string(e.left);
      rec["right"] = to_string(e.right);
    }
    emit(rec);
  } else if (e.equivalent) {
    out_ << "EQUIVALENT\n";
  } else {
    out_ << "NOT EQUIVALENT:";
    for (std::size_t i = 0; i < e.countermodel.size(); ++i) {
      out_ << (i ? ", " : " ") << e.countermodel[i].first << " = " << to_string(e.countermodel[i].second);
    }
    out_ << " gives " << to_string(e.left) << " vs " << to_string(e.right) << '\n';
  }
  return e.equivalent ? kExitOk : kExitNegative;
}

int Runner::import_cmd() {
  std::string text = read_file(theory_path_);
  if (import_kind_ == "lp") {
    LogicProgram lp = parse_logic_program(text);
    return print_theory("import", import_logic_program(lp.rules, lp.vocabulary));
  }
  if (import_kind_ == "abd") return print_theory("import", import_abductive(parse_abductive(text)));

  DeductiveDatabase db = parse_deductive_db(text);
  UnaOptions una;
  una.depth = una_depth_;
  Theory t = import_deductive_db(db, una);
  if (!evaluate_) return print_theory("import", t);

  // The Herbrand structure over the constants; with DCA and UNA it is the
  // only model up to isomorphism.
  if (!db.vocabulary.functions().empty()) throw Error("--evaluate needs a database without function symbols");
  std::vector<std::string> names(db.vocabulary.constants().begin(), db.vocabulary.constants().end());
  if (names.empty()) throw Error("--evaluate needs at least one constant");
  Structure s = Structure::for_vocabulary(t.vocabulary, names);
  for (const auto& c : names) s.set_constant(c, s.element(c));
  for (const auto& d : t.definitions) s = justified_extension(d, s, grounding());
  ModelVerdict v = check_model(t, s, checking());
  std::set<std::string> idb;
  for (const auto& r : db.idb) idb.insert(r.head);
  auto atoms = atoms_with(s, TruthValue::True, &idb);
  if (json()) {
    emit({{"command", "import"}, {"true", atoms}, {"verdict", to_string(v.status)}, {"reason", v.reason}});
  } else {
    out_ << "true: " << braces(atoms) << '\n' << to_string(v.status);
    if (!v.reason.empty()) out_ << ": " << v.reason;
    out_ << '\n';
  }
  return v.status == ModelStatus::Model ? kExitOk : kExitNegative;
}

int Runner::sitcalc_cmd() {
  SitcalcSpec spec = parse_sitcalc(read_file(theory_path_));
  Theory t = build_frame_theory(spec);
  if (print_frame_) return print_theory("sitcalc", t);

  std::vector<std::string> objects = split_list(objects_);
  std::vector<std::string> actions;
  for (const auto& c : spec.vocabulary.constants()) {
    if (std::find(objects.begin(), objects.end(), c) == objects.end()) actions.push_back(c);
  }
  Structure s = situation_structure(t.vocabulary, actions, objects, depth_);
  const Definition& frame = t.definitions.front();
  for (const auto& [p, n] : t.vocabulary.predicates()) {
    if (!frame.defines(p) && p != "action" && p != "situation") s.fill_predicate(p, TruthValue::False);
  }
  for (const auto& item : split_list(initially_)) {
    // `f` or `f(o1 o2)`: arguments separated by spaces inside the parentheses.
    std::string name = item.substr(0, item.find('('));
    std::vector<Element> args;
    if (auto open = item.find('('); open != std::string::npos) {
      std::istringstream in(item.substr(open + 1, item.rfind(')') - open - 1));
      std::string arg;
      while (in >> arg) args.push_back(s.element(arg));
    }
    std::string pred = "initially_" + name;
    if (!t.vocabulary.has_predicate(pred)) throw Error("unknown fluent '" + name + "'");
    if (t.vocabulary.predicate_arity(pred) != args.size()) throw Error("wrong number of objects for '" + name + "'");
    s.set_value(pred, args, TruthValue::True);
  }
  s = justified_extension(frame, s, grounding());
  std::set<std::string> fluents;
  for (const auto& f : spec.fluents) fluents.insert(f.name);
  ModelVerdict v = check_model(t, s, checking());
  // Atoms about the junk situation beyond the depth bound are not reported.
  Structure shown = s;
  const Element junk = s.element("z");
  for (const auto& p : fluents) {
    for (const auto& a : s.atoms_of(p)) {
      if (a.args.back() == junk) shown.set_value(a, TruthValue::False);
    }
  }
  auto atoms = atoms_with(shown, TruthValue::True, &fluents);
  auto unknown = atoms_with(shown, TruthValue::Unknown, &fluents);
  if (json()) {
    emit({{"command", "sitcalc"}, {"true", atoms}, {"unknown", unknown}, {"verdict", to_string(v.status)}});
  } else {
    out_ << "true: " << braces(atoms) << '\n';
    if (!unknown.empty()) out_ << "unknown: " << braces(unknown) << '\n';
    out_ << to_string(v.status);
    if (!v.reason.empty()) out_ << ": " << v.reason;
    out_ << '\n';
  }
  return v.status == ModelStatus::Model ? kExitOk : kExitNegative;
}

int Runner::selftest_cmd() {
  int failures = 0;
  auto report = [&](const std::string& name, bool ok, const std::string& detail) {
    if (!ok) ++failures;
    if (json()) {
      Json rec{{"command", "selftest"}, {"case", name}, {"ok", ok}};
      if (!ok) rec["detail"] = detail;
      emit(rec);
    } else {
      out_ << (ok ? "ok   " : "FAIL ") << name;
      if (!ok) out_ << ": " << detail;
      out_ << '\n';
    }
  };

  fs::path dir(corpus_);
  Json manifest = Json::parse(read_file((dir / "manifest.json").string()));
  std::set<std::string> used;
  for (const auto& c : manifest.at("cases")) {
    std::vector<std::string> args;
    for (const auto& a : c.at("args")) {
      std::string arg = a.get<std::string>();
      if (arg.rfind("-", 0) != 0 && fs::is_regular_file(dir / arg)) {
        used.insert(arg);
        arg = (dir / arg).string();
      }
      args.push_back(arg);
    }
    std::ostringstream out, err;
    int code = run(args, out, err);
    std::string expected = c.at("output").get<std::string>();
    int expected_code = c.at("exit").get<int>();
    bool ok = code == expected_code && out.str() == expected;
    std::string detail = "exit " + std::to_string(code) + ", output:\n" + out.str() + err.str();
    report(c.at("name").get<std::string>(), ok, detail);
  }
  for (const auto& entry : fs::directory_iterator(dir)) {
    std::string name = entry.path().filename().string();
    if (name != "manifest.json" && !used.count(name)) report("corpus file " + name, false, "not exercised");
  }

  std::mt19937_64 rng(config_.seed);
  std::size_t agree = 0;
  std::string first_mismatch;
  for (std::size_t i = 0; i < count_; ++i) {
    RandomConfig rc;
    rc.shape = static_cast<RuleShape>(i % 3);
    rc.unknown_open = i % 4 == 3 ? 0.3 : 0.0;
    RandomInstance inst = random_definition(rng, rc);
    const Definition& d = inst.theory.definitions.front();
    Structure engine = justified_extension(d, inst.structure, grounding());
    Structure oracle = literal_well_founded_model(ground_literal_oracle(d, inst.structure));
    if (engine == oracle) {
      ++agree;
    } else if (first_mismatch.empty()) {
      first_mismatch = "\n" + render_theory(inst.theory) + render_structure(inst.structure);
    }
  }
  report("oracle equivalence (" + std::to_string(agree) + "/" + std::to_string(count_) + ")", agree == count_,
         first_mismatch);
  return failures == 0 ? kExitOk : kExitNegative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  return Runner(out, err).main(args);
}

}  // namespace idl
