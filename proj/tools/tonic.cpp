// tonic: batch front end.
// Exit codes: 0 established, 1 refuted/rejected, 2 unknown within bounds,
// 3 input error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "tonic/checker.hpp"
#include "tonic/completion.hpp"
#include "tonic/error.hpp"
#include "tonic/extension.hpp"
#include "tonic/harness.hpp"
#include "tonic/parser.hpp"
#include "tonic/saturation.hpp"
#include "tonic/semantics.hpp"

using namespace tonic;

namespace {

enum Status { kEstablished = 0, kRefuted = 1, kUnknown = 2, kInputError = 3 };

struct InputFailure {
  std::string message;
};

struct Options {
  std::string calculus = "base";
  std::string universe = "apps:1";
  std::optional<std::size_t> max_depth;
  std::size_t max_base = 3;
  int max_order = 2;
  std::size_t max_cells = 1'000'000;
  bool require_wc = false;
  bool require_poset = false;
  std::uint64_t seed = 1;
  std::optional<std::size_t> cases;
  std::string format = "text";
  std::size_t goal = 0;
  bool serial = false;
  std::string output;
  std::vector<std::string> inputs;
};

// Text output: commentary on '#' lines so that stdout stays loadable; the
// machine format is key=value lines followed by the raw dump.
class Out {
 public:
  explicit Out(const Options& o) : machine_(o.format == "machine") {}
  void kv(const std::string& k, const std::string& v) {
    if (machine_) std::cout << k << "=" << v << "\n";
    else std::cout << "# " << k << ": " << v << "\n";
  }
  void note(const std::string& s) {
    if (machine_) std::cout << "note=" << s << "\n";
    else std::cout << "# " << s << "\n";
  }
  void dump(const std::string& label, const std::string& body) {
    if (machine_) std::cout << "--- " << label << "\n";
    std::cout << body;
    if (!body.empty() && body.back() != '\n') std::cout << "\n";
  }
  bool machine() const { return machine_; }

 private:
  bool machine_;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputFailure{"cannot read " + path};
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_output(const Options& o, const std::string& body) {
  if (o.output.empty()) return;
  std::ofstream out(o.output, std::ios::binary);
  if (!out) throw InputFailure{"cannot write " + o.output};
  out << body;
}

template <class T>
T require(Parsed<T> r, const std::string& file) {
  if (!r.ok()) {
    std::string msg;
    for (const auto& d : r.diagnostics) msg += format_diagnostic(d, file) + "\n";
    if (!msg.empty()) msg.pop_back();
    throw InputFailure{msg};
  }
  return std::move(*r.value);
}

SourceProblem load_problem(const std::string& path) { return require(parse_problem(read_file(path), path), path); }

const Assertion& goal_of(const SourceProblem& p, const Options& o) {
  if (p.goals.empty()) throw InputFailure{p.file + ": no goal"};
  if (o.goal >= p.goals.size()) {
    throw InputFailure{p.file + ": goal index " + std::to_string(o.goal) + " out of range"};
  }
  return p.goals[o.goal];
}

UniversePolicy universe_of(const Options& o) {
  UniversePolicy u = UniversePolicy::parse(o.universe);
  if (o.max_depth) u.max_depth = o.max_depth;
  return u;
}

EnumOptions enum_options(const Options& o) {
  EnumOptions e;
  e.bounds.max_base = o.max_base;
  e.bounds.max_order = o.max_order;
  e.bounds.max_cells = o.max_cells;
  e.require_wc = o.require_wc;
  e.require_poset = o.require_poset;
  return e;
}

Exec exec_of(const Options& o) { return o.serial ? Exec::Serial : Exec::Parallel; }

void echo_search_bounds(Out& out, const Options& o, const CalculusConfig& calc) {
  const SearchBudget b;
  const UniversePolicy u = universe_of(o);
  out.kv("calculus", calc.to_string());
  out.kv("universe", u.to_string());
  out.kv("max-depth", u.max_depth ? std::to_string(*u.max_depth) : "none");
  out.kv("budget", "universe<=" + std::to_string(b.max_universe) + " rounds<=" + std::to_string(b.max_rounds));
}

void echo_model_bounds(Out& out, const Options& o) {
  out.kv("max-base", std::to_string(o.max_base));
  out.kv("max-order", std::to_string(o.max_order));
  out.kv("max-cells", std::to_string(o.max_cells));
  out.kv("require-wc", o.require_wc ? "yes" : "no");
  out.kv("require-poset", o.require_poset ? "yes" : "no");
}

// ---------------------------------------------------------------- commands

int cmd_prove(const Options& o) {
  Out out(o);
  const SourceProblem p = load_problem(o.inputs.at(0));
  const CalculusConfig calc = CalculusConfig::parse(o.calculus);
  const Assertion& goal = goal_of(p, o);
  echo_search_bounds(out, o, calc);
  out.kv("goal", render(goal));
  const ProveResult r = prove(p.theory, goal, calc, universe_of(o), {}, exec_of(o));
  out.kv("universe-size", std::to_string(r.universe_size));
  out.kv("rounds", std::to_string(r.rounds));
  if (!r.proof) {
    out.kv("status", "not derivable within universe/budget");
    out.kv("complete", r.complete ? "yes" : "no");
    return kUnknown;
  }
  out.kv("status", "proved");
  out.kv("nodes", std::to_string(r.proof->node_count()));
  out.kv("inferences", std::to_string(r.proof->inference_count()));
  const std::string text = render(*r.proof) + "\n";
  write_output(o, text);
  out.dump("proof", text);
  return kEstablished;
}

int cmd_check(const Options& o) {
  Out out(o);
  if (o.inputs.size() < 2) throw InputFailure{"check needs a problem file and a proof file"};
  const SourceProblem p = load_problem(o.inputs[0]);
  const CalculusConfig calc = CalculusConfig::parse(o.calculus);
  // leaves are left to the checker, which names the offending node
  const ProofTree t = require(parse_proof(read_file(o.inputs[1]), p.theory, {false}), o.inputs[1]);
  out.kv("calculus", calc.to_string());
  const Verdict v = p.goals.empty() ? check_proof(t, p.theory, calc) : check_proof_of(t, p.theory, calc, goal_of(p, o));
  if (!v.accepted) {
    out.kv("status", "rejected");
    out.kv("path", v.path);
    out.kv("reason", v.reason);
    return kRefuted;
  }
  out.kv("status", "accepted");
  out.kv("conclusion", render(*v.conclusion));
  out.kv("nodes", std::to_string(t.node_count()));
  return kEstablished;
}

int cmd_countermodel(const Options& o) {
  Out out(o);
  const SourceProblem p = load_problem(o.inputs.at(0));
  const Assertion& goal = goal_of(p, o);
  echo_model_bounds(out, o);
  out.kv("goal", render(goal));
  const CountermodelResult r = find_countermodel(p.theory, goal, enum_options(o), exec_of(o));
  out.kv("base-assignments", std::to_string(r.stats.base_assignments));
  out.kv("skipped", std::to_string(r.stats.skipped));
  for (const auto& n : r.stats.notices) out.note(n);
  if (!r.model) {
    out.kv("status", r.exhausted ? "no countermodel within bounds (exhaustive)"
                                 : "no countermodel found (search not exhaustive)");
    return kUnknown;
  }
  const std::string text = dump_model(*r.model, p.theory.sig);
  // reload the dump and verify it independently of the search
  const Model back = require(load_model(text, p.theory.sig, o.max_cells), "<dump>");
  const bool ok = is_model(back, p.theory) && !satisfies(back, goal);
  out.kv("status", "countermodel found");
  out.kv("reverified", ok ? "yes" : "NO");
  bool wc = true;
  for (const auto& [_, b] : back.structure->bases()) wc = wc && is_weakly_complete(b);
  out.kv("weakly-complete", wc ? "yes" : "no");
  write_output(o, text);
  out.dump("model", text);
  return ok ? kEstablished : kRefuted;
}

int cmd_complete(const Options& o) {
  Out out(o);
  const NamedPreorder np = require(parse_preorder(read_file(o.inputs.at(0))), o.inputs[0]);
  CompletionResult cr;
  try {
    cr = complete_preorder(np.order);
  } catch (const BudgetExceeded& e) {
    out.kv("status", e.what());
    return kUnknown;
  }
  out.kv("source", np.name + " (" + std::to_string(np.order.size()) + " elements)");
  out.kv("star-size", std::to_string(cr.star.size()));
  const auto findings = verify_embedding(np.order, cr);
  out.kv("verify", findings.empty() ? "clean" : std::to_string(findings.size()) + " findings");
  for (const auto& f : findings) out.note(f.code + ": " + f.message);
  const std::string text = dump_completion(cr);
  write_output(o, text);
  out.dump("completion", text);
  return findings.empty() ? kEstablished : kRefuted;
}

int cmd_extend(const Options& o) {
  Out out(o);
  const ExtensionInstance inst = require(parse_extension(read_file(o.inputs.at(0))), o.inputs[0]);
  const auto hyp = check_instance(inst);
  if (!hyp.empty()) {
    out.kv("status", "hypothesis violated");
    for (const auto& f : hyp) out.note(f.code + ": " + f.message);
    return kRefuted;
  }
  if (const auto w = check_special(inst)) {
    out.kv("status", "hypothesis violated");
    out.kv("witness", describe(inst, *w));
    return kRefuted;
  }
  const ExtensionResult r = extend_interpretation(inst);
  auto findings = verify_extension(inst, r);
  for (auto& f : verify_audit(inst, r)) findings.push_back(std::move(f));
  out.kv("verify", findings.empty() ? "clean" : std::to_string(findings.size()) + " findings");
  for (const auto& f : findings) out.note(f.code + ": " + f.message);
  const std::string text = dump_extension_result(inst, r);
  write_output(o, text);
  out.dump("extension", text);
  return findings.empty() ? kEstablished : kRefuted;
}

int cmd_classify(const Options& o) {
  Out out(o);
  if (o.inputs.size() < 2) throw InputFailure{"classify needs a problem file and a model file"};
  const SourceProblem p = load_problem(o.inputs[0]);
  const Model m = require(load_model(read_file(o.inputs[1]), p.theory.sig, o.max_cells), o.inputs[1]);
  out.kv("model-of-theory", is_model(m, p.theory) ? "yes" : "no");
  for (const auto& g : p.goals) out.kv("goal " + render(g), satisfies(m, g) ? "holds" : "fails");
  for (const auto& c : classify(m, p.theory.sig)) {
    std::string s = std::string(c.plus ? "+" : "") + (c.minus ? "-" : "");
    out.kv("tags " + c.constant, "{" + s + "}");
  }
  return kEstablished;
}

int cmd_suite(const Options& o) {
  const std::string name = o.inputs.empty() ? "all" : o.inputs[0];
  SuiteConfig cfg;
  cfg.seed = o.seed;
  cfg.cases = o.cases;
  cfg.bounds.max_base = o.max_base;
  cfg.bounds.max_order = o.max_order;
  cfg.bounds.max_cells = o.max_cells;
  cfg.universe = universe_of(o);
  cfg.exec = exec_of(o);
  std::vector<std::string> names;
  if (name == "all") names = suite_names();
  else names.push_back(name);
  bool ok = true;
  for (const auto& n : names) {
    const SuiteReport r = run_suite(n, cfg);
    std::cout << (o.format == "machine" ? r.transcript() : r.summary());
    ok = ok && r.passed();
  }
  return ok ? kEstablished : kRefuted;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monotonicity reasoning over ordered signatures: proofs, countermodels, completions"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "text or machine")->check(CLI::IsMember({"text", "machine"}));
    sub->add_flag("--serial", o.serial, "use the serial reference implementation");
  };
  auto search = [&](CLI::App* sub) {
    sub->add_option("--calculus", o.calculus, "base, wc, pos, identity, polarity (joined by +), or eq");
    sub->add_option("--universe", o.universe, "subterms or apps:N");
    sub->add_option("--max-depth", o.max_depth, "skip universe terms deeper than this");
    sub->add_option("--goal", o.goal, "index of the goal to use");
  };
  auto models = [&](CLI::App* sub) {
    sub->add_option("--max-base", o.max_base, "largest base carrier")->check(CLI::Range(1, 5));
    sub->add_option("--max-order", o.max_order, "highest interpreted type order")->check(CLI::Range(0, 8));
    sub->add_option("--max-cells", o.max_cells, "cell budget per function space");
    sub->add_flag("--require-wc", o.require_wc, "only weakly complete base preorders");
    sub->add_flag("--require-poset", o.require_poset, "only antisymmetric base preorders");
  };
  auto output = [&](CLI::App* sub) { sub->add_option("-o,--output", o.output, "also write the dump to this file"); };

  auto* prove = app.add_subcommand("prove", "search for a proof of a goal");
  prove->add_option("problem", o.inputs, "problem file")->required()->expected(1);
  common(prove), search(prove), output(prove);

  auto* check = app.add_subcommand("check", "check a proof against a problem");
  check->add_option("files", o.inputs, "problem file and proof file")->required()->expected(2);
  common(check), search(check);

  auto* cm = app.add_subcommand("countermodel", "search finite full structures for a countermodel");
  cm->add_option("problem", o.inputs, "problem file")->required()->expected(1);
  cm->add_option("--goal", o.goal, "index of the goal to use");
  common(cm), models(cm), output(cm);

  auto* complete = app.add_subcommand("complete", "complete a finite preorder");
  complete->add_option("preorder", o.inputs, "preorder file")->required()->expected(1);
  common(complete), output(complete);

  auto* extend = app.add_subcommand("extend", "extend an interpretation along an embedding");
  extend->add_option("instance", o.inputs, "instance file")->required()->expected(1);
  common(extend), output(extend);

  auto* cls = app.add_subcommand("classify", "tags earned by each constant in a model");
  cls->add_option("files", o.inputs, "problem file and model file")->required()->expected(2);
  cls->add_option("--max-cells", o.max_cells, "cell budget per function space");
  common(cls);

  auto* suite = app.add_subcommand("suite", "run a property suite (or all)");
  suite->add_option("name", o.inputs, "suite name or 'all'")->expected(0, 1);
  suite->add_option("--seed", o.seed, "random seed");
  suite->add_option("--cases", o.cases, "override the case count");
  suite->add_option("--universe", o.universe, "subterms or apps:N");
  suite->add_option("--max-depth", o.max_depth, "skip universe terms deeper than this");
  common(suite), models(suite);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }
  // suites sweep many theories, so their base bound defaults lower
  if (suite->parsed() && suite->count("--max-base") == 0) o.max_base = SuiteConfig{}.bounds.max_base;

  try {
    if (prove->parsed()) return cmd_prove(o);
    if (check->parsed()) return cmd_check(o);
    if (cm->parsed()) return cmd_countermodel(o);
    if (complete->parsed()) return cmd_complete(o);
    if (extend->parsed()) return cmd_extend(o);
    if (cls->parsed()) return cmd_classify(o);
    if (suite->parsed()) return cmd_suite(o);
  } catch (const InputFailure& e) {
    std::cerr << "error: " << e.message << "\n";
    return kInputError;
  } catch (const InputError& e) {  // includes TypeError
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kUnknown;
  }
  return kInputError;
}
