#include "tonic/harness.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>
#include <sstream>

#include "tonic/checker.hpp"
#include "tonic/completion.hpp"
#include "tonic/congruence.hpp"
#include "tonic/error.hpp"
#include "tonic/extension.hpp"
#include "tonic/parser.hpp"
#include "tonic/saturation.hpp"

namespace tonic {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool coin(std::mt19937_64& rng, double p) { return std::bernoulli_distribution(p)(rng); }

template <class T>
const T& pick(std::mt19937_64& rng, const std::vector<T>& v) {
  return v[uniform(rng, 0, v.size() - 1)];
}

// Types some constant reaches after 0..k arguments.
std::vector<Type> producible_types(const Signature& sig) {
  std::set<Type> out;
  for (const auto& c : sig.constants()) {
    Type t = c.type;
    while (true) {
      out.insert(t);
      if (!t.is_arrow()) break;
      t = t.codomain();
    }
  }
  return {out.begin(), out.end()};
}

}  // namespace

std::uint64_t case_seed(std::uint64_t seed, std::string_view stream, std::size_t index) {
  std::uint64_t h = splitmix(seed);
  for (unsigned char ch : stream) h = splitmix(h ^ ch);
  return splitmix(h ^ (static_cast<std::uint64_t>(index) * 0x100000001b3ull));
}

std::optional<Term> random_term(std::mt19937_64& rng, const Signature& sig, const Type& want, std::size_t depth) {
  struct Cand {
    std::string name;
    Type type;
    std::size_t args;
  };
  std::vector<Cand> cands;
  for (const auto& c : sig.constants()) {
    Type t = c.type;
    for (std::size_t k = 0; k <= depth; ++k) {
      if (t == want) cands.push_back({c.name, c.type, k});
      if (!t.is_arrow()) break;
      t = t.codomain();
    }
  }
  std::shuffle(cands.begin(), cands.end(), rng);
  for (const auto& c : cands) {
    Term t = Term::constant(c.name, c.type);
    bool ok = true;
    for (std::size_t i = 0; i < c.args && ok; ++i) {
      auto arg = random_term(rng, sig, t.type().domain(), depth - 1);
      if (!arg) ok = false;
      else t = Term::apply(t, *arg);
    }
    if (ok) return t;
  }
  return std::nullopt;
}

Theory random_theory(std::mt19937_64& rng, const TheoryShape& shape) {
  const std::vector<std::string> base_names =
      shape.odd_names ? std::vector<std::string>{"my base", "τ'"} : std::vector<std::string>{"β", "τ"};
  const std::vector<std::string> const_names = shape.odd_names ? std::vector<std::string>{"x y", "a'", "b-2", "c", "d"}
                                                               : std::vector<std::string>{"a", "b", "c", "d", "e"};
  const std::vector<std::string> fun_names = shape.odd_names ? std::vector<std::string>{"f-1", "g'", "my h", "k", "m"}
                                                             : std::vector<std::string>{"f", "g", "h", "k", "m"};
  Theory thy;
  Signature& sig = thy.sig;
  const bool two = coin(rng, shape.second_base);
  const Type b = Type::base(base_names[0]);
  const Type t = two ? Type::base(base_names[1]) : b;
  sig.add_base_type(base_names[0]);
  if (two) sig.add_base_type(base_names[1]);

  const std::size_t nb = uniform(rng, 1, std::min(shape.max_base_consts, const_names.size()));
  for (std::size_t i = 0; i < nb; ++i) sig.add_constant(const_names[i], i == 0 || !coin(rng, 0.4) ? b : t);

  std::vector<Type> fun_types{Type::arrow(b, t), Type::arrow(b, b)};
  if (two) fun_types.push_back(Type::arrow(t, b));
  const std::size_t nf = uniform(rng, 0, std::min(shape.max_arrow_consts, fun_names.size()));
  for (std::size_t i = 0; i < nf; ++i) {
    Type ft = coin(rng, shape.higher_order) ? Type::arrow(Type::arrow(b, t), t) : pick(rng, fun_types);
    // favour repeating the previous type so that order facts have partners
    if (i > 0 && coin(rng, 0.5)) ft = sig.find(fun_names[i - 1])->type;
    sig.add_constant(fun_names[i], ft, coin(rng, shape.tag), coin(rng, shape.tag));
  }

  const auto consts = sig.constants();
  for (std::size_t i = 0; i < consts.size(); ++i)
    for (std::size_t k = i + 1; k < consts.size(); ++k)
      if (consts[i].type == consts[k].type && coin(rng, shape.order)) {
        if (coin(rng, 0.5)) sig.add_order(consts[i].name, consts[k].name);
        else sig.add_order(consts[k].name, consts[i].name);
      }

  const auto types = producible_types(sig);
  const std::size_t na = uniform(rng, 0, shape.max_axioms);
  for (std::size_t i = 0; i < na; ++i) {
    if (shape.pol_axioms && nf > 0 && coin(rng, 0.25)) {
      thy.axioms.push_back(
          Assertion::pol(fun_names[uniform(rng, 0, nf - 1)], coin(rng, 0.5) ? Sign::Plus : Sign::Minus));
      continue;
    }
    const Type& ty = pick(rng, types);
    auto l = random_term(rng, sig, ty, shape.max_term_depth);
    auto r = random_term(rng, sig, ty, shape.max_term_depth);
    if (!l || !r) continue;
    thy.axioms.push_back(shape.eq_axioms && coin(rng, 0.35) ? Assertion::eq(*l, *r) : Assertion::leq(*l, *r));
  }
  return thy;
}

std::vector<Assertion> random_goals(std::mt19937_64& rng, const Theory& thy, std::size_t n, std::size_t depth) {
  std::vector<Assertion> out;
  const auto types = producible_types(thy.sig);
  std::vector<std::string> funs;
  for (const auto& c : thy.sig.constants())
    if (c.type.is_arrow()) funs.push_back(c.name);
  if (types.empty()) return out;
  while (out.size() < n) {
    const double roll = std::uniform_real_distribution<double>(0, 1)(rng);
    if (roll < 0.12 && !funs.empty()) {
      out.push_back(Assertion::pol(pick(rng, funs), coin(rng, 0.5) ? Sign::Plus : Sign::Minus));
      continue;
    }
    const Type& ty = pick(rng, types);
    auto l = random_term(rng, thy.sig, ty, depth);
    auto r = random_term(rng, thy.sig, ty, depth);
    if (!l || !r) continue;
    out.push_back(roll < 0.25 ? Assertion::eq(*l, *r) : Assertion::leq(*l, *r));
  }
  return out;
}

// ---------------------------------------------------------------- reports

const char* status_name(CaseStatus s) {
  switch (s) {
    case CaseStatus::Pass: return "pass";
    case CaseStatus::Violation: return "violation";
    case CaseStatus::Bound: return "bound";
  }
  return "?";
}

std::size_t SuiteReport::count(CaseStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(cases.begin(), cases.end(), [&](const CaseLine& c) { return c.status == s; }));
}

std::map<std::string, std::size_t> SuiteReport::totals() const {
  std::map<std::string, std::size_t> out;
  for (const auto& c : cases)
    for (const auto& [k, v] : c.counters) out[k] += v;
  return out;
}

SuiteReport SuiteReport::select(std::string_view prefix) const {
  SuiteReport out{suite, seed, {}};
  for (const auto& c : cases)
    if (std::string_view(c.id).substr(0, prefix.size()) == prefix) out.cases.push_back(c);
  return out;
}

namespace {

std::string case_text(const CaseLine& c) {
  std::ostringstream os;
  os << "case " << c.index << " seed=" << c.seed << " id=" << c.id << " verdict=" << status_name(c.status);
  for (const auto& [k, v] : c.counters) os << " " << k << "=" << v;
  if (!c.detail.empty()) os << " | " << c.detail;
  return os.str();
}

std::string footer(const SuiteReport& r) {
  std::ostringstream os;
  os << "# summary suite=" << r.suite << " seed=" << r.seed << " cases=" << r.cases.size()
     << " pass=" << r.count(CaseStatus::Pass) << " violation=" << r.violations()
     << " bound=" << r.count(CaseStatus::Bound) << "\n# totals";
  for (const auto& [k, v] : r.totals()) os << " " << k << "=" << v;
  os << "\n";
  return os.str();
}

}  // namespace

std::string SuiteReport::transcript() const {
  std::ostringstream os;
  os << "# suite " << suite << " seed=" << seed << "\n";
  for (const auto& c : cases) os << case_text(c) << "\n";
  os << footer(*this);
  return os.str();
}

std::string SuiteReport::summary() const {
  std::ostringstream os;
  for (const auto& c : cases)
    if (c.status != CaseStatus::Pass) os << case_text(c) << "\n";
  os << footer(*this);
  return os.str();
}

// ---------------------------------------------------------------- runner

namespace {

using CaseFn = std::function<void(CaseLine&)>;

// Every case fills its own slot, so the report is in case order whatever
// the thread schedule.
void run_cases(SuiteReport& rep, std::size_t n, Exec exec, const CaseFn& body) {
  const std::size_t base = rep.cases.size();
  rep.cases.resize(base + n);
  const bool parallel = exec == Exec::Parallel;
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
  for (long i = 0; i < static_cast<long>(n); ++i) {
    CaseLine& c = rep.cases[base + i];
    c.index = base + i;
    try {
      body(c);
    } catch (const std::exception& e) {
      c.status = CaseStatus::Violation;
      c.detail = std::string("exception: ") + e.what();
    }
  }
}

void violation(CaseLine& c, std::string why) {
  c.status = CaseStatus::Violation;
  if (!c.detail.empty()) c.detail += "; ";
  c.detail += std::move(why);
}

bool is_calc_specific(Rule r) {
  switch (r) {
    case Rule::Wc1:
    case Rule::Wc2:
    case Rule::Wc3a:
    case Rule::Wc3b:
    case Rule::Wc3c:
    case Rule::Wc3d:
    case Rule::Pos:
    case Rule::Symm:
    case Rule::Weak:
    case Rule::Posp:
    case Rule::Cong:
    case Rule::PolPlus:
    case Rule::PolMinus: return true;
    default: return false;
  }
}

bool trivial(const Assertion& a) { return !a.is_pol() && a.lhs == a.rhs; }

TheoryShape shape_for(const CalculusConfig& calc) {
  TheoryShape s;
  s.eq_axioms = calc.identity;
  s.pol_axioms = calc.polarity;
  return s;
}

EnumOptions admissible(const CalculusConfig& calc, const SizeBounds& bounds) {
  EnumOptions opt;
  opt.bounds = bounds;
  opt.require_wc = calc.wc;
  opt.require_poset = calc.pos || calc.identity;
  return opt;
}

// A derived fact, preferring (3 times in 4) one whose last step is a rule
// specific to the calculus, and inferred non-reflexive facts over leaves and
// reflexivity.
Assertion pick_fact(std::mt19937_64& rng, const Saturation& sat) {
  std::vector<Assertion> all = sat.facts(), plain, special;
  for (const auto& a : all) {
    if (trivial(a) || is_leaf_rule(sat.why.at(*sat.key_of(a)).rule)) continue;
    plain.push_back(a);
    if (is_calc_specific(sat.why.at(*sat.key_of(a)).rule)) special.push_back(a);
  }
  if (!special.empty() && coin(rng, 0.75)) return pick(rng, special);
  if (!plain.empty()) return pick(rng, plain);
  return pick(rng, all);
}

struct CorpusCase {
  Theory thy;
  Saturation sat;
  Assertion goal;
};

CorpusCase corpus_case(const SuiteConfig& cfg, const CalculusConfig& calc, std::mt19937_64& rng) {
  Theory thy = random_theory(rng, shape_for(calc));
  Saturation sat = saturate(thy, calc, build_universe(thy, {}, cfg.universe, cfg.budget), cfg.budget);
  Assertion goal = pick_fact(rng, sat);
  return {std::move(thy), std::move(sat), std::move(goal)};
}

std::vector<CalculusConfig> default_calculi() {
  std::vector<CalculusConfig> out(5);
  out[1].wc = true;
  out[2].pos = true;
  out[3].identity = true;
  out[4].polarity = true;
  return out;
}

}  // namespace

// ---------------------------------------------------------------- soundness

SuiteReport run_soundness_suite(const SuiteConfig& cfg) {
  SuiteReport rep{"soundness", cfg.seed, {}};
  const std::size_t n = cfg.cases.value_or(500);
  for (const auto& calc : cfg.calculi.empty() ? default_calculi() : cfg.calculi) {
    const std::string label = calc.to_string();
    run_cases(rep, n, cfg.exec, [&, base = rep.cases.size()](CaseLine& c) {
      const std::size_t i = c.index - base;
      c.id = label + "/" + std::to_string(i);
      c.seed = case_seed(cfg.seed, "corpus/" + label, i);
      std::mt19937_64 rng(c.seed);
      const CorpusCase k = corpus_case(cfg, calc, rng);
      c.detail = "goal " + render(k.goal);
      const auto tree = k.sat.proof_of(k.goal);
      const Verdict v = check_proof_of(*tree, k.thy, calc, k.goal);
      if (!v.accepted) return violation(c, "found proof rejected at " + v.path + ": " + v.reason);
      c.counters["special"] = is_calc_specific(tree->rule);
      std::size_t models = 0;
      std::optional<std::string> bad;
      auto sweep = [&](const SizeBounds& b) {
        return enumerate_models(k.thy, admissible(calc, b), [&](const Model& m) {
          ++models;
          if (satisfies(m, k.goal)) return true;
          bad = dump_model(m, k.thy.sig);
          return false;
        });
      };
      const EnumStats st = sweep(cfg.bounds);
      c.counters["models"] = models;
      c.counters["skipped"] = st.skipped;
      if (bad) return violation(c, "model falsifies the proved goal: " + *bad);
      if (cfg.wide_bounds) {
        const std::size_t before = models;
        const EnumStats wide = sweep(*cfg.wide_bounds);
        c.counters["wide_models"] = models - before;
        c.counters["wide_skipped"] = wide.skipped;
        if (bad) return violation(c, "model over the wide bounds falsifies the proved goal: " + *bad);
      }
      if (models == 0) c.status = CaseStatus::Bound;
    });
  }
  return rep;
}

SuiteReport run_exclusivity_suite(const SuiteConfig& cfg) {
  SuiteReport rep{"exclusivity", cfg.seed, {}};
  CalculusConfig wc;
  wc.wc = true;
  const std::string label = wc.to_string();
  run_cases(rep, cfg.cases.value_or(500), cfg.exec, [&](CaseLine& c) {
    c.id = "wc/" + std::to_string(c.index);
    c.seed = case_seed(cfg.seed, "corpus/" + label, c.index);
    std::mt19937_64 rng(c.seed);
    const CorpusCase k = corpus_case(cfg, wc, rng);
    std::vector<Assertion> goals{k.goal};
    for (auto& g : random_goals(rng, k.thy, 2)) goals.push_back(std::move(g));
    EnumOptions opt;
    opt.bounds = cfg.bounds;
    opt.require_wc = true;
    for (const auto& g : goals) {
      const ProveResult pr = prove(k.thy, g, wc, cfg.universe, cfg.budget);
      const CountermodelResult cm = find_countermodel(k.thy, g, opt);
      if (pr.proof && cm.model) {
        return violation(c, "both a proof and a countermodel for " + render(g) + ": " +
                                dump_model(*cm.model, k.thy.sig));
      }
      ++c.counters[pr.proof ? "proof" : cm.model ? "countermodel" : "neither"];
    }
  });
  return rep;
}

// ---------------------------------------------------------------- conservativity

namespace {

bool applied_to_box(const Term& t, const std::set<std::string>& boxes) {
  return !t.is_const() && t.arg().is_const() && boxes.count(t.arg().name());
}

bool box_free(const Assertion& a, const std::set<std::string>& boxes) {
  for (const auto& b : boxes) {
    if (a.is_pol() ? a.constant == b : (a.lhs.mentions(b) || a.rhs.mentions(b))) return false;
  }
  return true;
}

std::set<std::string> new_constants(const Theory& small, const Theory& big) {
  std::set<std::string> out;
  for (const auto& c : big.sig.constants())
    if (!small.sig.find(c.name)) out.insert(c.name);
  return out;
}

// (a) and (b) for one theory; returns the counters.
void conservativity_case(const SuiteConfig& cfg, const Theory& thy, const CalculusConfig& calc, CaseLine& c) {
  const Theory boxed = extend_with_fresh(thy);
  const auto boxes = new_constants(thy, boxed);
  const Saturation sb = saturate(boxed, calc, build_universe(boxed, {}, cfg.universe, cfg.budget), cfg.budget);
  const Saturation sg = saturate(thy, calc, build_universe(thy, {}, cfg.universe, cfg.budget), cfg.budget);
  std::size_t a = 0, b = 0, out_of_universe = 0;
  for (const auto& f : sb.facts()) {
    if (f.is_leq() && applied_to_box(f.lhs, boxes) && applied_to_box(f.rhs, boxes)) {
      ++a;
      const Assertion need = Assertion::leq(f.lhs.fun(), f.rhs.fun());
      if (!sb.has(need)) violation(c, "(a) " + render(f) + " without " + render(need));
    }
    if (box_free(f, boxes)) {
      if (!sg.key_of(f)) {
        ++out_of_universe;
        continue;
      }
      ++b;
      if (!sg.has(f)) violation(c, "(b) " + render(f) + " not derived over the original theory");
    }
  }
  c.counters["a"] = a;
  c.counters["b"] = b;
  c.counters["outside"] = out_of_universe;
  if (c.status == CaseStatus::Pass && (!sb.complete() || !sg.complete())) c.counters["incomplete"] = 1;
}

}  // namespace

SuiteReport run_conservativity_suite(const SuiteConfig& cfg) {
  SuiteReport rep{"conservativity", cfg.seed, {}};
  CalculusConfig wc;
  wc.wc = true;

  // t □ <= u □ arising through POINT from a signature fact t <= u
  run_cases(rep, 1, Exec::Serial, [&](CaseLine& c) {
    c.id = "fixture/point";
    const auto p = parse_problem("base β { elems a; } base τ {} const f : β -> τ; const g : β -> τ; order f <= g;");
    conservativity_case(cfg, p.value->theory, wc, c);
    if (c.counters["a"] == 0) violation(c, "no boxed inequality was derived");
  });

  // ordered fresh pair: g □1 <= g □2 by MONO from g+, and g+ rederived by POL
  run_cases(rep, 1, Exec::Serial, [&](CaseLine& c) {
    c.id = "fixture/delta";
    const auto p = parse_problem("base β { elems a; } base τ {} const g : β -> τ [+]; const h : β -> τ; "
                                 "order g <= h; order h <= g;");
    const Theory d = extend_with_ordered_pair(p.value->theory);
    CalculusConfig pol;
    pol.polarity = true;
    const Saturation s = saturate(d, pol, build_universe(d, {}, cfg.universe, cfg.budget), cfg.budget);
    const Type beta = Type::base("β");
    const Term g = make_const(d.sig, "g");
    const Assertion mono = Assertion::leq(Term::apply(g, make_const(d.sig, box_name(beta, "□1"))),
                                          Term::apply(g, make_const(d.sig, box_name(beta, "□2"))));
    if (!s.has(mono)) return violation(c, "missing " + render(mono));
    c.detail = render(mono) + " by " + rule_name(s.proof_of(*s.key_of(mono)).rule);
    if (!s.has(Assertion::pol("h", Sign::Plus))) violation(c, "h + not derived from g + and g = h");
    conservativity_case(cfg, p.value->theory, wc, c);
  });

  run_cases(rep, cfg.cases.value_or(200), cfg.exec, [&](CaseLine& c) {
    const std::size_t i = c.index - 2;
    c.id = "random/" + std::to_string(i);
    c.seed = case_seed(cfg.seed, "conservativity", i);
    std::mt19937_64 rng(c.seed);
    conservativity_case(cfg, random_theory(rng), wc, c);
  });
  return rep;
}

// ---------------------------------------------------------------- fixtures

const char* const kExampleKeyProof =
    "(trans (trans (mono (sig-pol f +) (axiom 0)) (point (sig-order f g) (term c)))"
    " (anti (sig-pol g -) (axiom 1)))";

const std::map<std::string, std::string>& fixture_texts() {
  static const std::map<std::string, std::string> texts = {
      {"example-key",
       "# f+ <= g-, a <= c >= b  |-  f a <= g b\n"
       "base β { elems a b c; }\nbase τ { }\n"
       "const f : β -> τ [+];\nconst g : β -> τ [-];\norder f <= g;\n"
       "axiom a <= c;\naxiom b <= c;\ngoal f a <= g b;\n"},
      {"up-down-1",
       "# up-down (1): f+ <= g-, a <= c >= b entails f a <= g b over weakly complete structures\n"
       "base β { elems a b c; }\nbase τ { }\n"
       "const f : β -> τ [+];\nconst g : β -> τ [-];\norder f <= g;\n"
       "axiom a <= c;\naxiom b <= c;\ngoal f a <= g b;\n"},
      {"up-down-2",
       "# up-down (2): f- <= g+, a >= c <= b\n"
       "base β { elems a b c; }\nbase τ { }\n"
       "const f : β -> τ [-];\nconst g : β -> τ [+];\norder f <= g;\n"
       "axiom c <= a;\naxiom c <= b;\ngoal f a <= g b;\n"},
      {"up-down-3",
       "# up-down (3): f- <= g+, a <= c >= b, yet f a <= g b can fail\n"
       "# when the base preorder is not weakly complete.\n"
       "base β { elems a b c; }\nbase τ { }\n"
       "const f : β -> τ [-];\nconst g : β -> τ [+];\norder f <= g;\n"
       "axiom a <= c;\naxiom b <= c;\ngoal f a <= g b;\n"},
      {"wc3",
       "# g+ <= f-, k- <= h+, f a <= k b  |-wc  g <= h\n"
       "base β { elems a b; }\nbase τ { }\n"
       "const f : β -> τ [-];\nconst g : β -> τ [+];\nconst h : β -> τ [+];\nconst k : β -> τ [-];\n"
       "order g <= f;\norder k <= h;\naxiom f a <= k b;\ngoal g <= h;\n"},
  };
  return texts;
}

namespace {

SourceProblem fixture(const std::string& id) {
  auto r = parse_problem(fixture_texts().at(id), id);
  if (!r.ok()) throw InputError(format_diagnostic(r.diagnostics.front(), id));
  return *r.value;
}

ProofTree proof_text(const Theory& thy, const std::string& text) {
  auto r = parse_proof(text, thy, {false});
  if (!r.ok()) throw InputError(format_diagnostic(r.diagnostics.front()));
  return *r.value;
}

FinPreorder vee() { return closure_rt({"a", "b", "c"}, {{"a", "c"}, {"b", "c"}}); }

// The structure of up-down (3): β = {a, b < c}, τ = {0 < 1},
// f = (1, 0, 0) and g = (1, 0, 1) on (a, b, c).
Model part3_model() {
  std::map<std::string, FinPreorder> bases;
  bases["β"] = vee();
  bases["τ"] = closure_rt({"0", "1"}, {{"0", "1"}});
  Model m;
  m.structure = std::make_shared<FullStructure>(bases);
  const Type b = Type::base("β"), bt = Type::arrow(b, Type::base("τ"));
  m.set("a", b, 0);
  m.set("b", b, 1);
  m.set("c", b, 2);
  const Space& s = m.structure->space(bt);
  m.set("f", bt, s.from_table({1, 0, 0}));
  m.set("g", bt, s.from_table({1, 0, 1}));
  return m;
}

CalculusConfig wc_calc() {
  CalculusConfig c;
  c.wc = true;
  return c;
}

EnumOptions fixture_bounds(bool wc) {
  EnumOptions o;
  o.bounds.max_base = 3;
  o.bounds.max_order = 2;
  o.require_wc = wc;
  return o;
}

void no_countermodel(CaseLine& c, const SourceProblem& p, bool wc) {
  const auto r = find_countermodel(p.theory, p.goals[0], fixture_bounds(wc), Exec::Parallel);
  c.counters[wc ? "wc_assignments" : "assignments"] = r.stats.base_assignments;
  if (r.model) violation(c, "countermodel found: " + dump_model(*r.model, p.theory.sig));
  else if (!r.exhausted) violation(c, "search not exhaustive");
}

void proof_checks(CaseLine& c, const SourceProblem& p, const CalculusConfig& calc) {
  const ProveResult pr = prove(p.theory, p.goals[0], calc);
  if (!pr.proof) return violation(c, "no " + calc.to_string() + " proof found");
  const Verdict v = check_proof_of(*pr.proof, p.theory, calc, p.goals[0]);
  if (!v.accepted) violation(c, "found proof rejected: " + v.reason);
}

}  // namespace

SuiteReport run_worked_examples(const SuiteConfig& cfg) {
  SuiteReport rep{"fixtures", cfg.seed, {}};
  std::vector<std::pair<std::string, CaseFn>> cases;

  cases.emplace_back("example-key/check", [](CaseLine& c) {
    const SourceProblem p = fixture("example-key");
    const ProofTree t = proof_text(p.theory, kExampleKeyProof);
    const Verdict v = check_proof_of(t, p.theory, CalculusConfig::base(), p.goals[0]);
    c.counters["nodes"] = t.node_count();
    c.counters["inferences"] = t.inference_count();
    if (!v.accepted) violation(c, "rejected at " + v.path + ": " + v.reason);
  });
  cases.emplace_back("example-key/prove", [](CaseLine& c) {
    const SourceProblem p = fixture("example-key");
    const auto t0 = std::chrono::steady_clock::now();
    const ProveResult pr = prove(p.theory, p.goals[0], CalculusConfig::base());
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!pr.proof) return violation(c, "not re-found");
    c.counters["nodes"] = pr.proof->node_count();
    if (!check_proof_of(*pr.proof, p.theory, CalculusConfig::base(), p.goals[0]).accepted) {
      violation(c, "re-found proof rejected");
    }
    if (secs > 1.0) violation(c, "prove took more than 1 s");
  });
  cases.emplace_back("example-key/models", [](CaseLine& c) {
    const SourceProblem p = fixture("example-key");
    no_countermodel(c, p, false);
  });
  for (const char* id : {"up-down-1", "up-down-2"}) {
    cases.emplace_back(std::string(id) + "/wc-proof", [id](CaseLine& c) { proof_checks(c, fixture(id), wc_calc()); });
    cases.emplace_back(std::string(id) + "/no-wc-countermodel",
                       [id](CaseLine& c) { no_countermodel(c, fixture(id), true); });
  }
  cases.emplace_back("up-down-3/base-unprovable", [](CaseLine& c) {
    const SourceProblem p = fixture("up-down-3");
    const ProveResult pr = prove(p.theory, p.goals[0], CalculusConfig::base());
    if (pr.proof) return violation(c, "base calculus proves the goal");
    if (!pr.complete) c.status = CaseStatus::Bound;
    const auto r = find_countermodel(p.theory, p.goals[0], fixture_bounds(false));
    if (!r.model) violation(c, "no countermodel to the unprovable goal");
  });
  cases.emplace_back("up-down-3/exact-model", [](CaseLine& c) {
    const SourceProblem p = fixture("up-down-3");
    const Model exact = part3_model();
    EnumOptions fixed = fixture_bounds(false);
    fixed.fixed_bases = exact.structure->bases();
    bool seen = false;
    enumerate_models(p.theory, fixed, [&](const Model& m) {
      seen = m.interp == exact.interp;
      return !seen;
    });
    if (!seen) return violation(c, "the exact model is not enumerated");
    if (!is_model(exact, p.theory)) violation(c, "the exact model does not satisfy the theory");
    if (satisfies(exact, p.goals[0])) violation(c, "the exact model satisfies f a <= g b");
    const auto cls = classify(exact, p.theory.sig);
    std::string tags;
    for (const auto& k : cls) tags += k.constant + ":" + (k.plus ? "+" : "") + (k.minus ? "-" : "") + " ";
    c.detail = "tags " + tags;
    if (tags != "f:- g:+ ") violation(c, "unexpected tags");
    const auto r = find_countermodel(p.theory, p.goals[0], fixture_bounds(false), Exec::Parallel);
    if (!r.model || !is_model(*r.model, p.theory) || satisfies(*r.model, p.goals[0])) {
      violation(c, "search without weak completeness finds no falsifying model");
    }
  });
  cases.emplace_back("up-down-3/no-wc-countermodel",
                     [](CaseLine& c) { no_countermodel(c, fixture("up-down-3"), true); });
  cases.emplace_back("wc3/patterns", [](CaseLine& c) {
    const Rule rules[] = {Rule::Wc3a, Rule::Wc3b, Rule::Wc3c, Rule::Wc3d};
    const bool patterns[4][4] = {{true, false, true, false},
                                 {false, true, false, true},
                                 {true, false, false, true},
                                 {false, true, true, false}};
    const char* names[4] = {"f", "g", "h", "k"};
    std::size_t accepted = 0;
    for (int mask = 0; mask < 16; ++mask) {
      bool s[4];
      std::string text = "base β { elems a b; } base τ {}\n";
      for (int i = 0; i < 4; ++i) {
        s[i] = (mask >> (3 - i)) & 1;
        text += std::string("const ") + names[i] + " : β -> τ [" + (s[i] ? "+" : "-") + "];\n";
      }
      text += "order g <= f; order k <= h; axiom f a <= k b;";
      const Theory thy = parse_problem(text).value->theory;
      for (int r = 0; r < 4; ++r) {
        std::string pr = std::string("(") + rule_name(rules[r]);
        for (int i = 0; i < 4; ++i) pr += std::string(" (sig-pol ") + names[i] + " " + (s[i] ? "+" : "-") + ")";
        pr += " (sig-order g f) (sig-order k h) (axiom 0))";
        bool expect = true;
        for (int i = 0; i < 4; ++i) expect = expect && s[i] == patterns[r][i];
        const Verdict v = check_proof(proof_text(thy, pr), thy, wc_calc());
        accepted += v.accepted;
        if (v.accepted != expect) violation(c, std::string(rule_name(rules[r])) + " on mask " + std::to_string(mask));
      }
    }
    c.counters["accepted"] = accepted;
  });
  cases.emplace_back("wc3/prove", [](CaseLine& c) { proof_checks(c, fixture("wc3"), wc_calc()); });
  cases.emplace_back("unsound/wc2-part3", [](CaseLine& c) {
    const SourceProblem p = fixture("up-down-3");
    const ProofTree t = proof_text(p.theory, "(wc2 (sig-pol f -) (sig-pol g +) (sig-order f g) (term a) (term b))");
    if (!check_proof_of(t, p.theory, wc_calc(), p.goals[0]).accepted) return violation(c, "wc2 proof rejected");
    const Model m = part3_model();
    if (!is_model(m, p.theory)) violation(c, "structure is not a model of the theory");
    if (satisfies(m, p.goals[0])) violation(c, "wc2 conclusion holds; expected it to fail");
    if (is_weakly_complete(m.structure->bases().at("β"))) violation(c, "β is weakly complete");
    c.detail = "f a <= g b fails: f a = 1, g b = 0";
  });
  cases.emplace_back("unsound/wc1-flat", [](CaseLine& c) {
    const auto p = *parse_problem("base β { elems a b; } base τ {} const f : β -> τ [+]; const g : β -> τ [-];"
                                  "order f <= g; goal f a <= g b;")
                        .value;
    const ProofTree t = proof_text(p.theory, "(wc1 (sig-pol f +) (sig-pol g -) (sig-order f g) (term a) (term b))");
    if (!check_proof_of(t, p.theory, wc_calc(), p.goals[0]).accepted) return violation(c, "wc1 proof rejected");
    EnumOptions o = fixture_bounds(false);
    o.fixed_bases["β"] = FinPreorder::discrete({"a", "b"});
    const auto r = find_countermodel(p.theory, p.goals[0], o);
    if (!r.model) return violation(c, "no flat countermodel to the wc1 conclusion");
    if (is_weakly_complete(r.model->structure->bases().at("β"))) violation(c, "flat base is weakly complete");
    c.detail = "countermodel " + dump_model(*r.model, p.theory.sig);
    std::replace(c.detail.begin(), c.detail.end(), '\n', ' ');
  });

  run_cases(rep, cases.size(), Exec::Serial, [&](CaseLine& c) {
    c.id = cases[c.index].first;
    cases[c.index].second(c);
  });
  return rep;
}

// ---------------------------------------------------------------- completion

SuiteReport run_completion_suite(const SuiteConfig& cfg) {
  SuiteReport rep{"completion", cfg.seed, {}};
  std::vector<std::pair<std::string, FinPreorder>> sources;
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto& all = all_preorders(n);
    for (std::size_t k = 0; k < all.size(); ++k) sources.emplace_back("all" + std::to_string(n) + "/" + std::to_string(k), all[k]);
  }
  const std::size_t exhaustive = sources.size();
  run_cases(rep, exhaustive + cfg.cases.value_or(200), cfg.exec, [&](CaseLine& c) {
    FinPreorder p;
    if (c.index < exhaustive) {
      c.id = sources[c.index].first;
      p = sources[c.index].second;
    } else {
      const std::size_t i = c.index - exhaustive;
      c.id = "random5/" + std::to_string(i);
      c.seed = case_seed(cfg.seed, "completion", i);
    }
    std::mt19937_64 rng(c.seed);
    if (c.index >= exhaustive) {
      const double density = std::uniform_real_distribution<double>(0.05, 0.45)(rng);
      std::vector<std::pair<std::size_t, std::size_t>> rel;
      for (std::size_t x = 0; x < 5; ++x)
        for (std::size_t y = 0; y < 5; ++y)
          if (x != y && coin(rng, density)) rel.emplace_back(x, y);
      p = closure_rt(5, rel);
    }
    const CompletionResult cr = complete_preorder(p);
    for (const auto& f : verify_embedding(p, cr)) violation(c, f.code + ": " + f.message);
    const std::size_t m = cr.star.size();
    c.counters["star"] = m;
    std::size_t checked = 0;
    auto check = [&](const Subset& s) {
      ++checked;
      const std::size_t j = join(cr, s);
      if (!is_lub(cr.star, s, j)) {
        std::string which;
        for (auto k = s.find_first(); k != Subset::npos; k = s.find_next(k)) which += " " + cr.star.name(k);
        violation(c, "join is not a least upper bound of {" + which + " }");
        return false;
      }
      return true;
    };
    if (m <= 12) {
      for (unsigned long mask = 0; mask < (1ul << m); ++mask)
        if (!check(Subset(m, mask))) break;
    } else {
      for (int t = 0; t < 500; ++t) {
        Subset s(m);
        const double d = std::uniform_real_distribution<double>(0.0, 0.5)(rng);
        for (std::size_t k = 0; k < m; ++k)
          if (coin(rng, d)) s.set(k);
        if (!check(s)) break;
      }
    }
    c.counters["subsets"] = checked;
  });
  return rep;
}

// ---------------------------------------------------------------- extension

SuiteReport run_extension_suite(const SuiteConfig& cfg) {
  SuiteReport rep{"extension", cfg.seed, {}};
  run_cases(rep, cfg.cases.value_or(300), cfg.exec, [&](CaseLine& c) {
    c.id = "random/" + std::to_string(c.index);
    c.seed = case_seed(cfg.seed, "extension", c.index);
    std::mt19937_64 rng(c.seed);
    const ExtensionInstance inst = random_extension_instance(rng);
    c.counters["new_points"] = inst.L.size() - inst.S.size();
    const ExtensionResult r = extend_interpretation(inst);
    for (const auto& f : verify_extension(inst, r)) violation(c, f.code + ": " + f.message);
    for (const auto& f : verify_audit(inst, r)) violation(c, f.code + ": " + f.message);
    const auto back = parse_extension(render_extension(inst));
    if (!back.ok() || back.value->p != inst.p || back.value->j != inst.j) violation(c, "instance text does not round-trip");
  });
  return rep;
}

// ---------------------------------------------------------------- equational

SuiteReport run_equational_suite(const SuiteConfig& cfg) {
  SuiteReport rep{"equational", cfg.seed, {}};
  run_cases(rep, cfg.cases.value_or(100), cfg.exec, [&](CaseLine& c) {
    c.id = "random/" + std::to_string(c.index);
    c.seed = case_seed(cfg.seed, "equational", c.index);
    std::mt19937_64 rng(c.seed);
    Theory thy;
    thy.sig.add_base_type("β");
    const Type b = Type::base("β"), bb = Type::arrow(b, b);
    const std::vector<std::pair<std::string, Type>> pool = {
        {"a", b}, {"b", b}, {"c", b}, {"f", bb}, {"g", bb}, {"h", Type::arrow(b, bb)}};
    std::vector<std::size_t> idx(pool.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::shuffle(idx.begin() + 1, idx.end(), rng);  // "a" always present
    const std::size_t nc = uniform(rng, 1, 4);
    std::sort(idx.begin(), idx.begin() + nc);
    for (std::size_t i = 0; i < nc; ++i) thy.sig.add_constant(pool[idx[i]].first, pool[idx[i]].second);
    const auto types = producible_types(thy.sig);
    const std::size_t ne = uniform(rng, 1, 3);
    for (std::size_t e = 0; e < ne; ++e) {
      const Type& ty = pick(rng, types);
      auto l = random_term(rng, thy.sig, ty, 2), r = random_term(rng, thy.sig, ty, 2);
      if (l && r) thy.axioms.push_back(Assertion::eq(*l, *r));
    }
    SearchBudget budget = cfg.budget;
    budget.max_universe = 30;
    const TermUniverse u = build_universe(thy, {}, UniversePolicy::apps(2), budget);
    const Partition part = congruence_closure(thy, u);
    const Saturation sat = saturate(thy, CalculusConfig::equality(), u, cfg.budget);
    c.counters["universe"] = u.size();
    c.counters["classes"] = part.class_count();
    if (!sat.fixpoint) c.status = CaseStatus::Bound;
    for (std::size_t i = 0; i < u.size(); ++i)
      for (std::size_t j = 0; j < u.size(); ++j) {
        if (!(u[i].type() == u[j].type())) continue;
        const bool by_sat = sat.has(Assertion::eq(u[i], u[j]));
        if (by_sat != part.same(static_cast<int>(i), static_cast<int>(j))) {
          violation(c, render(u[i]) + " = " + render(u[j]) + (by_sat ? " only by saturation" : " only by closure"));
          return;
        }
      }
  });
  return rep;
}

// ---------------------------------------------------------------- round trip

SuiteReport run_roundtrip_suite(const SuiteConfig& cfg) {
  SuiteReport rep{"roundtrip", cfg.seed, {}};
  const std::size_t problems = cfg.cases.value_or(1000);
  const std::size_t proofs = cfg.cases ? std::max<std::size_t>(1, *cfg.cases / 5) : 200;
  run_cases(rep, problems, cfg.exec, [&](CaseLine& c) {
    c.id = "problem/" + std::to_string(c.index);
    c.seed = case_seed(cfg.seed, "roundtrip/problem", c.index);
    std::mt19937_64 rng(c.seed);
    TheoryShape shape;
    shape.odd_names = coin(rng, 0.3);
    shape.eq_axioms = shape.pol_axioms = true;
    shape.max_axioms = 4;
    const Theory thy = random_theory(rng, shape);
    const auto goals = random_goals(rng, thy, uniform(rng, 0, 3));
    const std::string text = render_problem(thy, goals);
    const auto back = parse_problem(text);
    if (!back.ok()) return violation(c, "rendered problem does not parse: " + format_diagnostic(back.diagnostics.front()));
    if (!(back.value->theory == thy)) violation(c, "theory changed");
    if (!(back.value->goals == goals)) violation(c, "goals changed");
    if (render_problem(back.value->theory, back.value->goals) != text) violation(c, "second rendering differs");
  });
  const std::vector<CalculusConfig> calculi = [] {
    auto v = default_calculi();
    CalculusConfig all;
    all.wc = all.pos = all.identity = all.polarity = true;
    v.push_back(all);
    return v;
  }();
  const std::size_t base = rep.cases.size();
  run_cases(rep, proofs, cfg.exec, [&](CaseLine& c) {
    const std::size_t i = c.index - base;
    c.id = "proof/" + std::to_string(i);
    c.seed = case_seed(cfg.seed, "roundtrip/proof", i);
    std::mt19937_64 rng(c.seed);
    const CalculusConfig& calc = pick(rng, calculi);
    CorpusCase k = corpus_case(cfg, calc, rng);
    // the largest of a few sampled proofs, to exercise nesting
    ProofTree tree = *k.sat.proof_of(k.goal);
    for (int t = 0; t < 8; ++t) {
      Assertion g = pick_fact(rng, k.sat);
      ProofTree other = *k.sat.proof_of(g);
      if (other.node_count() > tree.node_count()) {
        tree = std::move(other);
        k.goal = std::move(g);
      }
    }
    const std::string text = render(tree);
    c.counters["nodes"] = tree.node_count();
    const auto back = parse_proof(text, k.thy);
    if (!back.ok()) return violation(c, "rendered proof does not parse: " + format_diagnostic(back.diagnostics.front()));
    if (!(*back.value == tree)) violation(c, "tree changed");
    if (render(*back.value) != text) violation(c, "second rendering differs");
    if (!check_proof_of(*back.value, k.thy, calc, k.goal).accepted) violation(c, "parsed proof rejected");
  });
  return rep;
}

// ---------------------------------------------------------------- dispatch

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"soundness",  "exclusivity", "conservativity", "fixtures",
                                                 "completion", "extension",   "equational",     "roundtrip"};
  return names;
}

SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg) {
  if (name == "soundness") return run_soundness_suite(cfg);
  if (name == "exclusivity") return run_exclusivity_suite(cfg);
  if (name == "conservativity") return run_conservativity_suite(cfg);
  if (name == "fixtures") return run_worked_examples(cfg);
  if (name == "completion") return run_completion_suite(cfg);
  if (name == "extension") return run_extension_suite(cfg);
  if (name == "equational") return run_equational_suite(cfg);
  if (name == "roundtrip") return run_roundtrip_suite(cfg);
  throw InputError("unknown suite '" + name + "'");
}

}  // namespace tonic
