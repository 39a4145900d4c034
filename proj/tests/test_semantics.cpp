#include <random>

#include "doctest.h"
#include "tonic/error.hpp"
#include "tonic/semantics.hpp"
#include "util.hpp"

using namespace tonic;

namespace {

FinPreorder chain2() { return closure_rt({"0", "1"}, {{"0", "1"}}); }
FinPreorder flat2() { return FinPreorder::discrete({"0", "1"}); }

// P = {a < c > b}, Q = {0 < 1}; f = (1,0,0), g = (1,0,1) on (a,b,c).
Model part3_model() {
  std::map<std::string, FinPreorder> bases;
  bases["β"] = closure_rt({"a", "b", "c"}, {{"a", "c"}, {"b", "c"}});
  bases["τ"] = chain2();
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

bool naive_transitive(const FinPreorder& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j)
      for (std::size_t k = 0; k < p.size(); ++k)
        if (p.leq(i, j) && p.leq(j, k) && !p.leq(i, k)) return false;
  return true;
}

// Naive values for first-order-domain terms: a base element or a table
// indexed by base elements.
struct NV {
  int base = -1;
  std::vector<NV> tab;
};

NV random_nv(const Type& t, const std::map<std::string, int>& sizes, std::mt19937& rng) {
  NV v;
  if (t.is_base()) {
    v.base = static_cast<int>(rng() % sizes.at(t.name()));
    return v;
  }
  for (int x = 0; x < sizes.at(t.domain().name()); ++x) v.tab.push_back(random_nv(t.codomain(), sizes, rng));
  return v;
}

Value encode(const NV& v, const Space& s) {
  if (!s.is_arrow()) return static_cast<Value>(v.base);
  std::vector<Value> t;
  for (const auto& e : v.tab) t.push_back(encode(e, s.cod()));
  return s.from_table(t);
}

NV naive_eval(const Term& t, const std::map<std::string, NV>& env) {
  if (t.is_const()) return env.at(t.name());
  const NV f = naive_eval(t.fun(), env);
  const NV x = naive_eval(t.arg(), env);
  return f.tab.at(static_cast<std::size_t>(x.base));
}

Term random_term(const Signature& sig, const Type& want, std::mt19937& rng, int depth) {
  std::vector<ConstRef> heads;
  for (const auto& c : sig.constants()) {
    // a constant whose type ends in `want` after some base-typed arguments
    Type t = c.type;
    while (true) {
      if (t == want) {
        heads.push_back(c);
        break;
      }
      if (!t.is_arrow()) break;
      t = t.codomain();
    }
  }
  const ConstRef h = heads[rng() % heads.size()];
  Term out = Term::constant(h.name, h.type);
  while (!(out.type() == want)) {
    const Type d = out.type().domain();
    Term arg = depth > 0 ? random_term(sig, d, rng, depth - 1) : Term();
    if (!arg.valid()) {
      for (const auto& c : sig.constants())
        if (c.type == d) arg = Term::constant(c.name, c.type);
      if (!arg.valid()) arg = random_term(sig, d, rng, 1);
    }
    out = Term::apply(out, arg);
  }
  return out;
}

}  // namespace

TEST_SUITE("semantics") {
  TEST_CASE("function_space") {
    const auto c = function_space(chain2(), chain2());
    CHECK(c.size() == 4);
    int mono = 0, anti = 0, both = 0;
    for (std::size_t i = 0; i < 4; ++i) {
      mono += c.is_plus(i);
      anti += c.is_minus(i);
      both += c.is_plus(i) && c.is_minus(i);
    }
    CHECK(mono == 3);
    CHECK(anti == 3);
    CHECK(both == 2);

    const auto f = function_space(flat2(), closure_rt({"x", "y", "z"}, {{"x", "y"}}));
    CHECK(f.size() == 9);
    for (std::size_t i = 0; i < f.size(); ++i) CHECK((f.is_plus(i) && f.is_minus(i)));

    const auto one = function_space(chain2(), FinPreorder::discrete({"u"}));
    REQUIRE(one.size() == 1);
    CHECK((one.is_plus(0) && one.is_minus(0)));

    CHECK_THROWS_AS(function_space(FinPreorder::discrete(20), FinPreorder::discrete(20), 1000), BudgetExceeded);
  }

  TEST_CASE("pointwise order and tags audited against the definitions") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
      const auto& ps = all_preorders(1 + rng() % 3);
      const auto& qs = all_preorders(1 + rng() % 3);
      const FinPreorder p = ps[rng() % ps.size()], q = qs[rng() % qs.size()];
      const Type tb = Type::base("p"), tc = Type::base("q");
      const auto s = Space::arrow(Type::arrow(tb, tc), Space::base(tb, p), Space::base(tc, q), 1'000'000);
      for (Value f = 0; f < s->size(); ++f) {
        const auto tf = s->table(f);
        CHECK(s->from_table(tf) == f);
        bool mono = true, anti = true;
        for (std::size_t x = 0; x < p.size(); ++x)
          for (std::size_t y = 0; y < p.size(); ++y)
            if (p.leq(x, y)) {
              mono = mono && q.leq(tf[x], tf[y]);
              anti = anti && q.leq(tf[y], tf[x]);
            }
        CHECK(s->monotone(f) == mono);
        CHECK(s->antitone(f) == anti);
        for (Value g = 0; g < s->size(); ++g) {
          const auto tg = s->table(g);
          bool pw = true;
          for (std::size_t x = 0; x < p.size(); ++x) pw = pw && q.leq(tf[x], tg[x]);
          CHECK(s->leq(f, g) == pw);
        }
      }
    }
  }

  TEST_CASE("part-3 model: eval, satisfies, is_model, classify") {
    const SourceProblem p = testutil::fixture("up-down-3.tnc");
    const Signature& s = p.theory.sig;
    const Model m = part3_model();
    CHECK(eval(testutil::term(s, "f a"), m) == 1);
    CHECK(eval(testutil::term(s, "g b"), m) == 0);
    CHECK(eval(testutil::term(s, "f a"), m) ==
          m.structure->space(testutil::term(s, "f").type()).table(m.interp.at("f"))[m.interp.at("a")]);
    const Term f = make_const(s, "f"), g = make_const(s, "g");
    CHECK(satisfies(m, Assertion::leq(f, g)));
    CHECK_FALSE(satisfies(m, p.goals[0]));
    CHECK(satisfies(m, Assertion::leq(testutil::term(s, "g b"), testutil::term(s, "g b"))));
    CHECK_FALSE(satisfies(m, Assertion::pol("f", Sign::Plus)));
    CHECK(satisfies(m, Assertion::pol("f", Sign::Minus)));
    CHECK(is_model(m, p.theory));

    Theory wrong = p.theory;
    wrong.sig = testutil::problem("base β { elems a b c; } base τ {} const f : β -> τ [+]; const g : β -> τ [+];"
                                  "order f <= g;")
                    .theory.sig;
    CHECK_FALSE(is_model(m, wrong));

    const auto cls = classify(m, s);
    REQUIRE(cls.size() == 2);
    CHECK(cls[0].constant == "f");
    CHECK((!cls[0].plus && cls[0].minus));
    CHECK(cls[1].constant == "g");
    CHECK((cls[1].plus && !cls[1].minus));
  }

  TEST_CASE("empty theory: any interpretation is a model") {
    const SourceProblem p = testutil::problem("base β { elems a b; } base τ {} const h : β -> τ;");
    EnumOptions opt;
    opt.bounds.max_base = 2;
    for (const auto& m : enumerate_models(p.theory, opt)) CHECK(is_model(m, p.theory));
    // carriers 1..2 for β and τ (1 + 4 preorders each); a, b and h free
    std::size_t expect = 0;
    for (int nb : {1, 2})
      for (int nt : {1, 2}) {
        const std::size_t pb = nb == 1 ? 1 : 4, pt = nt == 1 ? 1 : 4;
        std::size_t tables = 1;
        for (int i = 0; i < nb; ++i) tables *= nt;
        expect += pb * pt * nb * nb * tables;
      }
    CHECK(enumerate_models(p.theory, opt).size() == expect);
  }

  TEST_CASE("eval agrees with a naive evaluator") {
    const SourceProblem p = testutil::problem(
        "base β { elems a b; } base τ { elems c; } const f : β -> τ; const h : β -> β;"
        "const φ : τ -> (β -> τ); const ψ : β -> (τ -> β);");
    const Signature& sig = p.theory.sig;
    std::mt19937 rng(5);
    for (int trial = 0; trial < 1000; ++trial) {
      const std::map<std::string, int> sizes{{"β", 1 + static_cast<int>(rng() % 3)},
                                             {"τ", 1 + static_cast<int>(rng() % 3)}};
      std::map<std::string, FinPreorder> bases;
      for (auto [n, k] : sizes) bases[n] = FinPreorder::discrete(static_cast<std::size_t>(k));
      Model m;
      m.structure = std::make_shared<FullStructure>(bases);
      std::map<std::string, NV> env;
      for (const auto& c : sig.constants()) {
        env[c.name] = random_nv(c.type, sizes, rng);
        m.set(c.name, c.type, encode(env[c.name], m.structure->space(c.type)));
      }
      const Type want = rng() % 2 ? Type::base("τ") : Type::base("β");
      const Term t = random_term(sig, want, rng, 3);
      const Value v = eval(t, m);
      CHECK(v == encode(naive_eval(t, env), m.structure->space(want)));
    }
  }

  TEST_CASE("order properties") {
    CHECK(is_weakly_complete(closure_rt({"0", "1", "2"}, {{"0", "1"}, {"1", "2"}})));
    CHECK_FALSE(is_weakly_complete(flat2()));
    CHECK_FALSE(is_weakly_complete(closure_rt({"a", "b", "c"}, {{"a", "c"}, {"b", "c"}})));
    CHECK(is_complete(chain2()));
    CHECK_FALSE(is_complete(flat2()));
    CHECK(is_complete(FinPreorder::discrete(1)));
    CHECK(is_poset(chain2()));
    CHECK_FALSE(is_poset(closure_rt({"p", "q"}, {{"p", "q"}, {"q", "p"}})));
    CHECK_FALSE(is_poset(closure_rt({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}})));
    CHECK_THROWS_AS(is_complete(FinPreorder::discrete(17)), InputError);
  }

  TEST_CASE("all_preorders and complete => weakly complete") {
    // labeled preorder counts 1, 4, 29, 355, 6942
    const std::size_t counts[] = {1, 1, 4, 29, 355};
    for (std::size_t n = 1; n <= 4; ++n) {
      const auto ps = all_preorders(n);
      CHECK(ps.size() == counts[n]);
      for (const auto& p : ps) {
        CHECK(p.is_reflexive());
        CHECK(naive_transitive(p));
        if (is_complete(p)) CHECK(is_weakly_complete(p));
      }
    }
    const auto p5 = all_preorders(5);
    CHECK(p5.size() == 6942);
    for (const auto& p : p5)
      if (is_complete(p)) CHECK(is_weakly_complete(p));
  }

  TEST_CASE("enumerate_models") {
    const SourceProblem one = testutil::problem("base β { elems a; }");
    EnumOptions opt;
    opt.bounds.max_base = 1;
    CHECK(enumerate_models(one.theory, opt).size() == 1);

    const SourceProblem p = testutil::fixture("up-down-3.tnc");
    const Model exact = part3_model();
    EnumOptions fixed;
    fixed.fixed_bases = exact.structure->bases();
    bool seen = false;
    const EnumStats st = enumerate_models(p.theory, fixed, [&](const Model& m) {
      CHECK(is_model(m, p.theory));
      seen = seen || m.interp == exact.interp;
      return true;
    });
    CHECK(seen);
    CHECK(st.base_assignments == 1);

    EnumOptions flat;
    flat.require_wc = true;
    flat.fixed_bases["β"] = FinPreorder::discrete({"a", "b"});
    const EnumStats fs = enumerate_models(p.theory, flat, [](const Model&) { return true; });
    CHECK(fs.base_assignments == 0);

    EnumOptions capped;
    capped.bounds.max_models = 3;
    CHECK(enumerate_models(p.theory, capped).size() == 3);
  }

  TEST_CASE("find_countermodel") {
    const SourceProblem p = testutil::fixture("up-down-3.tnc");
    EnumOptions opt;
    const auto r = find_countermodel(p.theory, p.goals[0], opt);
    REQUIRE(r.model);
    CHECK(is_model(*r.model, p.theory));
    CHECK_FALSE(satisfies(*r.model, p.goals[0]));
    CHECK_FALSE(is_weakly_complete(r.model->structure->bases().at("β")));

    opt.require_wc = true;
    const auto w = find_countermodel(p.theory, p.goals[0], opt);
    CHECK_FALSE(w.model);
    CHECK(w.exhausted);

    const Term fa = testutil::term(p.theory.sig, "f a");
    const auto t = find_countermodel(p.theory, Assertion::leq(fa, fa), opt);
    CHECK_FALSE(t.model);
    CHECK(t.exhausted);
    CHECK(t.stats.base_assignments == 0);
  }

  TEST_CASE("countermodel search: serial and parallel agree") {
    for (const char* name : {"up-down-1.tnc", "up-down-2.tnc", "up-down-3.tnc", "wc3.tnc", "empty-goal.tnc"}) {
      const SourceProblem p = testutil::fixture(name);
      for (bool wc : {false, true}) {
        EnumOptions opt;
        opt.require_wc = wc;
        const auto a = find_countermodel(p.theory, p.goals[0], opt, Exec::Serial);
        const auto b = find_countermodel(p.theory, p.goals[0], opt, Exec::Parallel);
        CAPTURE(name);
        CHECK(a.model.has_value() == b.model.has_value());
        CHECK(a.exhausted == b.exhausted);
        CHECK(a.stats.base_assignments == b.stats.base_assignments);
        if (a.model && b.model) CHECK(dump_model(*a.model, p.theory.sig) == dump_model(*b.model, p.theory.sig));
      }
    }
  }

  TEST_CASE("type order and cell budget bounds are reported") {
    const SourceProblem p = testutil::problem(
        "base β { elems a b; } const F : (β -> β) -> β; const h : β -> β; goal F h <= a;");
    EnumOptions low;
    low.bounds.max_order = 1;
    const auto r = find_countermodel(p.theory, p.goals[0], low);
    CHECK_FALSE(r.model);
    CHECK_FALSE(r.exhausted);
    CHECK(r.stats.skipped > 0);
    REQUIRE_FALSE(r.stats.notices.empty());
    CHECK(r.stats.notices[0].find("order") != std::string::npos);

    EnumOptions tight;
    tight.bounds.max_cells = 8;
    const auto c = find_countermodel(p.theory, p.goals[0], tight);
    CHECK(c.stats.skipped > 0);
    CHECK_FALSE(c.model);
    CHECK_FALSE(c.exhausted);

    const auto ok = find_countermodel(p.theory, p.goals[0], EnumOptions{});
    REQUIRE(ok.model);
    CHECK_FALSE(satisfies(*ok.model, p.goals[0]));
  }

  TEST_CASE("model dumps round-trip") {
    const SourceProblem p = testutil::fixture("up-down-3.tnc");
    const Model m = part3_model();
    const std::string text = dump_model(m, p.theory.sig);
    CHECK(text.find("val f = [1 0 0];") != std::string::npos);
    const auto back = load_model(text, p.theory.sig);
    REQUIRE(back.ok());
    CHECK(back.value->interp == m.interp);
    CHECK(dump_model(*back.value, p.theory.sig) == text);
    CHECK(is_model(*back.value, p.theory));

    CHECK_FALSE(load_model("preorder β { elems a; }", p.theory.sig).ok());
    const auto bad = load_model(
        "preorder β { elems a b c; } preorder τ { elems 0 1; } val a = a; val b = a; val c = a; val f = [0 1]; "
        "val g = [0 0 0];",
        p.theory.sig);
    REQUIRE_FALSE(bad.ok());
    CHECK(bad.diagnostics[0].message.find("needs 3 entries") != std::string::npos);

    const SourceProblem h = testutil::problem("base β { elems a; } const F : (β -> β) -> β; const k : β -> β;");
    std::map<std::string, FinPreorder> bases{{"β", chain2()}};
    Model hm;
    hm.structure = std::make_shared<FullStructure>(bases);
    hm.set("a", Type::base("β"), 1);
    hm.set("k", h.theory.sig.find("k")->type, 2);
    hm.set("F", h.theory.sig.find("F")->type, 9);
    const std::string ht = dump_model(hm, h.theory.sig);
    const auto hb = load_model(ht, h.theory.sig);
    REQUIRE(hb.ok());
    CHECK(hb.value->interp == hm.interp);
  }
}
