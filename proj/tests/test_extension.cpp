#include <random>

#include "doctest.h"
#include "tonic/extension.hpp"
#include "util.hpp"

using namespace tonic;

namespace {

const char* kBasic = R"(
F { elems f; }
tag f +;
S { elems s; }
L { elems s' x; }
M { elems 0 1; order 0 <= 1; }
j s -> s';
p f = [1];
)";

ExtensionInstance parsed(const std::string& text) {
  auto r = parse_extension(text);
  if (!r.ok()) FAIL(format_diagnostic(r.diagnostics.front()));
  return *r.value;
}

bool has_code(const std::vector<Finding>& fs, const std::string& code) {
  for (const auto& f : fs)
    if (f.code == code) return true;
  return false;
}

}  // namespace

TEST_SUITE("extension") {
  TEST_CASE("incomparable new point gets bottom") {
    const auto inst = parsed(kBasic);
    CHECK(check_instance(inst).empty());
    const auto r = extend_interpretation(inst);
    const std::size_t sp = *inst.L.index_of("s'"), x = *inst.L.index_of("x");
    CHECK(inst.M.name(r.q[0][sp]) == "1");
    CHECK(inst.M.name(r.q[0][x]) == "0");
    CHECK(r.A[0][x].none());
    CHECK(verify_extension(inst, r).empty());
    CHECK(verify_audit(inst, r).empty());
  }

  TEST_CASE("a point above the image inherits its value") {
    std::string text = kBasic;
    text.replace(text.find("L { elems s' x; }"), 17, "L { elems s' x; order s' <= x; }");
    const auto inst = parsed(text);
    const auto r = extend_interpretation(inst);
    CHECK(inst.M.name(r.q[0][*inst.L.index_of("x")]) == "1");
    CHECK(r.A[0][*inst.L.index_of("x")].count() == 1);
    CHECK(verify_extension(inst, r).empty());
  }

  TEST_CASE("identity embedding returns p") {
    const auto inst = parsed(R"X(
F { elems f g; order f <= g; }
S { elems a b; order a <= b; }
L { elems a b; order a <= b; }
M completion { elems u v; }
j a -> a; j b -> b;
p f = ["({u},u)" "({u},u)"];
p g = ["({u},u)" "({u,v},v)"];
)X");
    CHECK(check_instance(inst).empty());
    const auto r = extend_interpretation(inst);
    CHECK(r.q == inst.p);
    CHECK(verify_extension(inst, r).empty());
  }

  TEST_CASE("special property") {
    auto inst = parsed(R"(
F { elems f g; order f <= g; }
tag f +; tag g -;
S { elems a b; }
L { elems a b; }
M { elems 0 1; order 0 <= 1; }
j a -> a; j b -> b;
p f = [0 1];
p g = [1 1];
)");
    CHECK(mixed_leq(inst.F, 0, 1));
    CHECK_FALSE(mixed_leq(inst.F, 1, 0));
    CHECK_FALSE(check_special(inst));
    inst.p = {{0, 1}, {0, 1}};
    CHECK(check_instance(inst).empty());
    const auto w = check_special(inst);
    REQUIRE(w);
    CHECK(w->f == 0);
    CHECK(w->g == 1);
    CHECK(inst.M.name(inst.p[w->f][w->x]) == "1");
    CHECK(inst.M.name(inst.p[w->g][w->y]) == "0");
    CHECK(describe(inst, *w).find("<=+-") != std::string::npos);
    CHECK_THROWS_AS(extend_interpretation(inst), HypothesisViolation);
  }

  TEST_CASE("hypothesis findings") {
    auto inst = parsed(kBasic);
    inst.j = {1};
    CHECK(check_instance(inst).empty());
    inst.p = {{5}};
    CHECK(has_code(check_instance(inst), "p-range"));
    inst.p = {{1}};
    inst.M = FinPreorder::discrete({"0", "1"});
    inst.join = lub_search(inst.M);
    CHECK(has_code(check_instance(inst), "M-not-complete"));
    CHECK_THROWS_AS(extend_interpretation(inst), HypothesisViolation);

    auto two = parsed(R"(
F { elems f; }
tag f +;
S { elems a b; order a <= b; }
L { elems a b; order a <= b; }
M { elems 0 1; order 0 <= 1; }
j a -> a; j b -> b;
p f = [1 0];
)");
    CHECK(has_code(check_instance(two), "p-not-monotone"));
    two.p[0] = {0, 1};
    two.j = {1, 0};
    CHECK(has_code(check_instance(two), "j-not-embedding"));
    two.j = {0, 0};
    CHECK(has_code(check_instance(two), "j-not-injective"));
  }

  TEST_CASE("tampered results are caught") {
    std::string text = kBasic;
    text.replace(text.find("L { elems s' x; }"), 17, "L { elems s' x; order s' <= x; }");
    const auto inst = parsed(text);
    auto r = extend_interpretation(inst);
    r.q[0][*inst.L.index_of("x")] = 0;
    CHECK(has_code(verify_extension(inst, r), "plus-not-monotone"));
    r = extend_interpretation(inst);
    r.q[0][*inst.L.index_of("s'")] = 0;
    CHECK(has_code(verify_extension(inst, r), "not-extension"));
    r = extend_interpretation(inst);
    r.A[0][*inst.L.index_of("x")].reset();
    CHECK(has_code(verify_audit(inst, r), "sets-not-monotone-in-L"));
  }

  TEST_CASE("text round-trip and errors") {
    const auto inst = parsed(kBasic);
    const auto again = parsed(render_extension(inst));
    CHECK(again.F == inst.F);
    CHECK(again.L == inst.L);
    CHECK(again.M == inst.M);
    CHECK(again.j == inst.j);
    CHECK(again.p == inst.p);
    CHECK(dump_extension_result(inst, extend_interpretation(inst)).find("q f = [1 0];") != std::string::npos);
    CHECK_FALSE(parse_extension("F { elems f; } S { elems s; }").ok());
    CHECK_FALSE(parse_extension("S { elems s; } j s -> t;").ok());
    std::string bad = kBasic;
    bad.replace(bad.find("p f = [1];"), 10, "p f = [1 1];");
    const auto r = parse_extension(bad);
    REQUIRE_FALSE(r.ok());
    CHECK(r.diagnostics.front().line == 8);
  }

  TEST_CASE("random instances satisfy the construction") {
    std::mt19937_64 rng(17);
    int nontrivial = 0;
    for (int i = 0; i < 300; ++i) {
      const auto inst = random_extension_instance(rng);
      REQUIRE(check_instance(inst).empty());
      REQUIRE_FALSE(check_special(inst));
      const auto r = extend_interpretation(inst);
      const auto v = verify_extension(inst, r);
      const auto a = verify_audit(inst, r);
      if (!v.empty() || !a.empty()) FAIL_CHECK(render_extension(inst));
      nontrivial += inst.L.size() > inst.S.size();
      const auto back = parsed(render_extension(inst));
      CHECK(back.p == inst.p);
    }
    CHECK(nontrivial > 150);
  }
}
