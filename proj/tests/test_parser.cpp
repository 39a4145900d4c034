#include "doctest.h"
#include "tonic/parser.hpp"
#include "util.hpp"

using namespace tonic;

TEST_SUITE("parser") {
  TEST_CASE("example-key fixture parses to the expected theory") {
    const SourceProblem p = testutil::fixture("example-key.tnc");
    const Signature& s = p.theory.sig;
    CHECK(s.base_types() == std::vector<std::string>{"β", "τ"});
    CHECK(s.constant_count() == 5);
    CHECK(s.tagged("f", Sign::Plus));
    CHECK(s.tagged("g", Sign::Minus));
    CHECK(s.leq("f", "g"));
    CHECK_FALSE(s.leq("g", "f"));
    REQUIRE(p.theory.axioms.size() == 2);
    CHECK(render(p.theory.axioms[0]) == "a <= c");
    CHECK(render(p.theory.axioms[1]) == "b <= c");
    REQUIRE(p.goals.size() == 1);
    CHECK(render(p.goals[0]) == "f a <= g b");
  }

  TEST_CASE("empty file") {
    auto r = parse_problem("");
    REQUIRE(r.ok());
    CHECK(r.value->theory.sig.constant_count() == 0);
    CHECK(r.value->goals.empty());
    CHECK(parse_problem("  # only a comment\n").ok());
  }

  TEST_CASE("type mismatch diagnostic") {
    auto r = parse_problem("base β { elems a; } base τ {}\nconst f : β -> τ;\naxiom a <= f;");
    REQUIRE_FALSE(r.ok());
    REQUIRE(r.diagnostics.size() == 1);
    CHECK(r.diagnostics[0].line == 3);
    CHECK(r.diagnostics[0].col == 7);
    CHECK(r.diagnostics[0].message.find("type") != std::string::npos);
  }

  TEST_CASE("diagnostics carry positions inside the text") {
    const char* bad[] = {
        "base β { elems a; order a <= z; }",
        "const f : σ -> σ;",
        "base β { elems a; }\nconst a : β;",
        "base β { elems a; }\naxiom a a <= a;",
        "base β { elems a; }\ngoal a <= ;",
        "base β { elems a; } const f : β -> β [];",
        "base β { elems a [+]; }",
        "base β { elems a; } const c : β [+];",
        "bogus;",
        "base β { elems a; } axiom a < a;",
        "base β { elems \"a ; }",
        "base β { elems a; } goal a +;",
    };
    for (const char* text : bad) {
      CAPTURE(text);
      auto r = parse_problem(text);
      REQUIRE_FALSE(r.ok());
      const std::string_view s(text);
      std::size_t lines = 1;
      for (char c : s) lines += c == '\n';
      for (const auto& d : r.diagnostics) {
        CHECK(d.line >= 1);
        CHECK(d.line <= lines);
        CHECK(d.col >= 1);
      }
    }
  }

  TEST_CASE("render terms and assertions") {
    const SourceProblem p = testutil::problem(
        "base β { elems a b; } base τ {} const f : β -> τ; const φ : τ -> β -> τ;");
    const Signature& s = p.theory.sig;
    const Term t = Term::apply(Term::apply(make_const(s, "φ"), Term::apply(make_const(s, "f"), make_const(s, "a"))),
                               make_const(s, "b"));
    CHECK(render(t) == "φ (f a) b");
    CHECK(render(make_const(s, "a")) == "a");
    const Term fa = testutil::term(s, "f a");
    const Term fb = testutil::term(s, "f b");
    CHECK(render(Assertion::leq(fa, fb)) == "f a <= f b");
    CHECK(testutil::term(s, "(φ (f a)) b") == t);
  }

  TEST_CASE("problem round trip") {
    for (const char* name : {"example-key.tnc", "up-down-2.tnc", "up-down-3.tnc", "wc3.tnc"}) {
      const SourceProblem p = testutil::fixture(name);
      const std::string text = render_problem(p.theory, p.goals);
      auto again = parse_problem(text);
      REQUIRE(again.ok());
      CHECK(again.value->theory == p.theory);
      CHECK(again.value->goals == p.goals);
      CHECK(render_problem(again.value->theory, again.value->goals) == text);
    }
  }

  TEST_CASE("quoted names and polarity goals") {
    const char* text =
        "base \"my base\" { elems \"x y\" z; order \"x y\" <= z; }\n"
        "const \"f-1\" : \"my base\" -> \"my base\" [+-];\n"
        "goal \"f-1\" -;\n";
    auto r = parse_problem(text);
    REQUIRE(r.ok());
    CHECK(r.value->theory.sig.tagged("f-1", Sign::Minus));
    CHECK(r.value->goals[0].is_pol());
    auto again = parse_problem(render_problem(r.value->theory, r.value->goals));
    REQUIRE(again.ok());
    CHECK(again.value->theory == r.value->theory);
    CHECK(again.value->goals == r.value->goals);
  }

  TEST_CASE("proof parsing") {
    const SourceProblem p = testutil::fixture("example-key.tnc");
    const char* key =
        "(trans (trans (mono (sig-pol f +) (axiom 0)) (point (sig-order f g) (term c)))"
        " (anti (sig-pol g -) (axiom 1)))";
    auto r = parse_proof(key, p.theory);
    REQUIRE(r.ok());
    CHECK(r.value->node_count() == 10);
    CHECK(r.value->inference_count() == 5);
    CHECK(render(*r.value) == key);

    auto refl = parse_proof("(refl (term a))", p.theory);
    REQUIRE(refl.ok());
    CHECK(refl.value->node_count() == 1);
    CHECK(refl.value->terms.size() == 1);

    auto untagged = parse_proof("(mono (sig-pol a +) (axiom 0))", p.theory);
    REQUIRE_FALSE(untagged.ok());
    CHECK(untagged.diagnostics[0].message.find("polarity fact not in signature") != std::string::npos);

    auto unknown = parse_proof("(frob (axiom 0))", p.theory);
    REQUIRE_FALSE(unknown.ok());
    CHECK(unknown.diagnostics[0].message.find("unknown rule") != std::string::npos);

    auto dangling = parse_proof("(axiom 7)", p.theory);
    REQUIRE_FALSE(dangling.ok());
    CHECK(dangling.diagnostics[0].message.find("dangling") != std::string::npos);
    CHECK(parse_proof("(axiom 7)", p.theory, {false}).ok());

    auto illtyped = parse_proof("(refl (term a a))", p.theory);
    REQUIRE_FALSE(illtyped.ok());
    CHECK(illtyped.diagnostics[0].message.find("ill-typed term") != std::string::npos);

    auto pol = parse_proof("(pol+ (sig-pol f +) (sig-order f g) (axiom 0))", p.theory);
    REQUIRE(pol.ok());
    CHECK(pol.value->rule == Rule::PolPlus);
  }

  TEST_CASE("preorder files") {
    auto r = parse_preorder(testutil::slurp(testutil::fixture_path("chain2.pre")));
    REQUIRE(r.ok());
    CHECK(r.value->order.size() == 2);
    CHECK(r.value->order.leq(0, 1));
    auto again = parse_preorder(render_preorder(*r.value));
    REQUIRE(again.ok());
    CHECK(again.value->order == r.value->order);
    CHECK_FALSE(parse_preorder("preorder p { elems a; order a <= b; }").ok());
  }
}
