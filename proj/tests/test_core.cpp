#include <functional>
#include <random>
#include <set>

#include "doctest.h"
#include "tonic/error.hpp"
#include "tonic/theory.hpp"
#include "util.hpp"

using namespace tonic;

namespace {

// Running example signature: a, b, c : β; f+ <= g- : β -> τ; φ- : τ -> (β -> τ).
Signature first_signature() {
  Signature s;
  s.add_base_type("β");
  s.add_base_type("τ");
  const Type b = Type::base("β"), t = Type::base("τ");
  for (auto n : {"a", "b", "c"}) s.add_constant(n, b);
  s.add_constant("f", Type::arrow(b, t), true, false);
  s.add_constant("g", Type::arrow(b, t), false, true);
  s.add_order("f", "g");
  s.add_constant("φ", Type::arrow(t, Type::arrow(b, t)), false, true);
  return s;
}

// Brute-force reflexive-transitive closure by iterating composition to a
// fixed point (independent of the Warshall implementation).
std::set<std::pair<int, int>> naive_closure(int n, std::set<std::pair<int, int>> r) {
  for (int i = 0; i < n; ++i) r.insert({i, i});
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto [a, b] : std::set<std::pair<int, int>>(r))
      for (auto [c, d] : std::set<std::pair<int, int>>(r))
        if (b == c && r.insert({a, d}).second) changed = true;
  }
  return r;
}

}  // namespace

TEST_SUITE("core") {
  TEST_CASE("closure_rt examples") {
    FinPreorder e = closure_rt({"a", "b", "c"}, {});
    CHECK(e.strict_pairs().empty());
    CHECK(e.is_preorder());

    FinPreorder fg = closure_rt({"f", "g"}, {{"f", "g"}});
    CHECK(fg.leq(0, 1));
    CHECK(fg.leq(0, 0));
    CHECK(fg.leq(1, 1));
    CHECK_FALSE(fg.leq(1, 0));

    FinPreorder abc = closure_rt({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    CHECK(abc.leq(0, 2));
    CHECK_THROWS_AS(closure_rt({"a"}, {{"a", "z"}}), InputError);
  }

  TEST_CASE("closure_rt equals the naive fixed point on random relations") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
      const int n = 1 + static_cast<int>(rng() % 6);
      std::set<std::pair<int, int>> rel;
      std::vector<std::pair<std::size_t, std::size_t>> pairs;
      const int m = static_cast<int>(rng() % (n * 2 + 1));
      for (int k = 0; k < m; ++k) {
        int a = static_cast<int>(rng() % n), b = static_cast<int>(rng() % n);
        rel.insert({a, b});
        pairs.emplace_back(a, b);
      }
      const FinPreorder p = closure_rt(n, pairs);
      const auto oracle = naive_closure(n, rel);
      REQUIRE(p.is_preorder());
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) CHECK(p.leq(i, j) == (oracle.count({i, j}) == 1));
    }
  }

  TEST_CASE("types") {
    const Type b = Type::base("β"), t = Type::base("τ");
    const Type bt = Type::arrow(b, t);
    CHECK(b.order() == 0);
    CHECK(bt.order() == 1);
    CHECK(Type::arrow(bt, t).order() == 2);
    CHECK(to_string(Type::arrow(b, Type::arrow(b, t))) == "β -> β -> τ");
    CHECK(to_string(Type::arrow(bt, t)) == "(β -> τ) -> τ");
    CHECK(Type::arrow(b, t) == bt);
    CHECK_FALSE(bt == Type::arrow(t, b));
  }

  TEST_CASE("type_of") {
    const Signature s = first_signature();
    const Expr fa = Expr::apply(Expr::constant("f"), Expr::constant("a"));
    CHECK(type_of(fa, s) == Type::base("τ"));
    const Expr phifa = Expr::apply(Expr::constant("φ"), fa);
    CHECK(type_of(phifa, s) == Type::arrow(Type::base("β"), Type::base("τ")));
    CHECK_THROWS_AS(type_of(Expr::apply(Expr::constant("a"), Expr::constant("a")), s), TypeError);
    CHECK_THROWS_AS(type_of(Expr::constant("zz"), s), InputError);
    // codomain law on a typed term
    const Term t = resolve(Expr::apply(phifa, Expr::constant("b")), s);
    CHECK(type_of(t, s) == type_of(t.fun(), s).codomain());
  }

  TEST_CASE("subterms") {
    const Signature s = first_signature();
    auto names = [](const std::vector<Term>& v) {
      std::vector<std::string> out;
      for (const auto& t : v) out.push_back(render(t));
      return out;
    };
    CHECK(names(subterms(make_const(s, "a"))) == std::vector<std::string>{"a"});
    CHECK(names(subterms(testutil::term(s, "f a"))) == std::vector<std::string>{"f", "a", "f a"});

    // oracle: collect subterms by direct recursion into a set
    const Term big = testutil::term(s, "φ (f a) b");
    std::set<std::string> oracle;
    std::function<void(const Term&)> walk = [&](const Term& t) {
      oracle.insert(render(t));
      if (!t.is_const()) {
        walk(t.fun());
        walk(t.arg());
      }
    };
    walk(big);
    const auto got = names(subterms(big));
    CHECK(std::set<std::string>(got.begin(), got.end()) == oracle);
    CHECK(got.size() == oracle.size());
    CHECK(oracle == std::set<std::string>{"φ", "f", "a", "f a", "φ (f a)", "φ (f a) b", "b"});
    CHECK(got.back() == "φ (f a) b");
  }

  TEST_CASE("validate_signature") {
    CHECK(validate_signature(first_signature()).empty());

    Signature bad = first_signature();
    auto& fam = bad.mutable_families().at(Type::base("β"));
    fam.order.set_leq(0, 0, false);
    auto f = validate_signature(bad);
    REQUIRE(f.size() == 1);
    CHECK(f[0].code == "not-reflexive");

    Signature tagged = first_signature();
    tagged.mutable_families().at(Type::base("β")).plus[1] = 1;
    f = validate_signature(tagged);
    REQUIRE(f.size() == 1);
    CHECK(f[0].code == "polarity-on-base");

    Signature dup = first_signature();
    dup.mutable_families()[Type::base("τ")] = PolarizedFinPreorder(FinPreorder::discrete({"a"}));
    f = validate_signature(dup);
    REQUIRE_FALSE(f.empty());
    CHECK(f[0].code == "duplicate-constant");

    Signature intrans = first_signature();
    auto& o = intrans.mutable_families().at(Type::base("β")).order;
    o.set_leq(0, 1, true);
    o.set_leq(1, 2, true);
    f = validate_signature(intrans);
    REQUIRE(f.size() == 1);
    CHECK(f[0].code == "not-transitive");
  }

  TEST_CASE("extend_with_fresh") {
    Theory one;
    one.sig.add_base_type("β");
    one.sig.add_constant("a", Type::base("β"));
    const Theory box = extend_with_fresh(one);
    CHECK(box.sig.constant_count() == 2);
    CHECK(box.sig.find("□β"));
    CHECK(box.axioms.empty());
    CHECK_THROWS_AS(extend_with_fresh(box), InputError);

    Theory two;
    two.sig.add_base_type("β");
    two.sig.add_base_type("τ");
    two.sig.add_constant("a", Type::base("β"));
    two.sig.add_constant("f", Type::arrow(Type::base("β"), Type::base("τ")), true, false);
    const Theory b2 = extend_with_fresh(two);
    CHECK(b2.sig.constant_count() == 5);
    for (auto n : {"□β", "□τ", "□⟨β⟩τ"}) {
      auto c = b2.sig.find(n);
      REQUIRE(c);
      CHECK_FALSE(b2.sig.tagged(n, Sign::Plus));
      CHECK_FALSE(b2.sig.tagged(n, Sign::Minus));
    }
    CHECK_FALSE(b2.sig.leq("f", "□⟨β⟩τ"));
    CHECK_FALSE(b2.sig.leq("□⟨β⟩τ", "f"));
    CHECK(validate_signature(b2.sig).empty());
  }

  TEST_CASE("extend_with_ordered_pair") {
    Theory one;
    one.sig.add_base_type("β");
    one.sig.add_constant("a", Type::base("β"));
    const Theory d = extend_with_ordered_pair(one);
    CHECK(d.sig.constant_count() == 3);
    REQUIRE(d.axioms.size() == 1);
    CHECK(render(d.axioms[0]) == "□1β <= □2β");

    Theory empty;
    CHECK(extend_with_ordered_pair(empty) == empty);

    // one arrow type over a single base: β -> β occurs, with β
    Theory arrow;
    arrow.sig.add_base_type("β");
    arrow.sig.add_constant("f", Type::arrow(Type::base("β"), Type::base("β")), true, false);
    const Theory da = extend_with_ordered_pair(arrow);
    CHECK(da.sig.constant_count() == 1 + 4);
    CHECK(da.axioms.size() == 2);

    // β -> τ has three occurring types
    Theory bt;
    bt.sig.add_base_type("β");
    bt.sig.add_base_type("τ");
    bt.sig.add_constant("f", Type::arrow(Type::base("β"), Type::base("τ")));
    const Theory dbt = extend_with_ordered_pair(bt);
    CHECK(dbt.sig.constant_count() == 1 + 6);
    CHECK(dbt.axioms.size() == 3);
  }

  TEST_CASE("occurring types include axiom subterm types") {
    const SourceProblem p = testutil::problem(
        "base β { elems a; } base τ {} const φ : τ -> (β -> τ); const f : β -> τ; axiom φ (f a) a <= f a;");
    const auto types = occurring_types(p.theory);
    CHECK(types.size() == 4);  // β, τ, β -> τ, τ -> (β -> τ)
  }
}
