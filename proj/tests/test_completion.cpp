#include <random>

#include "doctest.h"
#include "tonic/completion.hpp"
#include "tonic/error.hpp"
#include "util.hpp"

using namespace tonic;

namespace {

FinPreorder chain2() { return closure_rt({"0", "1"}, {{"0", "1"}}); }

std::vector<std::uint32_t> brute_down_sets(const FinPreorder& p) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t a = 0; a < (1u << p.size()); ++a) {
    bool ok = true;
    for (std::size_t x = 0; x < p.size(); ++x)
      for (std::size_t y = 0; y < p.size(); ++y)
        if (((a >> x) & 1) && p.leq(y, x) && !((a >> y) & 1)) ok = false;
    if (ok) out.push_back(a);
  }
  return out;
}

Subset subset(std::size_t n, std::initializer_list<std::size_t> xs) {
  Subset s(n);
  for (auto x : xs) s.set(x);
  return s;
}

}  // namespace

TEST_SUITE("completion") {
  TEST_CASE("down_closed_sets") {
    CHECK(down_closed_sets(chain2()) == std::vector<std::uint32_t>{0b00, 0b01, 0b11});
    CHECK(down_closed_sets(FinPreorder::discrete(2)).size() == 4);
    const FinPreorder v = closure_rt({"a", "b", "c"}, {{"a", "c"}, {"b", "c"}});
    CHECK(down_closed_sets(v) == std::vector<std::uint32_t>{0b000, 0b001, 0b010, 0b011, 0b111});
    for (std::size_t n = 1; n <= 4; ++n)
      for (const auto& p : all_preorders(n)) CHECK(down_closed_sets(p) == brute_down_sets(p));
    CHECK_THROWS_AS(down_closed_sets(FinPreorder::discrete(11)), InputError);
  }

  TEST_CASE("complete_preorder shapes") {
    const auto c = complete_preorder(chain2());
    CHECK(c.star.size() == 7);
    CHECK(c.star.name(c.embed[0]) == "({0},0)");
    CHECK(c.star.name(c.embed[1]) == "({0,1},1)");
    CHECK(c.star.name(c.bottom) == "⊥");
    CHECK(verify_embedding(chain2(), c).empty());
    CHECK(c.star.leq(c.embed[0], c.embed[1]));
    CHECK_FALSE(c.star.leq(c.embed[1], c.embed[0]));

    const auto e = complete_preorder(FinPreorder::discrete(std::vector<std::string>{}));
    CHECK(e.star.size() == 1);
    CHECK(e.bottom == 0);

    const auto one = complete_preorder(FinPreorder::discrete({"p"}));
    CHECK(one.star.size() == 3);
    CHECK(one.star.name(one.embed[0]) == "({p},p)");

    for (std::size_t n = 1; n <= 4; ++n)
      for (const auto& p : all_preorders(n))
        CHECK(complete_preorder(p).star.size() == brute_down_sets(p).size() * n + 1);
  }

  TEST_CASE("join") {
    const auto c = complete_preorder(chain2());
    const std::size_t n = c.star.size();
    CHECK(join(c, Subset(n)) == c.bottom);
    const std::size_t j = join(c, subset(n, {c.embed[0], c.embed[1]}));
    CHECK(c.set_of(j) == 0b11);
    CHECK(c.star.equiv(j, c.embed[1]));
    for (std::size_t x = 0; x < n; ++x) {
      const std::size_t jx = join(c, subset(n, {x}));
      CHECK(c.star.equiv(jx, x));
      CHECK(is_lub(c.star, subset(n, {x}), jx));
    }
    // a singleton of an empty-set element joins to bottom, which is equivalent
    const std::size_t empty0 = c.index_of(0, 0);
    CHECK(join(c, subset(n, {empty0})) == c.bottom);
    CHECK(c.star.equiv(empty0, c.bottom));
    // bottom least, join of everything greatest
    Subset all(n);
    all.set();
    const std::size_t top = join(c, all);
    for (std::size_t x = 0; x < n; ++x) {
      CHECK(c.star.leq(c.bottom, x));
      CHECK(c.star.leq(x, top));
    }
  }

  TEST_CASE("join is a least upper bound of every subset for small sources") {
    for (std::size_t n = 1; n <= 2; ++n)
      for (const auto& p : all_preorders(n)) {
        const auto c = complete_preorder(p);
        const std::size_t m = c.star.size();
        REQUIRE(m <= 12);
        for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
          Subset s(m, mask);
          const std::size_t j = join(c, s);
          CHECK(is_lub(c.star, s, j));
          // any other lub is equivalent
          for (std::size_t z = 0; z < m; ++z)
            if (is_lub(c.star, s, z)) CHECK(c.star.equiv(z, j));
        }
      }
  }

  TEST_CASE("has_all_joins agrees with subset enumeration") {
    for (std::size_t n = 1; n <= 4; ++n)
      for (const auto& p : all_preorders(n)) CHECK(has_all_joins(p) == is_complete(p));
  }

  TEST_CASE("verify_embedding negative controls") {
    const FinPreorder three = closure_rt({"0", "1", "2"}, {{"0", "1"}, {"1", "2"}});
    auto c = complete_preorder(three);
    std::swap(c.embed[0], c.embed[2]);
    auto f = verify_embedding(three, c);
    REQUIRE_FALSE(f.empty());
    bool reflect = false;
    for (const auto& x : f) reflect = reflect || x.code == "not-reflecting" || x.code == "not-preserving";
    CHECK(reflect);

    auto d = complete_preorder(three);
    d.embed[1] = d.embed[0];
    f = verify_embedding(three, d);
    bool inj = false;
    for (const auto& x : f) inj = inj || x.code == "not-injective";
    CHECK(inj);

    // equivalent but distinct source elements stay apart
    const FinPreorder cyc = closure_rt({"p", "q"}, {{"p", "q"}, {"q", "p"}});
    const auto e = complete_preorder(cyc);
    CHECK(verify_embedding(cyc, e).empty());
    CHECK(e.embed[0] != e.embed[1]);
    CHECK(e.star.equiv(e.embed[0], e.embed[1]));
  }

  TEST_CASE("pointwise_join against brute force") {
    const auto c = complete_preorder(chain2());
    const Type tb = Type::base("p"), tc = Type::base("c");
    const auto fs = Space::arrow(Type::arrow(tb, tc), Space::base(tb, chain2()), Space::base(tc, c.star), 1'000'000);
    const JoinOracle oracle = [&](const std::vector<Value>& xs) {
      Subset s(c.star.size());
      for (Value x : xs) s.set(x);
      return static_cast<Value>(join(c, s));
    };
    CHECK(fs->table(pointwise_join(*fs, {}, oracle)) == std::vector<Value>{c.bottom, c.bottom});
    std::mt19937 rng(3);
    // the function space as a preorder, for the brute-force lub check
    std::vector<char> m(fs->size() * fs->size());
    for (Value f = 0; f < fs->size(); ++f)
      for (Value g = 0; g < fs->size(); ++g) m[f * fs->size() + g] = fs->leq(f, g);
    const FinPreorder order(std::vector<std::string>(fs->size(), "x"), m);
    for (int trial = 0; trial < 200; ++trial) {
      const Value f = rng() % fs->size(), g = rng() % fs->size();
      const Value j1 = pointwise_join(*fs, {f}, oracle);
      CHECK(fs->leq(j1, f));
      CHECK(fs->leq(f, j1));
      const Value j = pointwise_join(*fs, {f, g}, oracle);
      Subset s(fs->size());
      s.set(f);
      s.set(g);
      CHECK(is_lub(order, s, j));
    }
  }

  TEST_CASE("completion dump round-trip") {
    const auto c = complete_preorder(closure_rt({"a", "b", "c"}, {{"a", "c"}, {"b", "c"}}));
    const std::string text = dump_completion(c);
    const auto back = load_completion(text);
    REQUIRE(back.ok());
    CHECK(back.value->star == c.star);
    REQUIRE(back.value->embed.size() == 3);
    CHECK(back.value->embed[2].second == "({a,b,c},c)");
    CHECK_FALSE(load_completion("preorder x { elems a; } embed a -> b;").ok());
  }
}
