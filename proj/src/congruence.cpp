#include "tonic/congruence.hpp"

#include <numeric>
#include <unordered_map>

#include "tonic/error.hpp"

namespace tonic {

std::size_t Partition::class_count() const {
  std::size_t n = 0;
  for (std::size_t i = 0; i < rep.size(); ++i) n += rep[i] == static_cast<int>(i);
  return n;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent[b] = a;  // keep the least index as root
    return true;
  }
};

}  // namespace

Partition congruence_closure(const Theory& thy, const TermUniverse& u) {
  const std::size_t n = u.size();
  UnionFind uf(n);
  for (const auto& ax : thy.axioms) {
    if (!ax.is_eq()) throw InputError("congruence closure needs identities only, got " + render(ax));
    auto i = u.find(ax.lhs);
    auto j = u.find(ax.rhs);
    if (!i || !j) throw InputError("axiom " + render(ax) + " mentions a term outside the universe");
    uf.unite(*i, *j);
  }
  std::vector<std::pair<int, int>> apps;  // (index, fun, arg) via parallel arrays
  std::vector<int> app_index;
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i].is_const()) continue;
    apps.emplace_back(*u.find(u[i].fun()), *u.find(u[i].arg()));
    app_index.push_back(static_cast<int>(i));
  }
  bool changed = true;
  while (changed) {
    changed = false;
    std::unordered_map<std::uint64_t, int> sig;
    for (std::size_t k = 0; k < apps.size(); ++k) {
      const std::uint64_t key = (static_cast<std::uint64_t>(uf.find(apps[k].first)) << 32) |
                                static_cast<std::uint32_t>(uf.find(apps[k].second));
      auto [it, inserted] = sig.try_emplace(key, app_index[k]);
      if (!inserted && uf.unite(it->second, app_index[k])) changed = true;
    }
  }
  Partition p;
  p.rep.resize(n);
  for (std::size_t i = 0; i < n; ++i) p.rep[i] = uf.find(static_cast<int>(i));
  return p;
}

bool decide_eq(const Theory& thy, const Term& t, const Term& u) {
  if (!(t.type() == u.type())) {
    throw TypeError("decide_eq: " + render(t) + " and " + render(u) + " have different types");
  }
  TermUniverse univ;
  for (const auto& ax : thy.axioms) {
    if (ax.is_pol()) continue;
    univ.add_closed(ax.lhs);
    univ.add_closed(ax.rhs);
  }
  univ.add_closed(t);
  univ.add_closed(u);
  const Partition p = congruence_closure(thy, univ);
  return p.same(*univ.find(t), *univ.find(u));
}

}  // namespace tonic
