#include "tonic/saturation.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "tonic/checker.hpp"

namespace tonic {

namespace {

using Row = Saturation::Row;

struct Cand {
  FactKey fact;
  Justification just;
};

// Structural index of a universe: application table and per-function
// argument lists.
struct Shape {
  std::size_t n = 0;
  std::vector<int> fun, arg;        // -1 for constants
  std::vector<int> head;            // fun index when fun is a constant, else -1
  std::vector<int> type_id;
  std::vector<std::vector<std::pair<int, int>>> apps_of;  // f -> (u, f u)
  std::unordered_map<std::uint64_t, int> app;
  std::vector<std::vector<int>> consts_of_type;           // by type_id

  explicit Shape(const TermUniverse& u) : n(u.size()), fun(n, -1), arg(n, -1), head(n, -1),
                                          type_id(n), apps_of(n) {
    std::map<Type, int> ids;
    for (std::size_t i = 0; i < n; ++i) {
      auto [it, inserted] = ids.try_emplace(u[i].type(), static_cast<int>(ids.size()));
      type_id[i] = it->second;
    }
    consts_of_type.resize(ids.size());
    for (std::size_t i = 0; i < n; ++i) {
      const Term& t = u[i];
      if (t.is_const()) {
        consts_of_type[type_id[i]].push_back(static_cast<int>(i));
        continue;
      }
      fun[i] = *u.find(t.fun());
      arg[i] = *u.find(t.arg());
      if (t.fun().is_const()) head[i] = fun[i];
      app.emplace(key(fun[i], arg[i]), static_cast<int>(i));
      apps_of[fun[i]].emplace_back(arg[i], static_cast<int>(i));
    }
  }

  static std::uint64_t key(int f, int a) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(f)) << 32) |
           static_cast<std::uint32_t>(a);
  }
  int apply(int f, int a) const {
    auto it = app.find(key(f, a));
    return it == app.end() ? -1 : it->second;
  }
  bool is_const(int i) const { return fun[i] < 0; }
};

struct Snapshot {
  std::vector<Row> leq, eq;
  std::vector<char> plus, minus;
  bool tag(int c, Sign s) const { return (s == Sign::Plus ? plus : minus)[c] != 0; }
};

template <class Fn>
void each_bit(const Row& r, Fn&& fn) {
  for (auto j = r.find_first(); j != Row::npos; j = r.find_next(j)) fn(static_cast<int>(j));
}

FactKey leq_key(int i, int j) { return fact_key(FactKind::Leq, i, j); }
FactKey eq_key(int i, int j) { return fact_key(FactKind::Eq, i, j); }
FactKey pol_key(int c, Sign s) { return fact_key(FactKind::Pol, c, s == Sign::Plus ? 0 : 1); }

Justification just(Rule r, std::vector<FactKey> prem, std::vector<int> terms = {}) {
  Justification j;
  j.rule = r;
  j.premises = std::move(prem);
  j.terms = std::move(terms);
  return j;
}

struct Wc3Pattern {
  Rule rule;
  Sign f, g, h, k;
};
constexpr Wc3Pattern kWc3[] = {
    {Rule::Wc3a, Sign::Plus, Sign::Minus, Sign::Plus, Sign::Minus},
    {Rule::Wc3b, Sign::Minus, Sign::Plus, Sign::Minus, Sign::Plus},
    {Rule::Wc3c, Sign::Plus, Sign::Minus, Sign::Minus, Sign::Plus},
    {Rule::Wc3d, Sign::Minus, Sign::Plus, Sign::Plus, Sign::Minus},
};

class Engine {
 public:
  Engine(const Theory& thy, const CalculusConfig& cfg, Saturation& s, const SearchBudget& budget)
      : thy_(thy), cfg_(cfg), s_(s), shape_(s.universe), budget_(budget) {}

  void init() {
    const std::size_t n = shape_.n;
    s_.leq.assign(n, Row(n));
    s_.eq.assign(n, Row(n));
    s_.pol_plus.assign(n, 0);
    s_.pol_minus.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      Justification j = just(Rule::Refl, {}, {static_cast<int>(i)});
      insert(cfg_.equational ? eq_key(i, i) : leq_key(i, i), std::move(j), 0);
    }
    for (std::size_t a = 0; a < thy_.axioms.size(); ++a) {
      const Assertion& ax = thy_.axioms[a];
      auto k = s_.key_of(ax);
      if (!k || ax.is_pol()) continue;
      Justification j;
      j.rule = Rule::Axiom;
      j.axiom = a;
      insert(*k, std::move(j), 0);
    }
    const auto& U = s_.universe;
    for (const auto& cs : shape_.consts_of_type) {
      for (int i : cs)
        for (int j : cs) {
          if (i != j && thy_.sig.leq(U[i].name(), U[j].name())) {
            insert(leq_key(i, j), just(Rule::SigOrder, {}), 0);
          }
        }
      for (int c : cs) {
        for (Sign sg : {Sign::Plus, Sign::Minus}) {
          if (thy_.sig.tagged(U[c].name(), sg)) insert(pol_key(c, sg), just(Rule::SigPol, {}), 0);
        }
      }
    }
  }

  // One round; returns the number of new facts.
  std::size_t round(std::uint32_t r, bool parallel) {
    snap_.leq = s_.leq;
    snap_.eq = s_.eq;
    snap_.plus = s_.pol_plus;
    snap_.minus = s_.pol_minus;
    std::size_t added = 0;
    static constexpr Rule order[] = {Rule::Point, Rule::Mono,  Rule::Anti, Rule::Wc1,
                                     Rule::Wc2,   Rule::Wc3a,  Rule::Trans, Rule::Pos,
                                     Rule::Symm,  Rule::Weak,  Rule::Posp, Rule::Cong,
                                     Rule::PolPlus, Rule::PolMinus};
    const long n = static_cast<long>(shape_.n);
    for (Rule rule : order) {
      if (!cfg_.enabled(rule)) continue;
      std::vector<std::vector<Cand>> buf(shape_.n);
      std::vector<char> capped(shape_.n, 0);
#pragma omp parallel for schedule(dynamic, 4) if (parallel)
      for (long i = 0; i < n; ++i) generate(rule, static_cast<int>(i), buf[i], capped[i]);
      for (std::size_t i = 0; i < shape_.n; ++i) {
        if (capped[i]) s_.wc_truncated = true;
        for (auto& c : buf[i]) {
          if (insert(c.fact, std::move(c.just), r)) ++added;
        }
      }
    }
    return added;
  }

 private:
  bool insert(FactKey k, Justification j, std::uint32_t round) {
    if (s_.has(k)) return false;
    j.round = round;
    const int i = static_cast<int>(fact_i(k)), jj = static_cast<int>(fact_j(k));
    switch (fact_kind(k)) {
      case FactKind::Leq: s_.leq[i].set(jj); break;
      case FactKind::Eq: s_.eq[i].set(jj); break;
      case FactKind::Pol: (jj == 0 ? s_.pol_plus : s_.pol_minus)[i] = 1; break;
    }
    s_.why.emplace(k, std::move(j));
    return true;
  }

  void generate(Rule rule, int i, std::vector<Cand>& out, char& capped) const {
    const Snapshot& S = snap_;
    const Shape& sh = shape_;
    auto push_leq = [&](int a, int b, Justification j) {
      if (!S.leq[a].test(b)) out.push_back({leq_key(a, b), std::move(j)});
    };
    auto push_eq = [&](int a, int b, Justification j) {
      if (!S.eq[a].test(b)) out.push_back({eq_key(a, b), std::move(j)});
    };
    switch (rule) {
      case Rule::Point: {  // s <= t  =>  s u <= t u
        if (sh.apps_of[i].empty()) return;
        each_bit(S.leq[i], [&](int t) {
          if (t == i) return;
          for (auto [u, su] : sh.apps_of[i]) {
            const int tu = sh.apply(t, u);
            if (tu >= 0) push_leq(su, tu, just(Rule::Point, {leq_key(i, t)}, {u}));
          }
        });
        return;
      }
      case Rule::Mono:
      case Rule::Anti: {
        const bool mono = rule == Rule::Mono;
        const Sign sg = mono ? Sign::Plus : Sign::Minus;
        if (!sh.is_const(i) || !S.tag(i, sg)) return;
        for (auto [t, ft] : sh.apps_of[i]) {
          each_bit(S.leq[t], [&](int u) {
            if (u == t) return;
            const int fu = sh.apply(i, u);
            if (fu < 0) return;
            Justification j = just(rule, {pol_key(i, sg), leq_key(t, u)});
            if (mono) {
              push_leq(ft, fu, std::move(j));
            } else {
              push_leq(fu, ft, std::move(j));
            }
          });
        }
        return;
      }
      case Rule::Wc1:
      case Rule::Wc2: {
        const Sign sf = rule == Rule::Wc1 ? Sign::Plus : Sign::Minus;
        const Sign sg = rule == Rule::Wc1 ? Sign::Minus : Sign::Plus;
        if (!sh.is_const(i) || !S.tag(i, sf)) return;
        for (int g : sh.consts_of_type[sh.type_id[i]]) {
          if (!S.leq[i].test(g) || !S.tag(g, sg)) continue;
          std::size_t count = 0;
          for (auto [t, ft] : sh.apps_of[i]) {
            for (auto [u, gu] : sh.apps_of[g]) {
              if (++count > budget_.max_wc_candidates) {
                capped = 1;
                break;
              }
              push_leq(ft, gu, just(rule, {pol_key(i, sf), pol_key(g, sg), leq_key(i, g)}, {t, u}));
            }
            if (count > budget_.max_wc_candidates) break;
          }
        }
        return;
      }
      case Rule::Wc3a: {  // g <= f, k <= h, f t <= k u  =>  g <= h
        const int f = sh.head[i];
        if (f < 0) return;
        const auto& fam = sh.consts_of_type[sh.type_id[f]];
        each_bit(S.leq[i], [&](int j) {
          const int k = sh.head[j];
          if (k < 0 || sh.type_id[k] != sh.type_id[f]) return;
          for (int g : fam) {
            if (!S.leq[g].test(f)) continue;
            for (int h : fam) {
              if (!S.leq[k].test(h) || S.leq[g].test(h)) continue;
              for (const auto& p : kWc3) {
                if (S.tag(f, p.f) && S.tag(g, p.g) && S.tag(h, p.h) && S.tag(k, p.k)) {
                  out.push_back({leq_key(g, h),
                                 just(p.rule, {pol_key(f, p.f), pol_key(g, p.g), pol_key(h, p.h),
                                               pol_key(k, p.k), leq_key(g, f), leq_key(k, h),
                                               leq_key(i, j)})});
                  break;
                }
              }
            }
          }
        });
        return;
      }
      case Rule::Trans: {
        const auto& rows = cfg_.equational ? S.eq : S.leq;
        const FactKind kind = cfg_.equational ? FactKind::Eq : FactKind::Leq;
        Row reach(sh.n);
        each_bit(rows[i], [&](int k) {
          if (k != i) reach |= rows[k];
        });
        reach -= rows[i];
        each_bit(reach, [&](int j) {
          each_bit(rows[i], [&](int k) {
            if (k == i || !rows[k].test(j)) return;
            if (!reach.test(j)) return;  // already emitted through an earlier k
            out.push_back({fact_key(kind, i, j),
                           just(Rule::Trans, {fact_key(kind, i, k), fact_key(kind, k, j)})});
            reach.reset(j);
          });
        });
        return;
      }
      case Rule::Pos: {  // s <= t, t <= s  =>  f s <= f t   (f any constant)
        if (!sh.is_const(i)) return;
        for (auto [s, fs] : sh.apps_of[i]) {
          each_bit(S.leq[s], [&](int t) {
            if (t == s || !S.leq[t].test(s)) return;
            const int ft = sh.apply(i, t);
            if (ft >= 0) push_leq(fs, ft, just(Rule::Pos, {leq_key(s, t), leq_key(t, s)}, {i}));
          });
        }
        return;
      }
      case Rule::Symm:
        each_bit(S.eq[i], [&](int q) { push_eq(q, i, just(Rule::Symm, {eq_key(i, q)})); });
        return;
      case Rule::Weak:
        each_bit(S.eq[i], [&](int q) { push_leq(i, q, just(Rule::Weak, {eq_key(i, q)})); });
        return;
      case Rule::Posp:
        each_bit(S.leq[i], [&](int q) {
          if (S.leq[q].test(i)) push_eq(i, q, just(Rule::Posp, {leq_key(i, q), leq_key(q, i)}));
        });
        return;
      case Rule::Cong: {  // t = t', u = u'  =>  t u = t' u'
        if (sh.is_const(i)) return;
        const int t = sh.fun[i], u = sh.arg[i];
        each_bit(S.eq[t], [&](int t2) {
          each_bit(S.eq[u], [&](int u2) {
            const int j = sh.apply(t2, u2);
            if (j >= 0) push_eq(i, j, just(Rule::Cong, {eq_key(t, t2), eq_key(u, u2)}));
          });
        });
        return;
      }
      case Rule::PolPlus:
      case Rule::PolMinus: {
        const Sign sg = rule == Rule::PolPlus ? Sign::Plus : Sign::Minus;
        if (!sh.is_const(i) || !S.tag(i, sg)) return;
        for (int g : sh.consts_of_type[sh.type_id[i]]) {
          if (g == i || S.tag(g, sg) || !S.leq[i].test(g) || !S.leq[g].test(i)) continue;
          out.push_back({pol_key(g, sg), just(rule, {pol_key(i, sg), leq_key(i, g), leq_key(g, i)})});
        }
        return;
      }
      default: return;
    }
  }

  const Theory& thy_;
  const CalculusConfig& cfg_;
  Saturation& s_;
  Shape shape_;
  SearchBudget budget_;
  Snapshot snap_;
};

}  // namespace

std::optional<FactKey> Saturation::key_of(const Assertion& a) const {
  if (a.is_pol()) {
    for (std::size_t i = 0; i < universe.size(); ++i) {
      if (universe[i].is_const() && universe[i].name() == a.constant) {
        return fact_key(FactKind::Pol, i, a.sign == Sign::Plus ? 0 : 1);
      }
    }
    return std::nullopt;
  }
  auto i = universe.find(a.lhs);
  auto j = universe.find(a.rhs);
  if (!i || !j) return std::nullopt;
  return fact_key(a.is_eq() ? FactKind::Eq : FactKind::Leq, *i, *j);
}

bool Saturation::has(FactKey k) const {
  const std::size_t i = fact_i(k), j = fact_j(k);
  switch (fact_kind(k)) {
    case FactKind::Leq: return leq[i].test(j);
    case FactKind::Eq: return eq[i].test(j);
    case FactKind::Pol: return (j == 0 ? pol_plus : pol_minus)[i] != 0;
  }
  return false;
}

bool Saturation::has(const Assertion& a) const {
  auto k = key_of(a);
  return k && has(*k);
}

Assertion Saturation::assertion_of(FactKey k) const {
  const std::size_t i = fact_i(k), j = fact_j(k);
  switch (fact_kind(k)) {
    case FactKind::Leq: return Assertion::leq(universe[i], universe[j]);
    case FactKind::Eq: return Assertion::eq(universe[i], universe[j]);
    case FactKind::Pol: return Assertion::pol(universe[i].name(), j == 0 ? Sign::Plus : Sign::Minus);
  }
  return {};
}

std::vector<Assertion> Saturation::facts() const {
  std::vector<FactKey> keys;
  keys.reserve(why.size());
  for (const auto& [k, j] : why) keys.push_back(k);
  std::sort(keys.begin(), keys.end());
  std::vector<Assertion> out;
  out.reserve(keys.size());
  for (FactKey k : keys) out.push_back(assertion_of(k));
  return out;
}

ProofTree Saturation::proof_of(FactKey k) const {
  const Justification& j = why.at(k);
  ProofTree t;
  switch (j.rule) {
    case Rule::Axiom: t = ProofTree::axiom_leaf(j.axiom); break;
    case Rule::SigOrder:
      t = ProofTree::sig_order(universe[fact_i(k)].name(), universe[fact_j(k)].name());
      break;
    case Rule::SigPol:
      t = ProofTree::sig_pol(universe[fact_i(k)].name(), fact_j(k) == 0 ? Sign::Plus : Sign::Minus);
      break;
    default: {
      std::vector<ProofTree> prem;
      prem.reserve(j.premises.size());
      for (FactKey p : j.premises) prem.push_back(proof_of(p));
      std::vector<Term> terms;
      for (int ti : j.terms) terms.push_back(universe[ti]);
      t = ProofTree::node(j.rule, std::move(prem), std::move(terms));
    }
  }
  t.conclusion = assertion_of(k);
  return t;
}

std::optional<ProofTree> Saturation::proof_of(const Assertion& a) const {
  auto k = key_of(a);
  if (!k || !has(*k)) return std::nullopt;
  return proof_of(*k);
}

Saturation saturate(const Theory& thy, const CalculusConfig& cfg, TermUniverse u,
                    const SearchBudget& budget, Exec exec, const std::optional<Assertion>& stop_at) {
  Saturation s;
  s.universe = std::move(u);
  s.cfg = cfg;
  Engine e(thy, cfg, s, budget);
  e.init();
  // sentinel instead of optional: gcc misreports the optional as uninitialized
  FactKey stop_key = ~FactKey{0};
  if (stop_at) stop_key = s.key_of(*stop_at).value_or(stop_key);
  const bool watch = stop_key != ~FactKey{0};
  if (watch && s.has(stop_key)) {
    s.stopped_early = true;
    return s;
  }
  for (std::uint32_t r = 1; r <= budget.max_rounds; ++r) {
    const std::size_t added = e.round(r, exec == Exec::Parallel);
    s.rounds = r;
    if (added == 0) {
      s.fixpoint = true;
      break;
    }
    if (watch && s.has(stop_key)) {
      s.stopped_early = true;
      break;
    }
  }
  return s;
}

ProveResult prove(const Theory& thy, const Assertion& goal, const CalculusConfig& cfg,
                  const UniversePolicy& policy, const SearchBudget& budget, Exec exec) {
  check_assertion(goal, thy.sig);
  ProveResult r;
  TermUniverse u = build_universe(thy, {goal}, policy, budget);
  r.universe_size = u.size();
  r.universe_truncated = u.truncated;
  Saturation s = saturate(thy, cfg, std::move(u), budget, exec, goal);
  r.rounds = s.rounds;
  if (auto tree = s.proof_of(goal)) {
    const Verdict v = check_proof_of(*tree, thy, cfg, goal);
    if (!v.accepted) {
      throw std::logic_error("internal: reconstructed proof rejected at " + v.path + ": " + v.reason);
    }
    r.proof = std::move(tree);
    r.complete = true;
    return r;
  }
  r.complete = s.complete();
  return r;
}

}  // namespace tonic
