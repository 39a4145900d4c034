#include "tonic/semantics.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <set>
#include <sstream>

#include "tonic/error.hpp"
#include "tonic/lexer.hpp"

namespace tonic {

namespace {

constexpr Value kCacheLeq = 1024;         // spaces up to this size keep a leq matrix
constexpr std::size_t kCacheTags = 1u << 22;  // budget for precomputed tag work

}  // namespace

// ---------------------------------------------------------------- Space

std::shared_ptr<const Space> Space::base(Type type, FinPreorder order) {
  auto s = std::make_shared<Space>();
  s->type_ = std::move(type);
  s->size_ = order.size();
  s->order_ = std::move(order);
  return s;
}

std::shared_ptr<const Space> Space::arrow(Type type, std::shared_ptr<const Space> dom,
                                          std::shared_ptr<const Space> cod, std::size_t max_cells) {
  const Value n = dom->size(), m = cod->size();
  Value size = 1;
  for (Value i = 0; i < n; ++i) {
    if (m != 0 && size > std::numeric_limits<Value>::max() / m) size = std::numeric_limits<Value>::max();
    else size *= m;
    if (size > max_cells) break;
  }
  if (n > 0 && size > max_cells / n) {
    throw BudgetExceeded("space of " + to_string(type) + " needs " + std::to_string(m) + "^" +
                         std::to_string(n) + " tables, over the cell budget of " + std::to_string(max_cells));
  }
  auto s = std::make_shared<Space>();
  s->type_ = std::move(type);
  s->dom_ = std::move(dom);
  s->cod_ = std::move(cod);
  s->size_ = size;
  s->pow_.resize(n);
  Value p = 1;
  for (Value i = 0; i < n; ++i) {
    s->pow_[i] = p;
    p *= m;
  }
  if (size <= kCacheLeq) {
    s->leq_bits_.assign((size * size + 63) / 64, 0);
    for (Value a = 0; a < size; ++a)
      for (Value b = 0; b < size; ++b) {
        bool ok = true;
        for (Value x = 0; x < n && ok; ++x) ok = s->cod_->leq(s->apply(a, x), s->apply(b, x));
        if (ok) s->leq_bits_[(a * size + b) / 64] |= std::uint64_t{1} << ((a * size + b) % 64);
      }
  }
  if (size * n * n <= kCacheTags) {
    s->mono_.resize(size);
    s->anti_.resize(size);
    for (Value f = 0; f < size; ++f) {
      bool mono = true, anti = true;
      for (Value x = 0; x < n; ++x)
        for (Value y = 0; y < n; ++y) {
          if (!s->dom_->leq(x, y)) continue;
          const Value fx = s->apply(f, x), fy = s->apply(f, y);
          mono = mono && s->cod_->leq(fx, fy);
          anti = anti && s->cod_->leq(fy, fx);
        }
      s->mono_[f] = mono;
      s->anti_[f] = anti;
    }
  }
  return s;
}

bool Space::leq(Value a, Value b) const {
  if (!is_arrow()) return order_.leq(a, b);
  if (!leq_bits_.empty()) return (leq_bits_[(a * size_ + b) / 64] >> ((a * size_ + b) % 64)) & 1;
  for (Value x = 0; x < dom_->size(); ++x)
    if (!cod_->leq(apply(a, x), apply(b, x))) return false;
  return true;
}

std::vector<Value> Space::table(Value f) const {
  std::vector<Value> t(dom_->size());
  for (Value x = 0; x < t.size(); ++x) t[x] = apply(f, x);
  return t;
}

Value Space::from_table(const std::vector<Value>& t) const {
  Value f = 0;
  for (Value x = 0; x < t.size(); ++x) f += t[x] * pow_[x];
  return f;
}

bool Space::monotone(Value f) const {
  if (!mono_.empty()) return mono_[f];
  for (Value x = 0; x < dom_->size(); ++x)
    for (Value y = 0; y < dom_->size(); ++y)
      if (dom_->leq(x, y) && !cod_->leq(apply(f, x), apply(f, y))) return false;
  return true;
}

bool Space::antitone(Value f) const {
  if (!anti_.empty()) return anti_[f];
  for (Value x = 0; x < dom_->size(); ++x)
    for (Value y = 0; y < dom_->size(); ++y)
      if (dom_->leq(x, y) && !cod_->leq(apply(f, y), apply(f, x))) return false;
  return true;
}

std::string Space::render(Value v) const {
  if (!is_arrow()) return quote_ident(order_.name(v));
  std::string out = "[";
  for (Value x = 0; x < dom_->size(); ++x) {
    if (x) out += ' ';
    out += cod_->render(apply(v, x));
  }
  return out + "]";
}

PolarizedFinPreorder function_space(const FinPreorder& p, const FinPreorder& q, std::size_t max_cells) {
  const Type b = Type::base("P"), c = Type::base("Q");
  const auto s = Space::arrow(Type::arrow(b, c), Space::base(b, p), Space::base(c, q), max_cells);
  std::vector<std::string> names(s->size());
  for (Value f = 0; f < s->size(); ++f) names[f] = s->render(f);
  std::vector<char> m(s->size() * s->size());
  for (Value f = 0; f < s->size(); ++f)
    for (Value g = 0; g < s->size(); ++g) m[f * s->size() + g] = s->leq(f, g);
  PolarizedFinPreorder out(FinPreorder(std::move(names), std::move(m)));
  for (Value f = 0; f < s->size(); ++f) {
    out.plus[f] = s->monotone(f);
    out.minus[f] = s->antitone(f);
  }
  return out;
}

// ---------------------------------------------------------------- FullStructure

FullStructure::FullStructure(std::map<std::string, FinPreorder> bases, std::size_t max_cells)
    : bases_(std::move(bases)), max_cells_(max_cells) {}

std::shared_ptr<const Space> FullStructure::get(const Type& t) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (auto it = spaces_.find(t); it != spaces_.end()) return it->second;
  }
  std::shared_ptr<const Space> s;
  if (t.is_base()) {
    auto it = bases_.find(t.name());
    if (it == bases_.end()) throw InputError("structure has no carrier for base type " + t.name());
    s = Space::base(t, it->second);
  } else {
    s = Space::arrow(t, get(t.domain()), get(t.codomain()), max_cells_);
  }
  std::lock_guard<std::mutex> lock(mu_);
  // a racing reader may have built it first; keep the earlier one
  return spaces_.emplace(t, std::move(s)).first->second;
}

const Space& FullStructure::space(const Type& t) const { return *get(t); }

// ---------------------------------------------------------------- evaluation

Value eval(const Term& t, const Model& m) {
  if (t.is_const()) {
    auto it = m.interp.find(t.name());
    if (it == m.interp.end()) throw InputError("constant '" + t.name() + "' is not interpreted");
    return it->second;
  }
  const Value f = eval(t.fun(), m);
  return m.structure->space(t.fun().type()).apply(f, eval(t.arg(), m));
}

bool satisfies(const Model& m, const Assertion& a, EqReading eq) {
  if (a.is_pol()) {
    auto it = m.interp.find(a.constant);
    if (it == m.interp.end()) throw InputError("constant '" + a.constant + "' is not interpreted");
    const Space& s = m.structure->space(m.types.at(a.constant));
    return a.sign == Sign::Plus ? s.monotone(it->second) : s.antitone(it->second);
  }
  const Space& s = m.structure->space(a.lhs.type());
  const Value l = eval(a.lhs, m), r = eval(a.rhs, m);
  if (a.kind == Assertion::Kind::Leq) return s.leq(l, r);
  return eq == EqReading::Identity ? l == r : s.leq(l, r) && s.leq(r, l);
}

bool is_model(const Model& m, const Theory& thy, EqReading eq) {
  const Signature& sig = thy.sig;
  try {
    for (const auto& c : sig.constants()) {
      auto it = m.interp.find(c.name);
      if (it == m.interp.end()) return false;
      const Space& s = m.structure->space(c.type);
      if (it->second >= s.size()) return false;
      if (c.type.is_arrow()) {
        if (sig.tagged(c.name, Sign::Plus) && !s.monotone(it->second)) return false;
        if (sig.tagged(c.name, Sign::Minus) && !s.antitone(it->second)) return false;
      }
    }
    for (const auto& [type, fam] : sig.families()) {
      const Space& s = m.structure->space(type);
      for (auto [i, j] : fam.order.strict_pairs()) {
        if (!s.leq(m.interp.at(fam.order.name(i)), m.interp.at(fam.order.name(j)))) return false;
      }
    }
    for (const auto& ax : thy.axioms)
      if (!satisfies(m, ax, eq)) return false;
  } catch (const InputError&) {
    return false;
  }
  return true;
}

// ---------------------------------------------------------------- order properties

bool is_weakly_complete(const FinPreorder& p) {
  const std::size_t n = p.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y) {
      bool upper = false, lower = false;
      for (std::size_t z = 0; z < n && !(upper && lower); ++z) {
        upper = upper || (p.leq(x, z) && p.leq(y, z));
        lower = lower || (p.leq(z, x) && p.leq(z, y));
      }
      if (!upper || !lower) return false;
    }
  return true;
}

bool is_complete(const FinPreorder& p) {
  const std::size_t n = p.size();
  if (n > 16) throw InputError("is_complete enumerates subsets; carrier of " + std::to_string(n) + " is too large");
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<std::size_t> ub;
    for (std::size_t z = 0; z < n; ++z) {
      bool above = true;
      for (std::size_t x = 0; x < n && above; ++x)
        if ((mask >> x) & 1) above = p.leq(x, z);
      if (above) ub.push_back(z);
    }
    const bool has_least = std::any_of(ub.begin(), ub.end(), [&](std::size_t z) {
      return std::all_of(ub.begin(), ub.end(), [&](std::size_t w) { return p.leq(z, w); });
    });
    if (!has_least) return false;
  }
  return true;
}

bool is_poset(const FinPreorder& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p.leq(i, j) && p.leq(j, i)) return false;
  return true;
}

std::vector<FinPreorder> all_preorders(std::size_t n) {
  static std::mutex mu;
  static std::map<std::size_t, std::vector<FinPreorder>> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  if (n > 5) throw InputError("all_preorders is limited to carriers of at most 5 elements");
  std::vector<std::pair<std::size_t, std::size_t>> off;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) off.emplace_back(i, j);
  std::vector<FinPreorder> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << off.size()); ++mask) {
    FinPreorder p = FinPreorder::discrete(n);
    for (std::size_t k = 0; k < off.size(); ++k)
      if ((mask >> k) & 1) p.set_leq(off[k].first, off[k].second, true);
    if (p.is_transitive()) out.push_back(std::move(p));
  }
  return cache[n] = out;
}

// ---------------------------------------------------------------- search

namespace {

// An assertion compiled against one structure: nodes in post-order, each a
// constant slot or an application with its function space resolved.
struct Plan {
  struct Node {
    int slot = -1;
    int fun = -1, arg = -1;
    const Space* fs = nullptr;
  };
  std::vector<Node> nodes;
  Assertion::Kind kind = Assertion::Kind::Leq;
  int lhs = -1, rhs = -1;
  const Space* space = nullptr;  // of the compared terms, or of the Pol constant
  int pol_slot = -1;
  Sign sign = Sign::Plus;
  int last = -1;  // largest slot mentioned

  int compile(const Term& t, const FullStructure& st, const std::map<std::string, int>& slots) {
    Node n;
    if (t.is_const()) {
      n.slot = slots.at(t.name());
      last = std::max(last, n.slot);
    } else {
      n.fun = compile(t.fun(), st, slots);
      n.arg = compile(t.arg(), st, slots);
      n.fs = &st.space(t.fun().type());
    }
    nodes.push_back(n);
    return static_cast<int>(nodes.size()) - 1;
  }

  bool holds(const std::vector<Value>& v, std::vector<Value>& scratch, EqReading eq) const {
    if (kind == Assertion::Kind::Pol) {
      return sign == Sign::Plus ? space->monotone(v[pol_slot]) : space->antitone(v[pol_slot]);
    }
    scratch.resize(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const Node& n = nodes[i];
      scratch[i] = n.slot >= 0 ? v[n.slot] : n.fs->apply(scratch[n.fun], scratch[n.arg]);
    }
    const Value l = scratch[lhs], r = scratch[rhs];
    if (kind == Assertion::Kind::Leq) return space->leq(l, r);
    return eq == EqReading::Identity ? l == r : space->leq(l, r) && space->leq(r, l);
  }
};

Plan make_plan(const Assertion& a, const FullStructure& st, const Signature& sig,
               const std::map<std::string, int>& slots) {
  Plan p;
  p.kind = a.kind;
  if (a.is_pol()) {
    const auto c = sig.find(a.constant);
    if (!c) throw InputError("undeclared constant '" + a.constant + "'");
    p.pol_slot = slots.at(a.constant);
    p.last = p.pol_slot;
    p.sign = a.sign;
    p.space = &st.space(c->type);
    return p;
  }
  p.lhs = p.compile(a.lhs, st, slots);
  p.rhs = p.compile(a.rhs, st, slots);
  p.space = &st.space(a.lhs.type());
  return p;
}

// Shared per-theory setup: constants, which base types vary, and the
// candidate preorders for each.
struct Problem {
  const Theory* thy = nullptr;
  const Assertion* goal = nullptr;
  EnumOptions opt;
  std::vector<ConstRef> consts;
  std::map<std::string, int> slots;
  std::vector<std::string> base_names;                // every base type, name order
  std::vector<std::vector<FinPreorder>> candidates;   // per base_names entry
  std::size_t combos = 0;
  std::string order_notice;

  Problem(const Theory& t, const Assertion* g, const EnumOptions& o) : thy(&t), goal(g), opt(o) {
    consts = t.sig.constants();
    for (std::size_t i = 0; i < consts.size(); ++i) slots[consts[i].name] = static_cast<int>(i);
    std::vector<Term> extra;
    if (g && !g->is_pol()) extra = {g->lhs, g->rhs};
    std::set<std::string> used;
    for (const auto& ty : occurring_types(t, extra)) {
      if (ty.is_base()) used.insert(ty.name());
      if (ty.order() > o.bounds.max_order && order_notice.empty()) {
        order_notice = "type " + to_string(ty) + " has order " + std::to_string(ty.order()) +
                       " above the bound " + std::to_string(o.bounds.max_order);
      }
    }
    std::set<std::string> names(t.sig.base_types().begin(), t.sig.base_types().end());
    base_names.assign(names.begin(), names.end());
    combos = 1;
    for (const auto& b : base_names) {
      std::vector<FinPreorder> c;
      auto admissible = [&](const FinPreorder& p) {
        return (!o.require_wc || is_weakly_complete(p)) && (!o.require_poset || is_poset(p));
      };
      if (auto it = o.fixed_bases.find(b); it != o.fixed_bases.end()) {
        if (admissible(it->second)) c.push_back(it->second);
      } else if (!used.count(b)) {
        c.push_back(FinPreorder::discrete(1));  // irrelevant to every assertion
      } else {
        for (std::size_t n = 1; n <= o.bounds.max_base; ++n)
          for (auto& p : all_preorders(n))
            if (admissible(p)) c.push_back(std::move(p));
      }
      combos *= c.size();
      candidates.push_back(std::move(c));
    }
  }

  std::map<std::string, FinPreorder> bases(std::size_t combo) const {
    std::map<std::string, FinPreorder> out;
    for (std::size_t k = base_names.size(); k-- > 0;) {
      const auto& c = candidates[k];
      out.emplace(base_names[k], c[combo % c.size()]);
      combo /= c.size();
    }
    return out;
  }
};

enum class Outcome { Done, Stopped, Skipped };

// Backtracking over interpretations for one base assignment. `visit` sees
// each complete interpretation that passes every check; with a goal, only
// those falsifying it.
Outcome search_combo(const Problem& pb, std::size_t combo, std::string* notice,
                     const std::function<bool(const Model&)>& visit) {
  if (!pb.order_notice.empty()) {
    if (notice) *notice = pb.order_notice;
    return Outcome::Skipped;
  }
  const Signature& sig = pb.thy->sig;
  auto st = std::make_shared<FullStructure>(pb.bases(combo), pb.opt.bounds.max_cells);
  const std::size_t n = pb.consts.size();
  std::vector<const Space*> spaces(n);
  std::vector<std::vector<Plan>> checks(n);   // must hold once slot i is assigned
  std::vector<std::vector<Plan>> refute(n);   // goal: must fail
  std::vector<std::vector<std::pair<int, bool>>> order(n);  // (j < i, j <= i?)
  try {
    for (std::size_t i = 0; i < n; ++i) spaces[i] = &st->space(pb.consts[i].type);
    for (const auto& ax : pb.thy->axioms) {
      Plan p = make_plan(ax, *st, sig, pb.slots);
      if (p.last >= 0) checks[p.last].push_back(std::move(p));
    }
    if (pb.goal) {
      Plan p = make_plan(*pb.goal, *st, sig, pb.slots);
      if (p.last >= 0) refute[p.last].push_back(std::move(p));
    }
  } catch (const BudgetExceeded& e) {
    if (notice) *notice = e.what();
    return Outcome::Skipped;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      if (!(pb.consts[i].type == pb.consts[j].type)) continue;
      if (sig.leq(pb.consts[j].name, pb.consts[i].name)) order[i].push_back({static_cast<int>(j), true});
      if (sig.leq(pb.consts[i].name, pb.consts[j].name)) order[i].push_back({static_cast<int>(j), false});
    }
  std::vector<char> plus(n), minus(n);
  for (std::size_t i = 0; i < n; ++i) {
    plus[i] = pb.consts[i].type.is_arrow() && sig.tagged(pb.consts[i].name, Sign::Plus);
    minus[i] = pb.consts[i].type.is_arrow() && sig.tagged(pb.consts[i].name, Sign::Minus);
  }

  std::vector<Value> v(n, 0);
  std::vector<Value> scratch;
  const EqReading eq = pb.opt.eq;
  bool stop = false;
  auto emit = [&] {
    Model m;
    m.structure = st;
    for (std::size_t i = 0; i < n; ++i) m.set(pb.consts[i].name, pb.consts[i].type, v[i]);
    if (!visit(m)) stop = true;
  };
  if (n == 0) {
    if (pb.goal) return Outcome::Done;  // a goal always mentions a constant
    emit();
    return stop ? Outcome::Stopped : Outcome::Done;
  }
  // iterative depth-first search over slots
  std::size_t i = 0;
  std::vector<Value> next(n, 0);
  while (true) {
    if (next[i] >= spaces[i]->size()) {
      if (i == 0) break;
      next[i] = 0;
      --i;
      continue;
    }
    v[i] = next[i]++;
    const Space& s = *spaces[i];
    bool ok = (!plus[i] || s.monotone(v[i])) && (!minus[i] || s.antitone(v[i]));
    for (auto [j, below] : order[i]) {
      if (!ok) break;
      ok = below ? s.leq(v[j], v[i]) : s.leq(v[i], v[j]);
    }
    for (const auto& p : checks[i]) {
      if (!ok) break;
      ok = p.holds(v, scratch, eq);
    }
    for (const auto& p : refute[i]) {
      if (!ok) break;
      ok = !p.holds(v, scratch, eq);
    }
    if (!ok) continue;
    if (i + 1 == n) {
      emit();
      if (stop) return Outcome::Stopped;
    } else {
      ++i;
      next[i] = 0;
    }
  }
  return Outcome::Done;
}

void note(EnumStats& st, std::size_t combo, const std::string& msg) {
  if (st.notices.size() < 20) st.notices.push_back("skipped base assignment " + std::to_string(combo) + ": " + msg);
}

}  // namespace

EnumStats enumerate_models(const Theory& thy, const EnumOptions& opt,
                           const std::function<bool(const Model&)>& visit) {
  const Problem pb(thy, nullptr, opt);
  EnumStats stats;
  for (std::size_t c = 0; c < pb.combos && !stats.stopped; ++c) {
    ++stats.base_assignments;
    std::string notice;
    const Outcome o = search_combo(pb, c, &notice, [&](const Model& m) {
      ++stats.models;
      const bool more = visit(m) && stats.models < opt.bounds.max_models;
      if (!more) stats.stopped = true;
      return more;
    });
    if (o == Outcome::Skipped) {
      ++stats.skipped;
      note(stats, c, notice);
    }
  }
  return stats;
}

std::vector<Model> enumerate_models(const Theory& thy, const EnumOptions& opt) {
  std::vector<Model> out;
  enumerate_models(thy, opt, [&](const Model& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

CountermodelResult find_countermodel(const Theory& thy, const Assertion& goal, const EnumOptions& opt,
                                     Exec exec) {
  CountermodelResult res;
  if (!goal.is_pol() && goal.lhs == goal.rhs) {
    res.exhausted = true;  // t <= t and t = t hold everywhere
    return res;
  }
  const Problem pb(thy, &goal, opt);
  const std::size_t n = pb.combos;
  std::vector<std::optional<Model>> found(n);
  std::vector<char> skipped(n, 0);
  std::vector<std::string> notices(n);
  std::atomic<std::size_t> best{n};
  auto run = [&](std::size_t c) {
    if (c > best.load()) return;
    const Outcome o = search_combo(pb, c, &notices[c], [&](const Model& m) {
      found[c] = m;
      return false;
    });
    if (o == Outcome::Skipped) skipped[c] = 1;
    if (found[c]) {
      std::size_t cur = best.load();
      while (c < cur && !best.compare_exchange_weak(cur, c)) {
      }
    }
  };
  if (exec == Exec::Parallel) {
    const long long total = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 1)
    for (long long c = 0; c < total; ++c) run(static_cast<std::size_t>(c));
  } else {
    for (std::size_t c = 0; c < n && best.load() == n; ++c) run(c);
  }
  const std::size_t stop = best.load();
  for (std::size_t c = 0; c < std::min(stop + 1, n); ++c) {
    ++res.stats.base_assignments;
    if (skipped[c]) {
      ++res.stats.skipped;
      note(res.stats, c, notices[c]);
    }
  }
  if (stop < n) {
    res.model = found[stop];
    res.stats.models = 1;
    res.stats.stopped = true;
  } else {
    res.exhausted = res.stats.skipped == 0;
  }
  return res;
}

CountermodelResult find_countermodel(const Theory& thy, const Assertion& goal, const EnumOptions& opt) {
  return find_countermodel(thy, goal, opt, Exec::Serial);
}

// ---------------------------------------------------------------- dumps

std::string dump_model(const Model& m, const Signature& sig) {
  std::ostringstream os;
  for (const auto& [name, order] : m.structure->bases()) os << render_preorder({name, order});
  for (const auto& c : sig.constants()) {
    os << "val " << quote_ident(c.name) << " = " << m.structure->space(c.type).render(m.interp.at(c.name))
       << ";\n";
  }
  return os.str();
}

namespace {

Value read_value(Cursor& c, const Space& s) {
  if (!s.is_arrow()) {
    const Token t = c.expect(Tok::Ident, "for a base element");
    auto i = s.base_order().index_of(t.text);
    if (!i) c.fail(t, "'" + t.text + "' is not an element of " + to_string(s.type()));
    return *i;
  }
  const Token open = c.expect(Tok::LBrack, "to open a table of type " + to_string(s.type()));
  std::vector<Value> t;
  while (!c.at(Tok::RBrack) && !c.at_end()) t.push_back(read_value(c, s.cod()));
  c.expect(Tok::RBrack, "to close a table");
  if (t.size() != s.dom().size()) {
    c.fail(open, "table of type " + to_string(s.type()) + " needs " + std::to_string(s.dom().size()) +
                     " entries, got " + std::to_string(t.size()));
  }
  return s.from_table(t);
}

}  // namespace

Parsed<Model> load_model(std::string_view text, const Signature& sig, std::size_t max_cells) {
  Parsed<Model> out;
  auto diag = [&](std::size_t line, std::size_t col, std::string msg) {
    out.diagnostics.push_back({Diagnostic::Severity::Error, line, col, std::move(msg)});
  };
  try {
    Cursor c(text);
    std::map<std::string, FinPreorder> bases;
    while (c.at_word("preorder")) {
      c.next();
      const Token name = c.expect(Tok::Ident, "after 'preorder'");
      if (!sig.has_base_type(name.text)) c.fail(name, "unknown base type '" + name.text + "'");
      if (bases.count(name.text)) c.fail(name, "carrier for '" + name.text + "' given twice");
      bases[name.text] = read_preorder_block(c);
    }
    for (const auto& b : sig.base_types())
      if (!bases.count(b)) c.fail("no carrier given for base type '" + b + "'");
    Model m;
    m.structure = std::make_shared<FullStructure>(std::move(bases), max_cells);
    while (!c.at_end()) {
      c.expect_word("val");
      const Token name = c.expect(Tok::Ident, "after 'val'");
      const auto k = sig.find(name.text);
      if (!k) c.fail(name, "undeclared constant '" + name.text + "'");
      if (m.interp.count(name.text)) c.fail(name, "constant '" + name.text + "' given twice");
      c.expect(Tok::Eq, "after the constant");
      m.set(name.text, k->type, read_value(c, m.structure->space(k->type)));
      c.expect(Tok::Semi, "after a value");
    }
    for (const auto& k : sig.constants())
      if (!m.interp.count(k.name)) c.fail("no value given for constant '" + k.name + "'");
    out.value = std::move(m);
  } catch (const ParseFailure& f) {
    diag(f.line, f.col, f.message);
  } catch (const BudgetExceeded& e) {
    diag(1, 1, e.what());
  }
  return out;
}

std::vector<Classification> classify(const Model& m, const Signature& sig) {
  std::vector<Classification> out;
  for (const auto& c : sig.constants()) {
    if (!c.type.is_arrow()) continue;
    const Space& s = m.structure->space(c.type);
    const Value v = m.interp.at(c.name);
    out.push_back({c.name, s.monotone(v), s.antitone(v)});
  }
  return out;
}

}  // namespace tonic
