#include "tonic/universe.hpp"

#include <charconv>

#include "tonic/error.hpp"

namespace tonic {

UniversePolicy UniversePolicy::parse(std::string_view s) {
  if (s == "subterms") return subterms();
  if (s.substr(0, 5) == "apps:") {
    std::size_t n = 0;
    const auto rest = s.substr(5);
    auto [p, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), n);
    if (ec == std::errc() && p == rest.data() + rest.size() && !rest.empty()) return apps(n);
  }
  throw InputError("bad universe policy '" + std::string(s) + "' (want subterms or apps:N)");
}

std::string UniversePolicy::to_string() const {
  if (kind == Kind::Subterms) return "subterms";
  std::string s = "apps:" + std::to_string(rounds);
  if (max_depth) s += " max-depth=" + std::to_string(*max_depth);
  return s;
}

int TermUniverse::add(const Term& t) {
  auto [it, inserted] = index_.try_emplace(t, static_cast<int>(terms_.size()));
  if (inserted) terms_.push_back(t);
  return it->second;
}

void TermUniverse::add_closed(const Term& t) {
  for (const auto& s : subterms(t)) add(s);
}

std::optional<int> TermUniverse::find(const Term& t) const {
  auto it = index_.find(t);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

TermUniverse build_universe(const Theory& thy, const std::vector<Assertion>& goals,
                            const UniversePolicy& policy, const SearchBudget& budget) {
  TermUniverse u;
  u.policy = policy;
  for (const auto& c : thy.sig.constants()) u.add(Term::constant(c.name, c.type));
  auto add_assertion = [&](const Assertion& a) {
    if (a.is_pol()) {
      u.add(make_const(thy.sig, a.constant));
      return;
    }
    u.add_closed(a.lhs);
    u.add_closed(a.rhs);
  };
  for (const auto& a : thy.axioms) add_assertion(a);
  for (const auto& g : goals) add_assertion(g);
  if (u.size() > budget.max_universe) u.truncated = true;
  if (policy.kind == UniversePolicy::Kind::Subterms) return u;

  for (std::size_t round = 0; round < policy.rounds && !u.truncated; ++round) {
    std::vector<Term> fresh;
    const std::size_t n = u.size();
    for (std::size_t i = 0; i < n && !u.truncated; ++i) {
      const Term& f = u[i];
      if (!f.type().is_arrow()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!(u[j].type() == f.type().domain())) continue;
        Term app = Term::apply(f, u[j]);
        if (policy.max_depth && app.depth() > *policy.max_depth) continue;
        if (u.contains(app)) continue;
        if (n + fresh.size() >= budget.max_universe) {
          u.truncated = true;
          break;
        }
        fresh.push_back(std::move(app));
      }
    }
    if (fresh.empty()) break;
    for (const auto& t : fresh) u.add(t);
  }
  return u;
}

Theory absorb_signature_order(const Theory& thy) {
  Theory out = thy;
  for (const auto& [lo, hi] : thy.sig.order_facts()) {
    out.axioms.push_back(Assertion::leq(make_const(thy.sig, lo), make_const(thy.sig, hi)));
  }
  return out;
}

}  // namespace tonic
