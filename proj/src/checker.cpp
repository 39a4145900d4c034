#include "tonic/checker.hpp"

#include "tonic/error.hpp"

namespace tonic {

namespace {

struct Reject {
  std::string path;
  std::string reason;
};

struct WcPattern {
  Rule rule;
  Sign f, g, h, k;
};

constexpr WcPattern kWc3[] = {
    {Rule::Wc3a, Sign::Plus, Sign::Minus, Sign::Plus, Sign::Minus},
    {Rule::Wc3b, Sign::Minus, Sign::Plus, Sign::Minus, Sign::Plus},
    {Rule::Wc3c, Sign::Plus, Sign::Minus, Sign::Minus, Sign::Plus},
    {Rule::Wc3d, Sign::Minus, Sign::Plus, Sign::Plus, Sign::Minus},
};

class Checker {
 public:
  Checker(const Theory& thy, const CalculusConfig& cfg) : thy_(thy), cfg_(cfg) {}

  Assertion check(const ProofTree& t, const std::string& path) {
    if (!cfg_.enabled(t.rule)) fail(path, std::string("rule disabled: ") + rule_name(t.rule));
    switch (t.rule) {
      case Rule::Axiom: {
        if (t.axiom >= thy_.axioms.size()) {
          fail(path, "leaf not in Γ: axiom " + std::to_string(t.axiom) + " does not exist");
        }
        const Assertion& a = thy_.axioms[t.axiom];
        if (a.is_pol()) fail(path, "leaf not in Γ: axiom is a polarity statement");
        return a;
      }
      case Rule::SigOrder: {
        auto a = thy_.sig.find(t.lo);
        auto b = thy_.sig.find(t.hi);
        if (!a || !b || !(a->type == b->type) || !thy_.sig.leq(t.lo, t.hi)) {
          fail(path, "leaf not in signature: " + t.lo + " <= " + t.hi);
        }
        return Assertion::leq(Term::constant(t.lo, a->type), Term::constant(t.hi, b->type));
      }
      case Rule::SigPol: {
        if (!thy_.sig.tagged(t.lo, t.sign)) {
          fail(path, std::string("leaf not in signature: ") + t.lo + sign_char(t.sign));
        }
        return Assertion::pol(t.lo, t.sign);
      }
      default: break;
    }

    std::vector<Assertion> p;
    p.reserve(t.premises.size());
    for (std::size_t i = 0; i < t.premises.size(); ++i) {
      p.push_back(check(t.premises[i], path + "." + std::to_string(i)));
    }
    try {
      return infer(t, p, path);
    } catch (const TypeError& e) {
      fail(path, std::string("ill-typed conclusion: ") + e.what());
    }
  }

 private:
  [[noreturn]] static void fail(const std::string& path, std::string reason) {
    throw Reject{path, std::move(reason)};
  }

  static void arity(const ProofTree& t, const std::string& path, std::size_t premises,
                    std::size_t terms) {
    if (t.premises.size() != premises) {
      fail(path, std::string(rule_name(t.rule)) + " needs " + std::to_string(premises) +
                     " premises, got " + std::to_string(t.premises.size()));
    }
    if (t.terms.size() != terms) {
      fail(path, std::string(rule_name(t.rule)) + " needs " + std::to_string(terms) +
                     " term payloads, got " + std::to_string(t.terms.size()));
    }
  }

  static void want(const Assertion& a, Assertion::Kind k, const std::string& path, std::size_t i) {
    if (a.kind != k) {
      static const char* names[] = {"an inequality", "an identity", "a polarity fact"};
      fail(path, "premise " + std::to_string(i) + " must be " + names[static_cast<int>(k)] +
                     ", got " + render(a));
    }
  }

  static void want_pol(const Assertion& a, Sign s, const std::string& path, std::size_t i) {
    want(a, Assertion::Kind::Pol, path, i);
    if (a.sign != s) {
      fail(path, "premise " + std::to_string(i) + " must be a " + sign_char(s) + " polarity fact");
    }
  }

  // The term must be exactly the signature constant `name`.
  static void want_const(const Term& t, const std::string& name, const std::string& path,
                         const std::string& what) {
    if (!t.is_const() || t.name() != name) {
      fail(path, what + ": expected " + name + ", got " + render(t));
    }
  }

  Term constant(const std::string& name, const std::string& path) const {
    auto c = thy_.sig.find(name);
    if (!c) fail(path, "unknown constant " + name);
    return Term::constant(name, c->type);
  }

  void check_term(const Term& t, const std::string& path) const {
    try {
      type_of(t, thy_.sig);
    } catch (const InputError& e) {
      fail(path, std::string("term payload not over the signature: ") + e.what());
    }
  }

  Assertion infer(const ProofTree& t, const std::vector<Assertion>& p, const std::string& path) {
    using K = Assertion::Kind;
    for (const auto& term : t.terms) check_term(term, path);
    switch (t.rule) {
      case Rule::Refl: {
        arity(t, path, 0, 1);
        return cfg_.equational ? Assertion::eq(t.terms[0], t.terms[0])
                               : Assertion::leq(t.terms[0], t.terms[0]);
      }
      case Rule::Trans: {
        arity(t, path, 2, 0);
        const K k = cfg_.equational ? K::Eq : K::Leq;
        want(p[0], k, path, 0);
        want(p[1], k, path, 1);
        if (!(p[0].rhs == p[1].lhs)) {
          fail(path, "trans middle terms differ: " + render(p[0].rhs) + " vs " + render(p[1].lhs));
        }
        return k == K::Eq ? Assertion::eq(p[0].lhs, p[1].rhs) : Assertion::leq(p[0].lhs, p[1].rhs);
      }
      case Rule::Point: {
        arity(t, path, 1, 1);
        want(p[0], K::Leq, path, 0);
        return Assertion::leq(Term::apply(p[0].lhs, t.terms[0]), Term::apply(p[0].rhs, t.terms[0]));
      }
      case Rule::Mono:
      case Rule::Anti: {
        arity(t, path, 2, 0);
        const bool mono = t.rule == Rule::Mono;
        want_pol(p[0], mono ? Sign::Plus : Sign::Minus, path, 0);
        want(p[1], K::Leq, path, 1);
        const Term f = constant(p[0].constant, path);
        const Term ft = Term::apply(f, p[1].lhs);
        const Term fu = Term::apply(f, p[1].rhs);
        return mono ? Assertion::leq(ft, fu) : Assertion::leq(fu, ft);
      }
      case Rule::Wc1:
      case Rule::Wc2: {
        arity(t, path, 3, 2);
        const bool one = t.rule == Rule::Wc1;
        want_pol(p[0], one ? Sign::Plus : Sign::Minus, path, 0);
        want_pol(p[1], one ? Sign::Minus : Sign::Plus, path, 1);
        want(p[2], K::Leq, path, 2);
        want_const(p[2].lhs, p[0].constant, path, "premise 2 left side");
        want_const(p[2].rhs, p[1].constant, path, "premise 2 right side");
        const Term f = constant(p[0].constant, path);
        const Term g = constant(p[1].constant, path);
        return Assertion::leq(Term::apply(f, t.terms[0]), Term::apply(g, t.terms[1]));
      }
      case Rule::Wc3a:
      case Rule::Wc3b:
      case Rule::Wc3c:
      case Rule::Wc3d: {
        arity(t, path, 7, 0);
        const WcPattern* pat = nullptr;
        for (const auto& w : kWc3)
          if (w.rule == t.rule) pat = &w;
        want_pol(p[0], pat->f, path, 0);
        want_pol(p[1], pat->g, path, 1);
        want_pol(p[2], pat->h, path, 2);
        want_pol(p[3], pat->k, path, 3);
        for (std::size_t i = 4; i < 7; ++i) want(p[i], K::Leq, path, i);
        const std::string &f = p[0].constant, &g = p[1].constant, &h = p[2].constant,
                          &k = p[3].constant;
        want_const(p[4].lhs, g, path, "premise 4 (g <= f) left side");
        want_const(p[4].rhs, f, path, "premise 4 (g <= f) right side");
        want_const(p[5].lhs, k, path, "premise 5 (k <= h) left side");
        want_const(p[5].rhs, h, path, "premise 5 (k <= h) right side");
        const Term& ft = p[6].lhs;
        const Term& ku = p[6].rhs;
        if (ft.is_const()) fail(path, "premise 6 left side must be an application of " + f);
        if (ku.is_const()) fail(path, "premise 6 right side must be an application of " + k);
        want_const(ft.fun(), f, path, "premise 6 left head");
        want_const(ku.fun(), k, path, "premise 6 right head");
        if (!(ft.fun().type() == ku.fun().type())) {
          fail(path, "f and k must have the same type");
        }
        return Assertion::leq(constant(g, path), constant(h, path));
      }
      case Rule::Pos: {
        arity(t, path, 2, 1);
        want(p[0], K::Leq, path, 0);
        want(p[1], K::Leq, path, 1);
        if (!(p[0].lhs == p[1].rhs) || !(p[0].rhs == p[1].lhs)) {
          fail(path, "pos premises must be s <= t and t <= s");
        }
        const Term& f = t.terms[0];
        if (!f.is_const()) fail(path, "pos applies only to signature constants, got " + render(f));
        return Assertion::leq(Term::apply(f, p[0].lhs), Term::apply(f, p[0].rhs));
      }
      case Rule::Symm: {
        arity(t, path, 1, 0);
        want(p[0], K::Eq, path, 0);
        return Assertion::eq(p[0].rhs, p[0].lhs);
      }
      case Rule::Weak: {
        arity(t, path, 1, 0);
        want(p[0], K::Eq, path, 0);
        return Assertion::leq(p[0].lhs, p[0].rhs);
      }
      case Rule::Posp: {
        arity(t, path, 2, 0);
        want(p[0], K::Leq, path, 0);
        want(p[1], K::Leq, path, 1);
        if (!(p[0].lhs == p[1].rhs) || !(p[0].rhs == p[1].lhs)) {
          fail(path, "posp premises must be p <= q and q <= p");
        }
        return Assertion::eq(p[0].lhs, p[0].rhs);
      }
      case Rule::Cong: {
        arity(t, path, 2, 0);
        want(p[0], K::Eq, path, 0);
        want(p[1], K::Eq, path, 1);
        return Assertion::eq(Term::apply(p[0].lhs, p[1].lhs), Term::apply(p[0].rhs, p[1].rhs));
      }
      case Rule::PolPlus:
      case Rule::PolMinus: {
        arity(t, path, 3, 0);
        const Sign s = t.rule == Rule::PolPlus ? Sign::Plus : Sign::Minus;
        want_pol(p[0], s, path, 0);
        want(p[1], K::Leq, path, 1);
        want(p[2], K::Leq, path, 2);
        want_const(p[1].lhs, p[0].constant, path, "premise 1 left side");
        if (!p[1].rhs.is_const()) fail(path, "pol conclusion must be about a constant");
        const std::string& g = p[1].rhs.name();
        want_const(p[2].lhs, g, path, "premise 2 left side");
        want_const(p[2].rhs, p[0].constant, path, "premise 2 right side");
        if (!thy_.sig.find(g)) fail(path, "unknown constant " + g);
        return Assertion::pol(g, s);
      }
      default: fail(path, "not an inference rule");
    }
  }

  const Theory& thy_;
  const CalculusConfig& cfg_;
};

}  // namespace

Verdict check_proof(const ProofTree& tree, const Theory& thy, const CalculusConfig& cfg) {
  Verdict v;
  try {
    v.conclusion = Checker(thy, cfg).check(tree, "root");
    v.accepted = true;
  } catch (const Reject& r) {
    v.path = r.path;
    v.reason = r.reason;
  }
  return v;
}

Verdict check_proof_of(const ProofTree& tree, const Theory& thy, const CalculusConfig& cfg,
                       const Assertion& goal) {
  Verdict v = check_proof(tree, thy, cfg);
  if (v.accepted && !(*v.conclusion == goal)) {
    v.accepted = false;
    v.path = "root";
    v.reason = "proof concludes " + render(*v.conclusion) + ", not " + render(goal);
  }
  return v;
}

}  // namespace tonic
