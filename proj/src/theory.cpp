#include "tonic/theory.hpp"

#include <algorithm>
#include <set>

#include "tonic/error.hpp"
#include "tonic/lexer.hpp"

namespace tonic {

Assertion Assertion::leq(Term lhs, Term rhs) {
  if (!(lhs.type() == rhs.type())) {
    throw TypeError("sides of " + render(lhs) + " <= " + render(rhs) + " have types " +
                    to_string(lhs.type()) + " and " + to_string(rhs.type()));
  }
  Assertion a;
  a.kind = Kind::Leq;
  a.lhs = std::move(lhs);
  a.rhs = std::move(rhs);
  return a;
}

Assertion Assertion::eq(Term lhs, Term rhs) {
  Assertion a = leq(std::move(lhs), std::move(rhs));
  a.kind = Kind::Eq;
  return a;
}

Assertion Assertion::pol(std::string constant, Sign sign) {
  Assertion a;
  a.kind = Kind::Pol;
  a.constant = std::move(constant);
  a.sign = sign;
  return a;
}

bool operator==(const Assertion& a, const Assertion& b) {
  if (a.kind != b.kind) return false;
  if (a.kind == Assertion::Kind::Pol) return a.constant == b.constant && a.sign == b.sign;
  return a.lhs == b.lhs && a.rhs == b.rhs;
}

void check_assertion(const Assertion& a, const Signature& sig) {
  if (a.is_pol()) {
    auto c = sig.find(a.constant);
    if (!c) throw InputError("undeclared constant '" + a.constant + "'");
    if (!c->type.is_arrow()) {
      throw TypeError("polarity statement on '" + a.constant + "' of base type " + to_string(c->type));
    }
    return;
  }
  const Type l = type_of(a.lhs, sig);
  const Type r = type_of(a.rhs, sig);
  if (!(l == r)) throw TypeError("sides of " + render(a) + " have different types");
}

std::string render(const Assertion& a) {
  switch (a.kind) {
    case Assertion::Kind::Leq: return render(a.lhs) + " <= " + render(a.rhs);
    case Assertion::Kind::Eq: return render(a.lhs) + " = " + render(a.rhs);
    case Assertion::Kind::Pol: return quote_ident(a.constant) + " " + sign_char(a.sign);
  }
  return {};
}

std::vector<Type> occurring_types(const Theory& thy, const std::vector<Term>& extra) {
  std::set<Type> types;
  auto add_type = [&](const Type& t) {
    for (const auto& s : t.subtypes()) types.insert(s);
  };
  for (const auto& c : thy.sig.constants()) add_type(c.type);
  auto add_term = [&](const Term& t) {
    for (const auto& s : subterms(t)) add_type(s.type());
  };
  for (const auto& ax : thy.axioms) {
    if (ax.is_pol()) continue;
    add_term(ax.lhs);
    add_term(ax.rhs);
  }
  for (const auto& t : extra) add_term(t);
  return {types.begin(), types.end()};
}

namespace {

std::string mangle(const Type& t) {
  if (t.is_base()) return t.name();
  return "⟨" + mangle(t.domain()) + "⟩" + mangle(t.codomain());
}

void reject_boxed(const Theory& thy) {
  for (const auto& c : thy.sig.constants()) {
    if (c.name.rfind("□", 0) == 0) {
      throw InputError("constant '" + c.name + "' collides with the reserved □ namespace");
    }
  }
}

}  // namespace

std::string box_name(const Type& t, const std::string& prefix) { return prefix + mangle(t); }

Theory extend_with_fresh(const Theory& thy) {
  reject_boxed(thy);
  Theory out = thy;
  for (const auto& t : occurring_types(thy)) out.sig.add_constant(box_name(t), t);
  return out;
}

Theory extend_with_ordered_pair(const Theory& thy) {
  reject_boxed(thy);
  Theory out = thy;
  for (const auto& t : occurring_types(thy)) {
    const std::string lo = box_name(t, "□1");
    const std::string hi = box_name(t, "□2");
    out.sig.add_constant(lo, t);
    out.sig.add_constant(hi, t);
    out.axioms.push_back(Assertion::leq(Term::constant(lo, t), Term::constant(hi, t)));
  }
  return out;
}

}  // namespace tonic
