#include "tonic/term.hpp"

#include <algorithm>
#include <functional>
#include <unordered_set>

#include "tonic/error.hpp"
#include "tonic/lexer.hpp"

namespace tonic {

Expr Expr::constant(std::string name) {
  Expr e;
  auto n = std::make_shared<Node>();
  n->name = std::move(name);
  e.node_ = std::move(n);
  return e;
}

Expr Expr::apply(Expr fun, Expr arg) {
  Expr e;
  auto n = std::make_shared<Node>();
  n->fun = std::move(fun);
  n->arg = std::move(arg);
  e.node_ = std::move(n);
  return e;
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.node_ == b.node_) return true;
  if (!a.valid() || !b.valid()) return false;
  if (a.is_const() != b.is_const()) return false;
  if (a.is_const()) return a.name() == b.name();
  return a.fun() == b.fun() && a.arg() == b.arg();
}

Term Term::constant(std::string name, Type type) {
  Term t;
  auto n = std::make_shared<Node>();
  n->hash = std::hash<std::string>{}(name);
  n->name = std::move(name);
  n->type = std::move(type);
  t.node_ = std::move(n);
  return t;
}

Term Term::apply(const Term& fun, const Term& arg) {
  if (!fun.type().is_arrow()) {
    throw TypeError("cannot apply " + render(fun) + " : " + to_string(fun.type()) +
                    " (not a function type)");
  }
  if (!(fun.type().domain() == arg.type())) {
    throw TypeError("argument " + render(arg) + " : " + to_string(arg.type()) + " does not match " +
                    render(fun) + " : " + to_string(fun.type()));
  }
  Term t;
  auto n = std::make_shared<Node>();
  n->type = fun.type().codomain();
  n->depth = 1 + std::max(fun.depth(), arg.depth());
  n->hash = fun.hash() * 1000003u ^ (arg.hash() + 0x9e3779b97f4a7c15ull + (fun.hash() << 6));
  n->fun = fun;
  n->arg = arg;
  t.node_ = std::move(n);
  return t;
}

bool Term::mentions(const std::string& name) const {
  if (is_const()) return this->name() == name;
  return fun().mentions(name) || arg().mentions(name);
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (!a.valid() || !b.valid()) return false;
  if (a.hash() != b.hash() || a.is_const() != b.is_const()) return false;
  if (a.is_const()) return a.name() == b.name();
  return a.fun() == b.fun() && a.arg() == b.arg();
}

std::strong_ordering operator<=>(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (!a.valid()) return std::strong_ordering::less;
  if (!b.valid()) return std::strong_ordering::greater;
  if (a.is_const() != b.is_const()) {
    return a.is_const() ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (a.is_const()) return a.name() <=> b.name();
  if (auto c = a.fun() <=> b.fun(); c != 0) return c;
  return a.arg() <=> b.arg();
}

Type type_of(const Expr& e, const Signature& sig) {
  if (e.is_const()) {
    auto c = sig.find(e.name());
    if (!c) throw InputError("undeclared constant '" + e.name() + "'");
    return c->type;
  }
  const Type f = type_of(e.fun(), sig);
  const Type a = type_of(e.arg(), sig);
  if (!f.is_arrow()) {
    throw TypeError("cannot apply " + render(e.fun()) + " : " + to_string(f) +
                    " (not a function type)");
  }
  if (!(f.domain() == a)) {
    throw TypeError("argument " + render(e.arg()) + " : " + to_string(a) + " does not match " +
                    render(e.fun()) + " : " + to_string(f));
  }
  return f.codomain();
}

Type type_of(const Term& t, const Signature& sig) {
  if (t.is_const()) {
    auto c = sig.find(t.name());
    if (!c) throw InputError("undeclared constant '" + t.name() + "'");
    if (!(c->type == t.type())) throw TypeError("constant '" + t.name() + "' has a stale type");
    return c->type;
  }
  const Type f = type_of(t.fun(), sig);
  const Type a = type_of(t.arg(), sig);
  if (!f.is_arrow() || !(f.domain() == a)) throw TypeError("ill-typed application " + render(t));
  return f.codomain();
}

Term make_const(const Signature& sig, const std::string& name) {
  auto c = sig.find(name);
  if (!c) throw InputError("undeclared constant '" + name + "'");
  return Term::constant(name, c->type);
}

Term resolve(const Expr& e, const Signature& sig) {
  if (e.is_const()) return make_const(sig, e.name());
  return Term::apply(resolve(e.fun(), sig), resolve(e.arg(), sig));
}

Expr to_expr(const Term& t) {
  if (t.is_const()) return Expr::constant(t.name());
  return Expr::apply(to_expr(t.fun()), to_expr(t.arg()));
}

namespace {

void post_order(const Term& t, std::vector<Term>& out, std::unordered_set<Term, TermHash>& seen) {
  if (!t.is_const()) {
    post_order(t.fun(), out, seen);
    post_order(t.arg(), out, seen);
  }
  if (seen.insert(t).second) out.push_back(t);
}

template <class T>
std::string render_impl(const T& t) {
  if (t.is_const()) return quote_ident(t.name());
  std::string arg = render_impl(t.arg());
  if (!t.arg().is_const()) arg = "(" + arg + ")";
  return render_impl(t.fun()) + " " + arg;
}

}  // namespace

std::vector<Term> subterms(const Term& t) {
  std::vector<Term> out;
  std::unordered_set<Term, TermHash> seen;
  post_order(t, out, seen);
  return out;
}

std::string render(const Term& t) { return render_impl(t); }
std::string render(const Expr& e) { return render_impl(e); }

}  // namespace tonic
