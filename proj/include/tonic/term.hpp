#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "tonic/signature.hpp"
#include "tonic/type.hpp"

namespace tonic {

/// Untyped applicative syntax as produced by the parser.
class Expr {
 public:
  Expr() = default;
  static Expr constant(std::string name);
  static Expr apply(Expr fun, Expr arg);

  bool valid() const { return node_ != nullptr; }
  bool is_const() const;
  const std::string& name() const;
  const Expr& fun() const;
  const Expr& arg() const;

  friend bool operator==(const Expr& a, const Expr& b);

 private:
  struct Node;
  std::shared_ptr<const Node> node_;
};

struct Expr::Node {
  std::string name;
  Expr fun;
  Expr arg;
};

inline bool Expr::is_const() const { return !node_->fun.valid(); }
inline const std::string& Expr::name() const { return node_->name; }
inline const Expr& Expr::fun() const { return node_->fun; }
inline const Expr& Expr::arg() const { return node_->arg; }

/// Well-typed variable-free applicative term. Construction enforces typing,
/// so every Term value is well-typed; the cached type is its unique type.
class Term {
 public:
  Term() = default;
  static Term constant(std::string name, Type type);
  /// Throws TypeError unless fun : s -> t and arg : s.
  static Term apply(const Term& fun, const Term& arg);

  bool valid() const { return node_ != nullptr; }
  bool is_const() const;
  const std::string& name() const;
  const Term& fun() const;
  const Term& arg() const;
  const Type& type() const;
  std::size_t depth() const;
  std::size_t hash() const;

  /// True when a constant called `name` occurs anywhere in the term.
  bool mentions(const std::string& name) const;

  friend bool operator==(const Term& a, const Term& b);
  friend std::strong_ordering operator<=>(const Term& a, const Term& b);

 private:
  struct Node;
  std::shared_ptr<const Node> node_;
};

struct Term::Node {
  std::string name;
  Term fun;
  Term arg;
  Type type;
  std::size_t depth = 0;
  std::size_t hash = 0;
};

inline bool Term::is_const() const { return !node_->fun.valid(); }
inline const std::string& Term::name() const { return node_->name; }
inline const Term& Term::fun() const { return node_->fun; }
inline const Term& Term::arg() const { return node_->arg; }
inline const Type& Term::type() const { return node_->type; }
inline std::size_t Term::depth() const { return node_->depth; }
inline std::size_t Term::hash() const { return node_->hash; }

struct TermHash {
  std::size_t operator()(const Term& t) const { return t.hash(); }
};

/// Type of raw syntax against a signature; throws InputError for an
/// undeclared constant and TypeError for a bad application.
Type type_of(const Expr& e, const Signature& sig);
/// Re-checks a typed term against `sig` (constants declared at their type).
Type type_of(const Term& t, const Signature& sig);

Term resolve(const Expr& e, const Signature& sig);
Term make_const(const Signature& sig, const std::string& name);
Expr to_expr(const Term& t);

/// All subterms including `t`, post-order, without duplicates.
std::vector<Term> subterms(const Term& t);

/// Left-associative application with minimal parentheses: "phi (f a) b".
std::string render(const Term& t);
std::string render(const Expr& e);

}  // namespace tonic
