#pragma once

#include <string>
#include <vector>

#include "tonic/signature.hpp"
#include "tonic/term.hpp"

namespace tonic {

/// `lhs <= rhs`, `lhs = rhs`, or a polarity statement `constant+` / `constant-`.
struct Assertion {
  enum class Kind { Leq, Eq, Pol };

  Kind kind = Kind::Leq;
  Term lhs;
  Term rhs;
  std::string constant;  // Pol only
  Sign sign = Sign::Plus;

  /// Throw TypeError when the sides have different types.
  static Assertion leq(Term lhs, Term rhs);
  static Assertion eq(Term lhs, Term rhs);
  static Assertion pol(std::string constant, Sign sign);

  bool is_leq() const { return kind == Kind::Leq; }
  bool is_eq() const { return kind == Kind::Eq; }
  bool is_pol() const { return kind == Kind::Pol; }

  friend bool operator==(const Assertion& a, const Assertion& b);
};

/// Checks the assertion against a signature: Leq/Eq sides typed at one
/// type, Pol only on arrow-typed constants. Throws InputError/TypeError.
void check_assertion(const Assertion& a, const Signature& sig);

/// "f a <= g b", "a = b", "f +".
std::string render(const Assertion& a);

struct Theory {
  Signature sig;
  std::vector<Assertion> axioms;

  friend bool operator==(const Theory&, const Theory&) = default;
};

/// Every type that occurs in the theory (constants, their subtypes, and the
/// types of all axiom subterms), plus those of `extra` terms. Sorted.
std::vector<Type> occurring_types(const Theory& thy, const std::vector<Term>& extra = {});

/// Name of the fresh constant of type `t`, e.g. "□β" or "□⟨β⟩τ" for β -> τ.
std::string box_name(const Type& t, const std::string& prefix = "□");

/// Adds one untagged, unordered fresh constant per occurring type.
/// Throws InputError when a constant already uses the "□" prefix.
Theory extend_with_fresh(const Theory& thy);

/// Adds "□1σ" and "□2σ" per occurring type with the axiom □1σ <= □2σ.
Theory extend_with_ordered_pair(const Theory& thy);

}  // namespace tonic
