#pragma once

#include <vector>

#include "tonic/theory.hpp"
#include "tonic/universe.hpp"

namespace tonic {

/// Equivalence classes over universe indices; `rep[i]` is the least index of
/// the class containing i.
struct Partition {
  std::vector<int> rep;

  bool same(int i, int j) const { return rep[i] == rep[j]; }
  std::size_t class_count() const;
  friend bool operator==(const Partition&, const Partition&) = default;
};

/// Finest partition of `u` containing every axiom pair and closed under
/// application: t ~ t', s ~ s' and t s, t' s' in `u` give t s ~ t' s'.
/// Throws InputError unless every axiom is an identity.
Partition congruence_closure(const Theory& thy, const TermUniverse& u);

/// Ground word problem: t = u follows from the identities of `thy`. Decided
/// over the subterm closure of the axioms together with t and u.
/// Throws TypeError when t and u have different types.
bool decide_eq(const Theory& thy, const Term& t, const Term& u);

}  // namespace tonic
