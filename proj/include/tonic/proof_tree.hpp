#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tonic/theory.hpp"

namespace tonic {

enum class Rule {
  // leaves
  Axiom,
  SigOrder,
  SigPol,
  // inference rules, in justification tie-break order
  Refl,
  Point,
  Mono,
  Anti,
  Wc1,
  Wc2,
  Wc3a,
  Wc3b,
  Wc3c,
  Wc3d,
  Trans,
  Pos,
  Symm,
  Weak,
  Posp,
  Cong,
  PolPlus,
  PolMinus,
};

const char* rule_name(Rule r);
std::optional<Rule> rule_from_name(std::string_view name);
bool is_leaf_rule(Rule r);
bool is_wc3(Rule r);

/// Derivation tree. Leaves are Γ axioms (by 0-based index), signature order
/// facts and signature polarity facts. Freely chosen terms live in `terms`:
///   refl [t]   point [u]   wc1/wc2 [t, u]   pos [f]
/// Polarity premises (mono, anti, wc*, pol±) are ordinary child nodes.
struct ProofTree {
  Rule rule = Rule::Refl;
  std::vector<ProofTree> premises;
  std::vector<Term> terms;
  std::size_t axiom = 0;   // Axiom
  std::string lo;          // SigOrder: lo <= hi; SigPol: the constant
  std::string hi;
  Sign sign = Sign::Plus;  // SigPol
  /// Filled in by prove() and by check_proof's synthesis; not serialized.
  std::optional<Assertion> conclusion;

  static ProofTree axiom_leaf(std::size_t index);
  static ProofTree sig_order(std::string lo, std::string hi);
  static ProofTree sig_pol(std::string constant, Sign sign);
  static ProofTree node(Rule rule, std::vector<ProofTree> premises, std::vector<Term> terms = {});

  /// Number of rule and leaf nodes; term payloads are not counted.
  std::size_t node_count() const;
  /// Number of inference (non-leaf) nodes.
  std::size_t inference_count() const;

  /// Structural equality ignoring the cached conclusion.
  friend bool operator==(const ProofTree& a, const ProofTree& b);
};

}  // namespace tonic
