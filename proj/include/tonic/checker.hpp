#pragma once

#include <optional>
#include <string>

#include "tonic/calculus.hpp"
#include "tonic/proof_tree.hpp"
#include "tonic/theory.hpp"

namespace tonic {

struct Verdict {
  bool accepted = false;
  /// Location of the offending node: "root", "root.1.0", ... (premise indices).
  std::string path;
  std::string reason;
  /// Conclusion of the whole tree when accepted.
  std::optional<Assertion> conclusion;
};

/// Exact checker. Conclusions are synthesized bottom-up from leaves and
/// term payloads; every node must instantiate an enabled rule schema.
/// Works for trees mentioning any well-typed terms, not only a universe.
Verdict check_proof(const ProofTree& tree, const Theory& thy, const CalculusConfig& cfg);

/// Accepts iff check_proof accepts and the synthesized conclusion is `goal`.
Verdict check_proof_of(const ProofTree& tree, const Theory& thy, const CalculusConfig& cfg,
                       const Assertion& goal);

}  // namespace tonic
