#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "tonic/calculus.hpp"
#include "tonic/exec.hpp"
#include "tonic/proof_tree.hpp"
#include "tonic/theory.hpp"
#include "tonic/universe.hpp"

namespace tonic {

// Parallel rounds buffer candidates per primary index and merge them in
// index order, so both executions derive the same facts and justifications.

/// Facts are keyed as (kind, i, j) over universe indices; Pol uses
/// i = constant index, j = 0 for + and 1 for -.
using FactKey = std::uint64_t;

enum class FactKind : std::uint8_t { Leq = 0, Eq = 1, Pol = 2 };

inline FactKey fact_key(FactKind k, std::uint32_t i, std::uint32_t j) {
  return (static_cast<std::uint64_t>(k) << 62) | (static_cast<std::uint64_t>(i) << 31) | j;
}
inline FactKind fact_kind(FactKey k) { return static_cast<FactKind>(k >> 62); }
inline std::uint32_t fact_i(FactKey k) { return static_cast<std::uint32_t>((k >> 31) & 0x7fffffffu); }
inline std::uint32_t fact_j(FactKey k) { return static_cast<std::uint32_t>(k & 0x7fffffffu); }

/// First-found derivation step of a fact.
struct Justification {
  Rule rule = Rule::Refl;
  std::vector<FactKey> premises;
  std::vector<int> terms;  // universe indices of payload terms
  std::size_t axiom = 0;
  std::uint32_t round = 0;
};

class Saturation {
 public:
  using Row = boost::dynamic_bitset<std::uint64_t>;

  TermUniverse universe;
  CalculusConfig cfg;
  std::vector<Row> leq;
  std::vector<Row> eq;
  std::vector<char> pol_plus;
  std::vector<char> pol_minus;
  std::unordered_map<FactKey, Justification> why;

  std::size_t rounds = 0;
  bool fixpoint = false;       // no rule fired in the last round
  bool wc_truncated = false;   // some wc1/wc2 instantiation hit its cap
  bool stopped_early = false;  // goal reached before the fixpoint

  /// Fixed point reached with no truncation anywhere: everything derivable
  /// inside the universe has been derived.
  bool complete() const { return fixpoint && !wc_truncated && !universe.truncated; }

  /// Key of an assertion whose terms are all in the universe.
  std::optional<FactKey> key_of(const Assertion& a) const;
  bool has(const Assertion& a) const;
  bool has(FactKey k) const;
  Assertion assertion_of(FactKey k) const;

  /// Every derived fact, in key order.
  std::vector<Assertion> facts() const;
  std::size_t fact_count() const { return why.size(); }

  /// Tree built from the recorded justifications; conclusions filled in.
  std::optional<ProofTree> proof_of(const Assertion& a) const;
  ProofTree proof_of(FactKey k) const;
};

/// Forward closure of the axioms, signature facts and enabled rules over
/// `u`, in rounds with snapshot semantics (each round reads the facts known
/// at its start). Stops at the fixed point, at `budget.max_rounds`, or
/// after the round in which `stop_at` first appears.
Saturation saturate(const Theory& thy, const CalculusConfig& cfg, TermUniverse u,
                    const SearchBudget& budget = {}, Exec exec = Exec::Serial,
                    const std::optional<Assertion>& stop_at = std::nullopt);

struct ProveResult {
  std::optional<ProofTree> proof;
  /// Meaningful when no proof: saturation finished without truncation, so
  /// the goal is underivable within this universe (not in general).
  bool complete = false;
  std::size_t universe_size = 0;
  bool universe_truncated = false;
  std::size_t rounds = 0;
};

ProveResult prove(const Theory& thy, const Assertion& goal, const CalculusConfig& cfg,
                  const UniversePolicy& policy = UniversePolicy::apps(1),
                  const SearchBudget& budget = {},
                  Exec exec = Exec::Serial);

}  // namespace tonic
