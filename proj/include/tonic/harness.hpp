#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "tonic/calculus.hpp"
#include "tonic/exec.hpp"
#include "tonic/semantics.hpp"
#include "tonic/theory.hpp"
#include "tonic/universe.hpp"

namespace tonic {

// ---------------------------------------------------------------- generators

struct TheoryShape {
  std::size_t max_base_consts = 3;
  std::size_t max_arrow_consts = 2;
  std::size_t max_axioms = 3;
  std::size_t max_term_depth = 2;
  double second_base = 0.5;    // a second base type τ
  double higher_order = 0.1;   // a constant of type (β -> τ) -> τ
  double tag = 0.45;           // per constant and sign
  double order = 0.3;          // per pair of same-typed constants
  bool eq_axioms = false;
  bool pol_axioms = false;
  bool odd_names = false;      // names that need quoting when rendered
};

/// Random well-typed term of type `want` with at most `depth` nested
/// applications; nullopt when no constant can produce that type.
std::optional<Term> random_term(std::mt19937_64& rng, const Signature& sig, const Type& want, std::size_t depth);

Theory random_theory(std::mt19937_64& rng, const TheoryShape& shape = {});

/// Goals over `thy`: mostly `<=`, some `=` and polarity statements.
std::vector<Assertion> random_goals(std::mt19937_64& rng, const Theory& thy, std::size_t n,
                                    std::size_t depth = 2);

/// Per-case seed: independent of the number of cases and of sharding.
std::uint64_t case_seed(std::uint64_t seed, std::string_view stream, std::size_t index);

// ---------------------------------------------------------------- reports

/// pass: the property held. violation: a theorem-backed invariant failed
/// (an implementation bug). bound: the bounded check could not decide and
/// nothing is claimed.
enum class CaseStatus { Pass, Violation, Bound };
const char* status_name(CaseStatus s);

struct CaseLine {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  std::string id;
  CaseStatus status = CaseStatus::Pass;
  std::string detail;
  std::map<std::string, std::size_t> counters;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<CaseLine> cases;

  std::size_t count(CaseStatus s) const;
  std::size_t violations() const { return count(CaseStatus::Violation); }
  bool passed() const { return violations() == 0; }
  /// Sums of the per-case counters.
  std::map<std::string, std::size_t> totals() const;
  /// Cases whose id starts with `prefix`.
  SuiteReport select(std::string_view prefix) const;
  /// One line per case, then a summary footer.
  std::string transcript() const;
  /// Summary plus the non-passing cases only.
  std::string summary() const;
};

struct SuiteConfig {
  std::uint64_t seed = 1;
  /// Overrides the suite's default case count.
  std::optional<std::size_t> cases;
  SizeBounds bounds{2, 2, 1'000'000, SIZE_MAX};
  /// Soundness only: a second enumeration per case over larger carriers,
  /// usually with a model cap, so it samples rather than exhausts.
  std::optional<SizeBounds> wide_bounds;
  SearchBudget budget;
  UniversePolicy universe = UniversePolicy::apps(1);
  /// Soundness sweep; empty means base, wc, pos, identity, polarity.
  std::vector<CalculusConfig> calculi;
  /// Cases are sharded across threads; the transcript does not change.
  Exec exec = Exec::Parallel;
};

/// Generated (theory, provable goal) pairs per calculus: the proof found by
/// saturation checks, and every enumerated admissible model satisfies the
/// goal. Admissible: weakly complete bases for wc, posets for pos and
/// identity, everything otherwise. Default 500 cases per calculus.
SuiteReport run_soundness_suite(const SuiteConfig& cfg);

/// On the wc soundness corpus plus random goals: no goal has both a wc
/// proof and a weakly complete countermodel. Default 500 cases.
SuiteReport run_exclusivity_suite(const SuiteConfig& cfg);

/// Experiments for the fresh-constant lemmas, over Γ□ = Γ plus one fresh
/// constant per occurring type: (a) t □ <= u □ derived over Γ□ comes with
/// t <= u; (b) a □-free fact derived over Γ□ is derived over Γ. Bounded
/// search can only exhibit agreement, never refute the lemmas.
/// Default 200 random cases plus two constructed fixtures.
SuiteReport run_conservativity_suite(const SuiteConfig& cfg);

/// The worked examples: key derivation, up-down parts 1-3, the WC3 tag
/// patterns and the unsoundness witnesses of WC1/WC2 off weakly complete
/// structures.
SuiteReport run_worked_examples(const SuiteConfig& cfg = {});

/// All preorders up to size 4 plus 200 random size-5 preorders (default):
/// embedding verified, join a least upper bound of every subset (or 500
/// sampled subsets when the completion has more than 12 elements).
SuiteReport run_completion_suite(const SuiteConfig& cfg);

/// Generated extension instances: construction verified and audited.
/// Default 300 cases.
SuiteReport run_extension_suite(const SuiteConfig& cfg);

/// Congruence closure against equational saturation on small theories
/// (<= 4 constants, <= 3 equations, universe <= 30 terms). Default 100.
SuiteReport run_equational_suite(const SuiteConfig& cfg);

/// parse(render(x)) == x for random problems (default 1000) and random
/// proofs found by saturation (default 200).
SuiteReport run_roundtrip_suite(const SuiteConfig& cfg);

/// soundness, exclusivity, conservativity, fixtures, completion, extension,
/// equational, roundtrip.
const std::vector<std::string>& suite_names();
/// Throws InputError for an unknown name.
SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg);

/// Problem texts of the worked examples, keyed by fixture id
/// ("example-key", "up-down-1", ...).
const std::map<std::string, std::string>& fixture_texts();
/// The base-calculus derivation of the key example, in proof syntax.
extern const char* const kExampleKeyProof;

}  // namespace tonic
