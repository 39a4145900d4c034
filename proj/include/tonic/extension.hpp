#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tonic/completion.hpp"
#include "tonic/parser.hpp"

namespace tonic {

/// Data for extending p : F -> M^S along an order embedding j : S -> L.
/// Tables are indexed by S (for p) or L (for q) element positions and hold
/// M element positions.
struct ExtensionInstance {
  PolarizedFinPreorder F;
  FinPreorder S;
  FinPreorder L;
  FinPreorder M;
  JoinOracle join;
  /// Set when M was given as the completion of a smaller preorder.
  std::shared_ptr<const CompletionResult> completion;
  std::vector<std::size_t> j;
  std::vector<std::vector<std::size_t>> p;
};

/// Join oracle returning the first least upper bound in index order;
/// throws InputError when a subset has none.
JoinOracle lub_search(const FinPreorder& m);
JoinOracle completion_join(std::shared_ptr<const CompletionResult> cr);

/// Structural hypotheses: table shapes, j an order embedding, p monotone and
/// polarity-preserving, M complete. Empty iff all hold.
std::vector<Finding> check_instance(const ExtensionInstance& inst);

/// f <=+- g: f+ <= g- or f- <= g+.
bool mixed_leq(const PolarizedFinPreorder& F, std::size_t f, std::size_t g);

struct SpecialWitness {
  std::size_t f, g, x, y;  // p_f(x) </= p_g(y) although f <=+- g
};
/// The weak-completeness-like hypothesis; the first violation otherwise.
std::optional<SpecialWitness> check_special(const ExtensionInstance& inst);
std::string describe(const ExtensionInstance& inst, const SpecialWitness& w);

/// Raised when the hypotheses of the construction fail.
class HypothesisViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ExtensionResult {
  std::vector<std::vector<std::size_t>> q;  // F -> table over L
  // audit sets over M, per (f, x) for A and B and per f for C and D
  std::vector<std::vector<Subset>> A, B;
  std::vector<Subset> C, D;
};

/// q_f(j(s)) = p_f(s); off the image, the join of A(f,x) ∪ B(f,x) ∪ C(f) ∪
/// D(f). The four sets are recorded at every point, image points included.
/// Throws HypothesisViolation when check_instance or check_special fails.
ExtensionResult extend_interpretation(const ExtensionInstance& inst);

/// q∘j = p, f <= g => q_f <= q_g, f+ => q_f monotone, f- => q_f antitone.
std::vector<Finding> verify_extension(const ExtensionInstance& inst, const ExtensionResult& res);

/// The set-level claims behind the construction: containments along the
/// order of F and of L, and at image points every member of the four sets
/// lies below p_f(s).
std::vector<Finding> verify_audit(const ExtensionInstance& inst, const ExtensionResult& res);

/// Instance format:
///   F { elems f g; order f <= g; }
///   tag f +;  tag g -;
///   S { elems s; }
///   L { elems t x; order t <= x; }
///   M { elems 0 1; order 0 <= 1; }      or  M completion { ... }
///   j s -> t;
///   p f = [1];
Parsed<ExtensionInstance> parse_extension(std::string_view text);
std::string render_extension(const ExtensionInstance& inst);
/// q tables in the `p` line syntax, then the audit set sizes.
std::string dump_extension_result(const ExtensionInstance& inst, const ExtensionResult& res);

struct ExtensionSizes {
  std::size_t max_f = 4, max_s = 3, max_l = 5, max_m_source = 3;
};

/// A random instance satisfying every hypothesis. S is embedded into L by a
/// random injection, L gets extra order around the image (redrawn until the
/// embedding reflects), M is the completion of a random preorder, and p is
/// found by randomized backtracking under the order, tag and special
/// constraints (redrawing everything when the search stalls).
ExtensionInstance random_extension_instance(std::mt19937_64& rng, const ExtensionSizes& sizes = {});

}  // namespace tonic
