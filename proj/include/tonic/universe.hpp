#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "tonic/theory.hpp"

namespace tonic {

struct UniversePolicy {
  enum class Kind { Subterms, Apps };
  Kind kind = Kind::Subterms;
  std::size_t rounds = 0;                 // Apps: application rounds
  std::optional<std::size_t> max_depth;   // Apps: skip new terms deeper than this

  static UniversePolicy subterms() { return {}; }
  static UniversePolicy apps(std::size_t n, std::optional<std::size_t> depth = std::nullopt) {
    return {Kind::Apps, n, depth};
  }
  /// "subterms" or "apps:N"; throws InputError otherwise.
  static UniversePolicy parse(std::string_view s);
  std::string to_string() const;
};

struct SearchBudget {
  std::size_t max_universe = 4000;
  std::size_t max_rounds = 512;
  /// Per wc1/wc2 instantiation (pair f <= g): cap on (t, u) argument pairs.
  std::size_t max_wc_candidates = 100000;
};

/// Finite, subterm-closed set of terms with dense indices.
class TermUniverse {
 public:
  /// Adds `t` (not its subterms) if absent; returns its index.
  int add(const Term& t);
  /// Adds all subterms of `t` in post-order.
  void add_closed(const Term& t);
  std::optional<int> find(const Term& t) const;
  bool contains(const Term& t) const { return find(t).has_value(); }

  std::size_t size() const { return terms_.size(); }
  const Term& operator[](std::size_t i) const { return terms_[i]; }
  const std::vector<Term>& terms() const { return terms_; }

  UniversePolicy policy;
  bool truncated = false;

 private:
  std::vector<Term> terms_;
  std::unordered_map<Term, int, TermHash> index_;
};

/// Signature constants (canonical order), then the post-order subterms of
/// every axiom and goal; for apps:N, N further rounds of all well-typed
/// applications among current members, stopping at the budget with
/// `truncated` set.
TermUniverse build_universe(const Theory& thy, const std::vector<Assertion>& goals,
                            const UniversePolicy& policy, const SearchBudget& budget = {});

/// Copy of `thy` whose axioms additionally list every strict signature order
/// fact f <= g.
Theory absorb_signature_order(const Theory& thy);

}  // namespace tonic
