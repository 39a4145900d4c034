#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "tonic/parser.hpp"
#include "tonic/preorder.hpp"
#include "tonic/semantics.hpp"
#include "tonic/signature.hpp"

namespace tonic {

/// Subset of a finite carrier, bit i = element i.
using Subset = boost::dynamic_bitset<>;

/// Down-closed subsets of `p` as bitmasks, in increasing numeric order.
/// Throws InputError above `cap` elements.
std::vector<std::uint32_t> down_closed_sets(const FinPreorder& p, std::size_t cap = 10);

/// P* = {(A, p) : A down-closed, p in P} plus a bottom element, ordered by
/// inclusion of first components. Bottom counts as the empty down-set, so it
/// sits below everything and is equivalent to each (∅, p).
struct CompletionResult {
  FinPreorder source;
  FinPreorder star;
  std::vector<std::uint32_t> down_sets;
  std::vector<std::size_t> embed;  // source index -> star index of (↓p, p)
  std::size_t bottom = 0;          // always the last star element

  /// Star element k < bottom is (down_sets[k / |P|], k % |P|).
  std::uint32_t set_of(std::size_t k) const;
  std::size_t witness(std::size_t k) const { return k % source.size(); }
  std::size_t index_of(std::uint32_t set, std::size_t p) const;
};

/// Throws InputError above `cap` source elements and BudgetExceeded when the
/// star carrier would exceed `max_star` elements.
CompletionResult complete_preorder(const FinPreorder& p, std::size_t cap = 10, std::size_t max_star = 4097);

/// (W, ε(W)) with W the union of first components and ε(W) its first
/// element in source order; bottom when W is empty.
std::size_t join(const CompletionResult& cr, const Subset& s);

/// z is above every member of s and below every other upper bound.
bool is_lub(const FinPreorder& order, const Subset& s, std::size_t z);

/// Completeness decided through the distinct upper-bound sets U(S), which
/// are closed under intersecting with principal up-sets; no subset
/// enumeration, so it scales past is_complete's cap.
bool has_all_joins(const FinPreorder& p);

/// Injectivity, preservation and reflection of the embedding, plus
/// completeness of the star order. Empty iff all hold.
std::vector<Finding> verify_embedding(const FinPreorder& p, const CompletionResult& cr);

/// Joins a set of codomain elements (given as indices).
using JoinOracle = std::function<Value(const std::vector<Value>&)>;

/// The table x ↦ ⋁{f(x) : f in s} in the function space `fs`.
Value pointwise_join(const Space& fs, const std::vector<Value>& s, const JoinOracle& cod_join);

/// Text dump: the star as a `preorder` block (bottom last), then one
/// `embed p -> (A,p);` line per source element.
std::string dump_completion(const CompletionResult& cr);

struct CompletionDump {
  FinPreorder star;
  std::vector<std::pair<std::string, std::string>> embed;
};
Parsed<CompletionDump> load_completion(std::string_view text);

}  // namespace tonic
