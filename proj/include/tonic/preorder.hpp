#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tonic {

/// Finite preorder over a named carrier, stored as a dense row-major
/// relation matrix. The constructor does not enforce reflexivity or
/// transitivity so that malformed inputs can be represented and reported.
class FinPreorder {
 public:
  FinPreorder() = default;
  FinPreorder(std::vector<std::string> elements, std::vector<char> matrix);

  /// Identity relation on the given carrier.
  static FinPreorder discrete(std::vector<std::string> elements);
  /// Carrier "0".."n-1" with the identity relation.
  static FinPreorder discrete(std::size_t n);

  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  const std::vector<std::string>& elements() const { return elements_; }
  const std::string& name(std::size_t i) const { return elements_[i]; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  bool leq(std::size_t i, std::size_t j) const { return leq_[i * size() + j] != 0; }
  bool equiv(std::size_t i, std::size_t j) const { return leq(i, j) && leq(j, i); }
  void set_leq(std::size_t i, std::size_t j, bool v) { leq_[i * size() + j] = v ? 1 : 0; }
  const std::vector<char>& matrix() const { return leq_; }

  bool is_reflexive() const;
  bool is_transitive() const;
  bool is_preorder() const { return is_reflexive() && is_transitive(); }

  /// Appends a new element related only to itself.
  std::size_t add_element(std::string name);

  /// Non-reflexive pairs (i <= j, i != j) in row-major order.
  std::vector<std::pair<std::size_t, std::size_t>> strict_pairs() const;

  friend bool operator==(const FinPreorder&, const FinPreorder&) = default;

 private:
  std::vector<std::string> elements_;
  std::vector<char> leq_;
};

/// Preorder with two designated subsets of elements: the `+` tagged and the
/// `-` tagged ones. An element may carry both tags or neither.
struct PolarizedFinPreorder {
  FinPreorder order;
  std::vector<char> plus;
  std::vector<char> minus;

  PolarizedFinPreorder() = default;
  explicit PolarizedFinPreorder(FinPreorder o)
      : order(std::move(o)), plus(order.size(), 0), minus(order.size(), 0) {}

  std::size_t size() const { return order.size(); }
  bool is_plus(std::size_t i) const { return plus[i] != 0; }
  bool is_minus(std::size_t i) const { return minus[i] != 0; }

  friend bool operator==(const PolarizedFinPreorder&, const PolarizedFinPreorder&) = default;
};

/// Least reflexive-transitive relation on `carrier` containing `rel`.
/// Throws InputError when a pair names an element outside the carrier.
FinPreorder closure_rt(std::vector<std::string> carrier,
                       const std::vector<std::pair<std::string, std::string>>& rel);

/// Index form of closure_rt over the carrier "0".."n-1".
FinPreorder closure_rt(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& rel);

/// In-place Warshall closure plus reflexive diagonal.
void close_in_place(FinPreorder& p);

}  // namespace tonic
