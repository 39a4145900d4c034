#pragma once

#include <compare>
#include <memory>
#include <string>
#include <vector>

namespace tonic {

/// Simple type: a named base type or an arrow `domain -> codomain`.
/// Immutable; copies share structure.
class Type {
 public:
  Type() = default;

  static Type base(std::string name);
  static Type arrow(Type domain, Type codomain);

  bool valid() const { return node_ != nullptr; }
  bool is_base() const;
  bool is_arrow() const { return valid() && !is_base(); }

  const std::string& name() const;  // base types only
  const Type& domain() const;       // arrow types only
  const Type& codomain() const;     // arrow types only

  /// base = 0, arrow = 1 + max(order(domain), order(codomain)).
  int order() const;

  /// Every type reachable through domain/codomain, including this one,
  /// in post-order without duplicates.
  std::vector<Type> subtypes() const;

  friend bool operator==(const Type& a, const Type& b);
  friend std::strong_ordering operator<=>(const Type& a, const Type& b);

 private:
  struct Node;
  std::shared_ptr<const Node> node_;
};

struct Type::Node {
  std::string name;
  Type domain;
  Type codomain;
  int order = 0;
};

/// Arrow is right-associative: `b -> b -> t` is `b -> (b -> t)`.
std::string to_string(const Type& type);

}  // namespace tonic
