#include "tonic/type.hpp"

#include <algorithm>
#include <cassert>

namespace tonic {

Type Type::base(std::string name) {
  Type t;
  auto node = std::make_shared<Node>();
  node->name = std::move(name);
  t.node_ = std::move(node);
  return t;
}

Type Type::arrow(Type domain, Type codomain) {
  assert(domain.valid() && codomain.valid());
  Type t;
  auto node = std::make_shared<Node>();
  node->order = 1 + std::max(domain.order(), codomain.order());
  node->domain = std::move(domain);
  node->codomain = std::move(codomain);
  t.node_ = std::move(node);
  return t;
}

bool Type::is_base() const { return valid() && !node_->domain.valid(); }

const std::string& Type::name() const { return node_->name; }
const Type& Type::domain() const { return node_->domain; }
const Type& Type::codomain() const { return node_->codomain; }
int Type::order() const { return node_->order; }

namespace {

void collect(const Type& t, std::vector<Type>& out) {
  if (t.is_arrow()) {
    collect(t.domain(), out);
    collect(t.codomain(), out);
  }
  if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
}

}  // namespace

std::vector<Type> Type::subtypes() const {
  std::vector<Type> out;
  if (valid()) collect(*this, out);
  return out;
}

bool operator==(const Type& a, const Type& b) {
  return (a <=> b) == std::strong_ordering::equal;
}

// Base types sort before arrows; bases by name; arrows by domain then codomain.
std::strong_ordering operator<=>(const Type& a, const Type& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (!a.valid()) return std::strong_ordering::less;
  if (!b.valid()) return std::strong_ordering::greater;
  if (a.is_base() != b.is_base()) {
    return a.is_base() ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (a.is_base()) return a.name() <=> b.name();
  if (auto c = a.domain() <=> b.domain(); c != 0) return c;
  return a.codomain() <=> b.codomain();
}

std::string to_string(const Type& type) {
  if (!type.valid()) return "<invalid>";
  if (type.is_base()) return type.name();
  std::string dom = to_string(type.domain());
  if (type.domain().is_arrow()) dom = "(" + dom + ")";
  return dom + " -> " + to_string(type.codomain());
}

}  // namespace tonic
