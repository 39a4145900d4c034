#include "tonic/signature.hpp"

#include <algorithm>
#include <set>

#include "tonic/error.hpp"

namespace tonic {

namespace {

bool mentions_only(const Type& t, const std::vector<std::string>& bases) {
  if (t.is_base()) return std::find(bases.begin(), bases.end(), t.name()) != bases.end();
  return mentions_only(t.domain(), bases) && mentions_only(t.codomain(), bases);
}

}  // namespace

void Signature::add_base_type(const std::string& name) {
  if (has_base_type(name)) throw InputError("base type '" + name + "' declared twice");
  base_types_.push_back(name);
}

bool Signature::has_base_type(std::string_view name) const {
  return std::find(base_types_.begin(), base_types_.end(), name) != base_types_.end();
}

void Signature::add_constant(const std::string& name, const Type& type, bool plus, bool minus) {
  if (find(name)) throw InputError("constant '" + name + "' declared twice");
  if (!mentions_only(type, base_types_)) {
    throw InputError("type of '" + name + "' mentions an undeclared base type: " + to_string(type));
  }
  auto [it, inserted] = families_.try_emplace(type);
  PolarizedFinPreorder& fam = it->second;
  fam.order.add_element(name);
  fam.plus.push_back(plus ? 1 : 0);
  fam.minus.push_back(minus ? 1 : 0);
  if (type.is_arrow()) arrow_order_.push_back(name);
}

void Signature::add_order(const std::string& lo, const std::string& hi) {
  auto a = find(lo);
  auto b = find(hi);
  if (!a) throw InputError("unknown constant '" + lo + "' in order fact");
  if (!b) throw InputError("unknown constant '" + hi + "' in order fact");
  if (!(a->type == b->type)) {
    throw TypeError("order fact " + lo + " <= " + hi + " relates constants of different types");
  }
  FinPreorder& ord = families_.at(a->type).order;
  ord.set_leq(a->index, b->index, true);
  close_in_place(ord);
}

const PolarizedFinPreorder* Signature::family(const Type& type) const {
  auto it = families_.find(type);
  return it == families_.end() ? nullptr : &it->second;
}

std::optional<ConstRef> Signature::find(std::string_view name) const {
  for (const auto& [type, fam] : families_) {
    if (auto i = fam.order.index_of(name)) return ConstRef{std::string(name), type, *i};
  }
  return std::nullopt;
}

std::vector<ConstRef> Signature::constants() const {
  std::vector<ConstRef> out;
  std::set<std::string> seen;
  for (const auto& b : base_types_) {
    const Type t = Type::base(b);
    if (const auto* fam = family(t)) {
      for (std::size_t i = 0; i < fam->size(); ++i) {
        out.push_back({fam->order.name(i), t, i});
        seen.insert(fam->order.name(i));
      }
    }
  }
  for (const auto& name : arrow_order_) {
    if (seen.count(name)) continue;
    if (auto c = find(name)) {
      out.push_back(*c);
      seen.insert(name);
    }
  }
  for (const auto& [type, fam] : families_) {
    for (std::size_t i = 0; i < fam.size(); ++i) {
      if (seen.insert(fam.order.name(i)).second) out.push_back({fam.order.name(i), type, i});
    }
  }
  return out;
}

std::size_t Signature::constant_count() const {
  std::size_t n = 0;
  for (const auto& [type, fam] : families_) n += fam.size();
  return n;
}

bool Signature::leq(std::string_view lo, std::string_view hi) const {
  auto a = find(lo);
  auto b = find(hi);
  if (!a || !b || !(a->type == b->type)) return false;
  return families_.at(a->type).order.leq(a->index, b->index);
}

bool Signature::tagged(std::string_view name, Sign sign) const {
  auto c = find(name);
  if (!c) return false;
  const auto& fam = families_.at(c->type);
  return sign == Sign::Plus ? fam.is_plus(c->index) : fam.is_minus(c->index);
}

std::vector<std::pair<std::string, std::string>> Signature::order_facts() const {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& [type, fam] : families_) {
    for (auto [i, j] : fam.order.strict_pairs()) {
      out.emplace_back(fam.order.name(i), fam.order.name(j));
    }
  }
  return out;
}

std::vector<Finding> validate_signature(const Signature& sig) {
  std::vector<Finding> out;
  std::map<std::string, int> seen;
  for (const auto& [type, fam] : sig.families()) {
    const std::string ty = to_string(type);
    if (!mentions_only(type, sig.base_types())) {
      out.push_back({"undeclared-base", "type " + ty + " mentions an undeclared base type"});
    }
    if (fam.plus.size() != fam.size() || fam.minus.size() != fam.size()) {
      out.push_back({"tag-size", "tag vectors of " + ty + " do not match its carrier"});
      continue;
    }
    if (!fam.order.is_reflexive()) {
      for (std::size_t i = 0; i < fam.size(); ++i) {
        if (!fam.order.leq(i, i)) {
          out.push_back({"not-reflexive",
                         "order on " + ty + " is not reflexive at " + fam.order.name(i)});
        }
      }
    }
    if (!fam.order.is_transitive()) {
      out.push_back({"not-transitive", "order on " + ty + " is not transitive"});
    }
    if (type.is_base()) {
      for (std::size_t i = 0; i < fam.size(); ++i) {
        if (fam.is_plus(i) || fam.is_minus(i)) {
          out.push_back({"polarity-on-base",
                         "base-type constant " + fam.order.name(i) + " carries a polarity tag"});
        }
      }
    }
    for (const auto& name : fam.order.elements()) {
      if (++seen[name] == 2) {
        out.push_back({"duplicate-constant", "constant " + name + " is declared more than once"});
      }
    }
  }
  return out;
}

}  // namespace tonic
