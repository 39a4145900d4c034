#include "tonic/calculus.hpp"

#include "tonic/error.hpp"

namespace tonic {

bool CalculusConfig::enabled(Rule r) const {
  if (is_leaf_rule(r)) return true;
  if (equational) {
    return r == Rule::Refl || r == Rule::Symm || r == Rule::Trans || r == Rule::Cong;
  }
  switch (r) {
    case Rule::Refl:
    case Rule::Trans:
    case Rule::Point:
    case Rule::Mono:
    case Rule::Anti: return true;
    case Rule::Wc1:
    case Rule::Wc2:
    case Rule::Wc3a:
    case Rule::Wc3b:
    case Rule::Wc3c:
    case Rule::Wc3d: return wc;
    case Rule::Pos: return pos;
    case Rule::Symm:
    case Rule::Weak:
    case Rule::Posp: return identity;
    case Rule::PolPlus:
    case Rule::PolMinus: return polarity;
    default: return false;
  }
}

CalculusConfig CalculusConfig::parse(std::string_view spec) {
  CalculusConfig c;
  bool saw_eq = false, saw_other = false;
  std::size_t start = 0;
  while (start <= spec.size()) {
    std::size_t end = spec.find_first_of(",+", start);
    if (end == std::string_view::npos) end = spec.size();
    const std::string_view w = spec.substr(start, end - start);
    if (w == "base") {
      saw_other = true;
    } else if (w == "wc") {
      c.wc = saw_other = true;
    } else if (w == "pos") {
      c.pos = saw_other = true;
    } else if (w == "identity") {
      c.identity = saw_other = true;
    } else if (w == "polarity") {
      c.polarity = saw_other = true;
    } else if (w == "eq") {
      c.equational = saw_eq = true;
    } else {
      throw InputError("unknown calculus '" + std::string(w) + "'");
    }
    start = end + 1;
  }
  if (saw_eq && saw_other) throw InputError("calculus 'eq' cannot be combined with other rule groups");
  return c;
}

std::string CalculusConfig::to_string() const {
  if (equational) return "eq";
  std::string s = "base";
  if (wc) s += "+wc";
  if (pos) s += "+pos";
  if (identity) s += "+identity";
  if (polarity) s += "+polarity";
  return s;
}

}  // namespace tonic
