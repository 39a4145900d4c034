#pragma once

#include <string>
#include <string_view>

#include "tonic/proof_tree.hpp"

namespace tonic {

/// Which rule groups are active. The basic rules (refl, trans, point, mono,
/// anti) are always on, except in equational mode, which has exactly
/// refl/symm/trans/cong acting on `=`.
struct CalculusConfig {
  bool wc = false;
  bool pos = false;
  bool identity = false;  // symm, weak, posp
  bool polarity = false;  // pol+, pol-
  bool equational = false;

  static CalculusConfig base() { return {}; }
  static CalculusConfig equality() {
    CalculusConfig c;
    c.equational = true;
    return c;
  }

  bool enabled(Rule r) const;

  /// "base", "base+wc+pos", "eq", ...; throws InputError on unknown names or
  /// when eq is combined with anything else. Accepts ',' or '+' separators.
  static CalculusConfig parse(std::string_view spec);
  std::string to_string() const;

  friend bool operator==(const CalculusConfig&, const CalculusConfig&) = default;
};

}  // namespace tonic
