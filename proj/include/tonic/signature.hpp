#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tonic/preorder.hpp"
#include "tonic/type.hpp"

namespace tonic {

enum class Sign { Plus, Minus };

inline char sign_char(Sign s) { return s == Sign::Plus ? '+' : '-'; }

struct ConstRef {
  std::string name;
  Type type;
  std::size_t index = 0;  // position inside the family of `type`
};

/// Ordered signature: one polarized preorder of constants per type.
/// Base-type families must carry no tags; `validate_signature` reports
/// violations rather than the mutators rejecting them, so that malformed
/// signatures stay representable.
class Signature {
 public:
  /// Throws InputError on redeclaration.
  void add_base_type(const std::string& name);

  /// Throws InputError when the name is taken or the type mentions an
  /// undeclared base type.
  void add_constant(const std::string& name, const Type& type, bool plus = false,
                    bool minus = false);

  /// Adds `lo <= hi` and re-closes the family. Both must share a type.
  void add_order(const std::string& lo, const std::string& hi);

  const std::vector<std::string>& base_types() const { return base_types_; }
  bool has_base_type(std::string_view name) const;

  const std::map<Type, PolarizedFinPreorder>& families() const { return families_; }
  /// Raw access; callers are responsible for keeping tag vectors sized.
  std::map<Type, PolarizedFinPreorder>& mutable_families() { return families_; }
  const PolarizedFinPreorder* family(const Type& type) const;

  std::optional<ConstRef> find(std::string_view name) const;

  /// Base-type constants (declared base order) followed by arrow constants
  /// in declaration order.
  std::vector<ConstRef> constants() const;
  std::size_t constant_count() const;

  bool leq(std::string_view lo, std::string_view hi) const;
  bool tagged(std::string_view name, Sign sign) const;

  /// Strict order pairs of every family, base types first.
  std::vector<std::pair<std::string, std::string>> order_facts() const;

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  std::vector<std::string> base_types_;
  std::map<Type, PolarizedFinPreorder> families_;
  std::vector<std::string> arrow_order_;
};

struct Finding {
  std::string code;
  std::string message;
};

/// Every violated signature invariant; empty iff valid.
std::vector<Finding> validate_signature(const Signature& sig);

}  // namespace tonic
