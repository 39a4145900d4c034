#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tonic/exec.hpp"
#include "tonic/parser.hpp"
#include "tonic/preorder.hpp"
#include "tonic/theory.hpp"

namespace tonic {

/// Element of some P_σ, as an index into that space.
using Value = std::uint64_t;

/// The carrier P_σ of one type. Base spaces wrap a preorder; an arrow space
/// holds every table dom -> cod, element k being the table whose entry at x
/// is digit x of k in base |cod| (least significant digit first). Orders and
/// tags are computed from the tables, never stored per pair.
class Space {
 public:
  static std::shared_ptr<const Space> base(Type type, FinPreorder order);
  /// Throws BudgetExceeded when |cod|^|dom| * |dom| exceeds `max_cells`.
  static std::shared_ptr<const Space> arrow(Type type, std::shared_ptr<const Space> dom,
                                            std::shared_ptr<const Space> cod, std::size_t max_cells);

  const Type& type() const { return type_; }
  bool is_arrow() const { return dom_ != nullptr; }
  Value size() const { return size_; }
  const Space& dom() const { return *dom_; }
  const Space& cod() const { return *cod_; }
  const FinPreorder& base_order() const { return order_; }

  bool leq(Value a, Value b) const;
  Value apply(Value f, Value x) const { return (f / pow_[x]) % cod_->size_; }
  std::vector<Value> table(Value f) const;
  Value from_table(const std::vector<Value>& t) const;

  bool monotone(Value f) const;
  bool antitone(Value f) const;

  /// Element names: base element names, or "[v0 v1 ...]" with nested values.
  std::string render(Value v) const;

 private:
  Type type_;
  Value size_ = 0;
  FinPreorder order_;
  std::shared_ptr<const Space> dom_, cod_;
  std::vector<Value> pow_;
  // filled for small spaces only
  std::vector<std::uint64_t> leq_bits_;
  std::vector<char> mono_, anti_;
};

/// All tables P -> Q as a polarized preorder: pointwise order, + the
/// monotone tables, - the antitone ones. Throws BudgetExceeded.
PolarizedFinPreorder function_space(const FinPreorder& p, const FinPreorder& q,
                                    std::size_t max_cells = 1'000'000);

/// Full preorder type structure over a family of base preorders. Arrow
/// spaces are built on first use; safe for concurrent readers.
class FullStructure {
 public:
  explicit FullStructure(std::map<std::string, FinPreorder> bases, std::size_t max_cells = 1'000'000);

  const std::map<std::string, FinPreorder>& bases() const { return bases_; }
  /// Throws InputError for an unknown base type, BudgetExceeded when the
  /// space is too large.
  const Space& space(const Type& t) const;
  std::size_t max_cells() const { return max_cells_; }

 private:
  std::shared_ptr<const Space> get(const Type& t) const;

  std::map<std::string, FinPreorder> bases_;
  std::size_t max_cells_;
  mutable std::mutex mu_;
  mutable std::map<Type, std::shared_ptr<const Space>> spaces_;
};

struct Model {
  std::shared_ptr<const FullStructure> structure;
  std::map<std::string, Value> interp;
  std::map<std::string, Type> types;  // of each interpreted constant

  void set(const std::string& name, const Type& type, Value v) {
    interp[name] = v;
    types[name] = type;
  }
};

/// How `=` is read: identity of elements, or order both ways.
enum class EqReading { Identity, Equivalence };

Value eval(const Term& t, const Model& m);
bool satisfies(const Model& m, const Assertion& a, EqReading eq = EqReading::Identity);
/// Constants interpreted in their spaces, signature order and tags
/// respected, every axiom satisfied.
bool is_model(const Model& m, const Theory& thy, EqReading eq = EqReading::Identity);

bool is_weakly_complete(const FinPreorder& p);
/// Every subset has a least upper bound. Throws InputError above 16 elements.
bool is_complete(const FinPreorder& p);
bool is_poset(const FinPreorder& p);

struct SizeBounds {
  std::size_t max_base = 3;        // carrier size of each base type
  int max_order = 2;               // highest type order that may be interpreted
  std::size_t max_cells = 1'000'000;
  std::size_t max_models = SIZE_MAX;
};

struct EnumOptions {
  SizeBounds bounds;
  bool require_wc = false;
  bool require_poset = false;
  /// Base types listed here use exactly this preorder instead of ranging
  /// over all small ones.
  std::map<std::string, FinPreorder> fixed_bases;
  EqReading eq = EqReading::Identity;
};

/// Every preorder on {0..n-1}, ordered by the off-diagonal part of the
/// row-major matrix read as a binary number.
std::vector<FinPreorder> all_preorders(std::size_t n);

struct EnumStats {
  std::size_t base_assignments = 0;  // combinations of base preorders tried
  std::size_t skipped = 0;           // combinations over the cell budget or type order
  std::size_t models = 0;
  bool stopped = false;              // callback or max_models ended the run
  std::vector<std::string> notices;
};

/// Deterministic enumeration: base preorders by carrier size then matrix
/// order (per base type, odometer over base types in name order), then
/// interpretations by lexicographic index assignment over the signature's
/// constants. `visit` returns false to stop.
EnumStats enumerate_models(const Theory& thy, const EnumOptions& opt,
                           const std::function<bool(const Model&)>& visit);
std::vector<Model> enumerate_models(const Theory& thy, const EnumOptions& opt);

struct CountermodelResult {
  std::optional<Model> model;
  /// No countermodel exists within the bounds (every candidate examined).
  bool exhausted = false;
  EnumStats stats;
};

/// First model of `thy` (in enumeration order) falsifying `goal`. Parallel
/// execution shards the base assignments and still returns the first one.
CountermodelResult find_countermodel(const Theory& thy, const Assertion& goal, const EnumOptions& opt,
                                     Exec exec);
CountermodelResult find_countermodel(const Theory& thy, const Assertion& goal, const EnumOptions& opt);

/// Text block: one `preorder` block per base type, then `val c = v;` per
/// constant, with arrow values as nested `[...]` tables.
std::string dump_model(const Model& m, const Signature& sig);
Parsed<Model> load_model(std::string_view text, const Signature& sig, std::size_t max_cells = 1'000'000);

/// The tags an arrow constant's interpretation actually earns: +, -, both
/// or neither. Base constants are omitted.
struct Classification {
  std::string constant;
  bool plus = false;
  bool minus = false;
};
std::vector<Classification> classify(const Model& m, const Signature& sig);

}  // namespace tonic
