#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tonic/cursor.hpp"
#include "tonic/preorder.hpp"
#include "tonic/proof_tree.hpp"
#include "tonic/theory.hpp"

namespace tonic {

struct Diagnostic {
  enum class Severity { Error, Warning };
  Severity severity = Severity::Error;
  std::size_t line = 1;
  std::size_t col = 1;
  std::string message;
};

/// "file:line:col: error: message"
std::string format_diagnostic(const Diagnostic& d, std::string_view file = "<input>");

/// Result of a parse: a value iff no error diagnostics were produced.
template <class T>
struct Parsed {
  std::optional<T> value;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return value.has_value(); }
};

struct SourceProblem {
  std::string text;
  std::string file;
  Theory theory;
  std::vector<Assertion> goals;
};

/// Problem DSL:
///   base NAME { elems a b c; order a <= c b <= c; }
///   const f : b -> t [+];
///   order f <= g;
///   axiom a <= c;        (or  axiom s = t;  axiom f +;)
///   goal f a <= g b;     (or  goal s = t;  goal f +;)
/// `#` starts a comment. A base block may omit its elements, which declares
/// a base type with no constants.
Parsed<SourceProblem> parse_problem(std::string_view text, std::string file = "<input>");

/// Canonical text of a theory plus goals; parse_problem inverts it.
std::string render_problem(const Theory& thy, const std::vector<Assertion>& goals = {});

/// Parses a single term against a signature.
Parsed<Term> parse_term(std::string_view text, const Signature& sig);

struct ProofParseOptions {
  /// When false, axiom indices and signature facts are not validated here
  /// and bad leaves are left for the checker to reject.
  bool check_leaves = true;
};

/// Parenthesized proof format, e.g.
///   (trans (mono (sig-pol f +) (axiom 0)) (point (sig-order f g) (term c)))
Parsed<ProofTree> parse_proof(std::string_view text, const Theory& thy,
                              ProofParseOptions options = {});

std::string render(const ProofTree& tree);

struct NamedPreorder {
  std::string name;
  FinPreorder order;
};

/// preorder NAME { elems a b c; order a <= b; }   (closure is taken)
Parsed<NamedPreorder> parse_preorder(std::string_view text);
std::string render_preorder(const NamedPreorder& p);

/// Reads `{ elems ...; order ...; }` into a closed preorder.
FinPreorder read_preorder_block(Cursor& c);

}  // namespace tonic
