#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tonic/lexer.hpp"
#include "tonic/term.hpp"
#include "tonic/type.hpp"

namespace tonic {

/// Positioned syntax error raised by the recursive-descent readers.
struct ParseFailure {
  std::size_t line = 1;
  std::size_t col = 1;
  std::string message;
};

/// Token stream shared by every textual format (problems, proofs,
/// preorders, extension instances, model dumps).
class Cursor {
 public:
  /// Throws ParseFailure on a lexical error.
  explicit Cursor(std::string_view text);

  const Token& peek(std::size_t k = 0) const;
  bool at(Tok t) const { return peek().kind == t; }
  /// Unquoted identifier with exactly this spelling.
  bool at_word(std::string_view w) const;
  bool at_end() const { return at(Tok::End); }

  Token next();
  bool accept(Tok t);
  bool accept_word(std::string_view w);
  Token expect(Tok t, std::string_view context = {});
  void expect_word(std::string_view w);
  std::string ident(std::string_view what);
  std::size_t number(std::string_view what);

  /// Skips past the next `;` (or to the end) for error recovery.
  void sync();

  [[noreturn]] void fail(const Token& at, std::string message) const;
  [[noreturn]] void fail(std::string message) const { fail(peek(), std::move(message)); }

  std::size_t position() const { return pos_; }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

/// term := atomterm+ ; atomterm := IDENT | "(" term ")"
Expr read_term(Cursor& c);
/// type := atomtype ("->" type)? ; atomtype := IDENT | "(" type ")"
Type read_type(Cursor& c);

/// Type rendering that quotes base names when needed.
std::string render_type(const Type& t);

}  // namespace tonic
