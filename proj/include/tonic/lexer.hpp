#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace tonic {

enum class Tok {
  Ident,   // bare or quoted name; numbers are names too
  LBrace,
  RBrace,
  LParen,
  RParen,
  LBrack,
  RBrack,
  Semi,
  Colon,
  Leq,     // <=
  Eq,      // =
  Arrow,   // ->
  Plus,
  Minus,
  End,
};

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::size_t line = 1;
  std::size_t col = 1;
  std::size_t offset = 0;  // byte offset of the first character
  std::size_t length = 0;
  bool quoted = false;
};

struct LexError {
  std::size_t line;
  std::size_t col;
  std::string message;
};

/// Splits UTF-8 text into tokens. `#` starts a line comment. Bytes >= 0x80
/// are identifier characters so that names like "φ" or "□β" need no quotes.
/// On the first lexical error the token list ends with End at that point and
/// `error` is set.
std::vector<Token> lex(std::string_view text, LexError* error);

bool is_ident_byte(unsigned char c);
const char* tok_name(Tok t);

/// The name as it must be written in source: bare when every byte is an
/// identifier character, otherwise double-quoted with \" and \\ escapes.
std::string quote_ident(const std::string& name);

}  // namespace tonic
