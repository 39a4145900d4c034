#include "tonic/lexer.hpp"

namespace tonic {

bool is_ident_byte(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' ||
         c == '\'' || c >= 0x80;
}

const char* tok_name(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBrack: return "'['";
    case Tok::RBrack: return "']'";
    case Tok::Semi: return "';'";
    case Tok::Colon: return "':'";
    case Tok::Leq: return "'<='";
    case Tok::Eq: return "'='";
    case Tok::Arrow: return "'->'";
    case Tok::Plus: return "'+'";
    case Tok::Minus: return "'-'";
    case Tok::End: return "end of input";
  }
  return "?";
}

std::vector<Token> lex(std::string_view s, LexError* error) {
  std::vector<Token> out;
  std::size_t i = 0, line = 1, col = 1;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n && i < s.size(); ++k, ++i) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else if ((static_cast<unsigned char>(s[i]) & 0xC0) != 0x80) {
        ++col;  // count code points, not continuation bytes
      }
    }
  };
  auto fail = [&](std::string msg) {
    if (error) *error = {line, col, std::move(msg)};
    out.push_back({Tok::End, "", line, col, i, 0, false});
    return out;
  };

  while (i < s.size()) {
    const unsigned char c = s[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < s.size() && s[i] != '\n') advance(1);
      continue;
    }
    Token t{Tok::End, "", line, col, i, 0, false};
    if (is_ident_byte(c)) {
      std::size_t j = i;
      while (j < s.size() && is_ident_byte(static_cast<unsigned char>(s[j]))) ++j;
      t.kind = Tok::Ident;
      t.text = std::string(s.substr(i, j - i));
      t.length = j - i;
      advance(j - i);
      out.push_back(std::move(t));
      continue;
    }
    if (c == '"') {
      std::size_t j = i + 1;
      std::string name;
      bool closed = false;
      while (j < s.size()) {
        if (s[j] == '\\' && j + 1 < s.size()) {
          name += s[j + 1];
          j += 2;
        } else if (s[j] == '"') {
          closed = true;
          ++j;
          break;
        } else if (s[j] == '\n') {
          break;
        } else {
          name += s[j++];
        }
      }
      if (!closed) return fail("unterminated quoted name");
      if (name.empty()) return fail("empty quoted name");
      t.kind = Tok::Ident;
      t.text = std::move(name);
      t.quoted = true;
      t.length = j - i;
      advance(j - i);
      out.push_back(std::move(t));
      continue;
    }
    std::size_t len = 1;
    switch (c) {
      case '{': t.kind = Tok::LBrace; break;
      case '}': t.kind = Tok::RBrace; break;
      case '(': t.kind = Tok::LParen; break;
      case ')': t.kind = Tok::RParen; break;
      case '[': t.kind = Tok::LBrack; break;
      case ']': t.kind = Tok::RBrack; break;
      case ';': t.kind = Tok::Semi; break;
      case ':': t.kind = Tok::Colon; break;
      case '=': t.kind = Tok::Eq; break;
      case '+': t.kind = Tok::Plus; break;
      case '<':
        if (i + 1 < s.size() && s[i + 1] == '=') {
          t.kind = Tok::Leq;
          len = 2;
          break;
        }
        return fail("unexpected character '<' (did you mean '<='?)");
      case '-':
        if (i + 1 < s.size() && s[i + 1] == '>') {
          t.kind = Tok::Arrow;
          len = 2;
        } else {
          t.kind = Tok::Minus;
        }
        break;
      default:
        return fail(std::string("unexpected character '") + static_cast<char>(c) + "'");
    }
    t.text = std::string(s.substr(i, len));
    t.length = len;
    advance(len);
    out.push_back(std::move(t));
  }
  out.push_back({Tok::End, "", line, col, i, 0, false});
  return out;
}

std::string quote_ident(const std::string& name) {
  bool bare = !name.empty();
  for (unsigned char c : name) bare = bare && is_ident_byte(c);
  if (bare) return name;
  std::string out = "\"";
  for (char c : name) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace tonic
