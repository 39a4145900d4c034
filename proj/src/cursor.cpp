#include "tonic/cursor.hpp"

#include <charconv>

namespace tonic {

Cursor::Cursor(std::string_view text) {
  LexError err{0, 0, {}};
  toks_ = lex(text, &err);
  if (err.line != 0) throw ParseFailure{err.line, err.col, err.message};
}

const Token& Cursor::peek(std::size_t k) const {
  const std::size_t i = pos_ + k;
  return i < toks_.size() ? toks_[i] : toks_.back();
}

bool Cursor::at_word(std::string_view w) const {
  const Token& t = peek();
  return t.kind == Tok::Ident && !t.quoted && t.text == w;
}

Token Cursor::next() {
  Token t = peek();
  if (pos_ + 1 < toks_.size()) ++pos_;
  return t;
}

bool Cursor::accept(Tok t) {
  if (!at(t)) return false;
  next();
  return true;
}

bool Cursor::accept_word(std::string_view w) {
  if (!at_word(w)) return false;
  next();
  return true;
}

Token Cursor::expect(Tok t, std::string_view context) {
  if (!at(t)) {
    std::string msg = std::string("expected ") + tok_name(t);
    if (!context.empty()) msg += " " + std::string(context);
    msg += ", found ";
    msg += at(Tok::Ident) ? "'" + peek().text + "'" : tok_name(peek().kind);
    fail(msg);
  }
  return next();
}

void Cursor::expect_word(std::string_view w) {
  if (!accept_word(w)) {
    fail("expected '" + std::string(w) + "', found " +
         (at(Tok::Ident) ? "'" + peek().text + "'" : std::string(tok_name(peek().kind))));
  }
}

std::string Cursor::ident(std::string_view what) {
  if (!at(Tok::Ident)) {
    fail("expected " + std::string(what) + ", found " + tok_name(peek().kind));
  }
  return next().text;
}

std::size_t Cursor::number(std::string_view what) {
  const Token& t = peek();
  std::size_t v = 0;
  if (t.kind != Tok::Ident || t.quoted) fail("expected " + std::string(what));
  auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
  if (ec != std::errc() || p != t.text.data() + t.text.size()) {
    fail("expected " + std::string(what) + ", found '" + t.text + "'");
  }
  next();
  return v;
}

void Cursor::sync() {
  while (!at_end() && !at(Tok::Semi)) next();
  accept(Tok::Semi);
}

void Cursor::fail(const Token& at, std::string message) const {
  throw ParseFailure{at.line, at.col, std::move(message)};
}

namespace {

Expr read_atom_term(Cursor& c) {
  if (c.accept(Tok::LParen)) {
    Expr e = read_term(c);
    c.expect(Tok::RParen, "to close term");
    return e;
  }
  return Expr::constant(c.ident("a term"));
}

}  // namespace

Expr read_term(Cursor& c) {
  Expr e = read_atom_term(c);
  while (c.at(Tok::Ident) || c.at(Tok::LParen)) e = Expr::apply(e, read_atom_term(c));
  return e;
}

Type read_type(Cursor& c) {
  Type head;
  if (c.accept(Tok::LParen)) {
    head = read_type(c);
    c.expect(Tok::RParen, "to close type");
  } else {
    head = Type::base(c.ident("a type"));
  }
  if (c.accept(Tok::Arrow)) return Type::arrow(head, read_type(c));
  return head;
}

std::string render_type(const Type& t) {
  if (t.is_base()) return quote_ident(t.name());
  std::string d = render_type(t.domain());
  if (t.domain().is_arrow()) d = "(" + d + ")";
  return d + " -> " + render_type(t.codomain());
}

}  // namespace tonic
