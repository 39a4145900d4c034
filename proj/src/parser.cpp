#include "tonic/parser.hpp"

#include <set>
#include <sstream>

#include "tonic/error.hpp"

namespace tonic {

std::string format_diagnostic(const Diagnostic& d, std::string_view file) {
  std::ostringstream os;
  os << file << ":" << d.line << ":" << d.col << ": "
     << (d.severity == Diagnostic::Severity::Error ? "error" : "warning") << ": " << d.message;
  return os.str();
}

namespace {

Diagnostic to_diag(const ParseFailure& f) { return {Diagnostic::Severity::Error, f.line, f.col, f.message}; }

// Runs `fn`, turning library exceptions into positioned failures at `at`.
template <class Fn>
auto at_token(const Cursor& c, const Token& at, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const TypeError& e) {
    c.fail(at, std::string("type error: ") + e.what());
  } catch (const InputError& e) {
    c.fail(at, e.what());
  }
}

std::vector<std::pair<Token, Token>> read_pairs(Cursor& c) {
  std::vector<std::pair<Token, Token>> out;
  while (c.at(Tok::Ident)) {
    Token lo = c.next();
    c.expect(Tok::Leq, "in order pair");
    if (!c.at(Tok::Ident)) c.fail("expected an element after '<='");
    Token hi = c.next();
    out.emplace_back(std::move(lo), std::move(hi));
  }
  return out;
}

class ProblemReader {
 public:
  ProblemReader(Cursor& c, std::vector<Diagnostic>& diags) : c_(c), diags_(diags) {}

  void run() {
    while (!c_.at_end()) {
      try {
        decl();
      } catch (const ParseFailure& f) {
        diags_.push_back(to_diag(f));
        c_.sync();
      }
    }
  }

  Theory thy;
  std::vector<Assertion> goals;

 private:
  void decl() {
    if (c_.accept_word("base")) return base_decl();
    if (c_.accept_word("const")) return const_decl();
    if (c_.accept_word("order")) return order_decl();
    if (c_.accept_word("axiom")) return axiom_decl();
    if (c_.accept_word("goal")) return goal_decl();
    c_.fail(c_.at(Tok::Ident) ? "unknown declaration '" + c_.peek().text + "'"
                              : std::string("expected a declaration, found ") +
                                    tok_name(c_.peek().kind));
  }

  void base_decl() {
    const Token name = c_.peek();
    const std::string base = c_.ident("a base type name");
    at_token(c_, name, [&] { thy.sig.add_base_type(base); });
    c_.expect(Tok::LBrace, "to open base block");
    if (c_.accept_word("elems")) {
      while (c_.at(Tok::Ident)) {
        const Token e = c_.next();
        at_token(c_, e, [&] { thy.sig.add_constant(e.text, Type::base(base)); });
      }
      c_.expect(Tok::Semi, "after elems");
    }
    if (c_.accept_word("order")) {
      for (const auto& [lo, hi] : read_pairs(c_)) {
        for (const Token* t : {&lo, &hi}) {
          auto ref = thy.sig.find(t->text);
          if (!ref || !(ref->type == Type::base(base))) {
            c_.fail(*t, "'" + t->text + "' is not an element of base type " + base);
          }
        }
        thy.sig.add_order(lo.text, hi.text);
      }
      c_.expect(Tok::Semi, "after order pairs");
    }
    c_.expect(Tok::RBrace, "to close base block");
  }

  void const_decl() {
    const Token name = c_.peek();
    const std::string n = c_.ident("a constant name");
    c_.expect(Tok::Colon, "after constant name");
    const Token type_at = c_.peek();
    const Type ty = read_type(c_);
    bool plus = false, minus = false;
    if (c_.at(Tok::LBrack)) {
      const Token br = c_.next();
      bool any = false;
      while (c_.at(Tok::Plus) || c_.at(Tok::Minus)) {
        (c_.next().kind == Tok::Plus ? plus : minus) = true;
        any = true;
      }
      if (!any) c_.fail("expected '+' or '-' inside polarity tags");
      c_.expect(Tok::RBrack, "to close polarity tags");
      if (ty.is_base()) c_.fail(br, "polarity tag on base-type constant '" + n + "'");
    }
    c_.expect(Tok::Semi, "after constant declaration");
    for (const auto& s : ty.subtypes()) {
      if (s.is_base() && !thy.sig.has_base_type(s.name())) {
        c_.fail(type_at, "undeclared base type '" + s.name() + "'");
      }
    }
    at_token(c_, name, [&] { thy.sig.add_constant(n, ty, plus, minus); });
  }

  void order_decl() {
    const Token lo = c_.peek();
    c_.ident("a constant");
    c_.expect(Tok::Leq, "in order declaration");
    const Token hi = c_.peek();
    c_.ident("a constant");
    c_.expect(Tok::Semi, "after order declaration");
    if (!thy.sig.find(lo.text)) c_.fail(lo, "undeclared constant '" + lo.text + "'");
    if (!thy.sig.find(hi.text)) c_.fail(hi, "undeclared constant '" + hi.text + "'");
    at_token(c_, lo, [&] { thy.sig.add_order(lo.text, hi.text); });
  }

  Term typed_term() {
    const Token at = c_.peek();
    const Expr e = read_term(c_);
    return at_token(c_, at, [&] { return resolve(e, thy.sig); });
  }

  Assertion relation(const Token& at) {
    const Term lhs = typed_term();
    bool eq = false;
    if (c_.accept(Tok::Eq)) {
      eq = true;
    } else {
      c_.expect(Tok::Leq, "or '=' between terms");
    }
    const Term rhs = typed_term();
    return at_token(c_, at, [&] { return eq ? Assertion::eq(lhs, rhs) : Assertion::leq(lhs, rhs); });
  }

  void axiom_decl() { thy.axioms.push_back(assertion("after axiom")); }

  void goal_decl() { goals.push_back(assertion("after goal")); }

  // relation, or a polarity statement `f +` / `f -`
  Assertion assertion(std::string_view after) {
    const Token at = c_.peek();
    if (c_.at(Tok::Ident) && (c_.peek(1).kind == Tok::Plus || c_.peek(1).kind == Tok::Minus)) {
      const std::string name = c_.next().text;
      const Sign s = c_.next().kind == Tok::Plus ? Sign::Plus : Sign::Minus;
      c_.expect(Tok::Semi, after);
      Assertion a = Assertion::pol(name, s);
      at_token(c_, at, [&] { check_assertion(a, thy.sig); });
      return a;
    }
    Assertion a = relation(at);
    c_.expect(Tok::Semi, after);
    return a;
  }

  Cursor& c_;
  std::vector<Diagnostic>& diags_;
};

const char* tag_text(bool plus, bool minus) {
  if (plus && minus) return " [+-]";
  if (plus) return " [+]";
  if (minus) return " [-]";
  return "";
}

}  // namespace

Parsed<SourceProblem> parse_problem(std::string_view text, std::string file) {
  Parsed<SourceProblem> out;
  try {
    Cursor c(text);
    ProblemReader r(c, out.diagnostics);
    r.run();
    if (!out.diagnostics.empty()) return out;
    for (const auto& f : validate_signature(r.thy.sig)) {
      out.diagnostics.push_back({Diagnostic::Severity::Error, 1, 1, f.code + ": " + f.message});
    }
    if (!out.diagnostics.empty()) return out;
    out.value = SourceProblem{std::string(text), std::move(file), std::move(r.thy), std::move(r.goals)};
  } catch (const ParseFailure& f) {
    out.diagnostics.push_back(to_diag(f));
  }
  return out;
}

std::string render_problem(const Theory& thy, const std::vector<Assertion>& goals) {
  std::ostringstream os;
  const Signature& sig = thy.sig;
  for (const auto& b : sig.base_types()) {
    os << "base " << quote_ident(b) << " {";
    if (const auto* fam = sig.family(Type::base(b)); fam && fam->size() > 0) {
      os << " elems";
      for (const auto& e : fam->order.elements()) os << " " << quote_ident(e);
      os << ";";
      const auto pairs = fam->order.strict_pairs();
      if (!pairs.empty()) {
        os << " order";
        for (auto [i, j] : pairs) {
          os << " " << quote_ident(fam->order.name(i)) << " <= " << quote_ident(fam->order.name(j));
        }
        os << ";";
      }
    }
    os << " }\n";
  }
  std::set<std::string> printed;
  for (const auto& c : sig.constants()) {
    if (c.type.is_base()) continue;
    const auto& fam = *sig.family(c.type);
    os << "const " << quote_ident(c.name) << " : " << render_type(c.type)
       << tag_text(fam.is_plus(c.index), fam.is_minus(c.index)) << ";\n";
  }
  for (const auto& [type, fam] : sig.families()) {
    if (type.is_base()) continue;
    for (auto [i, j] : fam.order.strict_pairs()) {
      os << "order " << quote_ident(fam.order.name(i)) << " <= " << quote_ident(fam.order.name(j))
         << ";\n";
    }
  }
  for (const auto& a : thy.axioms) os << "axiom " << render(a) << ";\n";
  for (const auto& g : goals) os << "goal " << render(g) << ";\n";
  return os.str();
}

Parsed<Term> parse_term(std::string_view text, const Signature& sig) {
  Parsed<Term> out;
  try {
    Cursor c(text);
    const Token at = c.peek();
    const Expr e = read_term(c);
    if (!c.at_end()) c.fail("unexpected input after term");
    out.value = at_token(c, at, [&] { return resolve(e, sig); });
  } catch (const ParseFailure& f) {
    out.diagnostics.push_back(to_diag(f));
  }
  return out;
}

// ---------------------------------------------------------------- proofs

namespace {

class ProofReader {
 public:
  ProofReader(Cursor& c, const Theory& thy, ProofParseOptions opt)
      : c_(c), thy_(thy), opt_(opt) {}

  ProofTree node() {
    const Token open = c_.expect(Tok::LParen, "to open a proof node");
    const Token at = c_.peek();
    const std::string word = rule_word();
    if (word == "term") c_.fail(at, "term payload is not a proof node");
    auto rule = rule_from_name(word);
    if (!rule) c_.fail(at, "unknown rule '" + word + "'");
    (void)open;
    switch (*rule) {
      case Rule::Axiom: {
        const Token n = c_.peek();
        const std::size_t idx = c_.number("an axiom index");
        if (opt_.check_leaves && idx >= thy_.axioms.size()) {
          c_.fail(n, "dangling axiom index " + std::to_string(idx) + " (theory has " +
                         std::to_string(thy_.axioms.size()) + " axioms)");
        }
        c_.expect(Tok::RParen, "to close axiom leaf");
        return ProofTree::axiom_leaf(idx);
      }
      case Rule::SigOrder: {
        const Token lo = c_.peek();
        const std::string a = c_.ident("a constant");
        const Token hi = c_.peek();
        const std::string b = c_.ident("a constant");
        known(lo);
        known(hi);
        c_.expect(Tok::RParen, "to close sig-order leaf");
        if (opt_.check_leaves && !thy_.sig.leq(a, b)) {
          c_.fail(lo, "order fact " + a + " <= " + b + " not in signature");
        }
        return ProofTree::sig_order(a, b);
      }
      case Rule::SigPol: {
        const Token f = c_.peek();
        const std::string a = c_.ident("a constant");
        known(f);
        Sign s = Sign::Plus;
        if (c_.accept(Tok::Minus)) {
          s = Sign::Minus;
        } else {
          c_.expect(Tok::Plus, "or '-' in sig-pol leaf");
        }
        c_.expect(Tok::RParen, "to close sig-pol leaf");
        if (opt_.check_leaves && !thy_.sig.tagged(a, s)) {
          c_.fail(f, std::string("polarity fact not in signature: ") + a + sign_char(s));
        }
        return ProofTree::sig_pol(a, s);
      }
      default: break;
    }
    ProofTree t = ProofTree::node(*rule, {});
    while (c_.at(Tok::LParen)) {
      if (c_.peek(1).kind == Tok::Ident && !c_.peek(1).quoted && c_.peek(1).text == "term" &&
          c_.peek(2).kind != Tok::RParen) {
        c_.next();
        c_.next();
        const Token tat = c_.peek();
        const Expr e = read_term(c_);
        c_.expect(Tok::RParen, "to close term payload");
        try {
          t.terms.push_back(resolve(e, thy_.sig));
        } catch (const InputError& err) {
          c_.fail(tat, std::string("ill-typed term: ") + err.what());
        }
      } else {
        t.premises.push_back(node());
      }
    }
    c_.expect(Tok::RParen, std::string("to close ") + rule_name(*rule) + " node");
    return t;
  }

 private:
  // Rule names contain '-' and '+' ("sig-order", "pol+"), which the lexer
  // splits; glue tokens that touch each other back together.
  std::string rule_word() {
    const Token first = c_.peek();
    if (first.kind != Tok::Ident) c_.fail("expected a rule name");
    std::string word = c_.next().text;
    std::size_t end = first.offset + first.length;
    while (true) {
      const Token& t = c_.peek();
      const bool glue = t.kind == Tok::Minus || t.kind == Tok::Plus ||
                        (t.kind == Tok::Ident && !t.quoted && (word.back() == '-' || word.back() == '+'));
      if (!glue || t.offset != end) break;
      word += t.text;
      end = t.offset + t.length;
      c_.next();
    }
    return word;
  }

  void known(const Token& t) {
    if (!thy_.sig.find(t.text)) c_.fail(t, "undeclared constant '" + t.text + "'");
  }

  Cursor& c_;
  const Theory& thy_;
  ProofParseOptions opt_;
};

void render_into(const ProofTree& t, std::string& out) {
  out += "(";
  out += rule_name(t.rule);
  switch (t.rule) {
    case Rule::Axiom: out += " " + std::to_string(t.axiom); break;
    case Rule::SigOrder: out += " " + quote_ident(t.lo) + " " + quote_ident(t.hi); break;
    case Rule::SigPol: out += " " + quote_ident(t.lo) + " " + sign_char(t.sign); break;
    default:
      for (const auto& p : t.premises) {
        out += " ";
        render_into(p, out);
      }
      for (const auto& term : t.terms) out += " (term " + render(term) + ")";
  }
  out += ")";
}

}  // namespace

Parsed<ProofTree> parse_proof(std::string_view text, const Theory& thy, ProofParseOptions options) {
  Parsed<ProofTree> out;
  try {
    Cursor c(text);
    ProofReader r(c, thy, options);
    ProofTree t = r.node();
    if (!c.at_end()) c.fail("unexpected input after proof");
    out.value = std::move(t);
  } catch (const ParseFailure& f) {
    out.diagnostics.push_back(to_diag(f));
  }
  return out;
}

std::string render(const ProofTree& tree) {
  std::string out;
  render_into(tree, out);
  return out;
}

// ------------------------------------------------------------- preorders

FinPreorder read_preorder_block(Cursor& c) {
  c.expect(Tok::LBrace, "to open preorder block");
  std::vector<std::string> elems;
  if (c.accept_word("elems")) {
    while (c.at(Tok::Ident)) {
      const Token e = c.next();
      for (const auto& x : elems)
        if (x == e.text) c.fail(e, "duplicate element '" + e.text + "'");
      elems.push_back(e.text);
    }
    c.expect(Tok::Semi, "after elems");
  }
  FinPreorder p = FinPreorder::discrete(elems);
  if (c.accept_word("order")) {
    for (const auto& [lo, hi] : read_pairs(c)) {
      auto i = p.index_of(lo.text);
      auto j = p.index_of(hi.text);
      if (!i) c.fail(lo, "unknown element '" + lo.text + "'");
      if (!j) c.fail(hi, "unknown element '" + hi.text + "'");
      p.set_leq(*i, *j, true);
    }
    c.expect(Tok::Semi, "after order pairs");
  }
  c.expect(Tok::RBrace, "to close preorder block");
  close_in_place(p);
  return p;
}

Parsed<NamedPreorder> parse_preorder(std::string_view text) {
  Parsed<NamedPreorder> out;
  try {
    Cursor c(text);
    c.expect_word("preorder");
    NamedPreorder np;
    np.name = c.ident("a preorder name");
    np.order = read_preorder_block(c);
    if (!c.at_end()) c.fail("unexpected input after preorder");
    out.value = std::move(np);
  } catch (const ParseFailure& f) {
    out.diagnostics.push_back(to_diag(f));
  }
  return out;
}

std::string render_preorder(const NamedPreorder& p) {
  std::ostringstream os;
  os << "preorder " << quote_ident(p.name) << " {";
  if (!p.order.empty()) {
    os << " elems";
    for (const auto& e : p.order.elements()) os << " " << quote_ident(e);
    os << ";";
  }
  const auto pairs = p.order.strict_pairs();
  if (!pairs.empty()) {
    os << " order";
    for (auto [i, j] : pairs) os << " " << quote_ident(p.order.name(i)) << " <= " << quote_ident(p.order.name(j));
    os << ";";
  }
  os << " }\n";
  return os.str();
}

}  // namespace tonic
