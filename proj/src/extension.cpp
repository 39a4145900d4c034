#include "tonic/extension.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "tonic/error.hpp"
#include "tonic/lexer.hpp"

namespace tonic {

JoinOracle lub_search(const FinPreorder& m) {
  return [m](const std::vector<Value>& xs) -> Value {
    Subset s(m.size());
    for (Value x : xs) s.set(x);
    for (std::size_t z = 0; z < m.size(); ++z)
      if (is_lub(m, s, z)) return z;
    throw InputError("codomain has no least upper bound for a subset; it is not complete");
  };
}

JoinOracle completion_join(std::shared_ptr<const CompletionResult> cr) {
  return [cr](const std::vector<Value>& xs) -> Value {
    Subset s(cr->star.size());
    for (Value x : xs) s.set(x);
    return join(*cr, s);
  };
}

bool mixed_leq(const PolarizedFinPreorder& F, std::size_t f, std::size_t g) {
  if (!F.order.leq(f, g)) return false;
  return (F.is_plus(f) && F.is_minus(g)) || (F.is_minus(f) && F.is_plus(g));
}

namespace {

bool table_leq(const FinPreorder& m, const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!m.leq(a[i], b[i])) return false;
  return true;
}

bool table_monotone(const FinPreorder& dom, const FinPreorder& m, const std::vector<std::size_t>& t) {
  for (std::size_t x = 0; x < dom.size(); ++x)
    for (std::size_t y = 0; y < dom.size(); ++y)
      if (dom.leq(x, y) && !m.leq(t[x], t[y])) return false;
  return true;
}

bool table_antitone(const FinPreorder& dom, const FinPreorder& m, const std::vector<std::size_t>& t) {
  for (std::size_t x = 0; x < dom.size(); ++x)
    for (std::size_t y = 0; y < dom.size(); ++y)
      if (dom.leq(x, y) && !m.leq(t[y], t[x])) return false;
  return true;
}

}  // namespace

std::vector<Finding> check_instance(const ExtensionInstance& inst) {
  std::vector<Finding> out;
  const auto& F = inst.F;
  if (!F.order.is_preorder()) out.push_back({"F-not-preorder", "F is not a preorder"});
  if (!inst.S.is_preorder()) out.push_back({"S-not-preorder", "S is not a preorder"});
  if (!inst.L.is_preorder()) out.push_back({"L-not-preorder", "L is not a preorder"});
  if (!inst.M.is_preorder()) out.push_back({"M-not-preorder", "M is not a preorder"});
  if (!inst.join) out.push_back({"no-join", "M has no join oracle"});
  if (!has_all_joins(inst.M)) out.push_back({"M-not-complete", "M is not a complete preorder"});
  if (inst.j.size() != inst.S.size()) {
    out.push_back({"j-shape", "j must map each of the " + std::to_string(inst.S.size()) + " elements of S"});
    return out;
  }
  if (inst.p.size() != F.size()) {
    out.push_back({"p-shape", "p must give a table for each of the " + std::to_string(F.size()) + " elements of F"});
    return out;
  }
  for (std::size_t s = 0; s < inst.j.size(); ++s)
    if (inst.j[s] >= inst.L.size()) {
      out.push_back({"j-range", "j(" + inst.S.name(s) + ") is outside L"});
      return out;
    }
  for (std::size_t f = 0; f < F.size(); ++f) {
    if (inst.p[f].size() != inst.S.size()) {
      out.push_back({"p-shape", "table of " + F.order.name(f) + " has the wrong length"});
      return out;
    }
    for (std::size_t v : inst.p[f])
      if (v >= inst.M.size()) {
        out.push_back({"p-range", "table of " + F.order.name(f) + " leaves M"});
        return out;
      }
  }
  for (std::size_t a = 0; a < inst.S.size(); ++a)
    for (std::size_t b = 0; b < inst.S.size(); ++b) {
      const std::size_t ja = inst.j[a], jb = inst.j[b];
      if (a < b && ja == jb) out.push_back({"j-not-injective", inst.S.name(a) + " and " + inst.S.name(b) + " collide"});
      if (inst.S.leq(a, b) != inst.L.leq(ja, jb)) {
        out.push_back({"j-not-embedding", "order between " + inst.S.name(a) + " and " + inst.S.name(b) +
                                              " is not preserved and reflected"});
      }
    }
  for (std::size_t f = 0; f < F.size(); ++f) {
    const std::string& n = F.order.name(f);
    if (F.is_plus(f) && !table_monotone(inst.S, inst.M, inst.p[f])) out.push_back({"p-not-monotone", "p_" + n + " is not monotone"});
    if (F.is_minus(f) && !table_antitone(inst.S, inst.M, inst.p[f])) out.push_back({"p-not-antitone", "p_" + n + " is not antitone"});
    for (std::size_t g = 0; g < F.size(); ++g)
      if (f != g && F.order.leq(f, g) && !table_leq(inst.M, inst.p[f], inst.p[g])) {
        out.push_back({"p-not-order-preserving", n + " <= " + F.order.name(g) + " but p_" + n + " </= p_" + F.order.name(g)});
      }
  }
  return out;
}

std::optional<SpecialWitness> check_special(const ExtensionInstance& inst) {
  const auto& F = inst.F;
  for (std::size_t f = 0; f < F.size(); ++f)
    for (std::size_t g = 0; g < F.size(); ++g) {
      if (!mixed_leq(F, f, g)) continue;
      for (std::size_t x = 0; x < inst.S.size(); ++x)
        for (std::size_t y = 0; y < inst.S.size(); ++y)
          if (!inst.M.leq(inst.p[f][x], inst.p[g][y])) return SpecialWitness{f, g, x, y};
    }
  return std::nullopt;
}

std::string describe(const ExtensionInstance& inst, const SpecialWitness& w) {
  const auto& F = inst.F.order;
  return F.name(w.f) + " <=+- " + F.name(w.g) + " but p_" + F.name(w.f) + "(" + inst.S.name(w.x) + ") = " +
         inst.M.name(inst.p[w.f][w.x]) + " is not below p_" + F.name(w.g) + "(" + inst.S.name(w.y) + ") = " +
         inst.M.name(inst.p[w.g][w.y]);
}

ExtensionResult extend_interpretation(const ExtensionInstance& inst) {
  if (auto f = check_instance(inst); !f.empty()) throw HypothesisViolation(f.front().code + ": " + f.front().message);
  if (auto w = check_special(inst)) throw HypothesisViolation("special property fails: " + describe(inst, *w));
  const auto& F = inst.F;
  const std::size_t nf = F.size(), nl = inst.L.size(), ns = inst.S.size(), nm = inst.M.size();
  std::vector<std::optional<std::size_t>> pre(nl);  // j^-1
  for (std::size_t s = 0; s < ns; ++s) pre[inst.j[s]] = s;

  ExtensionResult r;
  r.A.assign(nf, std::vector<Subset>(nl, Subset(nm)));
  r.B = r.A;
  r.C.assign(nf, Subset(nm));
  r.D.assign(nf, Subset(nm));
  for (std::size_t f = 0; f < nf; ++f) {
    for (std::size_t h = 0; h < nf; ++h) {
      if (!F.order.leq(h, f)) continue;
      for (std::size_t x = 0; x < nl; ++x)
        for (std::size_t s = 0; s < ns; ++s) {
          if (F.is_plus(h) && inst.L.leq(inst.j[s], x)) r.A[f][x].set(inst.p[h][s]);
          if (F.is_minus(h) && inst.L.leq(x, inst.j[s])) r.B[f][x].set(inst.p[h][s]);
        }
      // C: h- <= k+ <= f ; D: h+ <= k- <= f
      for (std::size_t k = 0; k < nf; ++k) {
        if (!F.order.leq(h, k) || !F.order.leq(k, f)) continue;
        for (std::size_t s = 0; s < ns; ++s) {
          if (F.is_minus(h) && F.is_plus(k)) r.C[f].set(inst.p[h][s]);
          if (F.is_plus(h) && F.is_minus(k)) r.D[f].set(inst.p[h][s]);
        }
      }
    }
  }
  r.q.assign(nf, std::vector<std::size_t>(nl));
  for (std::size_t f = 0; f < nf; ++f)
    for (std::size_t x = 0; x < nl; ++x) {
      if (pre[x]) {
        r.q[f][x] = inst.p[f][*pre[x]];
        continue;
      }
      const Subset all = r.A[f][x] | r.B[f][x] | r.C[f] | r.D[f];
      std::vector<Value> members;
      for (auto m = all.find_first(); m != Subset::npos; m = all.find_next(m)) members.push_back(m);
      r.q[f][x] = static_cast<std::size_t>(inst.join(members));
    }
  return r;
}

std::vector<Finding> verify_extension(const ExtensionInstance& inst, const ExtensionResult& res) {
  std::vector<Finding> out;
  const auto& F = inst.F;
  const auto& M = inst.M;
  for (std::size_t f = 0; f < F.size(); ++f) {
    const std::string& n = F.order.name(f);
    for (std::size_t s = 0; s < inst.S.size(); ++s)
      if (res.q[f][inst.j[s]] != inst.p[f][s]) {
        out.push_back({"not-extension", "q_" + n + "(j(" + inst.S.name(s) + ")) differs from p_" + n});
      }
    for (std::size_t g = 0; g < F.size(); ++g)
      if (F.order.leq(f, g) && !table_leq(M, res.q[f], res.q[g])) {
        out.push_back({"not-monotone-in-F", n + " <= " + F.order.name(g) + " but q_" + n + " </= q_" + F.order.name(g)});
      }
    if (F.is_plus(f) && !table_monotone(inst.L, M, res.q[f])) out.push_back({"plus-not-monotone", "q_" + n + " is not monotone"});
    if (F.is_minus(f) && !table_antitone(inst.L, M, res.q[f])) out.push_back({"minus-not-antitone", "q_" + n + " is not antitone"});
  }
  return out;
}

std::vector<Finding> verify_audit(const ExtensionInstance& inst, const ExtensionResult& res) {
  std::vector<Finding> out;
  const auto& F = inst.F.order;
  const auto& L = inst.L;
  for (std::size_t f = 0; f < F.size(); ++f) {
    for (std::size_t g = 0; g < F.size(); ++g) {
      if (!F.leq(f, g)) continue;
      bool ok = res.C[f].is_subset_of(res.C[g]) && res.D[f].is_subset_of(res.D[g]);
      for (std::size_t x = 0; x < L.size(); ++x)
        ok = ok && res.A[f][x].is_subset_of(res.A[g][x]) && res.B[f][x].is_subset_of(res.B[g][x]);
      if (!ok) out.push_back({"sets-not-monotone-in-F", "sets of " + F.name(f) + " not inside those of " + F.name(g)});
    }
    for (std::size_t x = 0; x < L.size(); ++x)
      for (std::size_t y = 0; y < L.size(); ++y) {
        if (!L.leq(x, y)) continue;
        if (!res.A[f][x].is_subset_of(res.A[f][y]) || !res.B[f][y].is_subset_of(res.B[f][x])) {
          out.push_back({"sets-not-monotone-in-L", "A/B of " + F.name(f) + " at " + L.name(x) + " <= " + L.name(y)});
        }
      }
    for (std::size_t s = 0; s < inst.S.size(); ++s) {
      const std::size_t x = inst.j[s];
      const Subset all = res.A[f][x] | res.B[f][x] | res.C[f] | res.D[f];
      for (auto m = all.find_first(); m != Subset::npos; m = all.find_next(m))
        if (!inst.M.leq(m, inst.p[f][s])) {
          out.push_back({"image-point-overload", "a member of the sets of " + F.name(f) + " at j(" + inst.S.name(s) +
                                                     ") is not below p_" + F.name(f)});
          break;
        }
    }
  }
  return out;
}

// ---------------------------------------------------------------- text format

namespace {

std::size_t element(Cursor& c, const FinPreorder& p, const char* what) {
  const Token t = c.expect(Tok::Ident, what);
  auto i = p.index_of(t.text);
  if (!i) c.fail(t, "'" + t.text + "' is not an element of " + what);
  return *i;
}

}  // namespace

Parsed<ExtensionInstance> parse_extension(std::string_view text) {
  Parsed<ExtensionInstance> out;
  try {
    Cursor c(text);
    ExtensionInstance inst;
    bool have[4] = {false, false, false, false};  // F S L M
    std::vector<char> j_set, p_set;
    auto need = [&](int k, const char* name) {
      if (!have[k]) c.fail(std::string(name) + " must be declared first");
    };
    while (!c.at_end()) {
      const Token kw = c.expect(Tok::Ident, "at the start of a section");
      if (kw.text == "F" || kw.text == "S" || kw.text == "L" || kw.text == "M") {
        const int k = std::string("FSLM").find(kw.text[0]);
        if (have[k]) c.fail(kw, "section " + kw.text + " given twice");
        const bool completion = k == 3 && c.accept_word("completion");
        FinPreorder p = read_preorder_block(c);
        have[k] = true;
        if (k == 0) {
          inst.F = PolarizedFinPreorder(std::move(p));
          p_set.assign(inst.F.size(), 0);
          inst.p.assign(inst.F.size(), {});
        } else if (k == 1) {
          inst.S = std::move(p);
          j_set.assign(inst.S.size(), 0);
          inst.j.assign(inst.S.size(), 0);
        } else if (k == 2) {
          inst.L = std::move(p);
        } else if (completion) {
          auto cr = std::make_shared<const CompletionResult>(complete_preorder(p));
          inst.M = cr->star;
          inst.join = completion_join(cr);
          inst.completion = std::move(cr);
        } else {
          inst.M = std::move(p);
          inst.join = lub_search(inst.M);
        }
      } else if (kw.text == "tag") {
        need(0, "F");
        const std::size_t f = element(c, inst.F.order, "F");
        if (c.accept(Tok::Plus)) inst.F.plus[f] = 1;
        else if (c.accept(Tok::Minus)) inst.F.minus[f] = 1;
        else c.fail("expected + or - after the tagged element");
        c.expect(Tok::Semi, "after a tag");
      } else if (kw.text == "j") {
        need(1, "S");
        need(2, "L");
        const std::size_t s = element(c, inst.S, "S");
        c.expect(Tok::Arrow, "in a j line");
        const std::size_t l = element(c, inst.L, "L");
        c.expect(Tok::Semi, "after a j line");
        if (j_set[s]) c.fail(kw, "j(" + inst.S.name(s) + ") given twice");
        j_set[s] = 1;
        inst.j[s] = l;
      } else if (kw.text == "p") {
        need(0, "F");
        need(1, "S");
        need(3, "M");
        const std::size_t f = element(c, inst.F.order, "F");
        c.expect(Tok::Eq, "in a p line");
        const Token open = c.expect(Tok::LBrack, "to open a table");
        std::vector<std::size_t> t;
        while (c.at(Tok::Ident)) t.push_back(element(c, inst.M, "M"));
        c.expect(Tok::RBrack, "to close a table");
        c.expect(Tok::Semi, "after a p line");
        if (t.size() != inst.S.size()) {
          c.fail(open, "table needs " + std::to_string(inst.S.size()) + " entries, got " + std::to_string(t.size()));
        }
        if (p_set[f]) c.fail(kw, "p_" + inst.F.order.name(f) + " given twice");
        p_set[f] = 1;
        inst.p[f] = std::move(t);
      } else {
        c.fail(kw, "unknown section '" + kw.text + "'");
      }
    }
    for (int k = 0; k < 4; ++k)
      if (!have[k]) c.fail(std::string("missing section ") + "FSLM"[k]);
    for (std::size_t s = 0; s < j_set.size(); ++s)
      if (!j_set[s]) c.fail("no j line for " + inst.S.name(s));
    for (std::size_t f = 0; f < p_set.size(); ++f)
      if (!p_set[f]) c.fail("no p line for " + inst.F.order.name(f));
    out.value = std::move(inst);
  } catch (const ParseFailure& f) {
    out.diagnostics.push_back({Diagnostic::Severity::Error, f.line, f.col, f.message});
  } catch (const InputError& e) {
    out.diagnostics.push_back({Diagnostic::Severity::Error, 1, 1, e.what()});
  } catch (const BudgetExceeded& e) {
    out.diagnostics.push_back({Diagnostic::Severity::Error, 1, 1, e.what()});
  }
  return out;
}

namespace {

std::string block(const FinPreorder& p) {
  // render_preorder writes "preorder NAME { ... }"; keep only the block
  const std::string s = render_preorder({"x", p});
  return s.substr(s.find('{'));
}

std::string table_line(const ExtensionInstance& inst, std::size_t f, const std::vector<std::size_t>& t) {
  std::string out = "p " + quote_ident(inst.F.order.name(f)) + " = [";
  for (std::size_t i = 0; i < t.size(); ++i) out += (i ? " " : "") + quote_ident(inst.M.name(t[i]));
  return out + "];\n";
}

}  // namespace

std::string render_extension(const ExtensionInstance& inst) {
  std::ostringstream os;
  os << "F " << block(inst.F.order);
  for (std::size_t f = 0; f < inst.F.size(); ++f) {
    if (inst.F.is_plus(f)) os << "tag " << quote_ident(inst.F.order.name(f)) << " +;\n";
    if (inst.F.is_minus(f)) os << "tag " << quote_ident(inst.F.order.name(f)) << " -;\n";
  }
  os << "S " << block(inst.S);
  os << "L " << block(inst.L);
  if (inst.completion) os << "M completion " << block(inst.completion->source);
  else os << "M " << block(inst.M);
  for (std::size_t s = 0; s < inst.S.size(); ++s)
    os << "j " << quote_ident(inst.S.name(s)) << " -> " << quote_ident(inst.L.name(inst.j[s])) << ";\n";
  for (std::size_t f = 0; f < inst.F.size(); ++f) os << table_line(inst, f, inst.p[f]);
  return os.str();
}

std::string dump_extension_result(const ExtensionInstance& inst, const ExtensionResult& res) {
  std::ostringstream os;
  os << "# q over L:";
  for (const auto& e : inst.L.elements()) os << " " << quote_ident(e);
  os << "\n";
  for (std::size_t f = 0; f < inst.F.size(); ++f) {
    std::string line = table_line(inst, f, res.q[f]);
    line[0] = 'q';
    os << line;
  }
  for (std::size_t f = 0; f < inst.F.size(); ++f) {
    os << "# audit " << inst.F.order.name(f) << ": |C|=" << res.C[f].count() << " |D|=" << res.D[f].count();
    for (std::size_t x = 0; x < inst.L.size(); ++x)
      os << " " << inst.L.name(x) << ":|A|=" << res.A[f][x].count() << ",|B|=" << res.B[f][x].count();
    os << "\n";
  }
  return os.str();
}

// ---------------------------------------------------------------- generator

namespace {

FinPreorder random_preorder(std::mt19937_64& rng, std::size_t n, const std::string& prefix, double density) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i));
  std::vector<std::pair<std::string, std::string>> rel;
  std::bernoulli_distribution coin(density);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (i != k && coin(rng)) rel.emplace_back(names[i], names[k]);
  return closure_rt(names, rel);
}

std::size_t pick(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// L = S's image plus extra points, with random order added around them;
// retried until j reflects the order.
bool draw_L(std::mt19937_64& rng, ExtensionInstance& inst, std::size_t nl) {
  const std::size_t ns = inst.S.size();
  std::vector<std::size_t> slots(nl);
  std::iota(slots.begin(), slots.end(), 0);
  std::shuffle(slots.begin(), slots.end(), rng);
  inst.j.assign(slots.begin(), slots.begin() + ns);
  std::vector<char> image(nl, 0);
  for (auto l : inst.j) image[l] = 1;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < nl; ++i) names.push_back("l" + std::to_string(i));
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (std::size_t a = 0; a < ns; ++a)
    for (std::size_t b = 0; b < ns; ++b)
      if (inst.S.leq(a, b)) rel.emplace_back(inst.j[a], inst.j[b]);
  std::bernoulli_distribution coin(0.3);
  for (std::size_t x = 0; x < nl; ++x)
    for (std::size_t y = 0; y < nl; ++y)
      if (x != y && (!image[x] || !image[y]) && coin(rng)) rel.emplace_back(x, y);
  FinPreorder L = closure_rt(nl, rel);
  for (std::size_t a = 0; a < ns; ++a)
    for (std::size_t b = 0; b < ns; ++b)
      if (L.leq(inst.j[a], inst.j[b]) != inst.S.leq(a, b)) return false;
  std::vector<char> m(L.matrix());
  inst.L = FinPreorder(std::move(names), std::move(m));
  return true;
}

// Randomized depth-first search for p; false when the node budget runs out.
bool draw_p(std::mt19937_64& rng, ExtensionInstance& inst) {
  const auto& F = inst.F;
  const std::size_t nf = F.size(), ns = inst.S.size(), nm = inst.M.size();
  std::size_t tables = 1;
  for (std::size_t i = 0; i < ns; ++i) tables *= nm;
  std::vector<std::vector<std::size_t>> all(tables, std::vector<std::size_t>(ns));
  for (std::size_t t = 0; t < tables; ++t) {
    std::size_t v = t;
    for (std::size_t i = 0; i < ns; ++i) {
      all[t][i] = v % nm;
      v /= nm;
    }
  }
  std::vector<std::vector<std::size_t>> order(nf, std::vector<std::size_t>(tables));
  for (auto& o : order) {
    std::iota(o.begin(), o.end(), 0);
    std::shuffle(o.begin(), o.end(), rng);
  }
  auto fits = [&](std::size_t f, const std::vector<std::size_t>& t) {
    if (F.is_plus(f) && !table_monotone(inst.S, inst.M, t)) return false;
    if (F.is_minus(f) && !table_antitone(inst.S, inst.M, t)) return false;
    for (std::size_t g = 0; g < f; ++g) {
      const auto& u = inst.p[g];
      if (F.order.leq(g, f) && !table_leq(inst.M, u, t)) return false;
      if (F.order.leq(f, g) && !table_leq(inst.M, t, u)) return false;
      auto all_below = [&](const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
        for (auto x : a)
          for (auto y : b)
            if (!inst.M.leq(x, y)) return false;
        return true;
      };
      if (mixed_leq(F, g, f) && !all_below(u, t)) return false;
      if (mixed_leq(F, f, g) && !all_below(t, u)) return false;
    }
    return !mixed_leq(F, f, f) || [&] {
      for (auto x : t)
        for (auto y : t)
          if (!inst.M.leq(x, y)) return false;
      return true;
    }();
  };
  inst.p.assign(nf, {});
  std::vector<std::size_t> next(nf, 0);
  std::size_t budget = 20000;
  std::size_t f = 0;
  while (f < nf) {
    if (budget-- == 0) return false;
    if (next[f] == tables) {
      if (f == 0) return false;
      next[f] = 0;
      --f;
      continue;
    }
    const auto& t = all[order[f][next[f]++]];
    if (!fits(f, t)) continue;
    inst.p[f] = t;
    ++f;
  }
  return true;
}

}  // namespace

ExtensionInstance random_extension_instance(std::mt19937_64& rng, const ExtensionSizes& sizes) {
  while (true) {
    ExtensionInstance inst;
    inst.F = PolarizedFinPreorder(random_preorder(rng, pick(rng, 1, sizes.max_f), "f", 0.35));
    std::bernoulli_distribution tag(0.45);
    for (std::size_t f = 0; f < inst.F.size(); ++f) {
      inst.F.plus[f] = tag(rng);
      inst.F.minus[f] = tag(rng);
    }
    inst.S = random_preorder(rng, pick(rng, 1, sizes.max_s), "s", 0.3);
    bool placed = false;
    for (int tries = 0; tries < 20 && !placed; ++tries)
      placed = draw_L(rng, inst, pick(rng, inst.S.size(), std::max(sizes.max_l, inst.S.size())));
    if (!placed) continue;
    FinPreorder src = random_preorder(rng, pick(rng, 1, sizes.max_m_source), "m", 0.3);
    auto cr = std::make_shared<const CompletionResult>(complete_preorder(src));
    inst.M = cr->star;
    inst.join = completion_join(cr);
    inst.completion = std::move(cr);
    if (!draw_p(rng, inst)) continue;
    if (check_special(inst) || !check_instance(inst).empty()) continue;
    return inst;
  }
}

}  // namespace tonic
