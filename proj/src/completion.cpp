#include "tonic/completion.hpp"

#include <bit>
#include <set>
#include <sstream>

#include "tonic/error.hpp"
#include "tonic/lexer.hpp"

namespace tonic {

std::vector<std::uint32_t> down_closed_sets(const FinPreorder& p, std::size_t cap) {
  const std::size_t n = p.size();
  if (n > cap) throw InputError("carrier of " + std::to_string(n) + " elements exceeds the cap of " + std::to_string(cap));
  // below[x] = mask of everything <= x; A is down-closed iff it contains
  // below[x] for each x in A
  std::vector<std::uint32_t> below(n, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (p.leq(y, x)) below[x] |= 1u << y;
  std::vector<std::uint32_t> out;
  for (std::uint32_t a = 0; a < (1u << n); ++a) {
    bool closed = true;
    for (std::size_t x = 0; x < n && closed; ++x)
      if ((a >> x) & 1) closed = (below[x] & ~a) == 0;
    if (closed) out.push_back(a);
  }
  return out;
}

std::uint32_t CompletionResult::set_of(std::size_t k) const {
  return k == bottom ? 0 : down_sets[k / source.size()];
}

std::size_t CompletionResult::index_of(std::uint32_t set, std::size_t p) const {
  const auto it = std::lower_bound(down_sets.begin(), down_sets.end(), set);
  if (it == down_sets.end() || *it != set) throw InputError("not a down-closed set of the source");
  return static_cast<std::size_t>(it - down_sets.begin()) * source.size() + p;
}

namespace {

std::string set_name(const FinPreorder& p, std::uint32_t set) {
  std::string out = "{";
  bool first = true;
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (!((set >> x) & 1)) continue;
    if (!first) out += ",";
    out += p.name(x);
    first = false;
  }
  return out + "}";
}

}  // namespace

CompletionResult complete_preorder(const FinPreorder& p, std::size_t cap, std::size_t max_star) {
  CompletionResult cr;
  cr.source = p;
  cr.down_sets = down_closed_sets(p, cap);
  const std::size_t n = p.size(), d = cr.down_sets.size();
  const std::size_t size = d * n + 1;
  if (size > max_star) {
    throw BudgetExceeded("completion would have " + std::to_string(size) + " elements (cap " +
                         std::to_string(max_star) + ")");
  }
  cr.bottom = size - 1;
  std::vector<std::string> names;
  names.reserve(size);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t x = 0; x < n; ++x) names.push_back("(" + set_name(p, cr.down_sets[a]) + "," + p.name(x) + ")");
  names.push_back("⊥");
  std::vector<char> m(size * size);
  for (std::size_t k = 0; k < size; ++k)
    for (std::size_t l = 0; l < size; ++l) m[k * size + l] = (cr.set_of(k) & ~cr.set_of(l)) == 0;
  cr.star = FinPreorder(std::move(names), std::move(m));
  cr.embed.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::uint32_t down = 0;
    for (std::size_t y = 0; y < n; ++y)
      if (p.leq(y, x)) down |= 1u << y;
    cr.embed[x] = cr.index_of(down, x);
  }
  return cr;
}

std::size_t join(const CompletionResult& cr, const Subset& s) {
  std::uint32_t w = 0;
  for (auto k = s.find_first(); k != Subset::npos; k = s.find_next(k)) w |= cr.set_of(k);
  if (w == 0) return cr.bottom;
  return cr.index_of(w, static_cast<std::size_t>(std::countr_zero(w)));
}

bool is_lub(const FinPreorder& order, const Subset& s, std::size_t z) {
  auto upper = [&](std::size_t u) {
    for (auto k = s.find_first(); k != Subset::npos; k = s.find_next(k))
      if (!order.leq(k, u)) return false;
    return true;
  };
  if (!upper(z)) return false;
  for (std::size_t u = 0; u < order.size(); ++u)
    if (upper(u) && !order.leq(z, u)) return false;
  return true;
}

bool has_all_joins(const FinPreorder& p) {
  const std::size_t n = p.size();
  std::vector<Subset> up(n, Subset(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (p.leq(x, y)) up[x].set(y);
  Subset all(n);
  all.set();
  std::set<Subset> seen{all};
  std::vector<Subset> work{all};
  while (!work.empty()) {
    const Subset u = work.back();
    work.pop_back();
    // u has a least member iff some z in u is below all of u
    bool least = false;
    for (auto z = u.find_first(); z != Subset::npos && !least; z = u.find_next(z)) least = u.is_subset_of(up[z]);
    if (!least) return false;
    for (std::size_t x = 0; x < n; ++x) {
      Subset v = u & up[x];
      if (seen.insert(v).second) work.push_back(std::move(v));
    }
  }
  return true;
}

std::vector<Finding> verify_embedding(const FinPreorder& p, const CompletionResult& cr) {
  std::vector<Finding> out;
  const FinPreorder& s = cr.star;
  if (!s.is_preorder()) out.push_back({"not-preorder", "star relation is not a preorder"});
  if (cr.embed.size() != p.size()) {
    out.push_back({"embed-size", "embedding covers " + std::to_string(cr.embed.size()) + " of " +
                                     std::to_string(p.size()) + " elements"});
    return out;
  }
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = 0; y < p.size(); ++y) {
      const std::size_t ex = cr.embed[x], ey = cr.embed[y];
      if (x < y && ex == ey) {
        out.push_back({"not-injective", p.name(x) + " and " + p.name(y) + " both map to " + s.name(ex)});
      }
      if (p.leq(x, y) && !s.leq(ex, ey)) {
        out.push_back({"not-preserving", p.name(x) + " <= " + p.name(y) + " but " + s.name(ex) + " </= " + s.name(ey)});
      }
      if (!p.leq(x, y) && s.leq(ex, ey)) {
        out.push_back({"not-reflecting", s.name(ex) + " <= " + s.name(ey) + " but " + p.name(x) + " </= " + p.name(y)});
      }
    }
  if (!has_all_joins(s)) out.push_back({"not-complete", "some subset of the star has no least upper bound"});
  return out;
}

Value pointwise_join(const Space& fs, const std::vector<Value>& s, const JoinOracle& cod_join) {
  std::vector<Value> t(fs.dom().size());
  std::vector<Value> column;
  for (Value x = 0; x < t.size(); ++x) {
    column.clear();
    for (Value f : s) column.push_back(fs.apply(f, x));
    t[x] = cod_join(column);
  }
  return fs.from_table(t);
}

std::string dump_completion(const CompletionResult& cr) {
  std::ostringstream os;
  os << render_preorder({"P*", cr.star});
  for (std::size_t x = 0; x < cr.source.size(); ++x)
    os << "embed " << quote_ident(cr.source.name(x)) << " -> " << quote_ident(cr.star.name(cr.embed[x])) << ";\n";
  return os.str();
}

Parsed<CompletionDump> load_completion(std::string_view text) {
  Parsed<CompletionDump> out;
  try {
    Cursor c(text);
    c.expect_word("preorder");
    c.expect(Tok::Ident, "after 'preorder'");
    CompletionDump d;
    d.star = read_preorder_block(c);
    while (c.accept_word("embed")) {
      const Token from = c.expect(Tok::Ident, "after 'embed'");
      c.expect(Tok::Arrow, "in an embedding line");
      const Token to = c.expect(Tok::Ident, "after '->'");
      if (!d.star.index_of(to.text)) c.fail(to, "'" + to.text + "' is not a star element");
      c.expect(Tok::Semi, "after an embedding line");
      d.embed.emplace_back(from.text, to.text);
    }
    if (!c.at_end()) c.fail("expected 'embed' or end of input");
    out.value = std::move(d);
  } catch (const ParseFailure& f) {
    out.diagnostics.push_back({Diagnostic::Severity::Error, f.line, f.col, f.message});
  }
  return out;
}

}  // namespace tonic
