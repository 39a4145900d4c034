#include "tonic/proof_tree.hpp"

#include <array>
#include <utility>

namespace tonic {

namespace {

constexpr std::array<std::pair<Rule, const char*>, 21> kNames{{
    {Rule::Axiom, "axiom"},   {Rule::SigOrder, "sig-order"}, {Rule::SigPol, "sig-pol"},
    {Rule::Refl, "refl"},     {Rule::Point, "point"},        {Rule::Mono, "mono"},
    {Rule::Anti, "anti"},     {Rule::Wc1, "wc1"},            {Rule::Wc2, "wc2"},
    {Rule::Wc3a, "wc3a"},     {Rule::Wc3b, "wc3b"},          {Rule::Wc3c, "wc3c"},
    {Rule::Wc3d, "wc3d"},     {Rule::Trans, "trans"},        {Rule::Pos, "pos"},
    {Rule::Symm, "symm"},     {Rule::Weak, "weak"},          {Rule::Posp, "posp"},
    {Rule::Cong, "cong"},     {Rule::PolPlus, "pol+"},       {Rule::PolMinus, "pol-"},
}};

}  // namespace

const char* rule_name(Rule r) {
  for (const auto& [rule, name] : kNames)
    if (rule == r) return name;
  return "?";
}

std::optional<Rule> rule_from_name(std::string_view name) {
  for (const auto& [rule, n] : kNames)
    if (name == n) return rule;
  return std::nullopt;
}

bool is_leaf_rule(Rule r) { return r == Rule::Axiom || r == Rule::SigOrder || r == Rule::SigPol; }

bool is_wc3(Rule r) {
  return r == Rule::Wc3a || r == Rule::Wc3b || r == Rule::Wc3c || r == Rule::Wc3d;
}

ProofTree ProofTree::axiom_leaf(std::size_t index) {
  ProofTree t;
  t.rule = Rule::Axiom;
  t.axiom = index;
  return t;
}

ProofTree ProofTree::sig_order(std::string lo, std::string hi) {
  ProofTree t;
  t.rule = Rule::SigOrder;
  t.lo = std::move(lo);
  t.hi = std::move(hi);
  return t;
}

ProofTree ProofTree::sig_pol(std::string constant, Sign sign) {
  ProofTree t;
  t.rule = Rule::SigPol;
  t.lo = std::move(constant);
  t.sign = sign;
  return t;
}

ProofTree ProofTree::node(Rule rule, std::vector<ProofTree> premises, std::vector<Term> terms) {
  ProofTree t;
  t.rule = rule;
  t.premises = std::move(premises);
  t.terms = std::move(terms);
  return t;
}

std::size_t ProofTree::node_count() const {
  std::size_t n = 1;
  for (const auto& p : premises) n += p.node_count();
  return n;
}

std::size_t ProofTree::inference_count() const {
  std::size_t n = is_leaf_rule(rule) ? 0 : 1;
  for (const auto& p : premises) n += p.inference_count();
  return n;
}

bool operator==(const ProofTree& a, const ProofTree& b) {
  if (a.rule != b.rule) return false;
  switch (a.rule) {
    case Rule::Axiom: return a.axiom == b.axiom;
    case Rule::SigOrder: return a.lo == b.lo && a.hi == b.hi;
    case Rule::SigPol: return a.lo == b.lo && a.sign == b.sign;
    default: return a.premises == b.premises && a.terms == b.terms;
  }
}

}  // namespace tonic
