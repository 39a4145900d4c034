#include "tonic/preorder.hpp"

#include <cassert>

#include "tonic/error.hpp"

namespace tonic {

FinPreorder::FinPreorder(std::vector<std::string> elements, std::vector<char> matrix)
    : elements_(std::move(elements)), leq_(std::move(matrix)) {
  if (leq_.size() != elements_.size() * elements_.size()) {
    throw InputError("preorder matrix has " + std::to_string(leq_.size()) + " cells, expected " +
                     std::to_string(elements_.size() * elements_.size()));
  }
}

FinPreorder FinPreorder::discrete(std::vector<std::string> elements) {
  const std::size_t n = elements.size();
  std::vector<char> m(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) m[i * n + i] = 1;
  return FinPreorder(std::move(elements), std::move(m));
}

FinPreorder FinPreorder::discrete(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
  return discrete(std::move(names));
}

std::optional<std::size_t> FinPreorder::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i] == name) return i;
  }
  return std::nullopt;
}

bool FinPreorder::is_reflexive() const {
  for (std::size_t i = 0; i < size(); ++i) {
    if (!leq(i, i)) return false;
  }
  return true;
}

bool FinPreorder::is_transitive() const {
  const std::size_t n = size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!leq(i, j)) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (leq(j, k) && !leq(i, k)) return false;
      }
    }
  return true;
}

std::size_t FinPreorder::add_element(std::string name) {
  const std::size_t n = size();
  std::vector<char> m((n + 1) * (n + 1), 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i * (n + 1) + j] = leq_[i * n + j];
  m[n * (n + 1) + n] = 1;
  elements_.push_back(std::move(name));
  leq_ = std::move(m);
  return n;
}

std::vector<std::pair<std::size_t, std::size_t>> FinPreorder::strict_pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j)
      if (i != j && leq(i, j)) out.emplace_back(i, j);
  return out;
}

void close_in_place(FinPreorder& p) {
  const std::size_t n = p.size();
  for (std::size_t i = 0; i < n; ++i) p.set_leq(i, i, true);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      if (!p.leq(i, k)) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (p.leq(k, j)) p.set_leq(i, j, true);
    }
}

FinPreorder closure_rt(std::vector<std::string> carrier,
                       const std::vector<std::pair<std::string, std::string>>& rel) {
  FinPreorder p = FinPreorder::discrete(std::move(carrier));
  for (const auto& [a, b] : rel) {
    auto i = p.index_of(a);
    auto j = p.index_of(b);
    if (!i) throw InputError("unknown element '" + a + "' in relation");
    if (!j) throw InputError("unknown element '" + b + "' in relation");
    p.set_leq(*i, *j, true);
  }
  close_in_place(p);
  return p;
}

FinPreorder closure_rt(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& rel) {
  FinPreorder p = FinPreorder::discrete(n);
  for (const auto& [i, j] : rel) {
    if (i >= n || j >= n) throw InputError("relation pair out of range");
    p.set_leq(i, j, true);
  }
  close_in_place(p);
  return p;
}

}  // namespace tonic
