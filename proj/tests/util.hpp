#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "tonic/parser.hpp"

namespace testutil {

inline std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline std::string fixture_path(const std::string& name) { return std::string(TONIC_FIXTURES) + "/" + name; }

inline tonic::SourceProblem fixture(const std::string& name) {
  auto r = tonic::parse_problem(slurp(fixture_path(name)), name);
  if (!r.ok()) {
    throw std::runtime_error(name + ": " + tonic::format_diagnostic(r.diagnostics.front()));
  }
  return *r.value;
}

inline tonic::SourceProblem problem(const std::string& text) {
  auto r = tonic::parse_problem(text);
  if (!r.ok()) throw std::runtime_error(tonic::format_diagnostic(r.diagnostics.front()));
  return *r.value;
}

inline tonic::Term term(const tonic::Signature& sig, const std::string& text) {
  auto r = tonic::parse_term(text, sig);
  if (!r.ok()) throw std::runtime_error(tonic::format_diagnostic(r.diagnostics.front()));
  return *r.value;
}

}  // namespace testutil
