#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "splitci/parser.hpp"
#include "splitci/polyring.hpp"
#include "splitci/regseq.hpp"

namespace splitci {

// Readable gtest failure output.
inline void PrintTo(const Polynomial& p, std::ostream* os) { *os << '"' << p.to_string() << '"'; }
inline void PrintTo(const Scalar& s, std::ostream* os) { *os << s.to_string(); }

}  // namespace splitci

namespace splitci::testing {

inline RingPtr ring_of(const FieldSpec& field, std::vector<std::string> names) {
  return make_ring(field, VariableTable(std::move(names)));
}

inline RingPtr xring(std::size_t n, const FieldSpec& field = FieldSpec::rational()) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
  return ring_of(field, names);
}

inline Polynomial poly(const RingPtr& ring, const std::string& text) { return parse_polynomial(text, ring); }

inline SplitSequence seq_of(const RingPtr& ring, const std::vector<std::vector<std::string>>& factors) {
  std::vector<std::vector<LinearForm>> forms;
  for (const auto& list : factors) {
    std::vector<LinearForm> fs;
    for (const auto& f : list) fs.push_back(parse_linear_form(f, ring));
    forms.push_back(std::move(fs));
  }
  return SplitSequence(ring, std::move(forms));
}

/// f_i = x_i^{degrees[i]}.
inline SplitSequence monomial_ci(const std::vector<std::size_t>& degrees, const FieldSpec& field = FieldSpec::rational()) {
  auto ring = xring(degrees.size(), field);
  std::vector<std::vector<std::string>> factors;
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    factors.emplace_back(degrees[i], "x" + std::to_string(i + 1));
  }
  return seq_of(ring, factors);
}

// (x1^2, x2^2)
inline SplitSequence squares2() { return monomial_ci({2, 2}); }

// (x1(x1 - x2), x2(x2 + x1)) over QQ: Artinian, dimension 4.
inline SplitSequence mixed2() {
  return seq_of(xring(2), {{"x1 - x2", "x1"}, {"x2 + x1", "x2"}});
}

// (x1(x1 - x2), x2(x2 - x1)): shares the line x1 = x2, not Artinian.
inline SplitSequence degenerate2() {
  return seq_of(xring(2), {{"x1 - x2", "x1"}, {"x2 - x1", "x2"}});
}

}  // namespace splitci::testing
