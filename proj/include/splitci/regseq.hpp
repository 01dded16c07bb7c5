#pragma once

/**
 * @file regseq.hpp
 * @brief Split sequences and executable regularity checks.
 *
 * n homogeneous forms of positive degree in n variables form a regular
 * sequence exactly when the quotient is finite-dimensional, so every check
 * here reduces to one Groebner basis and a standard-monomial count.
 */

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "splitci/error.hpp"
#include "splitci/groebner.hpp"
#include "splitci/linalg.hpp"
#include "splitci/polyring.hpp"

namespace splitci {

/// f_i = product of factors[i]; degree of f_i is factors[i].size().
class SplitSequence {
 public:
  SplitSequence(RingPtr ring, std::vector<std::vector<LinearForm>> factors)
      : ring_(std::move(ring)), factors_(std::move(factors)) {
    const std::size_t n = ring_->nvars();
    if (factors_.size() != n) {
      throw Error(ErrorKind::InvalidArgument, "expected " + std::to_string(n) + " polynomials in " +
                                                  std::to_string(n) + " variables, got " +
                                                  std::to_string(factors_.size()));
    }
    for (const auto& list : factors_) {
      if (list.empty()) throw Error(ErrorKind::InvalidArgument, "polynomial with no factors");
      for (const auto& f : list) {
        if (f.size() != n) throw Error(ErrorKind::RingMismatch, "factor length mismatch");
        if (f.is_zero()) throw Error(ErrorKind::InvalidArgument, "zero linear factor");
      }
    }
  }

  const RingPtr& ring() const noexcept { return ring_; }
  const FieldSpec& field() const noexcept { return ring_->field; }
  std::size_t size() const noexcept { return factors_.size(); }
  const std::vector<std::vector<LinearForm>>& factors() const noexcept { return factors_; }
  const std::vector<LinearForm>& factors(std::size_t i) const { return factors_.at(i); }

  std::size_t degree(std::size_t i) const { return factors_.at(i).size(); }

  Polynomial polynomial(std::size_t i) const { return product_of_factors(ring_, factors_.at(i)); }

  std::vector<Polynomial> polynomials() const {
    std::vector<Polynomial> out;
    for (std::size_t i = 0; i < size(); ++i) out.push_back(polynomial(i));
    return out;
  }

  /// Sum of (deg f_i - 1): the socle degree of the quotient when it is a
  /// complete intersection.
  std::size_t expected_socle_degree() const {
    std::size_t s = 0;
    for (const auto& list : factors_) s += list.size() - 1;
    return s;
  }

  /// Image under a change of coordinates, factor by factor.
  SplitSequence transformed(const LinearChange& change) const {
    auto out = factors_;
    for (auto& list : out) {
      for (auto& f : list) f = change.apply(f);
    }
    return SplitSequence(ring_, std::move(out));
  }

 private:
  RingPtr ring_;
  std::vector<std::vector<LinearForm>> factors_;
};

struct RegularityCertificate {
  bool artinian = false;
  std::optional<std::size_t> dimension;
  std::vector<std::size_t> hilbert_function;
  /// Set when not Artinian.
  std::optional<std::size_t> witness_variable;
};

inline RegularityCertificate check_artinian(const RingPtr& ring, std::vector<Polynomial> generators,
                                            const GbLimits& limits = {}) {
  const auto gb = buchberger(ring, std::move(generators), limits);
  const auto q = quotient_basis(gb);
  RegularityCertificate cert;
  if (const auto* inf = std::get_if<Infinite>(&q)) {
    cert.witness_variable = inf->witness_variable;
    return cert;
  }
  const auto& qb = std::get<QuotientBasis>(q);
  cert.artinian = true;
  cert.dimension = qb.dimension();
  cert.hilbert_function = qb.hilbert_function();
  return cert;
}

inline RegularityCertificate check_regular(const SplitSequence& seq, const GbLimits& limits = {}) {
  return check_artinian(seq.ring(), seq.polynomials(), limits);
}

/// Whether permuting the sequence leaves the regularity verdict unchanged.
/// A false return means the implementation is wrong, not the input.
inline bool permutation_stability(const SplitSequence& seq, const std::vector<std::size_t>& sigma,
                                  const GbLimits& limits = {}) {
  const std::size_t n = seq.size();
  std::vector<std::size_t> sorted = sigma;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t k = 0; k < n; ++k) {
    if (sorted.size() != n || sorted[k] != k) throw Error(ErrorKind::InvalidArgument, "not a permutation");
  }
  std::vector<std::vector<LinearForm>> permuted;
  for (auto s : sigma) permuted.push_back(seq.factors(s));
  const auto before = check_regular(seq, limits);
  const auto after = check_regular(SplitSequence(seq.ring(), std::move(permuted)), limits);
  return before.artinian == after.artinian && before.dimension == after.dimension;
}

/// Replaces f_i by its single factor j and reports whether the mixed-degree
/// system is still Artinian.
inline bool factor_replacement_stability(const SplitSequence& seq, std::size_t i, std::size_t j,
                                         const GbLimits& limits = {}) {
  if (i >= seq.size() || j >= seq.degree(i)) throw Error(ErrorKind::InvalidArgument, "factor index out of range");
  auto gens = seq.polynomials();
  gens[i] = seq.factors(i)[j].to_polynomial(seq.ring());
  return check_artinian(seq.ring(), std::move(gens), limits).artinian;
}

/// True iff the chosen linear factors (one per polynomial) are linearly
/// independent, i.e. form a regular sequence of linear forms.
inline bool full_linear_selection(const SplitSequence& seq, const std::vector<std::size_t>& choices) {
  if (choices.size() != seq.size()) throw Error(ErrorKind::InvalidArgument, "need one choice per polynomial");
  Matrix m;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (choices[i] >= seq.degree(i)) throw Error(ErrorKind::InvalidArgument, "factor choice out of range");
    m.push_back(seq.factors(i)[choices[i]].coefficients());
  }
  return rank(std::move(m)) == seq.size();
}

/// Exact cross-check of declared factors against a separately supplied
/// expanded polynomial.
inline bool matches_expanded(const SplitSequence& seq, std::size_t i, const Polynomial& expanded) {
  return seq.polynomial(i) == expanded;
}

}  // namespace splitci
