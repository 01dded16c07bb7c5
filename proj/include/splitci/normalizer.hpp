#pragma once

/**
 * @file normalizer.hpp
 * @brief Coordinates in which a split regular sequence takes the form
 *   f_i = u_i * x_i * prod_{k=0}^{N_i-1} (x_i - sum_{j != i} lambda_{i,j}^k x_j).
 *
 * The last factor of each f_i becomes the new coordinate x_i. Each remaining
 * factor is divided by its x_i-coefficient; the product of those
 * coefficients is kept as the unit u_i instead of being rescaled away.
 */

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "splitci/error.hpp"
#include "splitci/linalg.hpp"
#include "splitci/polyring.hpp"
#include "splitci/regseq.hpp"

namespace splitci {

class LambdaTable {
 public:
  LambdaTable() = default;

  /// All lambda entries zero, all units one.
  LambdaTable(FieldSpec field, std::vector<std::size_t> degrees) : field_(field), degrees_(std::move(degrees)) {
    const std::size_t n = degrees_.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (degrees_[i] == 0) throw Error(ErrorKind::InvalidArgument, "N_i must be at least 1");
      values_.emplace_back(degrees_[i], Vector(n, Scalar::zero(field)));
    }
    units_.assign(n, Scalar::one(field));
  }

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t n() const noexcept { return degrees_.size(); }
  /// N_i; the polynomial f_i has degree N_i + 1.
  std::size_t degree(std::size_t i) const { return degrees_.at(i); }
  const std::vector<std::size_t>& degrees() const noexcept { return degrees_; }

  std::size_t total_degree() const {
    std::size_t s = 0;
    for (auto d : degrees_) s += d;
    return s;
  }

  /// lambda_{i,j}^k for j != i and 0 <= k < N_i (all indices 0-based).
  const Scalar& lambda(std::size_t i, std::size_t j, std::size_t k) const {
    check(i, j, k);
    return values_[i][k][j];
  }
  void set_lambda(std::size_t i, std::size_t j, std::size_t k, Scalar value) {
    check(i, j, k);
    values_[i][k][j] = std::move(value);
  }

  const Scalar& unit(std::size_t i) const { return units_.at(i); }
  const std::vector<Scalar>& units() const noexcept { return units_; }
  void set_unit(std::size_t i, Scalar u) {
    if (u.is_zero()) throw Error(ErrorKind::InvalidArgument, "unit must be nonzero");
    units_.at(i) = std::move(u);
  }

  /// x_i - sum_{j != i} lambda_{i,j}^k x_j.
  LinearForm factor(std::size_t i, std::size_t k) const {
    auto f = LinearForm::variable(field_, n(), i);
    for (std::size_t j = 0; j < n(); ++j) {
      if (j != i) f[j] = -lambda(i, j, k);
    }
    return f;
  }

  /// x_i * prod_k factor(i, k), without the unit.
  Polynomial generator(const RingPtr& ring, std::size_t i) const {
    std::vector<LinearForm> fs;
    for (std::size_t k = 0; k < degree(i); ++k) fs.push_back(factor(i, k));
    fs.push_back(LinearForm::variable(field_, n(), i));
    return product_of_factors(ring, fs);
  }

  std::vector<Polynomial> generators(const RingPtr& ring) const {
    std::vector<Polynomial> out;
    for (std::size_t i = 0; i < n(); ++i) out.push_back(generator(ring, i));
    return out;
  }

  /// prod_i prod_k factor(i, k): degree sum N_i.
  Polynomial socle_candidate(const RingPtr& ring) const {
    Polynomial p = Polynomial::constant(ring, 1);
    for (std::size_t i = 0; i < n(); ++i) {
      for (std::size_t k = 0; k < degree(i); ++k) p *= factor(i, k).to_polynomial(ring);
    }
    return p;
  }

  friend bool operator==(const LambdaTable&, const LambdaTable&) = default;

 private:
  void check(std::size_t i, std::size_t j, std::size_t k) const {
    if (i >= n() || j >= n() || k >= degrees_[i]) throw Error(ErrorKind::InvalidArgument, "lambda index out of range");
    if (i == j) throw Error(ErrorKind::InvalidArgument, "lambda_{i,i} is not defined");
  }

  FieldSpec field_;
  std::vector<std::size_t> degrees_;
  // values_[i][k][j]; the diagonal j == i stays zero and is never exposed.
  std::vector<std::vector<Vector>> values_;
  std::vector<Scalar> units_;
};

struct NormalizationResult {
  LambdaTable table;
  LinearChange change;
  /// The input after the change, factor lists intact; last factor of f_i is x_i.
  SplitSequence normalized;
};

/// Moves the selected factor of each polynomial to the end of its list.
inline SplitSequence choose_factor_order(const SplitSequence& seq, const std::vector<std::size_t>& selection) {
  if (selection.size() != seq.size()) throw Error(ErrorKind::InvalidArgument, "need one selection per polynomial");
  auto factors = seq.factors();
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (selection[i] >= factors[i].size()) throw Error(ErrorKind::InvalidArgument, "factor selection out of range");
    LinearForm chosen = factors[i][selection[i]];
    factors[i].erase(factors[i].begin() + static_cast<std::ptrdiff_t>(selection[i]));
    factors[i].push_back(std::move(chosen));
  }
  return SplitSequence(seq.ring(), std::move(factors));
}

inline NormalizationResult normalize(const SplitSequence& seq) {
  const std::size_t n = seq.size();
  const auto& field = seq.field();
  for (std::size_t i = 0; i < n; ++i) {
    if (seq.degree(i) < 2) {
      throw Error(ErrorKind::InvalidArgument, "polynomial " + std::to_string(i + 1) + " has degree " +
                                                  std::to_string(seq.degree(i)) + "; at least 2 is required");
    }
  }
  Matrix last;
  for (std::size_t i = 0; i < n; ++i) last.push_back(seq.factors(i).back().coefficients());
  if (rank(last) < n) {
    throw Error(ErrorKind::SelectedFactorsDependent, "the selected last factors are linearly dependent");
  }
  // Substituting x = M^{-1} y sends the i-th last factor (row i of M) to y_i.
  LinearChange change(field, inverse(last, field));
  SplitSequence moved = seq.transformed(change);

  std::vector<std::size_t> degrees;
  for (std::size_t i = 0; i < n; ++i) degrees.push_back(seq.degree(i) - 1);
  LambdaTable table(field, degrees);
  for (std::size_t i = 0; i < n; ++i) {
    Scalar unit = Scalar::one(field);
    for (std::size_t k = 0; k < table.degree(i); ++k) {
      const LinearForm& f = moved.factors(i)[k];
      if (f[i].is_zero()) {
        throw Error(ErrorKind::ZeroDiagonalCoefficient, "factor " + std::to_string(k) + " of polynomial " +
                                                            std::to_string(i + 1) +
                                                            " has zero coefficient on the new x_" +
                                                            std::to_string(i + 1));
      }
      const Scalar inv = f[i].inv();
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i) table.set_lambda(i, j, k, -(f[j] * inv));
      }
      unit *= f[i];
    }
    table.set_unit(i, unit);
  }
  return NormalizationResult{std::move(table), std::move(change), std::move(moved)};
}

inline NormalizationResult normalize(const SplitSequence& seq, const std::vector<std::size_t>& selection) {
  return normalize(choose_factor_order(seq, selection));
}

/// The sequence u_i * x_i * prod_k (x_i - sum lambda x_j) rebuilt from the
/// table alone; the unit rides on the first factor.
inline SplitSequence reconstruct(const NormalizationResult& result) {
  const auto& t = result.table;
  const auto& ring = result.normalized.ring();
  std::vector<std::vector<LinearForm>> factors;
  for (std::size_t i = 0; i < t.n(); ++i) {
    std::vector<LinearForm> list;
    for (std::size_t k = 0; k < t.degree(i); ++k) list.push_back(t.factor(i, k));
    list.front() = t.unit(i) * list.front();
    list.push_back(LinearForm::variable(t.field(), t.n(), i));
    factors.push_back(std::move(list));
  }
  return SplitSequence(ring, std::move(factors));
}

}  // namespace splitci
