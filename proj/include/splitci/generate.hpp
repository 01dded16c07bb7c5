#pragma once

// Random split sequences with a known normal form, used by the `gen`
// subcommand and by the randomized test suites.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "splitci/linalg.hpp"
#include "splitci/normalizer.hpp"
#include "splitci/polyring.hpp"
#include "splitci/regseq.hpp"

namespace splitci {

struct GeneratedInstance {
  /// The table the instance was built from (before scrambling).
  LambdaTable table;
  SplitSequence sequence;
};

namespace detail {

inline Scalar random_scalar(std::mt19937_64& rng, const FieldSpec& field) {
  if (field.is_prime()) {
    std::uniform_int_distribution<std::uint64_t> dist(0, field.modulus() - 1);
    return Scalar::from_int(field, static_cast<long>(dist(rng)));
  }
  std::uniform_int_distribution<long> dist(-3, 3);
  return Scalar::from_int(field, dist(rng));
}

inline Scalar random_unit(std::mt19937_64& rng, const FieldSpec& field) {
  for (;;) {
    Scalar s = random_scalar(rng, field);
    if (!s.is_zero()) return s;
  }
}

}  // namespace detail

inline std::vector<std::string> default_variable_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
  return names;
}

inline LambdaTable random_lambda_table(std::mt19937_64& rng, const FieldSpec& field, const std::vector<std::size_t>& degrees) {
  LambdaTable t(field, degrees);
  for (std::size_t i = 0; i < t.n(); ++i) {
    for (std::size_t k = 0; k < t.degree(i); ++k) {
      for (std::size_t j = 0; j < t.n(); ++j) {
        if (j != i) t.set_lambda(i, j, k, detail::random_scalar(rng, field));
      }
    }
  }
  return t;
}

/// Factors of the table's normal form, each scaled by a random unit, pushed
/// through a random invertible change of coordinates and shuffled within
/// each polynomial. `scramble = false` keeps the normal form as is.
inline GeneratedInstance random_split_instance(std::mt19937_64& rng, const FieldSpec& field,
                                               const std::vector<std::size_t>& degrees, bool scramble = true) {
  const std::size_t n = degrees.size();
  LambdaTable table = random_lambda_table(rng, field, degrees);
  auto ring = make_ring(field, VariableTable(default_variable_names(n)));
  std::vector<std::vector<LinearForm>> factors;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<LinearForm> list;
    for (std::size_t k = 0; k < table.degree(i); ++k) list.push_back(table.factor(i, k));
    list.push_back(LinearForm::variable(field, n, i));
    factors.push_back(std::move(list));
  }
  SplitSequence seq(ring, factors);
  if (!scramble) return GeneratedInstance{std::move(table), std::move(seq)};

  Matrix p;
  for (;;) {
    p.assign(n, Vector(n, Scalar::zero(field)));
    for (auto& row : p) {
      for (auto& x : row) x = detail::random_scalar(rng, field);
    }
    if (!determinant(p, field).is_zero()) break;
  }
  seq = seq.transformed(LinearChange(field, p));
  auto scrambled = seq.factors();
  for (auto& list : scrambled) {
    for (auto& f : list) f = detail::random_unit(rng, field) * f;
    std::shuffle(list.begin(), list.end(), rng);
  }
  return GeneratedInstance{std::move(table), SplitSequence(ring, std::move(scrambled))};
}

}  // namespace splitci
