#pragma once

/**
 * @file hatbuilder.hpp
 * @brief The quadratic complete intersection attached to a lambda table.
 *
 * Variables are Z_{i,k} for 1 <= k <= N_i. In this header `i` is 0-based
 * and `k` keeps its 1-based range, so Z(i, N_i) is the image of x_i.
 *
 *   L_{i,N_i} = Z_{i,1} + ... + Z_{i,N_i-1} - Z_{i,N_i} + sum_{j!=i} lambda_{i,j}^0 Z_{j,N_j}
 *   L_{i,k}   = Z_{i,1} + ... + Z_{i,k} - sum_{j!=i} (lambda_{i,j}^{N_i-k} - lambda_{i,j}^0) Z_{j,N_j}
 *
 * and the ideal is generated by the quadrics Z_{i,k} * L_{i,k}.
 */

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "splitci/error.hpp"
#include "splitci/normalizer.hpp"
#include "splitci/polyring.hpp"

namespace splitci {

class HatRing {
 public:
  explicit HatRing(const LambdaTable& table) : field_(table.field()), degrees_(table.degrees()) {
    std::size_t total = 0;
    for (auto d : degrees_) {
      offsets_.push_back(total);
      total += d;
    }
    std::vector<std::string> names(total);
    std::vector<std::size_t> rank(total);
    for (std::size_t i = 0; i < degrees_.size(); ++i) {
      for (std::size_t k = 1; k <= degrees_[i]; ++k) {
        names[var(i, k)] = "Z_" + std::to_string(i + 1) + "_" + std::to_string(k);
      }
    }
    // Z_{1,N_1} < ... < Z_{n,N_n} < Z_{1,1} < ... < Z_{1,N_1-1} < ... < Z_{n,1} < ... < Z_{n,N_n-1}
    std::size_t r = 0;
    for (std::size_t i = 0; i < degrees_.size(); ++i) rank[var(i, degrees_[i])] = r++;
    for (std::size_t i = 0; i < degrees_.size(); ++i) {
      for (std::size_t k = 1; k < degrees_[i]; ++k) rank[var(i, k)] = r++;
    }
    ring_ = make_ring(field_, VariableTable(std::move(names), std::move(rank)));
  }

  const RingPtr& ring() const noexcept { return ring_; }
  std::size_t n() const noexcept { return degrees_.size(); }
  std::size_t degree(std::size_t i) const { return degrees_.at(i); }
  std::size_t nvars() const noexcept { return ring_->nvars(); }

  /// Index of Z_{i,k}; i 0-based, 1 <= k <= N_i.
  std::size_t var(std::size_t i, std::size_t k) const {
    if (i >= n() || k == 0 || k > degrees_[i]) throw Error(ErrorKind::InvalidArgument, "Z index out of range");
    return offsets_[i] + k - 1;
  }

  /// Z_{i,N_i}, the image of x_i.
  std::size_t top(std::size_t i) const { return var(i, degrees_.at(i)); }

  Polynomial z(std::size_t i, std::size_t k) const { return Polynomial::variable(ring_, var(i, k)); }

 private:
  FieldSpec field_;
  std::vector<std::size_t> degrees_;
  std::vector<std::size_t> offsets_;
  RingPtr ring_;
};

struct HatForms {
  /// forms[i][k-1] = L_{i,k}.
  std::vector<std::vector<LinearForm>> forms;
  /// differences[i][k-1][j] = lambda_{i,j}^{N_i-k} - lambda_{i,j}^0 for k < N_i (zero on j == i).
  std::vector<std::vector<Vector>> differences;

  const LinearForm& at(std::size_t i, std::size_t k) const { return forms.at(i).at(k - 1); }
};

struct EmbeddingMap {
  /// images[i] = index of Z_{i,N_i} in the hat ring.
  std::vector<std::size_t> images;
};

struct QuadraticCI {
  HatRing ring;
  HatForms forms;
  /// Z_{i,k} * L_{i,k}, in the hat ring's variable order.
  std::vector<Polynomial> generators;
  EmbeddingMap embedding;

  const RingPtr& poly_ring() const noexcept { return ring.ring(); }
};

inline QuadraticCI build(const LambdaTable& table) {
  HatRing ring(table);
  const auto& field = table.field();
  const std::size_t n = table.n();
  const std::size_t m = ring.nvars();
  HatForms hf;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t N = table.degree(i);
    std::vector<Vector> diffs;
    for (std::size_t k = 1; k < N; ++k) {
      Vector d(n, Scalar::zero(field));
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i) d[j] = table.lambda(i, j, N - k) - table.lambda(i, j, 0);
      }
      diffs.push_back(std::move(d));
    }
    std::vector<LinearForm> forms;
    for (std::size_t k = 1; k < N; ++k) {
      auto L = LinearForm::zero(field, m);
      for (std::size_t r = 1; r <= k; ++r) L[ring.var(i, r)] = Scalar::one(field);
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i) L[ring.top(j)] -= diffs[k - 1][j];
      }
      forms.push_back(std::move(L));
    }
    auto top = LinearForm::zero(field, m);
    for (std::size_t r = 1; r < N; ++r) top[ring.var(i, r)] = Scalar::one(field);
    top[ring.top(i)] = -Scalar::one(field);
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) top[ring.top(j)] += table.lambda(i, j, 0);
    }
    forms.push_back(std::move(top));
    hf.forms.push_back(std::move(forms));
    hf.differences.push_back(std::move(diffs));
  }

  std::vector<Polynomial> gens(m, Polynomial(ring.ring()));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 1; k <= table.degree(i); ++k) {
      gens[ring.var(i, k)] = ring.z(i, k) * hf.at(i, k).to_polynomial(ring.ring());
    }
  }
  EmbeddingMap emb;
  for (std::size_t i = 0; i < n; ++i) emb.images.push_back(ring.top(i));
  return QuadraticCI{std::move(ring), std::move(hf), std::move(gens), std::move(emb)};
}

/// The algebra map x_i -> Z_{i,N_i}, applied termwise.
inline Polynomial phi_apply(const Polynomial& f, const EmbeddingMap& emb, const RingPtr& target) {
  const std::size_t n = emb.images.size();
  if (f.ring()->nvars() != n) throw Error(ErrorKind::RingMismatch, "phi expects a polynomial in the x variables");
  if (!(f.field() == target->field)) throw Error(ErrorKind::FieldMismatch, "phi across different fields");
  Polynomial out(target);
  for (const auto& [mono, c] : f.terms()) {
    Monomial image(target->nvars());
    for (std::size_t i = 0; i < n; ++i) {
      if (mono[i] > 0) image = image * Monomial::variable(target->nvars(), emb.images[i], mono[i]);
    }
    out.add_term(image, c);
  }
  return out;
}

inline Polynomial phi_apply(const Polynomial& f, const QuadraticCI& ci) {
  return phi_apply(f, ci.embedding, ci.poly_ring());
}

/// Z^2 == Z * rhs_linear, read off the generator Z * L.
struct SquareRewrite {
  std::size_t variable;
  /// Linear form R with Z^2 == Z * R modulo the generator.
  Polynomial rhs_linear;
  /// Z * R.
  Polynomial rhs;
  /// Z_{i,N_i}: listed, but its right-hand side is not smaller than Z^2.
  bool exempt;
};

inline std::vector<SquareRewrite> square_rewrites(const QuadraticCI& ci) {
  const auto& ring = ci.poly_ring();
  std::vector<SquareRewrite> out;
  for (std::size_t i = 0; i < ci.ring.n(); ++i) {
    for (std::size_t k = 1; k <= ci.ring.degree(i); ++k) {
      const std::size_t v = ci.ring.var(i, k);
      const LinearForm& L = ci.forms.at(i, k);
      const Scalar c = L[v];
      // Z * L = c Z^2 + Z * (L - c Z) == 0, so Z^2 == Z * (-(L - c Z) / c).
      LinearForm rest = L;
      rest[v] = Scalar::zero(ring->field);
      const Polynomial rhs_linear = (-c.inv()) * rest.to_polynomial(ring);
      const Polynomial z = Polynomial::variable(ring, v);
      out.push_back(SquareRewrite{v, rhs_linear, z * rhs_linear, k == ci.ring.degree(i)});
    }
  }
  return out;
}

/// Every monomial on the right-hand side lies strictly below Z^2.
inline bool strictly_decreasing(const SquareRewrite& rw, const MonomialOrder& order) {
  const Monomial square = Monomial::variable(order.table().size(), rw.variable, 2);
  for (const auto& [m, c] : rw.rhs.terms()) {
    if (!order.less(m, square)) return false;
  }
  return true;
}

struct MProducts {
  /// M_i = prod_{k=0}^{N_i-1} (Z_{i,N_i} - sum_{j!=i} lambda_{i,j}^k Z_{j,N_j}).
  std::vector<Polynomial> m;
  /// L_i = prod_{k=1}^{N_i} L_{i,k}.
  std::vector<Polynomial> l;
};

inline MProducts m_products(const LambdaTable& table, const QuadraticCI& ci) {
  const auto& ring = ci.poly_ring();
  MProducts out;
  for (std::size_t i = 0; i < table.n(); ++i) {
    Polynomial M = Polynomial::constant(ring, 1);
    for (std::size_t k = 0; k < table.degree(i); ++k) {
      Polynomial f = ci.ring.z(i, table.degree(i));
      for (std::size_t j = 0; j < table.n(); ++j) {
        if (j != i) f -= table.lambda(i, j, k) * ci.ring.z(j, table.degree(j));
      }
      M *= f;
    }
    Polynomial L = Polynomial::constant(ring, 1);
    for (std::size_t k = 1; k <= table.degree(i); ++k) L *= ci.forms.at(i, k).to_polynomial(ring);
    out.m.push_back(std::move(M));
    out.l.push_back(std::move(L));
  }
  return out;
}

/// prod_{i,k} L_{i,k}.
inline Polynomial product_of_hat_forms(const QuadraticCI& ci) {
  Polynomial p = Polynomial::constant(ci.poly_ring(), 1);
  for (const auto& list : ci.forms.forms) {
    for (const auto& L : list) p *= L.to_polynomial(ci.poly_ring());
  }
  return p;
}

}  // namespace splitci
