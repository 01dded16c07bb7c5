#pragma once

/**
 * @file groebner.hpp
 * @brief Buchberger's algorithm and the quotient-ring computations built on it.
 *
 * Everything here assumes homogeneous ideals. Bases are reduced with monic
 * leading terms, so normal forms are canonical and can be compared for
 * equality directly.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include "splitci/error.hpp"
#include "splitci/linalg.hpp"
#include "splitci/polyring.hpp"

namespace splitci {

struct GbLimits {
  /// Zero means unlimited.
  std::size_t max_basis_size = 0;
};

class IdealBasis {
 public:
  IdealBasis(RingPtr ring, std::vector<Polynomial> generators)
      : ring_(std::move(ring)), generators_(std::move(generators)) {
    for (const auto& g : generators_) {
      if (!Polynomial::same_ring(g.ring(), ring_)) throw Error(ErrorKind::RingMismatch, "generator from another ring");
      if (g.is_zero()) throw Error(ErrorKind::InvalidArgument, "zero generator");
      if (!g.is_homogeneous()) throw Error(ErrorKind::InvalidArgument, "inhomogeneous generator " + g.to_string());
      if (g.degree() == 0) throw Error(ErrorKind::InvalidArgument, "constant generator");
    }
  }

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& generators() const noexcept { return generators_; }

 private:
  RingPtr ring_;
  std::vector<Polynomial> generators_;
};

namespace detail {

inline const Polynomial* find_reducer(const std::vector<Polynomial>& basis, const Monomial& m) {
  for (const auto& g : basis) {
    if (g.leading_monomial().divides(m)) return &g;
  }
  return nullptr;
}

/// Full reduction against monic `basis`.
inline Polynomial reduce(Polynomial p, const std::vector<Polynomial>& basis) {
  Polynomial rem(p.ring());
  while (!p.is_zero()) {
    const Monomial lm = p.leading_monomial();
    const Scalar lc = p.leading_coefficient();
    if (const auto* g = find_reducer(basis, lm)) {
      p.add_scaled(-lc, lm / g->leading_monomial(), *g);
    } else {
      rem.add_term(lm, lc);
      p.add_term(lm, -lc);
    }
  }
  return rem;
}

}  // namespace detail

class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr ring, std::vector<Polynomial> elements)
      : ring_(std::move(ring)), elements_(std::move(elements)) {}

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }

  Polynomial normal_form(const Polynomial& f) const {
    if (!Polynomial::same_ring(f.ring(), ring_)) throw Error(ErrorKind::RingMismatch, "polynomial from another ring");
    return detail::reduce(f, elements_);
  }

  bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }

  bool is_standard(const Monomial& m) const { return detail::find_reducer(elements_, m) == nullptr; }

 private:
  RingPtr ring_;
  std::vector<Polynomial> elements_;
};

/// Normal selection strategy with the coprime-leading-monomial criterion.
/// The result is the reduced basis sorted by ascending leading monomial.
inline GroebnerBasis buchberger(const IdealBasis& ideal, const GbLimits& limits = {}) {
  const auto& ring = ideal.ring();
  const auto& order = ring->order;
  std::vector<Polynomial> basis;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;

  auto check_limits = [&] {
    if (limits.max_basis_size != 0 && basis.size() > limits.max_basis_size) {
      throw Error(ErrorKind::ResourceLimit,
                  "Groebner basis exceeded " + std::to_string(limits.max_basis_size) + " elements");
    }
  };
  auto insert = [&](Polynomial p) {
    basis.push_back(p.monic());
    const std::size_t k = basis.size() - 1;
    for (std::size_t i = 0; i < k; ++i) pairs.emplace_back(i, k);
    check_limits();
  };

  for (const auto& g : ideal.generators()) {
    Polynomial r = detail::reduce(g, basis);
    if (!r.is_zero()) insert(std::move(r));
  }

  while (!pairs.empty()) {
    auto best = pairs.begin();
    Monomial best_lcm = Monomial::lcm(basis[best->first].leading_monomial(), basis[best->second].leading_monomial());
    for (auto it = std::next(pairs.begin()); it != pairs.end(); ++it) {
      Monomial l = Monomial::lcm(basis[it->first].leading_monomial(), basis[it->second].leading_monomial());
      if (order.less(l, best_lcm)) {
        best = it;
        best_lcm = std::move(l);
      }
    }
    const auto [i, j] = *best;
    pairs.erase(best);
    const auto& gi = basis[i];
    const auto& gj = basis[j];
    if (gi.leading_monomial().coprime(gj.leading_monomial())) continue;
    Polynomial s(ring);
    s.add_scaled(Scalar::one(ring->field), best_lcm / gi.leading_monomial(), gi);
    s.add_scaled(-Scalar::one(ring->field), best_lcm / gj.leading_monomial(), gj);
    Polynomial r = detail::reduce(std::move(s), basis);
    if (!r.is_zero()) insert(std::move(r));
  }

  // Drop elements whose leading monomial is divisible by another's, then
  // inter-reduce the survivors.
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const auto& li = basis[i].leading_monomial();
      const auto& lj = basis[j].leading_monomial();
      if (lj.divides(li) && (lj != li || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  std::vector<Polynomial> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    reduced.push_back(detail::reduce(minimal[i], others).monic());
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.less(a.leading_monomial(), b.leading_monomial());
  });
  return GroebnerBasis(ring, std::move(reduced));
}

inline GroebnerBasis buchberger(const RingPtr& ring, std::vector<Polynomial> generators, const GbLimits& limits = {}) {
  return buchberger(IdealBasis(ring, std::move(generators)), limits);
}

inline Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) { return gb.normal_form(f); }

/// Standard monomials of an Artinian quotient, graded.
class QuotientBasis {
 public:
  QuotientBasis(RingPtr ring, std::vector<std::vector<Monomial>> by_degree)
      : ring_(std::move(ring)), by_degree_(std::move(by_degree)) {
    for (const auto& piece : by_degree_) {
      for (std::size_t k = 0; k < piece.size(); ++k) index_.emplace(piece[k].exponents(), k);
    }
  }

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<std::vector<Monomial>>& by_degree() const noexcept { return by_degree_; }
  const std::vector<Monomial>& degree(std::size_t d) const { return by_degree_.at(d); }

  /// Largest degree with a nonzero graded piece.
  std::size_t top_degree() const { return by_degree_.empty() ? 0 : by_degree_.size() - 1; }

  std::vector<std::size_t> hilbert_function() const {
    std::vector<std::size_t> h;
    for (const auto& piece : by_degree_) h.push_back(piece.size());
    return h;
  }

  std::size_t dimension() const {
    std::size_t n = 0;
    for (const auto& piece : by_degree_) n += piece.size();
    return n;
  }

  std::vector<Monomial> all() const {
    std::vector<Monomial> out;
    for (const auto& piece : by_degree_) out.insert(out.end(), piece.begin(), piece.end());
    return out;
  }

  /// Coordinates of an already-reduced polynomial in the degree-d piece.
  /// Terms of other degrees are ignored.
  Vector coordinates(const Polynomial& reduced, std::size_t d) const {
    Vector v(d < by_degree_.size() ? by_degree_[d].size() : 0, Scalar::zero(ring_->field));
    for (const auto& [m, c] : reduced.terms()) {
      if (m.degree() != d) continue;
      const auto it = index_.find(m.exponents());
      if (it == index_.end()) throw Error(ErrorKind::InvalidArgument, "polynomial is not in normal form");
      v[it->second] = c;
    }
    return v;
  }

  Polynomial from_coordinates(const Vector& coords, std::size_t d) const {
    Polynomial p(ring_);
    for (std::size_t k = 0; k < coords.size(); ++k) p.add_term(by_degree_.at(d)[k], coords[k]);
    return p;
  }

 private:
  RingPtr ring_;
  std::vector<std::vector<Monomial>> by_degree_;
  std::map<std::vector<Monomial::Exponent>, std::size_t> index_;
};

/// Evidence that a quotient is infinite-dimensional: no element of the
/// basis has a pure power of this variable as leading monomial.
struct Infinite {
  std::size_t witness_variable;
};

using QuotientResult = std::variant<QuotientBasis, Infinite>;

inline QuotientResult quotient_basis(const GroebnerBasis& gb) {
  const auto& ring = gb.ring();
  const std::size_t n = ring->nvars();
  for (std::size_t v = 0; v < n; ++v) {
    const bool has_pure_power = std::any_of(gb.elements().begin(), gb.elements().end(), [&](const Polynomial& g) {
      const auto& lm = g.leading_monomial();
      return lm[v] > 0 && lm.degree() == lm[v];
    });
    if (!has_pure_power) return Infinite{v};
  }
  std::vector<std::vector<Monomial>> by_degree;
  std::vector<Monomial> current;
  if (gb.is_standard(Monomial(n))) current.emplace_back(n);
  auto ascending = [&](const Monomial& a, const Monomial& b) { return ring->order.less(a, b); };
  while (!current.empty()) {
    std::sort(current.begin(), current.end(), ascending);
    by_degree.push_back(current);
    std::set<std::vector<Monomial::Exponent>> seen;
    std::vector<Monomial> next;
    for (const auto& m : current) {
      for (std::size_t v = 0; v < n; ++v) {
        Monomial up = m * Monomial::variable(n, v);
        if (gb.is_standard(up) && seen.insert(up.exponents()).second) next.push_back(std::move(up));
      }
    }
    current = std::move(next);
  }
  return QuotientBasis(ring, std::move(by_degree));
}

inline const QuotientBasis& require_artinian(const QuotientResult& q) {
  if (const auto* inf = std::get_if<Infinite>(&q)) {
    throw Error(ErrorKind::NotArtinian, "quotient is infinite-dimensional (witness variable " +
                                            std::to_string(inf->witness_variable) + ")");
  }
  return std::get<QuotientBasis>(q);
}

/// Dimension of the annihilator of the maximal ideal in each degree.
inline std::vector<std::size_t> socle_dimensions(const GroebnerBasis& gb, const QuotientBasis& qb) {
  const auto& ring = gb.ring();
  const std::size_t n = ring->nvars();
  std::vector<std::size_t> dims;
  for (std::size_t d = 0; d <= qb.top_degree(); ++d) {
    const auto& piece = qb.degree(d);
    if (d == qb.top_degree()) {
      dims.push_back(piece.size());
      break;
    }
    // Rows: (variable, target coordinate); columns: source basis elements.
    const std::size_t target = qb.degree(d + 1).size();
    Matrix m(n * target, Vector(piece.size(), Scalar::zero(ring->field)));
    for (std::size_t c = 0; c < piece.size(); ++c) {
      for (std::size_t v = 0; v < n; ++v) {
        const Polynomial image = gb.normal_form(Polynomial::monomial(ring, piece[c] * Monomial::variable(n, v)));
        const Vector coords = qb.coordinates(image, d + 1);
        for (std::size_t t = 0; t < target; ++t) m[v * target + t][c] = coords[t];
      }
    }
    dims.push_back(piece.size() - rank(std::move(m)));
  }
  return dims;
}

struct Socle {
  std::size_t degree;
  Polynomial generator;
};

/// Socle of a Gorenstein Artinian quotient, found by annihilator linear
/// algebra in every degree. Throws if the socle is not one-dimensional.
inline Socle socle(const GroebnerBasis& gb) {
  const auto result = quotient_basis(gb);
  const auto& qb = require_artinian(result);
  const auto dims = socle_dimensions(gb, qb);
  std::size_t total = 0;
  for (auto d : dims) total += d;
  if (total != 1) {
    std::string detail;
    for (std::size_t d = 0; d < dims.size(); ++d) {
      if (dims[d] != 0) detail += " deg" + std::to_string(d) + ":" + std::to_string(dims[d]);
    }
    throw Error(ErrorKind::SocleNotOneDimensional, "socle has dimension " + std::to_string(total) + detail);
  }
  const std::size_t deg = static_cast<std::size_t>(std::find(dims.begin(), dims.end(), std::size_t{1}) - dims.begin());
  const auto& ring = gb.ring();
  const std::size_t n = ring->nvars();
  const auto& piece = qb.degree(deg);
  Vector kernel_vec;
  if (deg == qb.top_degree()) {
    kernel_vec.assign(piece.size(), Scalar::one(ring->field));
  } else {
    const std::size_t target = qb.degree(deg + 1).size();
    Matrix m(n * target, Vector(piece.size(), Scalar::zero(ring->field)));
    for (std::size_t c = 0; c < piece.size(); ++c) {
      for (std::size_t v = 0; v < n; ++v) {
        const auto coords =
            qb.coordinates(gb.normal_form(Polynomial::monomial(ring, piece[c] * Monomial::variable(n, v))), deg + 1);
        for (std::size_t t = 0; t < target; ++t) m[v * target + t][c] = coords[t];
      }
    }
    kernel_vec = nullspace(std::move(m), piece.size(), ring->field).front();
  }
  return Socle{deg, qb.from_coordinates(kernel_vec, deg).monic()};
}

/// Rank of the classes of `monomials` inside each graded piece of the
/// quotient, indexed by degree 0..top.
inline std::vector<std::size_t> spanning_rank(const std::vector<Monomial>& monomials, const GroebnerBasis& gb) {
  const auto result = quotient_basis(gb);
  const auto& qb = require_artinian(result);
  std::vector<Matrix> rows(qb.top_degree() + 1);
  for (const auto& m : monomials) {
    const auto d = m.degree();
    if (d > qb.top_degree()) continue;
    const auto nf = gb.normal_form(Polynomial::monomial(gb.ring(), m));
    rows[d].push_back(qb.coordinates(nf, d));
  }
  std::vector<std::size_t> ranks;
  for (auto& r : rows) ranks.push_back(r.empty() ? 0 : rank(std::move(r)));
  return ranks;
}

}  // namespace splitci
