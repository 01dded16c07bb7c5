#pragma once

/**
 * @file polyring.hpp
 * @brief Variables, monomials, the graded order, sparse polynomials, linear
 * forms and linear changes of coordinates.
 *
 * The order compares total degree first. Ties are broken by scanning the
 * exponents from the highest-ranked variable downward: at the first
 * difference, the monomial with the smaller exponent is the smaller one.
 * With the identity ranking this gives x1 < x2 < ... < xn. The ranking is
 * data, so two rings over the same field may order their variables
 * differently.
 */

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "splitci/error.hpp"
#include "splitci/linalg.hpp"
#include "splitci/scalar.hpp"

namespace splitci {

class VariableTable {
 public:
  VariableTable() = default;

  /// Identity ranking: names[0] is the smallest variable.
  explicit VariableTable(std::vector<std::string> names)
      : VariableTable(names, identity_rank(names.size())) {}

  /// `rank[v]` is the position of variable v in the ascending chain.
  VariableTable(std::vector<std::string> names, std::vector<std::size_t> rank)
      : names_(std::move(names)), rank_(std::move(rank)) {
    if (rank_.size() != names_.size()) {
      throw Error(ErrorKind::InvalidArgument, "rank length differs from variable count");
    }
    std::set<std::string> seen(names_.begin(), names_.end());
    if (seen.size() != names_.size()) throw Error(ErrorKind::InvalidArgument, "duplicate variable name");
    scan_.assign(names_.size(), names_.size());
    for (std::size_t v = 0; v < rank_.size(); ++v) {
      const auto r = rank_[v];
      if (r >= names_.size() || scan_[names_.size() - 1 - r] != names_.size()) {
        throw Error(ErrorKind::InvalidArgument, "rank is not a permutation");
      }
      scan_[names_.size() - 1 - r] = v;
    }
  }

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(std::size_t v) const { return names_.at(v); }
  const std::vector<std::size_t>& rank() const noexcept { return rank_; }
  /// Variables from the highest-ranked down to the lowest.
  const std::vector<std::size_t>& descending() const noexcept { return scan_; }

  std::size_t index_of(const std::string& name) const {
    const auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) throw Error(ErrorKind::Parse, "unknown variable '" + name + "'");
    return static_cast<std::size_t>(it - names_.begin());
  }
  bool contains(const std::string& name) const {
    return std::find(names_.begin(), names_.end(), name) != names_.end();
  }

  friend bool operator==(const VariableTable& a, const VariableTable& b) {
    return a.names_ == b.names_ && a.rank_ == b.rank_;
  }

 private:
  static std::vector<std::size_t> identity_rank(std::size_t n) {
    std::vector<std::size_t> r(n);
    std::iota(r.begin(), r.end(), 0);
    return r;
  }

  std::vector<std::string> names_;
  std::vector<std::size_t> rank_;
  std::vector<std::size_t> scan_;
};

class Monomial {
 public:
  using Exponent = std::uint32_t;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}

  static Monomial variable(std::size_t nvars, std::size_t v, Exponent power = 1) {
    Monomial m(nvars);
    m.exps_.at(v) = power;
    return m;
  }

  std::size_t size() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t v) const { return exps_[v]; }
  const std::vector<Exponent>& exponents() const noexcept { return exps_; }

  std::uint64_t degree() const {
    return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
  }
  bool is_one() const {
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
  }
  bool is_squarefree() const {
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e <= 1; });
  }

  bool divides(const Monomial& other) const {
    for (std::size_t v = 0; v < exps_.size(); ++v) {
      if (exps_[v] > other.exps_[v]) return false;
    }
    return true;
  }

  /// True when no variable occurs in both.
  bool coprime(const Monomial& other) const {
    for (std::size_t v = 0; v < exps_.size(); ++v) {
      if (exps_[v] > 0 && other.exps_[v] > 0) return false;
    }
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    check_size(a, b);
    Monomial out = a;
    for (std::size_t v = 0; v < a.size(); ++v) out.exps_[v] += b.exps_[v];
    return out;
  }

  /// Requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    check_size(a, b);
    Monomial out = a;
    for (std::size_t v = 0; v < a.size(); ++v) {
      if (b.exps_[v] > a.exps_[v]) throw Error(ErrorKind::InvalidArgument, "monomial does not divide");
      out.exps_[v] -= b.exps_[v];
    }
    return out;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    check_size(a, b);
    Monomial out = a;
    for (std::size_t v = 0; v < a.size(); ++v) out.exps_[v] = std::max(a.exps_[v], b.exps_[v]);
    return out;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

  static void check_size(const Monomial& a, const Monomial& b) {
    if (a.size() != b.size()) throw Error(ErrorKind::RingMismatch, "monomial length mismatch");
  }

 private:
  std::vector<Exponent> exps_;
};

class MonomialOrder {
 public:
  MonomialOrder() = default;
  explicit MonomialOrder(VariableTable table) : table_(std::move(table)) {}

  const VariableTable& table() const noexcept { return table_; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
    if (a.size() != table_.size() || b.size() != table_.size()) {
      throw Error(ErrorKind::RingMismatch, "monomial length does not match the variable table");
    }
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    for (auto v : table_.descending()) {
      if (auto c = a[v] <=> b[v]; c != 0) return c;
    }
    return std::strong_ordering::equal;
  }

  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  VariableTable table_;
};

/// All monomials of exactly `degree` in `nvars` variables.
inline std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::uint64_t degree) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back(0);
    return out;
  }
  std::vector<Monomial::Exponent> e(nvars, 0);
  // Compositions of `degree` into nvars parts, generated recursively.
  auto rec = [&](auto&& self, std::size_t v, std::uint64_t left) -> void {
    if (v + 1 == nvars) {
      e[v] = static_cast<Monomial::Exponent>(left);
      out.emplace_back(e);
      return;
    }
    for (std::uint64_t k = 0; k <= left; ++k) {
      e[v] = static_cast<Monomial::Exponent>(k);
      self(self, v + 1, left - k);
    }
  };
  rec(rec, 0, degree);
  return out;
}

/// Monomials strictly below `m`, ascending. Finite because the order is graded.
inline std::vector<Monomial> monomials_below(const Monomial& m, const MonomialOrder& order) {
  std::vector<Monomial> out;
  for (std::uint64_t d = 0; d <= m.degree(); ++d) {
    for (auto& c : monomials_of_degree(m.size(), d)) {
      if (order.less(c, m)) out.push_back(std::move(c));
    }
  }
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return order.less(a, b); });
  return out;
}

struct PolyRing {
  FieldSpec field;
  MonomialOrder order;

  const VariableTable& vars() const noexcept { return order.table(); }
  std::size_t nvars() const noexcept { return order.table().size(); }

  friend bool operator==(const PolyRing&, const PolyRing&) = default;
};

using RingPtr = std::shared_ptr<const PolyRing>;

inline RingPtr make_ring(FieldSpec field, VariableTable table) {
  return std::make_shared<const PolyRing>(PolyRing{field, MonomialOrder(std::move(table))});
}

/// Sparse polynomial; terms are kept in descending monomial order so the
/// leading term is always the first entry. Zero coefficients are never stored.
class Polynomial {
 public:
  struct Descending {
    const MonomialOrder* order = nullptr;
    bool operator()(const Monomial& a, const Monomial& b) const { return order->compare(a, b) > 0; }
  };
  using TermMap = std::map<Monomial, Scalar, Descending>;

  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)), terms_(Descending{&ring_->order}) {}

  Polynomial(const Polynomial& o) : ring_(o.ring_), terms_(o.terms_.begin(), o.terms_.end(), Descending{&ring_->order}) {}
  Polynomial(Polynomial&&) noexcept = default;
  Polynomial& operator=(const Polynomial& o) {
    if (this != &o) {
      Polynomial tmp(o);
      *this = std::move(tmp);
    }
    return *this;
  }
  Polynomial& operator=(Polynomial&&) noexcept = default;

  static Polynomial constant(const RingPtr& ring, const Scalar& c) {
    Polynomial p(ring);
    p.add_term(Monomial(ring->nvars()), c);
    return p;
  }
  static Polynomial constant(const RingPtr& ring, long c) {
    return constant(ring, Scalar::from_int(ring->field, c));
  }
  static Polynomial variable(const RingPtr& ring, std::size_t v) {
    Polynomial p(ring);
    p.add_term(Monomial::variable(ring->nvars(), v), Scalar::one(ring->field));
    return p;
  }
  static Polynomial monomial(const RingPtr& ring, const Monomial& m, const Scalar& c) {
    Polynomial p(ring);
    p.add_term(m, c);
    return p;
  }
  static Polynomial monomial(const RingPtr& ring, const Monomial& m) {
    return monomial(ring, m, Scalar::one(ring->field));
  }

  const RingPtr& ring() const noexcept { return ring_; }
  const FieldSpec& field() const noexcept { return ring_->field; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  const Monomial& leading_monomial() const {
    if (terms_.empty()) throw Error(ErrorKind::InvalidArgument, "leading monomial of zero");
    return terms_.begin()->first;
  }
  const Scalar& leading_coefficient() const {
    if (terms_.empty()) throw Error(ErrorKind::InvalidArgument, "leading coefficient of zero");
    return terms_.begin()->second;
  }

  Scalar coefficient(const Monomial& m) const {
    const auto it = terms_.find(m);
    return it == terms_.end() ? Scalar::zero(field()) : it->second;
  }

  /// Highest total degree; 0 for the zero polynomial.
  std::uint64_t degree() const {
    std::uint64_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    const auto d = terms_.begin()->first.degree();
    return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) { return t.first.degree() == d; });
  }

  void add_term(const Monomial& m, const Scalar& c) {
    if (m.size() != ring_->nvars()) throw Error(ErrorKind::RingMismatch, "monomial length mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  /// this += c * m * g, without materialising the product.
  void add_scaled(const Scalar& c, const Monomial& m, const Polynomial& g) {
    check_ring(g);
    if (c.is_zero()) return;
    for (const auto& [gm, gc] : g.terms_) add_term(gm * m, c * gc);
  }

  Polynomial scaled(const Scalar& c) const {
    Polynomial out(ring_);
    if (c.is_zero()) return out;
    for (const auto& [m, x] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, x * c);
    return out;
  }

  /// Divides by the leading coefficient.
  Polynomial monic() const { return is_zero() ? *this : scaled(leading_coefficient().inv()); }

  Polynomial pow(unsigned k) const {
    Polynomial out = constant(ring_, 1);
    Polynomial base = *this;
    while (k > 0) {
      if (k & 1U) out = out * base;
      k >>= 1U;
      if (k > 0) base = base * base;
    }
    return out;
  }

  Polynomial operator-() const { return scaled(-Scalar::one(field())); }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    a.check_ring(b);
    Polynomial out = a;
    for (const auto& [m, c] : b.terms_) out.add_term(m, c);
    return out;
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    a.check_ring(b);
    Polynomial out = a;
    for (const auto& [m, c] : b.terms_) out.add_term(m, -c);
    return out;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_ring(b);
    Polynomial out(a.ring_);
    for (const auto& [m, c] : b.terms_) out.add_scaled(c, m, a);
    return out;
  }
  friend Polynomial operator*(const Scalar& c, const Polynomial& p) { return p.scaled(c); }

  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (!same_ring(a.ring_, b.ring_)) return false;
    return std::equal(a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end());
  }

  static bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || *a == *b; }

  void check_ring(const Polynomial& o) const {
    if (!same_ring(ring_, o.ring_)) throw Error(ErrorKind::RingMismatch, "polynomials live in different rings");
  }

  /// Printed in descending order, e.g. `x1^2 - 1/2*x1*x2 + 3`.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      Scalar mag = c;
      bool negative = false;
      if (c.field().is_rational() && sgn(c.rational()) < 0) {
        negative = true;
        mag = -c;
      }
      if (first) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      first = false;
      std::string mono;
      for (std::size_t v = 0; v < m.size(); ++v) {
        if (m[v] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += ring_->vars().name(v);
        if (m[v] > 1) mono += "^" + std::to_string(m[v]);
      }
      if (mono.empty()) {
        out += mag.to_string();
      } else if (mag.is_one()) {
        out += mono;
      } else {
        out += mag.to_string() + "*" + mono;
      }
    }
    return out;
  }

 private:
  RingPtr ring_;
  TermMap terms_;
};

class LinearForm {
 public:
  LinearForm() = default;
  explicit LinearForm(std::vector<Scalar> coefficients) : coeffs_(std::move(coefficients)) {}

  static LinearForm zero(const FieldSpec& field, std::size_t nvars) {
    return LinearForm(std::vector<Scalar>(nvars, Scalar::zero(field)));
  }
  static LinearForm variable(const FieldSpec& field, std::size_t nvars, std::size_t v) {
    auto f = zero(field, nvars);
    f.coeffs_.at(v) = Scalar::one(field);
    return f;
  }

  /// Throws unless `p` is homogeneous of degree 1.
  static LinearForm from_polynomial(const Polynomial& p) {
    auto f = zero(p.field(), p.ring()->nvars());
    for (const auto& [m, c] : p.terms()) {
      if (m.degree() != 1) throw Error(ErrorKind::Parse, "not a linear form: " + p.to_string());
      for (std::size_t v = 0; v < m.size(); ++v) {
        if (m[v] == 1) f.coeffs_[v] = c;
      }
    }
    return f;
  }

  std::size_t size() const noexcept { return coeffs_.size(); }
  const std::vector<Scalar>& coefficients() const noexcept { return coeffs_; }
  const Scalar& operator[](std::size_t v) const { return coeffs_.at(v); }
  Scalar& operator[](std::size_t v) { return coeffs_.at(v); }

  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Scalar& c) { return c.is_zero(); });
  }

  Polynomial to_polynomial(const RingPtr& ring) const {
    if (coeffs_.size() != ring->nvars()) throw Error(ErrorKind::RingMismatch, "linear form length mismatch");
    Polynomial p(ring);
    for (std::size_t v = 0; v < coeffs_.size(); ++v) p.add_term(Monomial::variable(coeffs_.size(), v), coeffs_[v]);
    return p;
  }

  friend LinearForm operator+(const LinearForm& a, const LinearForm& b) {
    check(a, b);
    LinearForm out = a;
    for (std::size_t v = 0; v < a.size(); ++v) out.coeffs_[v] += b.coeffs_[v];
    return out;
  }
  friend LinearForm operator-(const LinearForm& a, const LinearForm& b) {
    check(a, b);
    LinearForm out = a;
    for (std::size_t v = 0; v < a.size(); ++v) out.coeffs_[v] -= b.coeffs_[v];
    return out;
  }
  friend LinearForm operator*(const Scalar& c, const LinearForm& f) {
    LinearForm out = f;
    for (auto& x : out.coeffs_) x *= c;
    return out;
  }

  friend bool operator==(const LinearForm&, const LinearForm&) = default;

 private:
  static void check(const LinearForm& a, const LinearForm& b) {
    if (a.size() != b.size()) throw Error(ErrorKind::RingMismatch, "linear form length mismatch");
  }

  std::vector<Scalar> coeffs_;
};

inline Polynomial product_of_factors(const RingPtr& ring, std::span<const LinearForm> factors) {
  if (factors.empty()) throw Error(ErrorKind::InvalidArgument, "empty factor list");
  Polynomial out = Polynomial::constant(ring, 1);
  for (const auto& f : factors) {
    if (f.is_zero()) throw Error(ErrorKind::InvalidArgument, "zero linear factor");
    out *= f.to_polynomial(ring);
  }
  return out;
}

/// Row j of the matrix is the image of old variable j, written as a linear
/// form in the new variables.
class LinearChange {
 public:
  LinearChange(FieldSpec field, Matrix matrix) : field_(field), matrix_(std::move(matrix)) {
    for (const auto& row : matrix_) {
      if (row.size() != matrix_.size()) throw Error(ErrorKind::InvalidArgument, "change matrix is not square");
    }
    if (determinant(matrix_, field_).is_zero()) throw Error(ErrorKind::SingularMatrix, "change matrix is singular");
  }

  static LinearChange identity(const FieldSpec& field, std::size_t n) {
    return LinearChange(field, identity_matrix(field, n));
  }

  std::size_t size() const noexcept { return matrix_.size(); }
  const Matrix& matrix() const noexcept { return matrix_; }
  const FieldSpec& field() const noexcept { return field_; }

  LinearChange inverse() const { return LinearChange(field_, splitci::inverse(matrix_, field_)); }

  /// this followed by `next`: substitute with this, then with next.
  LinearChange then(const LinearChange& next) const {
    return LinearChange(field_, multiply(matrix_, next.matrix_, field_));
  }

  LinearForm apply(const LinearForm& f) const {
    check_size(f.size());
    auto out = LinearForm::zero(field_, size());
    for (std::size_t j = 0; j < size(); ++j) {
      if (f[j].is_zero()) continue;
      for (std::size_t k = 0; k < size(); ++k) out[k] += f[j] * matrix_[j][k];
    }
    return out;
  }

  Polynomial apply(const Polynomial& f) const {
    check_size(f.ring()->nvars());
    const auto& ring = f.ring();
    std::vector<Polynomial> images;
    images.reserve(size());
    for (std::size_t j = 0; j < size(); ++j) images.push_back(LinearForm(matrix_[j]).to_polynomial(ring));
    std::vector<std::vector<Polynomial>> powers(size());
    auto power = [&](std::size_t j, unsigned e) -> const Polynomial& {
      auto& cache = powers[j];
      if (cache.empty()) cache.push_back(Polynomial::constant(ring, 1));
      while (cache.size() <= e) cache.push_back(cache.back() * images[j]);
      return cache[e];
    };
    Polynomial out(ring);
    for (const auto& [m, c] : f.terms()) {
      Polynomial t = Polynomial::constant(ring, c);
      for (std::size_t j = 0; j < size(); ++j) {
        if (m[j] > 0) t *= power(j, m[j]);
      }
      out += t;
    }
    return out;
  }

 private:
  void check_size(std::size_t n) const {
    if (n != size()) throw Error(ErrorKind::RingMismatch, "change size does not match variable count");
  }

  FieldSpec field_;
  Matrix matrix_;
};

inline Polynomial apply_change(const Polynomial& f, const LinearChange& change) { return change.apply(f); }

}  // namespace splitci
