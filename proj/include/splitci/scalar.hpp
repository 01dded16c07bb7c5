#pragma once

/**
 * @file scalar.hpp
 * @brief Exact coefficients: arbitrary-precision rationals and prime fields.
 *
 * A Scalar carries its FieldSpec at runtime so that polynomials over QQ and
 * GF(p) share one code path. Mixing fields in one operation is an error.
 */

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "splitci/error.hpp"

namespace splitci {

namespace detail {

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

}  // namespace detail

class FieldSpec {
 public:
  enum class Kind { Rational, Prime };

  static FieldSpec rational() { return FieldSpec(Kind::Rational, 0); }

  static FieldSpec prime(std::uint64_t p) {
    if (!detail::is_prime(p)) {
      throw Error(ErrorKind::InvalidArgument, "modulus " + std::to_string(p) + " is not prime");
    }
    return FieldSpec(Kind::Prime, p);
  }

  FieldSpec() = default;

  Kind kind() const noexcept { return kind_; }
  bool is_rational() const noexcept { return kind_ == Kind::Rational; }
  bool is_prime() const noexcept { return kind_ == Kind::Prime; }
  /// Zero for QQ.
  std::uint64_t modulus() const noexcept { return modulus_; }
  std::uint64_t characteristic() const noexcept { return modulus_; }

  std::string to_string() const {
    return is_rational() ? std::string("QQ") : "GF(" + std::to_string(modulus_) + ")";
  }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldSpec(Kind kind, std::uint64_t modulus) : kind_(kind), modulus_(modulus) {}

  Kind kind_ = Kind::Rational;
  std::uint64_t modulus_ = 0;
};

/// Immutable-by-convention field element in canonical form: rationals are in
/// lowest terms with positive denominator, residues lie in [0, p).
class Scalar {
 public:
  Scalar() : field_(FieldSpec::rational()), value_(mpq_class(0)) {}

  static Scalar zero(const FieldSpec& field) { return from_int(field, 0); }
  static Scalar one(const FieldSpec& field) { return from_int(field, 1); }

  static Scalar from_int(const FieldSpec& field, long value) {
    if (field.is_rational()) return Scalar(field, mpq_class(value));
    const auto p = static_cast<long long>(field.modulus());
    long long r = static_cast<long long>(value) % p;
    if (r < 0) r += p;
    return Scalar(field, static_cast<std::uint64_t>(r));
  }

  /// Reduces an arbitrary rational into `field`; throws when the
  /// denominator vanishes mod p.
  static Scalar from_rational(const FieldSpec& field, mpq_class q) {
    q.canonicalize();
    if (field.is_rational()) return Scalar(field, std::move(q));
    const mpz_class p(std::to_string(field.modulus()));
    mpz_class num = q.get_num() % p;
    if (num < 0) num += p;
    mpz_class den = q.get_den() % p;
    if (den == 0) throw Error(ErrorKind::DivisionByZero, "denominator vanishes in " + field.to_string());
    mpz_class den_inv;
    mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
    mpz_class r = num * den_inv % p;
    return Scalar(field, static_cast<std::uint64_t>(std::stoull(r.get_str())));
  }

  const FieldSpec& field() const noexcept { return field_; }

  bool is_zero() const {
    if (const auto* q = std::get_if<mpq_class>(&value_)) return sgn(*q) == 0;
    return std::get<std::uint64_t>(value_) == 0;
  }
  bool is_one() const {
    if (const auto* q = std::get_if<mpq_class>(&value_)) return *q == 1;
    return std::get<std::uint64_t>(value_) == 1;
  }

  /// QQ only.
  const mpq_class& rational() const { return std::get<mpq_class>(value_); }
  /// GF(p) only.
  std::uint64_t residue() const { return std::get<std::uint64_t>(value_); }

  Scalar operator-() const {
    if (const auto* q = std::get_if<mpq_class>(&value_)) return Scalar(field_, mpq_class(-*q));
    const auto r = residue();
    return Scalar(field_, r == 0 ? 0 : field_.modulus() - r);
  }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    check_same(a, b);
    if (a.field_.is_rational()) return Scalar(a.field_, mpq_class(a.rational() + b.rational()));
    const auto p = a.field_.modulus();
    const auto s = static_cast<unsigned __int128>(a.residue()) + b.residue();
    return Scalar(a.field_, static_cast<std::uint64_t>(s % p));
  }

  friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    check_same(a, b);
    if (a.field_.is_rational()) return Scalar(a.field_, mpq_class(a.rational() * b.rational()));
    return Scalar(a.field_, detail::mul_mod(a.residue(), b.residue(), a.field_.modulus()));
  }

  Scalar inv() const {
    if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
    if (field_.is_rational()) return Scalar(field_, mpq_class(1 / rational()));
    // p prime, so a^(p-2) is the inverse.
    return Scalar(field_, detail::pow_mod(residue(), field_.modulus() - 2, field_.modulus()));
  }

  friend Scalar operator/(const Scalar& a, const Scalar& b) {
    check_same(a, b);
    return a * b.inv();
  }

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.field_ == b.field_ && a.value_ == b.value_;
  }

  /// Re-establishes canonical form; the identity on any value built through
  /// the public interface.
  Scalar canonical() const {
    if (field_.is_rational()) {
      mpq_class q = rational();
      q.canonicalize();
      return Scalar(field_, std::move(q));
    }
    return Scalar(field_, residue() % field_.modulus());
  }

  /// "a" or "a/b" for QQ, the residue in [0, p) otherwise.
  std::string to_string() const {
    if (field_.is_rational()) return rational().get_str();
    return std::to_string(residue());
  }

 private:
  Scalar(const FieldSpec& field, mpq_class q) : field_(field), value_(std::move(q)) {}
  Scalar(const FieldSpec& field, std::uint64_t r) : field_(field), value_(r) {}

  static void check_same(const Scalar& a, const Scalar& b) {
    if (!(a.field_ == b.field_)) {
      throw Error(ErrorKind::FieldMismatch,
                  "field mismatch: " + a.field_.to_string() + " vs " + b.field_.to_string());
    }
  }

  FieldSpec field_;
  std::variant<mpq_class, std::uint64_t> value_;
};

namespace detail {

inline bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

inline bool is_int_literal(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  return is_digits(s);
}

}  // namespace detail

/// Grammar: `int | int "/" int`, `int := ["-"] digit+`.
inline Scalar parse_scalar(std::string_view text, const FieldSpec& field) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!detail::is_int_literal(num) || !detail::is_int_literal(den)) {
    throw Error(ErrorKind::Parse, "malformed scalar literal '" + std::string(text) + "'");
  }
  const mpz_class n{std::string(num)};
  const mpz_class d{std::string(den)};
  if (d == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator in '" + std::string(text) + "'");
  return Scalar::from_rational(field, mpq_class(n, d));
}

}  // namespace splitci
