#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "fixtures.hpp"
#include "brute_order.hpp"
#include "splitci/polyring.hpp"

using namespace splitci;
using splitci::testing::poly;
using splitci::testing::xring;

namespace {

Monomial mono(std::vector<Monomial::Exponent> e) { return Monomial(std::move(e)); }

std::vector<Monomial> all_up_to(std::size_t nvars, std::size_t degree) {
  std::vector<Monomial> out;
  for (std::size_t d = 0; d <= degree; ++d) {
    for (auto& m : monomials_of_degree(nvars, d)) out.push_back(std::move(m));
  }
  return out;
}

}  // namespace

TEST(Order, TieBreakScansFromLastVariable) {
  const MonomialOrder ord(VariableTable({"x1", "x2"}));
  EXPECT_TRUE(ord.compare(mono({1, 1}), mono({0, 2})) < 0);  // x1*x2 < x2^2
  EXPECT_TRUE(ord.compare(mono({3, 0}), mono({0, 1})) > 0);  // x1^3 > x2
  EXPECT_TRUE(ord.compare(mono({1, 0}), mono({0, 1})) < 0);  // x1 < x2
  EXPECT_TRUE(ord.compare(mono({2, 0}), mono({1, 1})) < 0);  // x1^2 < x1*x2
  EXPECT_TRUE(ord.compare(mono({1, 1}), mono({1, 1})) == 0);
}

TEST(Order, LengthMismatchThrows) {
  const MonomialOrder ord(VariableTable({"x1", "x2"}));
  EXPECT_THROW(ord.compare(mono({1}), mono({1, 0})), Error);
}

TEST(Order, RankingIsData) {
  // y ranked below x: x < y fails, y < x holds.
  const MonomialOrder ord(VariableTable({"x", "y"}, {1, 0}));
  EXPECT_TRUE(ord.compare(mono({0, 1}), mono({1, 0})) < 0);
  EXPECT_THROW(VariableTable({"x", "y"}, {0, 0}), Error);
  EXPECT_THROW(VariableTable({"x", "x"}), Error);
}

TEST(Order, AgreesWithBruteForceOnSmallDegrees) {
  for (std::size_t n = 1; n <= 3; ++n) {
    const VariableTable table([&] {
      std::vector<std::string> names;
      for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
      return names;
    }());
    const MonomialOrder ord(table);
    const auto ms = all_up_to(n, 4);
    for (const auto& a : ms) {
      for (const auto& b : ms) {
        ASSERT_EQ(ord.less(a, b), oracle::brute_less(a, b, table));
      }
    }
  }
}

TEST(Order, IsATotalOrder) {
  const MonomialOrder ord(VariableTable({"a", "b", "c"}, {2, 0, 1}));
  const auto ms = all_up_to(3, 3);
  for (const auto& a : ms) {
    for (const auto& b : ms) {
      const auto ab = ord.compare(a, b);
      ASSERT_EQ(ab == 0, a == b);
      ASSERT_EQ(ab < 0, ord.compare(b, a) > 0);
      for (const auto& c : ms) {
        if (ord.less(a, b) && ord.less(b, c)) ASSERT_TRUE(ord.less(a, c));
      }
    }
  }
}

TEST(Order, MultiplicativeMonotonicity) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<Monomial::Exponent> e(0, 4);
  const MonomialOrder ord(VariableTable({"a", "b", "c"}, {1, 2, 0}));
  for (int t = 0; t < 2000; ++t) {
    const Monomial m1 = mono({e(rng), e(rng), e(rng)});
    const Monomial m2 = mono({e(rng), e(rng), e(rng)});
    const Monomial m = mono({e(rng), e(rng), e(rng)});
    ASSERT_EQ(!ord.less(m2, m1), !ord.less(m * m2, m * m1));
  }
}

TEST(MonomialsBelow, SmallCases) {
  const MonomialOrder one(VariableTable({"x1"}));
  const auto b1 = monomials_below(mono({1}), one);
  ASSERT_EQ(b1.size(), 1U);
  EXPECT_TRUE(b1[0].is_one());

  const MonomialOrder two(VariableTable({"x1", "x2"}));
  const auto b2 = monomials_below(mono({0, 1}), two);
  ASSERT_EQ(b2.size(), 2U);
  EXPECT_EQ(b2[0], mono({0, 0}));
  EXPECT_EQ(b2[1], mono({1, 0}));

  // Enumerated oracle: 1, x1, x2, x1^2.
  const auto b3 = monomials_below(mono({1, 1}), two);
  std::size_t expected = 0;
  for (const auto& m : all_up_to(2, 2)) expected += oracle::brute_less(m, mono({1, 1}), two.table()) ? 1 : 0;
  EXPECT_EQ(expected, 4U);
  EXPECT_EQ(b3.size(), expected);
  EXPECT_EQ(b3.back(), mono({2, 0}));
}

TEST(Polynomial, Arithmetic) {
  auto r = xring(2);
  EXPECT_EQ(poly(r, "x1") * poly(r, "x1 - x2"), poly(r, "x1^2 - x1*x2"));
  const auto f = poly(r, "3*x1^2 - 1/2*x2 + 7");
  EXPECT_EQ(f * Polynomial::constant(r, 1), f);
  EXPECT_TRUE((f - f).is_zero());
  auto r2 = xring(2, FieldSpec::prime(2));
  EXPECT_EQ(poly(r2, "(x1 + x2)^2"), poly(r2, "x1^2 + x2^2"));
}

TEST(Polynomial, LeadingTermFollowsOrder) {
  auto r = xring(2);
  const auto f = poly(r, "x1^2 + x1*x2 + x2^2 + x1^3");
  EXPECT_EQ(f.leading_monomial(), mono({3, 0}));
  EXPECT_EQ(poly(r, "x1^2 + x1*x2").leading_monomial(), mono({1, 1}));
  EXPECT_TRUE(f.is_zero() == false && !f.is_homogeneous());
}

TEST(Polynomial, RingMismatch) {
  auto r = xring(2);
  auto s = xring(3);
  EXPECT_THROW((void)(poly(r, "x1") + poly(s, "x1")), Error);
  auto p = xring(2, FieldSpec::prime(7));
  EXPECT_THROW((void)(poly(r, "x1") * poly(p, "x1")), Error);
}

TEST(ProductOfFactors, Basics) {
  auto r = xring(2);
  const auto x1 = LinearForm::from_polynomial(poly(r, "x1"));
  const auto d = LinearForm::from_polynomial(poly(r, "x1 - x2"));
  std::vector<LinearForm> sq{x1, x1};
  EXPECT_EQ(product_of_factors(r, sq), poly(r, "x1^2"));
  std::vector<LinearForm> mixed{x1, d};
  EXPECT_EQ(product_of_factors(r, mixed), poly(r, "x1^2 - x1*x2"));
  std::vector<LinearForm> bad{x1, LinearForm::zero(r->field, 2)};
  EXPECT_THROW(product_of_factors(r, bad), Error);
  EXPECT_THROW(product_of_factors(r, std::vector<LinearForm>{}), Error);
}

TEST(ProductOfFactors, PermutationInvariant) {
  auto r = xring(3);
  std::vector<LinearForm> fs;
  for (const char* t : {"x1 + 2*x2", "x3 - x1", "x2", "1/3*x1 + x2 - x3"}) {
    fs.push_back(LinearForm::from_polynomial(poly(r, t)));
  }
  const auto base = product_of_factors(r, fs);
  std::vector<std::size_t> idx{0, 1, 2, 3};
  while (std::next_permutation(idx.begin(), idx.end())) {
    std::vector<LinearForm> p;
    for (auto k : idx) p.push_back(fs[k]);
    ASSERT_EQ(product_of_factors(r, p), base);
  }
  EXPECT_EQ(base.degree(), 4U);
  EXPECT_TRUE(base.is_homogeneous());
}

TEST(LinearChange, IdentityAndSwap) {
  auto r = xring(2);
  const auto f = poly(r, "x1^2*x2 - 3*x2^3");
  EXPECT_EQ(apply_change(f, LinearChange::identity(r->field, 2)), f);
  const auto one = Scalar::one(r->field);
  const auto zero = Scalar::zero(r->field);
  const LinearChange swap(r->field, {{zero, one}, {one, zero}});
  EXPECT_EQ(apply_change(poly(r, "x1^2*x2"), swap), poly(r, "x2^2*x1"));
  EXPECT_THROW(LinearChange(r->field, {{one, one}, {one, one}}), Error);
}

TEST(LinearChange, HomomorphismAndInverseRoundTrip) {
  std::mt19937_64 rng(5);
  for (const auto& field : {FieldSpec::rational(), FieldSpec::prime(7)}) {
    auto r = xring(3, field);
    std::uniform_int_distribution<long> c(-3, 3);
    std::uniform_int_distribution<Monomial::Exponent> e(0, 2);
    auto rand_poly = [&] {
      Polynomial p(r);
      for (int t = 0; t < 4; ++t) p.add_term(mono({e(rng), e(rng), e(rng)}), Scalar::from_int(field, c(rng)));
      return p;
    };
    for (int t = 0; t < 20; ++t) {
      Matrix m;
      do {
        m.assign(3, Vector(3, Scalar::zero(field)));
        for (auto& row : m) {
          for (auto& x : row) x = Scalar::from_int(field, c(rng));
        }
      } while (determinant(m, field).is_zero());
      const LinearChange T(field, m);
      const auto f = rand_poly();
      const auto g = rand_poly();
      ASSERT_EQ(T.apply(f * g), T.apply(f) * T.apply(g));
      ASSERT_EQ(T.apply(f + g), T.apply(f) + T.apply(g));
      ASSERT_EQ(T.inverse().apply(T.apply(f)), f);
      ASSERT_EQ(T.then(T.inverse()).matrix(), identity_matrix(field, 3));
    }
  }
}

TEST(LinearChange, LinearFormAgreesWithPolynomialSubstitution) {
  auto r = xring(2);
  const auto q = Scalar::from_int(r->field, 2);
  const auto one = Scalar::one(r->field);
  const LinearChange T(r->field, {{one, q}, {-one, one}});
  const auto l = LinearForm::from_polynomial(poly(r, "3*x1 - x2"));
  EXPECT_EQ(T.apply(l).to_polynomial(r), T.apply(l.to_polynomial(r)));
}
