#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "splitci/scalar.hpp"

using namespace splitci;

namespace {

const FieldSpec Q = FieldSpec::rational();
const FieldSpec F7 = FieldSpec::prime(7);

Scalar random_scalar(std::mt19937_64& rng, const FieldSpec& f) {
  if (f.is_prime()) {
    return Scalar::from_int(f, static_cast<long>(std::uniform_int_distribution<std::uint64_t>(0, f.modulus() - 1)(rng)));
  }
  std::uniform_int_distribution<long> num(-50, 50);
  std::uniform_int_distribution<long> den(1, 30);
  return Scalar::from_rational(f, mpq_class(num(rng), den(rng)));
}

}  // namespace

TEST(Scalar, RationalAddition) {
  EXPECT_EQ(parse_scalar("1/2", Q) + parse_scalar("1/3", Q), parse_scalar("5/6", Q));
}

TEST(Scalar, PrimeMultiplication) {
  EXPECT_EQ(Scalar::from_int(F7, 3) * Scalar::from_int(F7, 5), Scalar::from_int(F7, 1));
}

TEST(Scalar, Inverses) {
  EXPECT_EQ(parse_scalar("2/3", Q).inv(), parse_scalar("3/2", Q));
  EXPECT_EQ(Scalar::from_int(F7, 3).inv(), Scalar::from_int(F7, 5));
  EXPECT_TRUE(Scalar::one(Q).inv().is_one());
  EXPECT_TRUE(Scalar::one(F7).inv().is_one());
  EXPECT_THROW(Scalar::zero(Q).inv(), Error);
  EXPECT_THROW(Scalar::zero(F7).inv(), Error);
}

TEST(Scalar, ParseCanonicalizes) {
  const auto half = parse_scalar("-3/6", Q);
  EXPECT_EQ(half.to_string(), "-1/2");
  EXPECT_EQ(parse_scalar("10", F7).residue(), 3U);
  EXPECT_EQ(parse_scalar("-1", F7).residue(), 6U);
  EXPECT_EQ(parse_scalar("1/2", F7).residue(), 4U);
  EXPECT_EQ(parse_scalar("3/-6", Q).to_string(), "-1/2");
}

TEST(Scalar, ParseErrors) {
  try {
    parse_scalar("1/0", Q);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DivisionByZero);
  }
  EXPECT_THROW(parse_scalar("1/7", F7), Error);
  for (const char* bad : {"", "-", "1/", "/2", "1.5", "x", "1/2/3", "--1"}) {
    EXPECT_THROW(parse_scalar(bad, Q), Error) << bad;
  }
}

TEST(Scalar, FieldMismatchIsAnError) {
  try {
    (void)(Scalar::one(Q) + Scalar::one(F7));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::FieldMismatch);
  }
  EXPECT_THROW((void)(Scalar::one(F7) * Scalar::one(FieldSpec::prime(5))), Error);
}

TEST(Scalar, FieldSpecRejectsComposites) {
  EXPECT_THROW(FieldSpec::prime(1), Error);
  EXPECT_THROW(FieldSpec::prime(9), Error);
  EXPECT_THROW(FieldSpec::prime(561), Error);
  EXPECT_NO_THROW(FieldSpec::prime(2));
  EXPECT_NO_THROW(FieldSpec::prime(101));
  EXPECT_NO_THROW(FieldSpec::prime(2305843009213693951ULL));
}

TEST(Scalar, LargeRationalsStayExact) {
  Scalar x = parse_scalar("123456789123456789/987654321", Q);
  Scalar acc = Scalar::one(Q);
  for (int k = 0; k < 10; ++k) acc *= x;
  for (int k = 0; k < 10; ++k) acc = acc / x;
  EXPECT_TRUE(acc.is_one());
}

TEST(Scalar, AdditiveIdentityOnRandomValues) {
  std::mt19937_64 rng(7);
  for (const auto& f : {Q, F7}) {
    for (int t = 0; t < 100; ++t) {
      const auto a = random_scalar(rng, f);
      EXPECT_EQ(a + Scalar::zero(f), a);
    }
  }
}

// Field axioms on 1000 random triples per field.
TEST(Scalar, FieldAxiomsHoldOnRandomTriples) {
  std::mt19937_64 rng(20261015);
  for (const auto& f : {Q, F7, FieldSpec::prime(101), FieldSpec::prime(5)}) {
    for (int t = 0; t < 1000; ++t) {
      const auto a = random_scalar(rng, f);
      const auto b = random_scalar(rng, f);
      const auto c = random_scalar(rng, f);
      ASSERT_EQ((a + b) + c, a + (b + c));
      ASSERT_EQ((a * b) * c, a * (b * c));
      ASSERT_EQ(a + b, b + a);
      ASSERT_EQ(a * b, b * a);
      ASSERT_EQ(a * (b + c), a * b + a * c);
      ASSERT_TRUE((a - a).is_zero());
      if (!a.is_zero()) ASSERT_TRUE((a * a.inv()).is_one());
      ASSERT_EQ(a.canonical(), a);
      ASSERT_EQ(a.canonical().canonical(), a.canonical());
    }
  }
}
