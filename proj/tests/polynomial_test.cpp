#include <gtest/gtest.h>

#include <cstdint>
#include <limits>
#include <random>

#include "support.hpp"
#include "tutte3/polynomial.hpp"

namespace tutte3 {
namespace {

Polynomial mono(unsigned a, unsigned b, unsigned c, std::int64_t coeff = 1) {
  return Polynomial::monomial({a, b, c}, coeff);
}

Polynomial random_poly(std::mt19937_64& rng) {
  Polynomial p;
  const int terms = static_cast<int>(rng() % 5);
  for (int i = 0; i < terms; ++i) {
    p.add_term({static_cast<unsigned>(rng() % 3), static_cast<unsigned>(rng() % 3),
                static_cast<unsigned>(rng() % 3)},
               static_cast<std::int64_t>(rng() % 11) - 5);
  }
  return p;
}

TEST(Add, Examples) {
  EXPECT_EQ(to_canonical_string(add(mono(2, 0, 1), mono(2, 0, 0))), "x^2*z + x^2");
  const Polynomial p = mono(1, 2, 0, 3) + mono(0, 0, 4);
  EXPECT_EQ(add(p, Polynomial()), p);
  EXPECT_EQ(to_canonical_string(add(mono(1, 0, 1), mono(1, 0, 1))), "2*x*z");
}

TEST(Add, PrunesCancelledTerms) {
  const Polynomial p = mono(1, 0, 0) + mono(1, 0, 0, -1);
  EXPECT_TRUE(p.is_zero());
  EXPECT_TRUE(p.terms().empty());
}

TEST(AddMonomial, Examples) {
  EXPECT_EQ(to_canonical_string(add_monomial(Polynomial(), 2, 0, 1)), "x^2*z");
  EXPECT_EQ(to_canonical_string(add_monomial(Polynomial(), 0, 0, 0)), "1");
  EXPECT_EQ(to_canonical_string(add_monomial(Polynomial::x(), 1, 0, 0)), "2*x");
}

TEST(Substitute, Examples) {
  const Polynomial x = Polynomial::x();
  const Polynomial y = Polynomial::y();
  const Polynomial z = Polynomial::z();
  const Polynomial one = Polynomial::constant(1);
  EXPECT_EQ(to_canonical_string(substitute(z, x, y, x - one)), "x - 1");
  EXPECT_EQ(substitute(mono(2, 0, 1), x, y, z), mono(2, 0, 1));
  EXPECT_EQ(to_canonical_string(substitute(z + one, x, y, x - one)), "x");
}

TEST(CanonicalString, Examples) {
  EXPECT_EQ(to_canonical_string(testing::fixture_polynomial()), testing::kFixturePolynomial);
  EXPECT_EQ(to_canonical_string(Polynomial()), "0");
  EXPECT_EQ(to_canonical_string(-Polynomial::x()), "-x");
  EXPECT_EQ(to_canonical_string(mono(0, 1, 0, -3) + Polynomial::constant(-1) + mono(2, 0, 0)),
            "x^2 - 3*y - 1");
}

TEST(CanonicalString, PrintsTheMostNegativeCoefficient) {
  const auto lowest = std::numeric_limits<std::int64_t>::min();
  EXPECT_EQ(to_canonical_string(Polynomial::constant(lowest)), "-9223372036854775808");
}

TEST(Arithmetic, DetectsOverflow) {
  const auto big = std::numeric_limits<std::int64_t>::max();
  Polynomial p = Polynomial::constant(big);
  EXPECT_THROW(p.add_term({0, 0, 0}, 1), std::overflow_error);
  EXPECT_THROW(Polynomial::constant(big) * Polynomial::constant(2), std::overflow_error);
  EXPECT_THROW((Polynomial::x() + Polynomial::constant(big)).evaluate(1, 0, 0),
               std::overflow_error);
}

TEST(RingAxioms, HoldOnRandomSamples) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Polynomial p = random_poly(rng);
    const Polynomial q = random_poly(rng);
    const Polynomial r = random_poly(rng);
    EXPECT_EQ(p + q, q + p);
    EXPECT_EQ((p + q) + r, p + (q + r));
    EXPECT_EQ(p * q, q * p);
    EXPECT_EQ((p * q) * r, p * (q * r));
    EXPECT_EQ(p * (q + r), p * q + p * r);
    EXPECT_EQ(p - p, Polynomial());
  }
}

TEST(Substitute, IdentityIsANoOp) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const Polynomial p = random_poly(rng);
    EXPECT_EQ(substitute(p, Polynomial::x(), Polynomial::y(), Polynomial::z()), p);
  }
}

// Evaluating after substitution equals evaluating p at the evaluated
// substitutes.
TEST(Substitute, CommutesWithEvaluation) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    const Polynomial p = random_poly(rng);
    const Polynomial xs = random_poly(rng);
    const Polynomial ys = random_poly(rng);
    const Polynomial zs = random_poly(rng);
    const Polynomial composed = substitute(p, xs, ys, zs);
    for (int point = 0; point < 5; ++point) {
      const std::int64_t a = static_cast<std::int64_t>(rng() % 7) - 3;
      const std::int64_t b = static_cast<std::int64_t>(rng() % 7) - 3;
      const std::int64_t c = static_cast<std::int64_t>(rng() % 7) - 3;
      EXPECT_EQ(composed.evaluate(a, b, c),
                p.evaluate(xs.evaluate(a, b, c), ys.evaluate(a, b, c), zs.evaluate(a, b, c)));
    }
  }
}

}  // namespace
}  // namespace tutte3
