#include <gtest/gtest.h>

#include <set>

#include <bchkit/lie.hpp>
#include <bchkit/random.hpp>

using namespace bchkit;

TEST(Rng, SameSeedSameStream) {
  Rng a(12345);
  Rng b(12345);
  for (int i = 0; i < 64; ++i) EXPECT_EQ(a.next(), b.next());
}

TEST(Rng, DifferentSeedsDiverge) {
  Rng a(1);
  Rng b(2);
  bool differ = false;
  for (int i = 0; i < 8; ++i)
    if (a.next() != b.next()) differ = true;
  EXPECT_TRUE(differ);
}

TEST(Rng, BelowStaysInRange) {
  Rng rng(7);
  for (int i = 0; i < 1000; ++i) EXPECT_LT(rng.below(13), 13u);
  EXPECT_THROW(rng.below(0), std::invalid_argument);
}

TEST(Rng, SmallRationalBounds) {
  Rng rng(9);
  for (int i = 0; i < 200; ++i) {
    const Rational q = rng.small_rational(3);
    const Integer num = numerator(q);
    const Integer den = denominator(q);
    EXPECT_LE(abs(num), 3);
    EXPECT_LE(den, 3);
    EXPECT_GE(den, 1);
  }
  for (int i = 0; i < 200; ++i) EXPECT_NE(rng.nonzero_rational(3), 0);
}

TEST(Rng, MixSeedSeparatesStreams) {
  std::set<std::uint64_t> seen;
  for (std::uint64_t stream = 0; stream < 100; ++stream)
    seen.insert(mix_seed(42, stream));
  EXPECT_EQ(seen.size(), 100u);
  EXPECT_EQ(mix_seed(42, 3), mix_seed(42, 3));
  EXPECT_NE(mix_seed(42, 3), mix_seed(43, 3));
}

TEST(RandomGenerators, WordHasRequestedLength) {
  Rng rng(11);
  const Alphabet ab = Alphabet::standard(3);
  for (std::size_t len = 0; len <= 6; ++len) {
    const Word w = random_word(rng, ab, len);
    EXPECT_EQ(w.degree(), len);
    for (std::size_t i = 0; i < len; ++i) EXPECT_LT(w.letter(i), 3);
  }
}

TEST(RandomGenerators, HomogeneousPolyIsHomogeneous) {
  Rng rng(13);
  const Alphabet ab = Alphabet::standard(2);
  for (int t = 0; t < 50; ++t) {
    const std::size_t degree = 1 + rng.below(5);
    const NcPoly p = random_homogeneous_poly(rng, ab, degree, 4);
    ASSERT_FALSE(p.is_zero());
    EXPECT_TRUE(p.is_homogeneous());
    EXPECT_EQ(p.degree(), degree);
  }
}

TEST(RandomGenerators, ConstantFreePolyHasNoConstantTerm) {
  Rng rng(17);
  const Alphabet ab = Alphabet::standard(2);
  for (int t = 0; t < 50; ++t) {
    const NcPoly p = random_poly(rng, ab, 4, 5, true);
    EXPECT_TRUE(p.is_constant_free());
  }
}

TEST(RandomGenerators, BracketingsAreLie) {
  Rng rng(19);
  const Alphabet ab = Alphabet::standard(2);
  for (int t = 0; t < 50; ++t) {
    const std::size_t degree = 1 + rng.below(5);
    const NcPoly p = random_bracketing(rng, ab, degree);
    if (p.is_zero()) continue;
    EXPECT_TRUE(dynkin_is_lie(p));
  }
  EXPECT_THROW(random_bracketing(rng, ab, 0), std::invalid_argument);
}

TEST(RandomGenerators, HomogeneousLieIsNonzeroAndLie) {
  Rng rng(23);
  const Alphabet ab = Alphabet::standard(2);
  for (int t = 0; t < 60; ++t) {
    const std::size_t degree = 1 + rng.below(5);
    const NcPoly p = random_homogeneous_lie(rng, ab, degree);
    ASSERT_FALSE(p.is_zero());
    EXPECT_EQ(p.degree(), degree);
    EXPECT_TRUE(dynkin_is_lie(p));
  }
}

TEST(RandomGenerators, LiePolynomialPassesComponentwiseTest) {
  Rng rng(29);
  const Alphabet ab = Alphabet::standard(3);
  for (int t = 0; t < 40; ++t) {
    const NcPoly p = random_lie_polynomial(rng, ab, 4);
    EXPECT_TRUE(is_lie_polynomial(p));
  }
}

TEST(RandomGenerators, GeneratorsAreDeterministic) {
  const Alphabet ab = Alphabet::standard(2);
  Rng a(31);
  Rng b(31);
  for (int t = 0; t < 20; ++t) {
    EXPECT_EQ(random_poly(a, ab, 4, 4, false), random_poly(b, ab, 4, 4, false));
    EXPECT_EQ(random_homogeneous_lie(a, ab, 3), random_homogeneous_lie(b, ab, 3));
  }
}
