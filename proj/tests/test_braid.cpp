#include <gtest/gtest.h>

#include <random>

#include "bmf/braid.hpp"
#include "bmf/error.hpp"

namespace bmf {
namespace {

BraidWord W(int p, const char* s) { return BraidWord::parse(p, s); }

BraidWord random_word(int p, int len, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> idx(1, p - 1);
  std::uniform_int_distribution<int> sgn(0, 1);
  std::vector<int> ints;
  for (int k = 0; k < len; ++k) ints.push_back(idx(rng) * (sgn(rng) ? 1 : -1));
  return BraidWord::from_ints(p, ints);
}

TEST(FreeGroupTest, ReduceCancelsAdjacentPairs) {
  EXPECT_EQ(free_reduce(std::vector<int>{1, 2, -2, -1, 3}), (FreeWord{3}));
  EXPECT_EQ(free_inverse(std::vector<int>{1, -2}), (FreeWord{2, -1}));
  EXPECT_TRUE(is_freely_reduced(std::vector<int>{1, 2, 1}));
  EXPECT_FALSE(is_freely_reduced(std::vector<int>{1, -1}));
  EXPECT_EQ(free_word_to_string(std::vector<int>{1, -3}), "f1 f3^-1");
}

TEST(BraidWordTest, ParseAndPrint) {
  const BraidWord w = W(4, " 1  -3 2 ");
  EXPECT_EQ(w.to_ints(), (std::vector<int>{1, -3, 2}));
  EXPECT_EQ(w.to_string(), "1 -3 2");
  EXPECT_TRUE(W(3, "").empty());
  EXPECT_THROW(W(3, "1 x"), InputError);
  EXPECT_THROW(W(3, "3"), InputError);
  EXPECT_THROW(W(3, "0"), InputError);
}

TEST(BraidWordTest, GeneratorImages) {
  // X_1: f1 -> f1 f2 f1^-1, f2 -> f1
  const ArtinImage im = artin_image(W(3, "1"));
  EXPECT_EQ(im.image(1), (FreeWord{1, 2, -1}));
  EXPECT_EQ(im.image(2), (FreeWord{1}));
  EXPECT_EQ(im.image(3), (FreeWord{3}));
  const ArtinImage inv = artin_image(W(3, "-1"));
  EXPECT_EQ(inv.image(1), (FreeWord{2}));
  EXPECT_EQ(inv.image(2), (FreeWord{-2, 1, 2}));
  EXPECT_TRUE(artin_image(W(3, "1 -1")).is_identity());
}

TEST(BraidWordTest, ImagesPreserveBoundaryWord) {
  std::mt19937_64 rng(7);
  for (int p = 2; p <= 5; ++p) {
    for (int t = 0; t < 50; ++t) EXPECT_TRUE(artin_image(random_word(p, 15, rng)).preserves_boundary_word());
  }
}

TEST(BraidWordTest, BraidRelationsAndFarCommutation) {
  EXPECT_TRUE(equals(W(3, "1 2 1"), W(3, "2 1 2")));
  EXPECT_TRUE(equals(W(4, "1 3"), W(4, "3 1")));
  EXPECT_FALSE(equals(W(3, "1 2"), W(3, "2 1")));
  EXPECT_FALSE(equals(W(3, "1"), W(3, "2")));
  EXPECT_TRUE(is_identity(W(4, "1 2 3 -3 -2 -1")));
  EXPECT_THROW(equals(W(3, "1"), W(4, "1")), InputError);
}

TEST(BraidWordTest, FullTwistIsCentral) {
  for (int p = 2; p <= 5; ++p) {
    const BraidWord d = delta_sq(p);
    EXPECT_EQ(exponent_sum(d), p * (p - 1));
    for (int i = 1; i < p; ++i) {
      const BraidWord x = BraidWord::generator(p, i);
      EXPECT_TRUE(equals(d * x, x * d)) << "p=" << p << " i=" << i;
    }
  }
}

TEST(BraidWordTest, LocalFullTwists) {
  EXPECT_TRUE(equals(delta_ij_sq(1, 2, 3), W(3, "1 1")));
  EXPECT_TRUE(equals(delta_ij_sq(1, 3, 3), delta_sq(3)));
  EXPECT_TRUE(equals(delta_ij_sq(2, 4, 4), W(4, "2 3 2 3 2 3")));
  EXPECT_THROW(delta_ij_sq(2, 2, 3), InputError);
}

TEST(BraidWordTest, ConjugatedHalfTwist) {
  const BraidWord q = W(3, "2 1");
  EXPECT_TRUE(equals(conj_halftwist(q, 3), inverse(q) * W(3, "1 1 1") * q));
}

TEST(BraidWordTest, PermutationAndExponentSum) {
  EXPECT_EQ(permutation(W(3, "1")), (std::vector<int>{2, 1, 3}));
  EXPECT_TRUE(is_transposition(permutation(W(3, "1"))));
  EXPECT_TRUE(is_identity_permutation(permutation(delta_sq(3))));
  EXPECT_EQ(exponent_sum(W(3, "1 -2 2 2")), 2);
  std::mt19937_64 rng(11);
  for (int t = 0; t < 100; ++t) {
    const BraidWord a = random_word(4, 10, rng);
    const BraidWord b = random_word(4, 10, rng);
    // Both are homomorphisms.
    EXPECT_EQ(exponent_sum(a * b), exponent_sum(a) + exponent_sum(b));
    const auto pa = permutation(a);
    const auto pb = permutation(b);
    const auto pab = permutation(a * b);
    for (int k = 0; k < 4; ++k) EXPECT_EQ(pab[k], pa[pb[k] - 1]);
  }
}

TEST(BraidWordTest, EqualWordsShareInvariants) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    const BraidWord a = random_word(4, 12, rng);
    // A conjugate of the identity inserted in the middle.
    const BraidWord c = random_word(4, 4, rng);
    const BraidWord b = a * c * inverse(c);
    ASSERT_TRUE(equals(a, b));
    EXPECT_EQ(exponent_sum(a), exponent_sum(b));
    EXPECT_EQ(permutation(a), permutation(b));
  }
}

TEST(BraidWordTest, ImageCapRaisesResourceError) {
  const BraidWord big = power(W(3, "1 -2"), 60);
  EXPECT_THROW(artin_image(big, 1000), ResourceError);
}

}  // namespace
}  // namespace bmf

namespace bmf {
namespace {

TEST(NormalFormTest, KnownForms) {
  EXPECT_EQ(left_normal_form(W(3, "1 2 1")).inf, 1);
  EXPECT_TRUE(left_normal_form(W(3, "1 2 1")).factors.empty());
  EXPECT_EQ(left_normal_form(delta_sq(4)).inf, 2);
  EXPECT_EQ(left_normal_form(W(3, "-1")).inf, -1);
  EXPECT_EQ(left_normal_form(W(3, "1 -1 2 -2")), left_normal_form(W(3, "")));
  // X_1 X_2 is one simple factor, X_2 X_1 X_1 is two
  EXPECT_EQ(left_normal_form(W(3, "1 2")).factors.size(), 1u);
  EXPECT_EQ(left_normal_form(W(3, "2 1 1")).factors.size(), 2u);
}

// The free-group action is the oracle for the normal form.
TEST(NormalFormTest, AgreesWithFreeGroupAction) {
  std::mt19937_64 rng(5);
  for (int p = 2; p <= 5; ++p) {
    for (int t = 0; t < 150; ++t) {
      const BraidWord a = random_word(p, 1 + static_cast<int>(rng() % 14), rng);
      const BraidWord w = to_word(left_normal_form(a));
      EXPECT_EQ(artin_image(w), artin_image(a)) << a.to_string();
      // a mostly-equal pair: a with one braid relation applied or broken
      BraidWord b = a * W(p, "1 -1");
      if (rng() % 2) b = b * BraidWord::generator(p, 1 + static_cast<int>(rng() % (p - 1)));
      EXPECT_EQ(equals(a, b), artin_image(a) == artin_image(b)) << a.to_string() << " / " << b.to_string();
    }
  }
}

TEST(NormalFormTest, ConjugatesOfRelationsAreTrivial) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 200; ++t) {
    const int p = 3 + static_cast<int>(rng() % 3);
    const BraidWord z = random_word(p, 12, rng);
    const BraidWord rel = W(p, "1 2 1 -2 -1 -2");
    EXPECT_TRUE(is_identity(inverse(z) * rel * z));
    EXPECT_FALSE(is_identity(inverse(z) * W(p, "1 2") * z));
  }
}

}  // namespace
}  // namespace bmf
