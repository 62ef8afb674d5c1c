#include <gtest/gtest.h>

#include "springer/parabolic.hpp"

using namespace springer;

namespace {

ParabolicGL parabolic(std::vector<std::size_t> blocks, unsigned p) { return {Composition(std::move(blocks)), Field(p)}; }

}  // namespace

TEST(Composition, ValidationAndEnumeration) {
  EXPECT_THROW(Composition({}), std::invalid_argument);
  EXPECT_THROW(Composition({2, 0}), std::invalid_argument);
  EXPECT_EQ(Composition({2, 1}).to_string(), "2,1");
  for (std::size_t n = 1; n <= 8; ++n) EXPECT_EQ(compositions(n).size(), std::size_t{1} << (n - 1));
}

TEST(Nilradical, BasisExamples) {
  EXPECT_EQ(nilradical_basis(parabolic({1, 1}, 3)).size(), 1u);
  EXPECT_EQ(nilradical_basis(parabolic({2, 1}, 3)).size(), 2u);
  EXPECT_EQ(nilradical_basis(parabolic({1, 1, 1}, 3)).size(), 3u);
  EXPECT_TRUE(nilradical_basis(parabolic({3}, 3)).empty());
  EXPECT_TRUE(in_nilradical(parabolic({2, 1}, 3), FpMatrix::unit(Field(3), 3, 0, 2)));
  EXPECT_FALSE(in_nilradical(parabolic({2, 1}, 3), FpMatrix::unit(Field(3), 3, 0, 1)));
}

TEST(Nilradical, ClassExamples) {
  EXPECT_EQ(nilpotence_class(parabolic({3}, 2)), 0u);
  EXPECT_EQ(nilpotence_class(parabolic({1, 1}, 2)), 1u);
  EXPECT_EQ(nilpotence_class(parabolic({1, 1, 1}, 2)), 2u);
  EXPECT_EQ(nilpotence_class(parabolic({2, 2}, 2)), 1u);
  EXPECT_TRUE(is_restricted(parabolic({1, 1, 1}, 3)));
  EXPECT_FALSE(is_restricted(parabolic({1, 1, 1}, 2)));
  EXPECT_FALSE(is_restricted(parabolic({1, 1, 1, 1}, 3)));
}

TEST(Nilradical, ClassIsBlockCountMinusOne) {
  for (unsigned p : {2u, 3u})
    for (std::size_t n = 1; n <= 6; ++n)
      for (const auto& c : compositions(n)) EXPECT_EQ(nilpotence_class({c, Field(p)}), c.block_count() - 1) << c.to_string();
}

TEST(EpsP, Examples) {
  Field f3(3);
  auto borel3 = parabolic({1, 1, 1}, 3);
  FpMatrix x = FpMatrix::from_ints(f3, {{0, 1, 0}, {0, 0, 1}, {0, 0, 0}});
  EXPECT_EQ(eps_P(borel3, x), FpMatrix::from_ints(f3, {{1, 1, 2}, {0, 1, 1}, {0, 0, 1}}));
  EXPECT_EQ(eps_P(parabolic({3}, 3), FpMatrix(f3, 3)), FpMatrix::identity(f3, 3));
  EXPECT_THROW(eps_P(parabolic({1, 1, 1, 1}, 3), FpMatrix(f3, 4)), std::domain_error);
  EXPECT_THROW(eps_P(parabolic({2, 1}, 3), x), std::domain_error);
}

TEST(EpsP, EquivarianceAndBijectivityOnSmallParabolics) {
  for (unsigned p : {3u, 5u}) {
    Field f(p);
    for (std::size_t n = 2; n <= 5; ++n)
      for (const auto& c : compositions(n)) {
        ParabolicGL par{c, f};
        if (!is_restricted(par)) continue;
        Rng rng(case_key(3, c.to_string(), p));
        for (int t = 0; t < 10; ++t) {
          FpMatrix x = random_nilradical_element(par, rng);
          FpMatrix g = random_p_element(par, rng);
          FpMatrix gi = *g.inverse();
          EXPECT_TRUE(in_nilradical(par, g * x * gi));
          EXPECT_EQ(eps_P(par, g * x * gi), g * eps_P(par, x) * gi);
          EXPECT_EQ(truncated_log(eps_P(par, x)), x);
          EXPECT_TRUE(eps_P(par, x).det().is_one());
        }
      }
  }
}

TEST(RandomPElement, InvertibleBlockUpperTriangularAndDeterministic) {
  auto par = parabolic({2, 1, 2}, 3);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    FpMatrix g = random_p_element(par, seed);
    EXPECT_FALSE(g.det().is_zero());
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 5; ++j)
        if (par.comp.block_of(i) > par.comp.block_of(j)) {
          EXPECT_TRUE(g(i, j).is_zero());
        }
    EXPECT_EQ(g, random_p_element(par, seed));
  }
}
