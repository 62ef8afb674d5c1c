#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "springer/groups.hpp"
#include "springer/sampling.hpp"

using namespace springer;

namespace {

// Leibniz expansion; independent of the elimination used by FpMatrix::det.
FieldScalar leibniz_det(const FpMatrix& m) {
  std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  FieldScalar total = FieldScalar::zero(m.field());
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    FieldScalar term = FieldScalar::one(m.field());
    for (std::size_t i = 0; i < n; ++i) term *= m(i, perm[i]);
    total = inversions % 2 ? total - term : total + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

FpMatrix random_matrix(const Field& f, std::size_t n, Rng& rng) {
  FpMatrix m(f, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.set(i, j, rng.scalar(f));
  return m;
}

// dim of the commutant of a nilpotent of type lambda: sum of squares of the dual partition.
std::size_t commutant_dimension_oracle(const JordanType& t) {
  std::size_t s = 0;
  for (auto c : t.transpose()) s += c * c;
  return s;
}

std::vector<JordanType> partitions(std::size_t n, std::size_t max_part) {
  if (n == 0) return {JordanType()};
  std::vector<JordanType> out;
  for (std::size_t first = std::min(n, max_part); first >= 1; --first)
    for (const auto& rest : partitions(n - first, first)) {
      std::vector<std::size_t> parts{first};
      parts.insert(parts.end(), rest.parts().begin(), rest.parts().end());
      out.emplace_back(parts);
    }
  return out;
}

const std::vector<GroupKind> kAllKinds{GroupKind::GL, GroupKind::SL, GroupKind::SO, GroupKind::Sp};

}  // namespace

TEST(Matrix, DeterminantAndInverseAgainstLeibniz) {
  Rng rng(11);
  for (auto [p, e] : {std::pair{2u, 1u}, {3u, 1u}, {5u, 1u}, {2u, 2u}, {3u, 2u}}) {
    Field f(p, e);
    for (std::size_t n = 1; n <= 4; ++n)
      for (int trial = 0; trial < 25; ++trial) {
        FpMatrix m = random_matrix(f, n, rng);
        EXPECT_EQ(m.det(), leibniz_det(m));
        auto inv = m.inverse();
        EXPECT_EQ(inv.has_value(), !m.det().is_zero());
        if (inv) {
          EXPECT_TRUE((m * *inv).is_identity());
          EXPECT_TRUE((*inv * m).is_identity());
        }
        EXPECT_EQ(m.rank() == n, !m.det().is_zero());
      }
  }
}

TEST(Matrix, RejectsMismatchedOperands) {
  EXPECT_THROW(FpMatrix(Field(3), 2) + FpMatrix(Field(3), 3), std::invalid_argument);
  EXPECT_THROW(FpMatrix(Field(3), 2) * FpMatrix(Field(5), 2), std::invalid_argument);
}

TEST(JordanNilpotent, Examples) {
  Field f(3);
  EXPECT_EQ(jordan_nilpotent(JordanType({2, 1}), f), FpMatrix::from_ints(f, {{0, 1, 0}, {0, 0, 0}, {0, 0, 0}}));
  EXPECT_EQ(jordan_nilpotent(JordanType({1}), f), FpMatrix(f, 1));
  EXPECT_THROW(JordanType(std::vector<std::size_t>{}), std::invalid_argument);
  EXPECT_THROW(JordanType({1, 2}), std::invalid_argument);
  EXPECT_THROW(JordanType({2, 0}), std::invalid_argument);
}

TEST(NilpotentOrder, Examples) {
  Field f2(2);
  EXPECT_EQ(nilpotent_order(jordan_nilpotent(JordanType({3}), f2)), 2u);
  EXPECT_EQ(nilpotent_order(jordan_nilpotent(JordanType({5}), f2)), 3u);
  EXPECT_EQ(nilpotent_order(FpMatrix(Field(5), 3)), 0u);
  EXPECT_EQ(nilpotent_order(jordan_nilpotent(JordanType({1, 1}), Field(3))), 0u);
  EXPECT_EQ(nilpotent_order(jordan_nilpotent(JordanType({4}), Field(3))), 2u);
  EXPECT_THROW(nilpotent_order(FpMatrix::identity(f2, 2)), std::domain_error);
}

TEST(JordanType, RecoveredFromRanksOfPowers) {
  for (unsigned p : {2u, 3u}) {
    Field f(p);
    Rng rng(p);
    for (std::size_t n = 1; n <= 6; ++n)
      for (const auto& t : partitions(n, n)) {
        FpMatrix c = random_group_element(GroupSpec::standard(GroupKind::GL, f, n), rng);
        FpMatrix x = c * jordan_nilpotent(t, f) * *c.inverse();
        EXPECT_EQ(jordan_type_of(x), t) << t.to_string();
        // rank(X^k) = sum_i max(lambda_i - k, 0)
        for (std::size_t k = 0; k <= n; ++k) {
          std::size_t expected = 0;
          for (auto b : t.parts()) expected += b > k ? b - k : 0;
          EXPECT_EQ(x.pow(k).rank(), expected);
        }
      }
  }
}

TEST(Membership, Examples) {
  Field f3(3);
  auto sp2 = GroupSpec::standard(GroupKind::Sp, f3, 2);
  EXPECT_TRUE(in_group(sp2, FpMatrix::from_ints(f3, {{1, 1}, {0, 1}})));
  EXPECT_FALSE(in_group(sp2, FpMatrix::from_ints(f3, {{1, 1}, {0, 2}})));
  EXPECT_TRUE(in_lie_algebra(sp2, FpMatrix::from_ints(f3, {{0, 1}, {0, 0}})));
  auto sl2 = GroupSpec::standard(GroupKind::SL, Field(2), 2);
  EXPECT_TRUE(in_lie_algebra(sl2, FpMatrix::identity(Field(2), 2)));
  EXPECT_FALSE(in_group(GroupSpec::standard(GroupKind::GL, f3, 2), FpMatrix(f3, 2)));
  auto so3 = GroupSpec::standard(GroupKind::SO, f3, 3);
  EXPECT_TRUE(in_group(so3, FpMatrix::identity(f3, 3)));
  EXPECT_FALSE(in_group(so3, -FpMatrix::identity(f3, 3)));
  EXPECT_THROW(in_group(so3, FpMatrix::identity(f3, 2)), std::invalid_argument);
}

TEST(GroupSpec, Validation) {
  Field f3(3);
  EXPECT_THROW(GroupSpec(GroupKind::SO, f3, 3, std::nullopt), std::invalid_argument);
  EXPECT_THROW(GroupSpec::standard(GroupKind::Sp, Field(2), 2), std::invalid_argument);
  EXPECT_THROW(GroupSpec::standard(GroupKind::SO, Field(2), 3), std::invalid_argument);
  EXPECT_THROW(GroupSpec::standard(GroupKind::Sp, f3, 3), std::invalid_argument);
  EXPECT_THROW(GroupSpec(GroupKind::Sp, f3, 2, FpMatrix::identity(f3, 2)), std::invalid_argument);
  EXPECT_THROW(GroupSpec(GroupKind::SO, f3, 2, FpMatrix(f3, 2)), std::invalid_argument);
  EXPECT_THROW(GroupSpec(GroupKind::GL, f3, 2, FpMatrix::identity(f3, 2)), std::invalid_argument);
  EXPECT_THROW(parse_group_kind("SU"), std::invalid_argument);
  // a non-default form is accepted, but the samplers refuse it
  GroupSpec so2(GroupKind::SO, f3, 2, FpMatrix::identity(f3, 2));
  EXPECT_FALSE(so2.uses_default_form());
  Rng rng(1);
  EXPECT_THROW(random_group_element(so2, rng), std::invalid_argument);
  EXPECT_EQ(GroupSpec::standard(GroupKind::Sp, f3, 6).name(), "Sp_6(F_3)");
}

TEST(DefaultForms, SymmetryAndInvertibility) {
  for (unsigned p : {3u, 5u, 7u})
    for (std::size_t n = 2; n <= 8; ++n) {
      Field f(p);
      FpMatrix s = default_form(GroupKind::SO, f, n);
      EXPECT_EQ(s.transpose(), s);
      EXPECT_FALSE(s.det().is_zero());
      if (n % 2 == 0) {
        FpMatrix a = default_form(GroupKind::Sp, f, n);
        EXPECT_EQ(a.transpose(), -a);
        EXPECT_FALSE(a.det().is_zero());
      }
    }
}

TEST(Centralizer, Examples) {
  Field f3(3);
  EXPECT_EQ(centralizer_space(FpMatrix(f3, 3)).dimension, 9u);
  for (std::size_t n = 1; n <= 5; ++n)
    EXPECT_EQ(centralizer_space(jordan_nilpotent(JordanType({n}), f3)).dimension, n);
  EXPECT_EQ(centralizer_space(jordan_nilpotent(JordanType({2, 1}), f3)).dimension, 5u);
}

TEST(Centralizer, DimensionMatchesPartitionFormula) {
  for (unsigned p : {2u, 5u}) {
    Field f(p);
    for (std::size_t n = 1; n <= 6; ++n)
      for (const auto& t : partitions(n, n)) {
        FpMatrix x = jordan_nilpotent(t, f);
        auto c = centralizer_space(x);
        EXPECT_EQ(c.dimension, commutant_dimension_oracle(t)) << t.to_string();
        for (const auto& z : c.basis) EXPECT_TRUE(commutator(z, x).is_zero());
      }
  }
}

TEST(Sampling, GroupElementsAreClosedUnderProductAndInverse) {
  for (unsigned p : {3u, 5u})
    for (auto kind : kAllKinds)
      for (std::size_t n = 2; n <= 6; ++n) {
        if (kind == GroupKind::Sp && n % 2) continue;
        auto g = GroupSpec::standard(kind, Field(p), n);
        Rng rng(case_key(7, g.name(), 0));
        for (int t = 0; t < 5; ++t) {
          FpMatrix a = random_group_element(g, rng);
          FpMatrix b = random_group_element(g, rng);
          EXPECT_TRUE(in_group(g, a * b));
          EXPECT_TRUE(in_group(g, *a.inverse()));
        }
      }
}

TEST(Sampling, NilpotentsLieInLieAlgebraAndAreConjugationStable) {
  for (unsigned p : {3u, 5u})
    for (auto kind : kAllKinds)
      for (std::size_t n = 2; n <= 6; ++n) {
        if (kind == GroupKind::Sp && n % 2) continue;
        auto g = GroupSpec::standard(kind, Field(p), n);
        Rng rng(case_key(9, g.name(), 0));
        for (int t = 0; t < 5; ++t) {
          FpMatrix x = random_nilpotent(g, std::nullopt, rng);
          EXPECT_TRUE(in_lie_algebra(g, x));
          EXPECT_TRUE(nilpotency_degree(x).has_value());
          FpMatrix c = random_group_element(g, rng);
          EXPECT_TRUE(in_lie_algebra(g, c * x * *c.inverse()));
        }
      }
}

TEST(Sampling, RequestedJordanTypeAndDeterminism) {
  Field f3(3);
  auto gl3 = GroupSpec::standard(GroupKind::GL, f3, 3);
  FpMatrix x = random_nilpotent(gl3, JordanType({3}), 5);
  EXPECT_EQ(jordan_type_of(x), JordanType({3}));
  EXPECT_EQ(x, random_nilpotent(gl3, JordanType({3}), 5));
  auto sp2 = GroupSpec::standard(GroupKind::Sp, f3, 2);
  FpMatrix y = random_nilpotent(sp2, std::nullopt, 3);
  EXPECT_TRUE(in_lie_algebra(sp2, y));
  EXPECT_TRUE((y * y).is_zero());
  auto sp6 = GroupSpec::standard(GroupKind::Sp, f3, 6);
  EXPECT_EQ(jordan_type_of(random_nilpotent(sp6, JordanType({6}), 2)), JordanType({6}));
  auto so5 = GroupSpec::standard(GroupKind::SO, Field(5), 5);
  EXPECT_EQ(jordan_type_of(random_nilpotent(so5, JordanType({5}), 2)), JordanType({5}));
}

TEST(Sampling, InadmissibleJordanTypesAreDomainErrors) {
  Field f3(3);
  EXPECT_THROW(random_nilpotent(GroupSpec::standard(GroupKind::Sp, f3, 4), JordanType({3, 1}), 1), std::domain_error);
  EXPECT_THROW(random_nilpotent(GroupSpec::standard(GroupKind::SO, f3, 4), JordanType({4}), 1), std::domain_error);
  EXPECT_THROW(random_nilpotent(GroupSpec::standard(GroupKind::GL, f3, 4), JordanType({2}), 1), std::domain_error);
}

TEST(Rng, DeterministicStreams) {
  Rng a(42, "stream", 3), b(42, "stream", 3), c(42, "stream", 4);
  auto x = a.next();
  EXPECT_EQ(x, b.next());
  EXPECT_NE(x, c.next());
  Rng r(1);
  for (int i = 0; i < 1000; ++i) EXPECT_LT(r.below(7), 7u);
}
