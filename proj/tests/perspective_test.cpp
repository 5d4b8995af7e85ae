#include <gtest/gtest.h>

#include "support.hpp"
#include "tutte3/bijection.hpp"
#include "tutte3/perspective.hpp"

namespace tutte3 {
namespace {

using testing::fixture_m;
using testing::fixture_mp;
using testing::fixture_perspective;

TEST(ValidatePerspective, Examples) {
  EXPECT_TRUE(validate_perspective(fixture_m(), fixture_mp()));
  EXPECT_TRUE(validate_perspective(fixture_m(), fixture_m()));
  const GroundSet e2(2);
  const Matroid u12 = Matroid::from_bases(e2, {{1}, {2}});
  EXPECT_FALSE(validate_perspective(u12, Matroid::free(e2)));
}

TEST(ValidatePerspective, MismatchedGroundSetsAreADomainError) {
  EXPECT_THROW(validate_perspective(fixture_m(), Matroid::free(GroundSet(4))), DomainError);
  const GroundSet reversed(5, {5, 4, 3, 2, 1});
  EXPECT_THROW(validate_perspective(fixture_m(), fixture_mp(reversed)), DomainError);
}

TEST(Perspective, ConstructionNamesTheOffendingCircuit) {
  const GroundSet e5(5);
  try {
    Perspective(fixture_m(), Matroid::from_circuits(e5, {{1}}));
    FAIL() << "expected a PerspectiveViolation";
  } catch (const PerspectiveViolation& v) {
    ASSERT_TRUE(v.circuit().has_value());
    EXPECT_EQ(*v.circuit(), (Subset{1, 2, 3}));
  }
  // The reverse pair is not a perspective either: r(M') > r(M).
  EXPECT_THROW(Perspective(fixture_mp(), fixture_m()), PerspectiveViolation);
}

TEST(DualPerspective, Examples) {
  const Perspective p = fixture_perspective();
  const Perspective d = dual_perspective(p);
  EXPECT_EQ(d.m(), dual(fixture_mp()));
  EXPECT_EQ(d.mp(), dual(fixture_m()));
  const Perspective diag = Perspective::diagonal(fixture_m());
  EXPECT_EQ(dual_perspective(diag), Perspective::diagonal(dual(fixture_m())));
  EXPECT_EQ(dual_perspective(dual_perspective(p)), p);
}

TEST(RankDefect, Examples) {
  const Perspective p = fixture_perspective();
  EXPECT_EQ(rank_defect(p, {2, 4}), 1);
  EXPECT_EQ(rank_defect(p, {1, 2, 4}), 0);
  EXPECT_EQ(rank_defect(p, Subset::first(5)), 0);
}

class CorpusPerspectives : public ::testing::Test {
 protected:
  static const testing::Corpus& corpus() {
    static const testing::Corpus c = testing::build_corpus(31);
    return c;
  }
};

TEST_F(CorpusPerspectives, RankDifferenceIsMonotone) {
  for (const auto& entry : corpus().perspectives) {
    const std::string& name = entry.name;
    const auto& p = entry.perspective;
    for_each_subset(p.ground(), [&](Subset x) {
      const int dx = p.m().rank(x) - p.mp().rank(x);
      EXPECT_GE(rank_defect(p, x), 0);
      for (Element e : (p.ground() - x).elements()) {
        const Subset y = x.with(e);
        EXPECT_LE(dx, p.m().rank(y) - p.mp().rank(y)) << name;
      }
    });
  }
}

TEST_F(CorpusPerspectives, DualPerspectiveValidates) {
  for (const auto& entry : corpus().perspectives) {
    const std::string& name = entry.name;
    const auto& p = entry.perspective;
    EXPECT_NO_THROW(dual_perspective(p)) << name;
  }
}

TEST_F(CorpusPerspectives, RankDifferencesAgreeAcrossTheBijection) {
  for (const auto& entry : corpus().perspectives) {
    const std::string& name = entry.name;
    const auto& p = entry.perspective;
    for (const BijectionRow& row : bijection_table(p)) {
      EXPECT_EQ(p.m().rank(row.basis) - p.mp().rank(row.basis),
                p.m().rank(row.image) - p.mp().rank(row.image))
          << name;
    }
  }
}

}  // namespace
}  // namespace tutte3
