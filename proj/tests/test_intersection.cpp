#include <gtest/gtest.h>

#include <cmath>

#include "crosslab/families.hpp"
#include "crosslab/intersection.hpp"

using namespace crosslab;

namespace {

CurveClass C(std::initializer_list<Label> w) { return make_curve(w); }

std::uint64_t ceil_len(std::size_t l) { return static_cast<std::uint64_t>(std::ceil(static_cast<double>(l))); }

}  // namespace

// Golden values below were produced by the hyperbolic axis-linking oracle at
// cuff lengths (2,2,2), converged, and frozen here.
TEST(CurveIntersection, OracleGoldenPairs) {
  EXPECT_EQ(intersection_number(C({1, 2, 1, 3}), C({1, 2})), 0u);
  EXPECT_EQ(intersection_number(C({1, 2, 1, 3}), C({1, 3, 2, 3})), 2u);
  EXPECT_EQ(intersection_number(C({1, 2, 1, 3}), C({1, 2, 3, 2})), 2u);
  EXPECT_EQ(intersection_number(C({1, 2, 3, 1, 2, 3}), C({1, 2, 1, 3})), 4u);
  EXPECT_EQ(intersection_number(C({1, 2, 3, 2, 1, 3}), C({1, 2, 1, 2, 1, 3})), 2u);
  EXPECT_EQ(intersection_number(C({1, 2, 3, 1, 3, 2}), C({2, 3})), 0u);
}

TEST(CurveIntersection, OracleGoldenSelfIntersections) {
  EXPECT_EQ(self_intersection(C({1, 2, 1, 3})), 1u);
  EXPECT_EQ(self_intersection(C({1, 2, 3, 2})), 1u);
  EXPECT_EQ(self_intersection(C({1, 3, 2, 3})), 1u);
  EXPECT_EQ(self_intersection(C({1, 2, 3, 1, 2, 3})), 3u);
  EXPECT_EQ(self_intersection(C({1, 2, 1, 2, 1, 3})), 2u);
  EXPECT_EQ(self_intersection(C({1, 2, 3, 2, 1, 3})), 2u);
}

TEST(CurveIntersection, CuffsAreSimpleAndDisjoint) {
  std::vector<CurveClass> cuffs{C({1, 2}), C({2, 3}), C({1, 3})};
  for (const auto& a : cuffs) {
    EXPECT_EQ(self_intersection(a), 0u);
    for (const auto& b : cuffs) EXPECT_EQ(intersection_number(a, b), 0u);
  }
}

TEST(CurveIntersection, SymmetricAndDiagonalIsTwiceSelf) {
  auto cs = enumerate_curves(8);
  auto mat = intersection_matrix(cs, 2);
  for (std::size_t i = 0; i < cs.size(); ++i) {
    EXPECT_EQ(mat[i][i], 2 * self_intersection(cs[i]));
    for (std::size_t j = 0; j < i; ++j) EXPECT_EQ(mat[i][j], mat[j][i]);
  }
}

TEST(CurveIntersection, QuadraticLemmaOnCensus) {
  auto cs = enumerate_curves(8);
  auto mat = intersection_matrix(cs, 2);
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (std::size_t j = 0; j < cs.size(); ++j)
      EXPECT_LE(mat[i][j], ceil_len(cs[i].length()) * ceil_len(cs[j].length()));
}

TEST(ArcIntersection, OracleGoldenPairs) {
  auto a = make_arc({Side::Front, 1}, Word{}, {Side::Front, 2});
  auto b = make_arc({Side::Front, 1}, {3, 2}, {Side::Front, 3});
  auto c = make_arc({Side::Back, 1}, {3, 2}, {Side::Back, 3});
  EXPECT_EQ(arc_intersection(a, a), 0u);
  EXPECT_EQ(arc_intersection(a, b), 1u);
  EXPECT_EQ(arc_intersection(c, c), 2u);
  EXPECT_EQ(arc_self_intersection(c), 1u);
  EXPECT_EQ(arc_intersection(make_arc({Side::Front, 1}, {3}, {Side::Back, 1}),
                             make_arc({Side::Front, 2}, {1}, {Side::Back, 2})),
            2u);
}

TEST(ArcIntersection, SymmetricAndQuadraticLemma) {
  auto arcs = enumerate_arcs(6);
  auto mat = intersection_matrix(arcs, 2);
  for (std::size_t i = 0; i < arcs.size(); ++i)
    for (std::size_t j = 0; j < arcs.size(); ++j) {
      EXPECT_EQ(mat[i][j], mat[j][i]);
      EXPECT_LE(mat[i][j], ceil_len(arcs[i].length()) * ceil_len(arcs[j].length()));
    }
}

TEST(FamilyCrossing, TrivialFamilies) {
  Family cuffs{kPants, FamilyKind::Curves, Construction::Custom, {{1, {}, {C({1, 2}), C({2, 3}), C({1, 3})}}}};
  EXPECT_EQ(family_crossing(cuffs), 0u);
  Family one{kPants, FamilyKind::Curves, Construction::Custom, {{1, {}, {C({1, 2, 1, 3})}}}};
  EXPECT_EQ(family_crossing(one), 1u);
}

TEST(FamilyCrossing, GoldenPantsFamilies) {
  const std::vector<std::uint64_t> arcs{0, 9, 93, 666, 4068, 22728, 119952, 608544};
  for (int L = 1; L <= 8; ++L) EXPECT_EQ(family_crossing(pants_arc_family(L), 2), arcs[L - 1u]) << "L=" << L;
  const std::vector<std::uint64_t> curves{0, 9, 246, 4194, 74823};
  for (int L = 2, i = 0; L <= 10; L += 2, ++i)
    EXPECT_EQ(family_crossing(pants_curve_family(L), 2), curves[static_cast<std::size_t>(i)]) << "L=" << L;
}

TEST(FamilyCrossing, SumOfPairsMatchesMatrix) {
  auto cs = enumerate_curves(6);
  auto mat = intersection_matrix(cs);
  std::uint64_t expect = 0;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    expect += mat[i][i] / 2;
    for (std::size_t j = i + 1; j < cs.size(); ++j) expect += mat[i][j];
  }
  EXPECT_EQ(family_crossing(pants_curve_family(6)), expect);
}

TEST(FamilyCrossing, AdditiveOverBlocks) {
  Family f = assemble({{2, 0}, FamilyKind::Curves, 6, {}});
  CrossingStats s = crossing_stats(f, 3);
  ASSERT_EQ(s.blocks.size(), 2u);
  EXPECT_EQ(s.crossing, s.blocks[0].crossing + s.blocks[1].crossing);
  EXPECT_EQ(s.crossing, 2 * family_crossing(pants_curve_family(6)));
}

TEST(FamilyCrossing, IndependentOfJobCount) {
  Family f = pants_curve_family(8);
  auto one = crossing_stats(f, 1);
  auto many = crossing_stats(f, 5);
  EXPECT_EQ(one.crossing, many.crossing);
  EXPECT_EQ(one.max_pair, many.max_pair);
}
