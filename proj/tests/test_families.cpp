#include <gtest/gtest.h>

#include <map>
#include <set>

#include "crosslab/families.hpp"
#include "crosslab/intersection.hpp"
#include "crosslab/suites.hpp"

using namespace crosslab;

TEST(PantsArcFamily, SizeMatchesCensus) {
  for (int L = 1; L <= 12; ++L) {
    Family f = pants_arc_family(L);
    EXPECT_EQ(f.size(), 3u << (L - 1));
    EXPECT_EQ(f.origin, Construction::PantsArcs);
    EXPECT_EQ(f.blocks.size(), 1u);
  }
  EXPECT_THROW(pants_arc_family(0), std::invalid_argument);
}

TEST(PantsArcFamily, LengthThreeCrossingUnderEnvelope) {
  // 12 arcs; envelope (12*13/2) (log2 8)^2 = 702.
  Family f = pants_arc_family(3);
  EXPECT_EQ(f.size(), 12u);
  EXPECT_EQ(family_crossing(f), 93u);
  EXPECT_LE(family_crossing(f), 702u);
}

TEST(CuffAnchored, CountsAndEndpoints) {
  for (int L = 3; L <= 12; ++L)
    for (int cuff = 1; cuff <= 3; ++cuff) {
      Family f = cuff_anchored_family(L, cuff);
      ASSERT_EQ(f.size(), cuff_anchored_size(L)) << "L=" << L << " cuff=" << cuff;
      for (const auto& a : f.blocks[0].arcs) {
        EXPECT_EQ(a.start().cuff, cuff);
        EXPECT_EQ(a.end().cuff, cuff);
        EXPECT_TRUE(a.length() == static_cast<std::size_t>(L) || a.length() + 1 == static_cast<std::size_t>(L));
      }
    }
  EXPECT_THROW(cuff_anchored_family(2, 1), std::invalid_argument);
  EXPECT_THROW(cuff_anchored_family(4, 4), std::invalid_argument);
}

TEST(CuffAnchored, GoldenCrossingsAreCuffSymmetric) {
  const std::vector<std::uint64_t> golden{0, 2, 18, 119, 689, 3701};
  for (int L = 3; L <= 8; ++L)
    for (int cuff = 1; cuff <= 3; ++cuff)
      EXPECT_EQ(family_crossing(cuff_anchored_family(L, cuff)), golden[L - 3u]) << "L=" << L << " cuff=" << cuff;
}

TEST(PantsCurveFamily, SizesMatchCumulativeCensus) {
  const std::map<int, std::size_t> golden{{2, 3}, {4, 6}, {6, 16}, {8, 46}, {10, 148}, {12, 483}, {14, 1653}};
  for (auto [L, m] : golden) EXPECT_EQ(pants_curve_family(L).size(), m) << "L=" << L;
}

TEST(CurveCensusTable, WithinFactorTwoOfReference) {
  auto rows = curve_census_table(12);
  ASSERT_EQ(rows.size(), 6u);
  EXPECT_EQ(rows[1].exact, 3u);
  for (const auto& r : rows) {
    EXPECT_DOUBLE_EQ(r.reference, 3.0 * std::ldexp(1.0, r.length - 2) / r.length);
    if (r.length >= 6) {
      EXPECT_GE(static_cast<double>(r.exact), r.reference / 2);
      EXPECT_LE(static_cast<double>(r.exact), r.reference * 2);
    }
  }
}

TEST(ArcToCurve, GoldenImages) {
  auto img = [](HalfEdge s, Word w, HalfEdge e) { return word_to_string(arc_to_curve(make_arc(s, w, e)).word()); };
  EXPECT_EQ(img({Side::Front, 1}, {}, {Side::Front, 2}), "1,3");
  EXPECT_EQ(img({Side::Front, 1}, {}, {Side::Front, 3}), "2,3");
  EXPECT_EQ(img({Side::Front, 2}, {}, {Side::Front, 3}), "1,2");
  EXPECT_EQ(img({Side::Front, 1}, {3}, {Side::Back, 1}), "1,2,3,2,1,3");
  EXPECT_EQ(img({Side::Front, 2}, {1}, {Side::Back, 2}), "1,2,3,1,3,2");
  EXPECT_EQ(img({Side::Front, 3}, {2}, {Side::Back, 3}), "1,2,1,3,2,3");
}

TEST(ArcToCurve, MirrorArcsCanShareAnImage) {
  // Distinct arcs (they intersect five times) with the same doubled curve.
  ArcClass a = make_arc({Side::Front, 1}, {3, 1, 2}, {Side::Back, 3});
  ArcClass b = make_arc({Side::Front, 3}, {2, 1, 3}, {Side::Back, 1});
  ASSERT_NE(a, b);
  EXPECT_EQ(arc_intersection(a, b), 5u);
  EXPECT_EQ(arc_to_curve(a), arc_to_curve(b));
}

TEST(ArcToCurve, ImageCountOnCensus) {
  auto arcs = enumerate_arcs(6);
  std::set<CurveClass> images;
  for (const auto& a : arcs) images.insert(arc_to_curve(a));
  EXPECT_EQ(arcs.size(), 96u);
  EXPECT_EQ(images.size(), 90u);
}

TEST(Assembly, SphereArcs) {
  for (int n = 3; n <= 6; ++n) {
    Family f = assemble({{0, n}, FamilyKind::Arcs, 5, {}});
    EXPECT_EQ(f.blocks.size(), static_cast<std::size_t>(n - 2));
    EXPECT_EQ(f.size(), static_cast<std::size_t>((n - 2) * 4));
    EXPECT_EQ(f.origin, Construction::SphereArcs);
    EXPECT_EQ(f.blocks[0].arcs.front().start().cuff, 1);
    if (n > 3) {
      EXPECT_EQ(f.blocks[1].arcs.front().start().cuff, 2);
    }
  }
  Family f5 = assemble({{0, 5}, FamilyKind::Arcs, 5, {}});
  EXPECT_EQ(f5.size(), 12u);
  EXPECT_EQ(family_crossing(f5), 54u);
}

TEST(Assembly, CustomAnchors) {
  Family f = assemble({{0, 4}, FamilyKind::Arcs, 4, {3, 3}});
  for (const auto& b : f.blocks)
    for (const auto& a : b.arcs) EXPECT_EQ(a.start().cuff, 3);
  EXPECT_THROW(assemble({{0, 4}, FamilyKind::Arcs, 4, {3}}), std::invalid_argument);
}

TEST(Assembly, SurfaceCurves) {
  Family g2 = assemble({{2, 0}, FamilyKind::Curves, 4, {}});
  EXPECT_EQ(g2.blocks.size(), 2u);
  EXPECT_EQ(g2.size(), 12u);
  EXPECT_EQ(family_crossing(g2), 18u);
  Family g1n3 = assemble({{1, 3}, FamilyKind::Curves, 4, {}});
  EXPECT_EQ(g1n3.blocks.size(), 3u);
  EXPECT_EQ(family_crossing(g1n3), 27u);
}

TEST(Assembly, RejectsBadSurfacesAndCaps) {
  EXPECT_THROW(assemble({{1, 0}, FamilyKind::Curves, 4, {}}), InvalidSurface);
  EXPECT_THROW(assemble({{0, 2}, FamilyKind::Curves, 4, {}}), InvalidSurface);
  EXPECT_THROW(assemble({{1, 3}, FamilyKind::Arcs, 4, {}}), InvalidSurface);
  EXPECT_THROW(assemble({{0, 2}, FamilyKind::Arcs, 4, {}}), InvalidSurface);
  EXPECT_THROW(assemble({{0, 6}, FamilyKind::Arcs, 6, {}}, 20), CapExceeded);
}

TEST(ArcToCurve, DoublingExcessBoundedBySharedEnds) {
  // i(g_a, g_b) <= 4 i(a, b) + 2 s, s = number of (end of a, end of b) pairs on a common cuff.
  auto arcs = enumerate_arcs(5);
  std::vector<Lift> al(arcs.begin(), arcs.end());
  std::vector<Lift> cl;
  for (const auto& a : arcs) cl.emplace_back(arc_to_curve(a));
  std::uint64_t over_four = 0;
  for (std::size_t i = 0; i < arcs.size(); ++i)
    for (std::size_t j = i; j < arcs.size(); ++j) {
      std::uint64_t lhs = intersection_number(cl[i], cl[j]);
      std::uint64_t ia = arc_intersection(al[i], al[j]);
      EXPECT_LE(lhs, 4 * ia + 2 * static_cast<std::uint64_t>(shared_end_cuffs(arcs[i], arcs[j])));
      over_four += lhs > 4 * ia + 4;
    }
  EXPECT_GT(over_four, 0u);
}

TEST(ArcToCurve, SharedEndsNeededForViolation) {
  // Counterexample to the flat +4 constant: both arcs run from cuff 1 to cuff 1.
  ArcClass a = make_arc({Side::Front, 1}, {3}, {Side::Back, 1});
  ArcClass b = make_arc({Side::Front, 1}, {3, 1, 3}, {Side::Back, 1});
  EXPECT_EQ(arc_intersection(a, b), 0u);
  EXPECT_EQ(shared_end_cuffs(a, b), 4);
  EXPECT_EQ(intersection_number(arc_to_curve(a), arc_to_curve(b)), 8u);
}
