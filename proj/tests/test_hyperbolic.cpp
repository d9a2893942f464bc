#include <gtest/gtest.h>

#include <cmath>

#include "crosslab/hyperbolic.hpp"
#include "crosslab/intersection.hpp"

using namespace crosslab;

namespace {

CurveClass C(std::initializer_list<Label> w) { return make_curve(w); }

Word rotated(const Word& w, std::size_t k) {
  Word out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out[i] = w[(i + k) % w.size()];
  return out;
}

}  // namespace

TEST(Representation, CuffLengthsAreRealized) {
  for (auto [l1, l2, l3] : {std::array{2.0, 2.0, 2.0}, std::array{1.0, 2.0, 3.0}, std::array{0.3, 5.0, 0.7}}) {
    PantsRep rep = pants_representation(l1, l2, l3);
    EXPECT_NEAR(translation_length(rep.A()), l1, 1e-9);
    EXPECT_NEAR(translation_length(rep.B()), l2, 1e-9);
    EXPECT_NEAR(translation_length(rep.A() * rep.B()), l3, 1e-9);
    EXPECT_NEAR(rep.A().det(), 1.0, 1e-12);
    EXPECT_NEAR(rep.B().det(), 1.0, 1e-12);
  }
}

TEST(Representation, RejectsNonPositiveLengths) {
  EXPECT_THROW(pants_representation(0, 1, 1), std::invalid_argument);
  EXPECT_THROW(pants_representation(1, -1, 1), std::invalid_argument);
}

TEST(Representation, CuffWordsHaveCuffLengths) {
  PantsRep rep = pants_representation(1, 2, 3);
  EXPECT_NEAR(word_length(C({1, 2}), rep), 1.0, 1e-9);
  EXPECT_NEAR(word_length(C({2, 3}), rep), 2.0, 1e-9);
  EXPECT_NEAR(word_length(C({1, 3}), rep), 3.0, 1e-9);
}

TEST(Lengths, GoldenValues) {
  EXPECT_NEAR(word_length(C({1, 2, 1, 3})), 5.0563710813, 1e-9);
  EXPECT_NEAR(word_length(C({1, 2, 1, 2, 1, 3})), 7.1561252796, 1e-9);
  EXPECT_NEAR(word_length(C({1, 2, 1, 3, 2, 3})), 7.6755059805, 1e-9);
  EXPECT_NEAR(word_length(C({1, 2, 3, 1, 2, 3})), 8.0488850037, 1e-9);
  PantsRep rep = pants_representation(1, 2, 3);
  EXPECT_NEAR(word_length(C({1, 2, 1, 3}), rep), 5.2235646397, 1e-9);
  EXPECT_NEAR(word_length(C({1, 2, 3, 2}), rep), 4.8983039357, 1e-9);
  EXPECT_NEAR(word_length(C({1, 3, 2, 3}), rep), 5.6326438188, 1e-9);
}

TEST(Lengths, ClassFunctionProperty) {
  PantsRep rep = pants_representation(1.3, 2.1, 0.8);
  for (const auto& c : enumerate_curves(10)) {
    double l = word_length(c, rep);
    EXPECT_GT(l, 0);
    Word rev(c.word().rbegin(), c.word().rend());
    for (std::size_t k = 0; k < c.length(); k += 2) {
      EXPECT_NEAR(word_length(rotated(c.word(), k), rep), l, 1e-7 * l);
      EXPECT_NEAR(word_length(rotated(rev, k), rep), l, 1e-7 * l);
    }
  }
}

TEST(Lengths, NonHyperbolicImageIsReported) { EXPECT_THROW(translation_length(Mat2{}), NonHyperbolicImage); }

TEST(Oracle, GoldenPairsAgreeWithCombinatorics) {
  const PantsRep& rep = default_rep();
  EXPECT_EQ(oracle_intersection_adaptive(C({1, 2, 1, 3}), C({1, 2}), rep, 12, 24), 0u);
  EXPECT_EQ(oracle_intersection_adaptive(C({1, 2, 1, 3}), C({1, 2, 1, 3}), rep, 12, 24), 2u);
  EXPECT_EQ(oracle_intersection_adaptive(C({1, 2, 3, 1, 2, 3}), C({1, 2, 1, 3}), rep, 12, 24), 4u);
}

TEST(Oracle, AgreesOnAllPairsUpToLengthFour) {
  const PantsRep& rep = default_rep();
  auto cs = enumerate_curves(4);
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (std::size_t j = i; j < cs.size(); ++j) {
      int R = static_cast<int>(cs[i].length() + cs[j].length());
      EXPECT_EQ(oracle_intersection_adaptive(cs[i], cs[j], rep, R, 24), intersection_number(cs[i], cs[j]));
    }
}

TEST(Oracle, SymmetricOnceConverged) {
  const PantsRep& rep = default_rep();
  auto cs = enumerate_curves(6);
  for (std::size_t i = 3; i < cs.size(); i += 3)
    for (std::size_t j = 0; j < i; j += 4)
      EXPECT_EQ(oracle_intersection_adaptive(cs[i], cs[j], rep, 12, 24),
                oracle_intersection_adaptive(cs[j], cs[i], rep, 12, 24));
}

TEST(Oracle, IndependentOfCuffLengths) {
  PantsRep rep = pants_representation(1, 2, 3);
  EXPECT_EQ(oracle_intersection_adaptive(C({1, 2, 3, 1, 2, 3}), C({1, 2, 1, 3}), rep, 12, 24), 4u);
  EXPECT_EQ(oracle_intersection_adaptive(C({1, 2, 1, 3}), C({1, 3, 2, 3}), rep, 12, 24), 2u);
}

TEST(Oracle, TooSmallRadiusDoesNotConverge) {
  EXPECT_THROW(oracle_intersection(C({1, 2, 3, 1, 2, 3}), C({1, 2, 1, 3}), default_rep(), 2), NotConverged);
}

TEST(ArcOracle, AgreesOnShortArcs) {
  const PantsRep& rep = default_rep();
  auto arcs = enumerate_arcs(3);
  for (std::size_t i = 0; i < arcs.size(); ++i)
    for (std::size_t j = i; j < arcs.size(); ++j) {
      OracleResult o = oracle_arc_intersection_raw(arcs[i], arcs[j], rep, 14);
      ASSERT_TRUE(o.converged);
      EXPECT_EQ(o.count, arc_intersection(arcs[i], arcs[j])) << to_string(arcs[i]) << " " << to_string(arcs[j]);
    }
}

TEST(Spectrum, SortedAndCuffsFirst) {
  auto spec = length_spectrum(default_rep(), 8.0);
  ASSERT_GE(spec.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(spec[i].length, 2.0, 1e-9);
  for (std::size_t i = 1; i < spec.size(); ++i) EXPECT_LE(spec[i - 1].length, spec[i].length);
  for (const auto& e : spec) EXPECT_LE(e.length, 8.0);
}

TEST(GeodesicCensus, GoldenCountsAndBound) {
  const std::vector<std::uint64_t> counts{3, 3, 6, 15};
  for (int i = 0; i < 4; ++i) {
    double L = 2.0 * (i + 1);
    CensusCheck c = geodesic_census_check(default_rep(), L);
    EXPECT_EQ(c.count, counts[static_cast<std::size_t>(i)]);
    EXPECT_DOUBLE_EQ(c.bound, std::exp(L + 6));
    EXPECT_TRUE(c.ok);
  }
  EXPECT_THROW(geodesic_census_check(default_rep(), 9.0), CapExceeded);
}

TEST(AverageLength, HoldsForShortestClasses) {
  auto shortest = shortest_classes(default_rep(), 40);
  ASSERT_EQ(shortest.size(), 40u);
  for (double lambda : {0.5, 1.0, 2.0})
    for (std::size_t m = 1; m <= shortest.size(); ++m) EXPECT_TRUE(average_length_check(shortest, m, lambda).ok);
  EXPECT_THROW(average_length_check(shortest, 41, 1.0), std::invalid_argument);
}

TEST(AverageLength, BoundFormula) {
  // lambda/(1+lambda) m (log m - log((1+lambda) c) - 6), c = 1 on the pants.
  double m = 5000, lam = 1.0;
  EXPECT_NEAR(average_length_bound(5000, lam), 0.5 * m * (std::log(m) - std::log(2.0) - 6), 1e-9);
  EXPECT_LT(average_length_bound(10, 1.0), 0);
}
