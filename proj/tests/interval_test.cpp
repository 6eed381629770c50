#include <gtest/gtest.h>

#include <random>
#include <set>

#include "itc/corpus.hpp"
#include "itc/errors.hpp"
#include "itc/interval.hpp"
#include "test_util.hpp"

namespace itc {
namespace {

TEST(SignVectors, CanonicalEnumeration) {
  const auto zs = EnumerateSignVectors(3, true);
  ASSERT_EQ(zs.size(), 4u);
  EXPECT_EQ(zs[0], SignVector({1, 1, 1}));
  EXPECT_EQ(zs[1], SignVector({1, 1, -1}));
  EXPECT_EQ(zs[2], SignVector({1, -1, 1}));
  EXPECT_EQ(zs[3], SignVector({1, -1, -1}));
  EXPECT_EQ(EnumerateSignVectors(1, true).size(), 1u);
  EXPECT_EQ(EnumerateSignVectors(2, false).size(), 4u);
  for (int n = 1; n <= 6; ++n) {
    const auto canonical = EnumerateSignVectors(n, true);
    EXPECT_EQ(canonical.size(), std::size_t{1} << (n - 1));
    for (const auto& z : canonical) EXPECT_TRUE(z.IsCanonical());
  }
}

TEST(SignVectors, Validation) {
  EXPECT_THROW(SignVector({1, 0}), InputError);
  EXPECT_EQ(SignVector({1, -1}).ToString(), "(1,-1)");
  const std::vector<double> x = {0.0, -2.0, 3.0};
  EXPECT_EQ(SignOf(x), SignVector({1, -1, 1}));
}

TEST(IntervalTensor, FromBounds) {
  std::mt19937_64 rng(1);
  const DenseTensor a = testing::RandomTensor(4, 2, rng);
  const IntervalTensor point = IntervalTensor::FromBounds(a, a);
  for (double r : point.radius().entries()) EXPECT_EQ(r, 0.0);

  const IntervalTensor small = IntervalTensor::FromBounds(DenseTensor(2, 1, {0.0}),
                                                          DenseTensor(2, 1, {2.0}));
  EXPECT_EQ(small.center()[0], 1.0);
  EXPECT_EQ(small.radius()[0], 1.0);

  const IntervalTensor t = CorpusInstance("theorem-5.1");
  const int idx[] = {0, 0, 1, 2};
  EXPECT_EQ(t.Lower().at(idx), -1.0);
  EXPECT_EQ(t.Upper().at(idx), 1.0);
  const IntervalTensor back = IntervalTensor::FromBounds(t.Lower(), t.Upper());
  EXPECT_EQ(back.radius().at(idx), 1.0);
  EXPECT_EQ(back.center().at(idx), 0.0);
}

TEST(IntervalTensor, RejectsInvertedBounds) {
  try {
    IntervalTensor::FromBounds(DenseTensor(2, 2, {0, 0, 3, 0}), DenseTensor(2, 2, {0, 0, 1, 0}));
    FAIL() << "expected InputError";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("(2,1)"), std::string::npos) << e.what();
  }
  EXPECT_THROW(IntervalTensor(DenseTensor(2, 1, {0.0}), DenseTensor(2, 1, {-1.0})), InputError);
  EXPECT_THROW(IntervalTensor(DenseTensor(2, 1), DenseTensor(2, 2)), InputError);
}

TEST(VertexTensor, Examples) {
  std::mt19937_64 rng(2);
  const IntervalTensor interval(testing::RandomTensor(4, 3, rng),
                                testing::RandomRadius(4, 3, rng, 0.5));
  const SignVector ones({1, 1, 1});
  EXPECT_EQ(VertexTensor(interval, ones, VertexMode::kMinus), interval.Lower());
  EXPECT_EQ(VertexTensor(interval, ones, VertexMode::kPlus), interval.Upper());
  for (const auto& z : EnumerateSignVectors(3, false)) {
    EXPECT_EQ(VertexTensor(interval, z, VertexMode::kMinus),
              VertexTensor(interval, z.Negated(), VertexMode::kMinus));
    EXPECT_TRUE(interval.Contains(VertexTensor(interval, z, VertexMode::kMinus)));
    EXPECT_TRUE(interval.Contains(VertexTensor(interval, z, VertexMode::kPlus)));
  }

  const IntervalTensor t = CorpusInstance("theorem-5.1");
  const DenseTensor v = VertexTensor(t, ones, VertexMode::kMinus);
  EXPECT_TRUE(v.IsSymmetric());
  const int i1123[] = {0, 0, 1, 2};
  const int i2113[] = {1, 0, 0, 2};
  const int i1122[] = {0, 0, 1, 1};
  EXPECT_EQ(v.at(i1123), -1.0);
  EXPECT_EQ(v.at(i2113), -1.0);
  EXPECT_EQ(v.at(i1122), 1.0);
}

TEST(VertexTensor, CanonicalVerticesAreDistinct) {
  std::mt19937_64 rng(3);
  const IntervalTensor interval(testing::RandomTensor(4, 3, rng),
                                Abs(testing::RandomTensor(4, 3, rng)));
  std::set<std::vector<double>> seen;
  for (const auto& z : EnumerateSignVectors(3, true)) {
    const DenseTensor v = VertexTensor(interval, z, VertexMode::kMinus);
    seen.insert({v.entries().begin(), v.entries().end()});
  }
  EXPECT_EQ(seen.size(), 4u);
}

TEST(SymmetrizedInterval, Properties) {
  const IntervalTensor t = CorpusInstance("theorem-5.4a");
  const IntervalTensor s = SymmetrizedInterval(t);
  EXPECT_EQ(s.center(), t.center());
  EXPECT_EQ(s.radius(), t.radius());

  const std::vector<CooEntry> coo = {{{1, 1, 2, 3}, 24.0}};
  const IntervalTensor single =
      SymmetrizedInterval(IntervalTensor::Point(DenseTensor::FromCoo(4, 3, coo)));
  const int idx[] = {2, 1, 0, 0};
  EXPECT_DOUBLE_EQ(single.center().at(idx), 2.0);

  std::mt19937_64 rng(4);
  for (int t2 = 0; t2 < 20; ++t2) {
    const IntervalTensor interval(testing::RandomTensor(4, 3, rng),
                                  testing::RandomRadius(4, 3, rng, 0.5));
    const IntervalTensor sym = SymmetrizedInterval(interval);
    for (double r : sym.radius().entries()) EXPECT_GE(r, 0.0);
    for (const auto& z : EnumerateSignVectors(3, true)) {
      const DenseTensor lhs = VertexTensor(sym, z, VertexMode::kMinus);
      const DenseTensor rhs = Symmetrize(VertexTensor(interval, z, VertexMode::kMinus));
      for (std::size_t k = 0; k < lhs.size(); ++k) EXPECT_NEAR(lhs[k], rhs[k], 1e-14);
    }
  }
}

TEST(SampleMember, ContainmentAndDeterminism) {
  const IntervalTensor t = CorpusInstance("theorem-5.1");
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    EXPECT_TRUE(t.Contains(SampleMember(t, seed)));
  }
  EXPECT_EQ(SampleMember(t, 7), SampleMember(t, 7));
  std::mt19937_64 rng(5);
  const DenseTensor c = testing::RandomTensor(4, 2, rng);
  EXPECT_EQ(SampleMember(IntervalTensor::Point(c), 3), c);
}

TEST(WorstCaseValue, ClosedForms) {
  const IntervalTensor t = CorpusInstance("theorem-5.1");
  const std::vector<double> x111 = {1, 1, 1};
  const std::vector<double> x11m = {1, 1, -1};
  EXPECT_NEAR(WorstCaseValue(t, x111), 0.0, 1e-12);
  EXPECT_NEAR(WorstCaseValue(t, x11m), 0.0, 1e-12);

  std::mt19937_64 rng(6);
  const DenseTensor c = testing::RandomTensor(4, 3, rng);
  const auto x = testing::RandomVector(3, rng);
  EXPECT_DOUBLE_EQ(WorstCaseValue(IntervalTensor::Point(c), x), ApplyXm(c, x));
  EXPECT_THROW(WorstCaseValue(IntervalTensor::Point(testing::RandomTensor(3, 2, rng)),
                              std::vector<double>{1, 0}),
               UnsupportedOrderError);
}

TEST(WorstCaseValue, VertexIdentityAndDominance) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 500; ++t) {
    const int n = 2 + t % 2;
    const IntervalTensor interval(testing::RandomTensor(4, n, rng),
                                  testing::RandomRadius(4, n, rng, 0.5));
    auto x = testing::RandomVector(n, rng);
    if (t % 10 == 0) x[0] = 0.0;
    const double w = WorstCaseValue(interval, x);
    const double v = ApplyXm(VertexTensor(interval, SignOf(x), VertexMode::kMinus), x);
    EXPECT_LE(std::abs(w - v), 1e-12 * (1.0 + std::abs(w)));
    EXPECT_NEAR(w, testing::BruteWorstCase(interval, x), 1e-12 * (1.0 + std::abs(w)));
    if (t % 25 == 0) {
      for (std::uint64_t seed = 0; seed < 20; ++seed) {
        EXPECT_LE(w, ApplyXm(SampleMember(interval, seed), x) + 1e-12);
      }
    }
  }
}

TEST(ExtremePoints, CountsAndCap) {
  std::mt19937_64 rng(8);
  const DenseTensor c = testing::RandomTensor(2, 2, rng);
  EXPECT_EQ(EnumerateExtremePoints(IntervalTensor::Point(c)).size(), 1u);
  const IntervalTensor full(c, DenseTensor(2, 2, {1, 1, 1, 1}));
  EXPECT_EQ(EnumerateExtremePoints(full).size(), 16u);

  const std::vector<CooEntry> coo = {{{1, 1, 1, 2}, 1.0}};
  const IntervalTensor orbit =
      IntervalTensor(DenseTensor(4, 2), Symmetrize(DenseTensor::FromCoo(4, 2, coo)));
  EXPECT_EQ(FreeEntryCount(orbit), 4);
  const auto points = EnumerateExtremePoints(orbit);
  EXPECT_EQ(points.size(), 16u);
  for (const auto& p : points) EXPECT_TRUE(orbit.Contains(p));

  const IntervalTensor big(DenseTensor(4, 3), Abs(testing::RandomTensor(4, 3, rng)));
  try {
    EnumerateExtremePoints(big);
    FAIL() << "expected CapExceededError";
  } catch (const CapExceededError& e) {
    EXPECT_EQ(e.count_log2(), 81u);
  }
}

}  // namespace
}  // namespace itc
