#include <gtest/gtest.h>

#include <random>

#include "itc/certify.hpp"
#include "itc/corpus.hpp"
#include "itc/errors.hpp"
#include "itc/oracle.hpp"
#include "test_util.hpp"

namespace itc {
namespace {

DenseTensor Diagonal(int order, const std::vector<double>& d) {
  std::vector<CooEntry> coo;
  for (std::size_t i = 0; i < d.size(); ++i) {
    coo.push_back(CooEntry{std::vector<int>(static_cast<std::size_t>(order),
                                            static_cast<int>(i) + 1),
                           d[i]});
  }
  return DenseTensor::FromCoo(order, static_cast<int>(d.size()), coo);
}

bool HasTag(const Verdict& v, const std::string& tag) {
  return std::find(v.certificates.begin(), v.certificates.end(), tag) != v.certificates.end();
}

void ExpectSoundWitness(const Verdict& v, const IntervalTensor& interval) {
  if (v.status != Status::kNotPsd && v.status != Status::kNotStable) return;
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_LT(testing::BruteWorstCase(interval, *v.witness), -1e-12);
}

TEST(CheckPointPd, Examples) {
  const Verdict pd = CheckPointPd(Diagonal(4, {1, 1, 1}), DefinitenessMode::kPd);
  EXPECT_EQ(pd.status, Status::kPd);
  EXPECT_EQ(pd.certified, CertLevel::kPd);
  EXPECT_TRUE(HasTag(pd, "gershgorin"));

  const std::vector<CooEntry> coo = {{{1, 1, 1, 1}, -1.0}};
  const DenseTensor neg = DenseTensor::FromCoo(4, 3, coo);
  const Verdict refuted = CheckPointPd(neg, DefinitenessMode::kPsd);
  EXPECT_EQ(refuted.status, Status::kNotPsd);
  ASSERT_TRUE(refuted.witness.has_value());
  EXPECT_NEAR(ApplyXm(neg, *refuted.witness), -1.0, 1e-9);
  EXPECT_NEAR(std::abs((*refuted.witness)[0]), 1.0, 1e-9);

  const DenseTensor vertex =
      VertexTensor(CorpusInstance("theorem-5.1"), SignVector({1, 1, 1}), VertexMode::kMinus);
  const Verdict psd = CheckPointPd(vertex, DefinitenessMode::kPsd);
  EXPECT_EQ(psd.status, Status::kPsdNotPd);
  EXPECT_EQ(psd.certified, CertLevel::kPsd);
  ASSERT_TRUE(psd.witness.has_value());
  EXPECT_EQ(ApplyXm(vertex, *psd.witness), 0.0);
}

TEST(CheckPointPd, HeuristicPdIsNotCertified) {
  // Strongly PD but with large off-diagonal mass: Gershgorin fails.
  const DenseTensor vertex =
      VertexTensor(CorpusInstance("theorem-5.4b"), SignVector({1, 1, 1}), VertexMode::kMinus);
  const Verdict v = CheckPointPd(vertex, DefinitenessMode::kPd);
  EXPECT_EQ(v.status, Status::kPd);
  EXPECT_EQ(v.certified, CertLevel::kNone);
  EXPECT_TRUE(HasTag(v, "heuristic_h_eigen"));
  EXPECT_FALSE(HoldsSoundly(v, DefinitenessMode::kPd));
}

TEST(CheckPointPd, OddOrderRejected) {
  EXPECT_THROW(CheckPointPd(Diagonal(3, {1, 1}), DefinitenessMode::kPd), UnsupportedOrderError);
}

TEST(CheckIntervalPd, Examples) {
  const IntervalTensor t51 = CorpusInstance("theorem-5.1");
  const Verdict psd = CheckIntervalPd(t51, DefinitenessMode::kPsd);
  EXPECT_EQ(psd.status, Status::kPsdNotPd);
  EXPECT_EQ(psd.certified, CertLevel::kPsd);
  ASSERT_EQ(psd.per_vertex.size(), 4u);
  for (const auto& v : psd.per_vertex) EXPECT_EQ(v.status, Status::kPsdNotPd);
  EXPECT_TRUE(HasTag(psd, "vertex_reduction"));

  const std::vector<CooEntry> coo = {{{1, 1, 1, 1}, 1.0}};
  const IntervalTensor spread(DenseTensor(4, 3), DenseTensor::FromCoo(4, 3, coo));
  const Verdict refuted = CheckIntervalPd(spread, DefinitenessMode::kPsd);
  EXPECT_EQ(refuted.status, Status::kNotPsd);
  ASSERT_TRUE(refuted.witness.has_value());
  EXPECT_NEAR(std::abs((*refuted.witness)[0]), 1.0, 1e-9);
  ExpectSoundWitness(refuted, spread);

  const Verdict pd = CertifyIntervalPd(CorpusInstance("theorem-5.4a"), DefinitenessMode::kPd);
  EXPECT_EQ(pd.status, Status::kPd);
  EXPECT_EQ(pd.certified, CertLevel::kPd);
  for (const auto& v : pd.per_vertex) EXPECT_EQ(v.status, Status::kPd);
}

TEST(CheckIntervalPd, CorpusCertification) {
  for (const std::string& name : CorpusNames()) {
    const IntervalTensor t = CorpusInstance(name);
    const Verdict psd = CertifyIntervalPd(t, DefinitenessMode::kPsd);
    EXPECT_TRUE(HoldsSoundly(psd, DefinitenessMode::kPsd)) << name;
    const bool pd_clause = name.rfind("theorem-5.4", 0) == 0;
    const Verdict pd = CertifyIntervalPd(t, DefinitenessMode::kPd);
    EXPECT_EQ(HoldsSoundly(pd, DefinitenessMode::kPd), pd_clause) << name;
    EXPECT_EQ(Refutes(pd, DefinitenessMode::kPd), !pd_clause) << name;
  }
}

TEST(CheckIntervalPd, VertexCountAndOrder) {
  std::mt19937_64 rng(1);
  for (int n = 1; n <= 4; ++n) {
    const IntervalTensor interval(testing::ShiftedTensor(4, n, rng, 2.0, 0.1),
                                  testing::RandomRadius(4, n, rng, 0.05));
    const Verdict v = CheckIntervalPd(interval, DefinitenessMode::kPd);
    ASSERT_EQ(v.per_vertex.size(), std::size_t{1} << (n - 1));
    const auto zs = EnumerateSignVectors(n, true);
    for (std::size_t k = 0; k < zs.size(); ++k) EXPECT_EQ(v.per_vertex[k].z, zs[k]);
  }
}

TEST(CheckIntervalPd, ParallelMatchesSerial) {
  std::mt19937_64 rng(2);
  const IntervalTensor interval(testing::ShiftedTensor(4, 3, rng, 1.0, 0.3),
                                testing::RandomRadius(4, 3, rng, 0.05));
  CertifyOptions serial;
  CertifyOptions parallel;
  parallel.solver.jobs = 4;
  const Verdict a = CheckIntervalPd(interval, DefinitenessMode::kPd, serial);
  const Verdict b = CheckIntervalPd(interval, DefinitenessMode::kPd, parallel);
  EXPECT_EQ(a.status, b.status);
  EXPECT_EQ(a.certificates, b.certificates);
  EXPECT_EQ(a.witness, b.witness);
}

TEST(CheckIntervalPdViaSymmetrization, Examples) {
  const IntervalTensor t = CorpusInstance("theorem-5.1");
  const Verdict direct = CheckIntervalPd(t, DefinitenessMode::kPsd);
  const Verdict via = CheckIntervalPdViaSymmetrization(t, DefinitenessMode::kPsd);
  EXPECT_EQ(direct.status, via.status);
  ASSERT_EQ(direct.per_vertex.size(), via.per_vertex.size());
  for (std::size_t k = 0; k < direct.per_vertex.size(); ++k) {
    EXPECT_EQ(direct.per_vertex[k].status, via.per_vertex[k].status);
  }

  const IntervalTensor skew = IntervalTensor::Point(DenseTensor(2, 2, {1, 5, -5, 1}));
  EXPECT_EQ(CheckIntervalPdViaSymmetrization(skew, DefinitenessMode::kPd).status, Status::kPd);

  std::mt19937_64 rng(3);
  for (int k = 0; k < 10; ++k) {
    const IntervalTensor interval(testing::ShiftedTensor(4, 2, rng, 0.8),
                                  testing::RandomRadius(4, 2, rng, 0.1));
    const Verdict a = CheckIntervalPd(interval, DefinitenessMode::kPd);
    const Verdict b = CheckIntervalPdViaSymmetrization(interval, DefinitenessMode::kPd);
    if (a.status != Status::kUnknown && b.status != Status::kUnknown) {
      EXPECT_EQ(a.status, b.status);
    }
    ExpectSoundWitness(a, interval);
    ExpectSoundWitness(b, interval);
  }
}

TEST(CheckHurwitzSymmetric, Examples) {
  const Verdict stable = CheckHurwitzSymmetric(IntervalTensor::Point(Diagonal(4, {-1, -1, -1})));
  EXPECT_EQ(stable.status, Status::kStable);
  EXPECT_EQ(stable.certified, CertLevel::kPd);

  const IntervalTensor pos = IntervalTensor::Point(Diagonal(4, {1}));
  const Verdict unstable = CheckHurwitzSymmetric(pos);
  EXPECT_EQ(unstable.status, Status::kNotStable);
  ASSERT_TRUE(unstable.witness.has_value());
  EXPECT_NEAR(std::abs((*unstable.witness)[0]), 1.0, 1e-12);
  ExpectSoundWitness(unstable, Negate(pos));

  const IntervalTensor t = CorpusInstance("theorem-5.4a");
  const Verdict negated = CheckHurwitzSymmetric(IntervalTensor(-t.center(), t.radius()));
  EXPECT_EQ(negated.status, Status::kStable);
  EXPECT_EQ(negated.certified, CertLevel::kPd);
  ASSERT_EQ(negated.per_vertex.size(), 4u);
  for (const auto& v : negated.per_vertex) EXPECT_EQ(v.status, Status::kStable);
}

TEST(CheckHurwitzSymmetric, MarginalInstanceIsUnknown) {
  const IntervalTensor t = CorpusInstance("theorem-5.1");
  const Verdict v = CheckHurwitzSymmetric(IntervalTensor(-t.center(), t.radius()));
  EXPECT_EQ(v.status, Status::kUnknown);
  EXPECT_FALSE(v.witness.has_value());
}

TEST(CheckHurwitzSymmetric, Preconditions) {
  const IntervalTensor asym = IntervalTensor::Point(DenseTensor(2, 2, {-1, 1, 0, -1}));
  try {
    CheckHurwitzSymmetric(asym);
    FAIL() << "expected PreconditionError";
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("CheckHurwitzGeneral"), std::string::npos);
  }
  EXPECT_THROW(CheckHurwitzSymmetric(IntervalTensor::Point(Diagonal(3, {-1}))),
               UnsupportedOrderError);
}

TEST(CheckHurwitzGeneral, Examples) {
  const Verdict sym = CheckHurwitzGeneral(IntervalTensor::Point(Diagonal(4, {-1, -1, -1})));
  EXPECT_EQ(sym.status, Status::kStable);

  // Symmetrizes to diag(-1, -1).
  const IntervalTensor skew = IntervalTensor::Point(DenseTensor(2, 2, {-1, 4, -4, -1}));
  const Verdict stable = CheckHurwitzGeneral(skew);
  EXPECT_EQ(stable.status, Status::kStable);
  EXPECT_TRUE(HasTag(stable, "symmetrization"));

  // Symmetrizes to [[-1, 3], [3, -1]], which is indefinite.
  const IntervalTensor indefinite = IntervalTensor::Point(DenseTensor(2, 2, {-1, 6, 0, -1}));
  const Verdict unknown = CheckHurwitzGeneral(indefinite);
  EXPECT_EQ(unknown.status, Status::kUnknown);
  EXPECT_FALSE(unknown.witness.has_value());

  EXPECT_THROW(CheckHurwitzGeneral(IntervalTensor::Point(Diagonal(3, {-1}))),
               UnsupportedOrderError);
}

TEST(Oracle, SphereMinExamples) {
  const SphereMinimum diag = OracleSphereMin(Diagonal(4, {2, 5}), 360, true);
  EXPECT_NEAR(diag.value, 2.0, 1e-4);
  EXPECT_NEAR(std::abs(diag.argmin[0]), 1.0, 1e-4);

  const SphereMinimum psd = OracleSphereMin(CorpusInstance("theorem-5.1"), 200, true);
  EXPECT_NEAR(psd.value, 0.0, 1e-6);
  EXPECT_GE(psd.value, -1e-9);

  const std::vector<CooEntry> coo = {{{1, 1, 1, 1}, 1.0}};
  const IntervalTensor spread(DenseTensor(4, 3), DenseTensor::FromCoo(4, 3, coo));
  const SphereMinimum neg = OracleSphereMin(spread, 100, true);
  EXPECT_NEAR(neg.value, -1.0, 1e-9);
  EXPECT_THROW(OracleSphereMin(Diagonal(3, {1}), 10, false), UnsupportedOrderError);
}

TEST(Oracle, ExtremePointsAgreeWithVertexReduction) {
  std::mt19937_64 rng(4);
  for (int k = 0; k < 10; ++k) {
    const IntervalTensor matrix(testing::ShiftedTensor(2, 2, rng, 1.0),
                                testing::RandomRadius(2, 2, rng, 0.5));
    const Verdict oracle = OracleExtremePointsPd(matrix, DefinitenessMode::kPd);
    EXPECT_EQ(oracle.status, CheckIntervalPd(matrix, DefinitenessMode::kPd).status);
  }
  const IntervalTensor point = IntervalTensor::Point(Diagonal(4, {1, 2}));
  EXPECT_EQ(OracleExtremePointsPd(point, DefinitenessMode::kPd).status, Status::kPd);

  const IntervalTensor big(DenseTensor(4, 3), Abs(testing::RandomTensor(4, 3, rng)));
  EXPECT_THROW(OracleExtremePointsPd(big, DefinitenessMode::kPd), CapExceededError);
}

}  // namespace
}  // namespace itc
