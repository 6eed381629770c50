#include "itc/conditions.hpp"

#include <cmath>
#include <functional>
#include <vector>

#include "itc/errors.hpp"

namespace itc {
namespace {

constexpr double kTwoThirds = 2.0 / 3.0;

const std::vector<std::string> kDiagonal = {"1111", "2222", "3333"};
const std::vector<std::string> kSquares = {"1122", "1133", "2233"};
const std::vector<std::string> kMixed = {"1123", "1223", "1233"};

// ---- point-tensor clauses -----------------------------------------------------

using PointTest = std::function<bool(const DenseTensor&)>;

PointTest Zero(std::string key) {
  return [key](const DenseTensor& a) {
    return std::abs(Coefficient(a, key)) <= kConditionTolerance;
  };
}
PointTest AtLeast(std::string key, double value) {
  return [key, value](const DenseTensor& a) { return Coefficient(a, key) >= value; };
}
PointTest Above(std::string key, double value) {
  return [key, value](const DenseTensor& a) { return Coefficient(a, key) > value; };
}
// a_key >= factor * |a_other|
PointTest Dominates(std::string key, double factor, std::string other) {
  return [key, factor, other](const DenseTensor& a) {
    return Coefficient(a, key) >= factor * std::abs(Coefficient(a, other));
  };
}

struct PointClause {
  std::string name;
  bool sound;
  std::vector<PointTest> common;
  std::vector<PointTest> psd;  // empty when the clause only concludes PD
  std::vector<PointTest> pd;
};

void Append(std::vector<PointTest>& to, const std::vector<PointTest>& from) {
  to.insert(to.end(), from.begin(), from.end());
}

std::vector<PointTest> Zeros(std::initializer_list<const char*> keys) {
  std::vector<PointTest> out;
  for (const char* k : keys) out.push_back(Zero(k));
  return out;
}

std::vector<PointClause> BuildCorollaries() {
  std::vector<PointClause> clauses;

  {
    PointClause c{"corollary_5_1", true, {}, {}, {}};
    Append(c.common, Zeros({"1112", "1113", "1222", "2223", "1333", "2333", "1223", "1233"}));
    for (const auto& k : kSquares) c.common.push_back(AtLeast(k, 0.0));
    c.common.push_back(Dominates("1122", 1.0, "1123"));
    c.common.push_back(Dominates("1133", 1.0, "1123"));
    for (const auto& k : kDiagonal) {
      c.psd.push_back(AtLeast(k, 0.0));
      c.pd.push_back(Above(k, 0.0));
    }
    clauses.push_back(std::move(c));
  }

  std::vector<PointTest> common52 = Zeros({"1112", "1222", "2223", "1333", "1113", "1223", "1233"});
  for (const auto& k : kSquares) common52.push_back(AtLeast(k, 0.0));
  common52.push_back(Dominates("3333", 1.0, "2333"));
  common52.push_back(Dominates("2233", kTwoThirds, "2333"));
  const std::vector<PointTest> psd52 = {AtLeast("1111", 0.0), AtLeast("2222", 0.0),
                                        AtLeast("3333", 1.0)};
  const std::vector<PointTest> pd52 = {Above("1111", 0.0), Above("2222", 0.0),
                                       AtLeast("3333", 1.0)};
  {
    PointClause c{"corollary_5_2a", true, common52, psd52, pd52};
    c.common.push_back(Zero("1123"));
    clauses.push_back(std::move(c));
  }
  {
    PointClause c{"corollary_5_2b", true, common52, psd52, pd52};
    c.common.push_back(Dominates("1122", 1.0, "2333"));
    c.common.push_back(Dominates("1133", 1.0, "2333"));
    c.common.push_back(Dominates("3333", 1.0, "1123"));
    c.common.push_back(Dominates("1122", 1.0, "1123"));
    c.common.push_back(Dominates("1133", 1.0, "1123"));
    c.common.push_back(Dominates("2233", kTwoThirds, "1123"));
    clauses.push_back(std::move(c));
  }

  // a3333 >= |a2333| is missing from these hypotheses: a2222 = a3333 = 1,
  // a2333 = 3, a_iijj = 3 gives f(0, -1/3, 1) < 0.
  const std::vector<PointTest> common53 = Zeros({"1112", "1222", "1333", "1113"});
  const std::vector<PointTest> psd53 = {AtLeast("1111", 0.0), AtLeast("2222", 1.0),
                                        AtLeast("3333", 1.0)};
  const std::vector<PointTest> pd53 = {Above("1111", 0.0), AtLeast("2222", 1.0),
                                       AtLeast("3333", 1.0)};
  {
    PointClause c{"corollary_5_3a", false, common53, psd53, pd53};
    for (const auto& k : kSquares) {
      for (const char* t : {"2333", "2223", "1123"}) c.common.push_back(Dominates(k, 1.0, t));
    }
    Append(c.common, Zeros({"1223", "1233"}));
    clauses.push_back(std::move(c));
  }
  {
    PointClause c{"corollary_5_3b", false, common53, psd53, pd53};
    c.common.push_back(Dominates("1122", kTwoThirds, "2333"));
    c.common.push_back(Dominates("1122", kTwoThirds, "1223"));
    c.common.push_back(Dominates("1133", 1.0, "2333"));
    c.common.push_back(Dominates("1133", 1.0, "1223"));
    c.common.push_back(Dominates("2233", 1.0, "2333"));
    c.common.push_back(Dominates("2233", 1.0, "1223"));
    Append(c.common, Zeros({"1123", "1233", "2223"}));
    clauses.push_back(std::move(c));
  }

  std::vector<PointTest> common54 = Zeros({"1222", "2333", "1113"});
  std::vector<PointTest> pd54;
  for (const auto& k : kDiagonal) pd54.push_back(AtLeast(k, 1.0));
  {
    PointClause c{"corollary_5_4a", true, common54, {}, pd54};
    for (const char* t : {"1112", "2223", "1333"}) {
      for (const auto& k : kDiagonal) c.common.push_back(Dominates(k, 1.0, t));
      for (const auto& k : kSquares) c.common.push_back(Dominates(k, kTwoThirds, t));
    }
    for (const auto& k : kMixed) c.common.push_back(Zero(k));
    clauses.push_back(std::move(c));
  }
  {
    // a1333 is left unconstrained: a_iiii = a_iijj = 2, a1333 = 10 gives
    // f(-0.1, 0, 1) < 0.
    PointClause c{"corollary_5_4b", false, common54, {}, pd54};
    for (const char* t : {"1112", "2223", "1123"}) {
      for (const auto& k : kDiagonal) c.common.push_back(Dominates(k, 1.0, t));
      for (const auto& k : kSquares) c.common.push_back(Dominates(k, 1.0, t));
    }
    Append(c.common, Zeros({"1113", "1223", "1233"}));
    clauses.push_back(std::move(c));
  }
  return clauses;
}

bool AllHold(const std::vector<PointTest>& tests, const DenseTensor& a) {
  for (const auto& t : tests) {
    if (!t(a)) return false;
  }
  return true;
}

// ---- interval clauses -----------------------------------------------------------

struct Bounds {
  const DenseTensor& lower;
  const DenseTensor& upper;
};

using BoundTest = std::function<bool(const Bounds&)>;

bool Near(double a, double b) { return std::abs(a - b) <= kConditionTolerance; }

BoundTest LowerIs(std::string key, double value) {
  return [key, value](const Bounds& b) { return Near(Coefficient(b.lower, key), value); };
}
BoundTest LowerAtLeast(std::string key, double value) {
  return [key, value](const Bounds& b) { return Coefficient(b.lower, key) >= value; };
}
BoundTest Fixed(std::string key, double value) {
  return [key, value](const Bounds& b) {
    return Near(Coefficient(b.lower, key), value) && Near(Coefficient(b.upper, key), value);
  };
}
BoundTest Between(std::string key, double lo, double hi) {
  return [key, lo, hi](const Bounds& b) {
    return Near(Coefficient(b.lower, key), lo) && Near(Coefficient(b.upper, key), hi);
  };
}

struct IntervalClause {
  std::string name;
  Status conclusion;
  std::vector<BoundTest> tests;
};

std::vector<BoundTest> FixedZeros(std::initializer_list<const char*> keys) {
  std::vector<BoundTest> out;
  for (const char* k : keys) out.push_back(Fixed(k, 0.0));
  return out;
}

void Append(std::vector<BoundTest>& to, const std::vector<BoundTest>& from) {
  to.insert(to.end(), from.begin(), from.end());
}

std::vector<IntervalClause> BuildTheorems() {
  std::vector<IntervalClause> clauses;
  {
    IntervalClause c{"theorem_5_1", Status::kPsdNotPd, {}};
    for (const auto& k : kDiagonal) c.tests.push_back(LowerIs(k, 0.0));
    Append(c.tests, FixedZeros({"1112", "1113", "1222", "2223", "1333", "2333", "1223", "1233"}));
    c.tests.push_back(Between("1123", -1.0, 1.0));
    c.tests.push_back(LowerAtLeast("1122", 1.0));
    c.tests.push_back(LowerAtLeast("1133", 1.0));
    c.tests.push_back(LowerAtLeast("2233", 0.0));
    clauses.push_back(std::move(c));
  }

  std::vector<BoundTest> common52 = {LowerIs("1111", 0.0), LowerIs("2222", 0.0),
                                     LowerIs("3333", 1.0), Between("2333", -1.0, 1.0)};
  Append(common52, FixedZeros({"1112", "1113", "1222", "2223", "1333"}));
  {
    IntervalClause c{"theorem_5_2a", Status::kPsdNotPd, common52};
    Append(c.tests, FixedZeros({"1123", "1223", "1233"}));
    c.tests.push_back(LowerAtLeast("1122", 0.0));
    c.tests.push_back(LowerAtLeast("1133", 0.0));
    c.tests.push_back(LowerAtLeast("2233", kTwoThirds));
    clauses.push_back(std::move(c));
  }
  {
    IntervalClause c{"theorem_5_2b", Status::kPsdNotPd, common52};
    c.tests.push_back(Between("1123", -1.0, 1.0));
    Append(c.tests, FixedZeros({"1223", "1233"}));
    c.tests.push_back(LowerAtLeast("1122", 1.0));
    c.tests.push_back(LowerAtLeast("1133", 1.0));
    c.tests.push_back(LowerAtLeast("2233", kTwoThirds));
    clauses.push_back(std::move(c));
  }

  std::vector<BoundTest> common53 = {LowerIs("1111", 0.0), LowerIs("2222", 1.0),
                                     LowerIs("3333", 1.0)};
  Append(common53, FixedZeros({"1112", "1113"}));
  {
    IntervalClause c{"theorem_5_3a", Status::kPsdNotPd, common53};
    for (const char* k : {"2223", "2333", "1123"}) c.tests.push_back(Between(k, -1.0, 1.0));
    Append(c.tests, FixedZeros({"1222", "1333", "1223", "1233"}));
    for (const auto& k : kSquares) c.tests.push_back(LowerAtLeast(k, 1.0));
    clauses.push_back(std::move(c));
  }
  {
    IntervalClause c{"theorem_5_3b", Status::kPsdNotPd, common53};
    c.tests.push_back(Between("2333", -1.0, 1.0));
    c.tests.push_back(Between("1223", -1.0, 1.0));
    Append(c.tests, FixedZeros({"1222", "2223", "1333", "1123", "1233"}));
    c.tests.push_back(LowerAtLeast("1133", 1.0));
    c.tests.push_back(LowerAtLeast("2233", 1.0));
    c.tests.push_back(LowerAtLeast("1122", kTwoThirds));
    clauses.push_back(std::move(c));
  }

  std::vector<BoundTest> common54 = {Between("1112", -1.0, 1.0), Between("2223", -1.0, 1.0)};
  for (const auto& k : kDiagonal) common54.push_back(LowerIs(k, 1.0));
  Append(common54, FixedZeros({"1222", "2333", "1113"}));
  {
    IntervalClause c{"theorem_5_4a", Status::kPd, common54};
    for (const auto& k : kSquares) c.tests.push_back(LowerIs(k, kTwoThirds));
    Append(c.tests, FixedZeros({"1123", "1223", "1233"}));
    c.tests.push_back(Between("1333", -1.0, 1.0));
    clauses.push_back(std::move(c));
  }
  {
    IntervalClause c{"theorem_5_4b", Status::kPd, common54};
    for (const auto& k : kSquares) c.tests.push_back(LowerIs(k, 1.0));
    Append(c.tests, FixedZeros({"1123", "1223", "1333"}));
    c.tests.push_back(Between("1233", -1.0, 1.0));
    clauses.push_back(std::move(c));
  }
  return clauses;
}

void RequireOrder4Dim3(int order, int dim, const char* op) {
  if (order != 4 || dim != 3) {
    throw PreconditionError(std::string(op) + " applies to 4th-order 3-dimensional tensors only");
  }
}

std::vector<double> Basis(int i) {
  std::vector<double> e(3, 0.0);
  e[static_cast<std::size_t>(i)] = 1.0;
  return e;
}

}  // namespace

double Coefficient(const DenseTensor& a, const std::string& key) {
  std::vector<int> index;
  for (char c : key) index.push_back(c - '1');
  return a.at(index);
}

Verdict CheckCorollary43(const DenseTensor& a) {
  RequireOrder4Dim3(a.order(), a.dim(), "CheckCorollary43");
  RequireSymmetric(a, "CheckCorollary43");
  static const std::vector<PointClause> clauses = BuildCorollaries();

  Verdict verdict;
  const PointClause* psd_match = nullptr;
  for (const PointClause& clause : clauses) {
    if (!AllHold(clause.common, a)) continue;
    const bool pd = AllHold(clause.pd, a);
    const bool psd = !clause.psd.empty() && AllHold(clause.psd, a);
    if (!pd && !psd) continue;
    if (!clause.sound) {
      verdict.diagnostics.push_back(clause.name +
                                    " hypotheses hold, but the clause admits counterexamples; "
                                    "not used as a certificate");
      continue;
    }
    if (pd) {
      verdict.status = Status::kPd;
      verdict.certified = CertLevel::kPd;
      verdict.AddCertificate(clause.name + ":pd");
      return verdict;
    }
    if (psd_match == nullptr) psd_match = &clause;
  }
  if (psd_match != nullptr) {
    verdict.status = Status::kPsdNotPd;
    verdict.certified = CertLevel::kPsd;
    verdict.AddCertificate(psd_match->name + ":psd");
    int zero_diag = 0;
    for (int i = 1; i < 3; ++i) {
      if (Coefficient(a, kDiagonal[static_cast<std::size_t>(i)]) <
          Coefficient(a, kDiagonal[static_cast<std::size_t>(zero_diag)])) {
        zero_diag = i;
      }
    }
    verdict.witness = Basis(zero_diag);
  }
  return verdict;
}

Verdict CheckTheorem5xInterval(const IntervalTensor& interval) {
  RequireOrder4Dim3(interval.order(), interval.dim(), "CheckTheorem5xInterval");
  if (!interval.IsSymmetric()) {
    throw PreconditionError("CheckTheorem5xInterval requires a symmetric interval tensor");
  }
  static const std::vector<IntervalClause> clauses = BuildTheorems();
  const DenseTensor lower = interval.Lower();
  const DenseTensor upper = interval.Upper();
  const Bounds bounds{lower, upper};

  Verdict verdict;
  for (const IntervalClause& clause : clauses) {
    bool holds = true;
    for (const auto& t : clause.tests) {
      if (!t(bounds)) {
        holds = false;
        break;
      }
    }
    if (!holds) continue;
    verdict.status = clause.conclusion;
    verdict.AddCertificate(clause.name);
    if (clause.conclusion == Status::kPd) {
      verdict.certified = CertLevel::kPd;
    } else {
      verdict.certified = CertLevel::kPsd;
      // The member with a1111 at its lower bound 0 vanishes at e_1.
      verdict.witness = Basis(0);
    }
    return verdict;
  }
  return verdict;
}

}  // namespace itc
