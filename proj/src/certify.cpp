#include "itc/certify.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "itc/conditions.hpp"
#include "itc/errors.hpp"
#include "itc/parallel.hpp"

namespace itc {
namespace {

void RequireEvenOrder(int order, const char* op) {
  if (order % 2 != 0) {
    throw UnsupportedOrderError(std::string(op) + " requires an even order, got " +
                                std::to_string(order));
  }
}

std::vector<double> Basis(int n, int i) {
  std::vector<double> e(static_cast<std::size_t>(n), 0.0);
  e[static_cast<std::size_t>(i)] = 1.0;
  return e;
}

/// A direction with A x^m <= 0: a basis vector on a nonpositive diagonal
/// entry if there is one, else the search minimizer if it qualifies.
std::optional<std::vector<double>> NonpositiveDirection(const DenseTensor& a,
                                                        const std::vector<double>& minimizer) {
  std::vector<int> diagonal(static_cast<std::size_t>(a.order()));
  for (int i = 0; i < a.dim(); ++i) {
    std::fill(diagonal.begin(), diagonal.end(), i);
    if (a.at(diagonal) <= 0.0) return Basis(a.dim(), i);
  }
  if (ApplyXm(a, minimizer) <= 0.0) return minimizer;
  return std::nullopt;
}

CertLevel Weaker(CertLevel a, CertLevel b) { return std::min(a, b); }

Status StabilityOf(Status definiteness_of_negation) {
  switch (definiteness_of_negation) {
    case Status::kPd: return Status::kStable;
    case Status::kNotPsd: return Status::kNotStable;
    default: return Status::kUnknown;
  }
}

}  // namespace

Verdict CheckPointPd(const DenseTensor& a, DefinitenessMode mode, const CertifyOptions& opts) {
  RequireEvenOrder(a.order(), "CheckPointPd");
  const DenseTensor sym = Symmetrize(a);
  const double lower = HMinLowerBound(sym);

  Verdict verdict;
  if (lower > opts.margin) {
    verdict.status = Status::kPd;
    verdict.certified = CertLevel::kPd;
    verdict.AddCertificate("gershgorin");
    return verdict;
  }

  if (a.order() == 4 && a.dim() == 3) {
    Verdict matched = CheckCorollary43(sym);
    if (matched.status != Status::kUnknown) return matched;
    verdict.diagnostics = std::move(matched.diagnostics);
  }

  const EigenEstimate est = ExtremeHEigen(sym, Extreme::kMin, opts.solver);
  const double at_minimizer = ApplyXm(a, est.vector);
  if (at_minimizer < kWitnessThreshold) {
    verdict.status = Status::kNotPsd;
    verdict.witness = est.vector;
    verdict.AddCertificate("witness_evaluation");
    return verdict;
  }

  const bool psd_sound = lower > -opts.margin;
  const auto zero_direction = NonpositiveDirection(a, est.vector);
  if (psd_sound) {
    verdict.certified = CertLevel::kPsd;
    verdict.AddCertificate("gershgorin_psd");
    if (zero_direction) {
      verdict.status = Status::kPsdNotPd;
      verdict.witness = zero_direction;
    } else if (est.value > opts.margin) {
      verdict.status = Status::kPd;
      verdict.AddCertificate("heuristic_h_eigen");
    } else {
      verdict.diagnostics.push_back("H-eigenvalue search minimum " + std::to_string(est.value) +
                                    " lies within the margin; PD undecided");
    }
  } else if (est.value > opts.margin) {
    verdict.status = Status::kPd;
    verdict.AddCertificate("heuristic_h_eigen");
  } else if (zero_direction) {
    // Not PD is exact here; PSD rests on the search alone.
    verdict.status = Status::kPsdNotPd;
    verdict.witness = zero_direction;
    verdict.AddCertificate("heuristic_h_eigen");
  } else {
    verdict.diagnostics.push_back("H-eigenvalue search minimum " + std::to_string(est.value) +
                                  " is inconclusive");
  }
  if (!est.converged) {
    verdict.diagnostics.push_back("H-eigenvalue search did not converge (residual " +
                                  std::to_string(est.residual) + ")");
  }
  (void)mode;
  return verdict;
}

Verdict CheckIntervalPd(const IntervalTensor& interval, DefinitenessMode mode,
                        const CertifyOptions& opts) {
  RequireEvenOrder(interval.order(), "CheckIntervalPd");
  const std::vector<SignVector> zs = EnumerateSignVectors(interval.dim(), true);

  // Parallelism goes to the vertex map; each vertex solves serially.
  CertifyOptions inner = opts;
  if (zs.size() > 1) inner.solver.jobs = 1;
  std::vector<Verdict> results(zs.size());
  ParallelFor(zs.size(), opts.solver.jobs, [&](std::size_t k) {
    results[k] = CheckPointPd(VertexTensor(interval, zs[k], VertexMode::kMinus), mode, inner);
  });

  Verdict verdict;
  verdict.AddCertificate("vertex_reduction");
  bool all_pd = true;
  bool all_psd = true;
  const Verdict* refuting = nullptr;
  const Verdict* not_pd = nullptr;
  CertLevel level = CertLevel::kPd;
  for (std::size_t k = 0; k < zs.size(); ++k) {
    Verdict& r = results[k];
    if (r.status == Status::kNotPsd && WorstCaseValue(interval, *r.witness) >= kWitnessThreshold) {
      r.diagnostics.push_back("vertex witness does not refute the interval; dropped");
      r.status = Status::kUnknown;
      r.witness.reset();
    }
    verdict.per_vertex.push_back(VertexVerdict{zs[k], r.status, r.certified});
    for (const auto& tag : r.certificates) verdict.AddCertificate(tag);
    for (const auto& d : r.diagnostics) verdict.diagnostics.push_back(zs[k].ToString() + ": " + d);
    level = Weaker(level, r.certified);
    all_pd = all_pd && r.status == Status::kPd;
    all_psd = all_psd && (r.status == Status::kPd || r.status == Status::kPsdNotPd);
    if (r.status == Status::kNotPsd && refuting == nullptr) refuting = &r;
    if (r.status == Status::kPsdNotPd && not_pd == nullptr) not_pd = &r;
  }

  if (refuting != nullptr) {
    verdict.status = Status::kNotPsd;
    verdict.certified = CertLevel::kNone;
    verdict.witness = refuting->witness;
    return verdict;
  }
  verdict.certified = all_pd ? level : Weaker(level, CertLevel::kPsd);
  if (all_pd) {
    verdict.status = Status::kPd;
  } else if (all_psd) {
    verdict.status = Status::kPsdNotPd;
    verdict.witness = not_pd->witness;
  }
  return verdict;
}

Verdict CheckIntervalPdViaSymmetrization(const IntervalTensor& interval, DefinitenessMode mode,
                                         const CertifyOptions& opts) {
  return CheckIntervalPd(SymmetrizedInterval(interval), mode, opts);
}

Verdict CertifyIntervalPd(const IntervalTensor& interval, DefinitenessMode mode,
                          const CertifyOptions& opts) {
  Verdict verdict = CheckIntervalPd(interval, mode, opts);
  if (interval.order() != 4 || interval.dim() != 3 || !interval.IsSymmetric()) return verdict;

  const Verdict theorem = CheckTheorem5xInterval(interval);
  if (theorem.status == Status::kUnknown) return verdict;
  if (verdict.status == Status::kNotPsd) {
    verdict.diagnostics.push_back(theorem.certificates.front() +
                                  " hypotheses hold but a refuting witness was found");
    return verdict;
  }
  for (const auto& tag : theorem.certificates) verdict.AddCertificate(tag);
  verdict.certified = std::max(verdict.certified, theorem.certified);
  if (theorem.status == Status::kPd) {
    verdict.status = Status::kPd;
    verdict.witness.reset();
  } else if (WorstCaseValue(interval, *theorem.witness) <= 0.0) {
    verdict.status = Status::kPsdNotPd;
    verdict.witness = theorem.witness;
  }
  return verdict;
}

Verdict CheckHurwitzSymmetric(const IntervalTensor& interval, const CertifyOptions& opts) {
  RequireEvenOrder(interval.order(), "CheckHurwitzSymmetric");
  if (!interval.IsSymmetric()) {
    throw PreconditionError(
        "CheckHurwitzSymmetric requires a symmetric interval tensor; use CheckHurwitzGeneral");
  }
  const IntervalTensor negated = Negate(interval);
  for (const SignVector& z : EnumerateSignVectors(interval.dim(), true)) {
    if (!(-VertexTensor(interval, z, VertexMode::kPlus) ==
          VertexTensor(negated, z, VertexMode::kMinus))) {
      throw std::logic_error("plus-vertex identity violated at z = " + z.ToString());
    }
  }

  const Verdict pd = CertifyIntervalPd(negated, DefinitenessMode::kPd, opts);
  Verdict verdict;
  verdict.status = StabilityOf(pd.status);
  verdict.certified = pd.status == Status::kPd ? pd.certified : CertLevel::kNone;
  verdict.certificates = pd.certificates;
  verdict.AddCertificate("negation_pd");
  verdict.diagnostics = pd.diagnostics;
  for (const VertexVerdict& v : pd.per_vertex) {
    verdict.per_vertex.push_back(VertexVerdict{
        v.z, StabilityOf(v.status), v.status == Status::kPd ? v.certified : CertLevel::kNone});
  }
  if (verdict.status == Status::kNotStable) {
    verdict.witness = pd.witness;
  } else if (pd.status == Status::kPsdNotPd) {
    verdict.diagnostics.push_back(
        "the negated interval is PSD but not PD: some member has a zero Z-eigenvalue "
        "(marginally unstable), no strictly positive witness exists");
  }
  return verdict;
}

Verdict CheckHurwitzGeneral(const IntervalTensor& interval, const CertifyOptions& opts) {
  RequireEvenOrder(interval.order(), "CheckHurwitzGeneral");
  Verdict symmetric = CheckHurwitzSymmetric(SymmetrizedInterval(interval), opts);
  if (symmetric.status == Status::kStable) {
    symmetric.AddCertificate("symmetrization");
    return symmetric;
  }
  Verdict verdict;
  verdict.diagnostics = std::move(symmetric.diagnostics);
  verdict.diagnostics.push_back("symmetrized interval is " +
                                std::string(ToString(symmetric.status)) +
                                "; stability of the original interval is not decided");
  return verdict;
}

}  // namespace itc
