#pragma once

#include "itc/interval.hpp"
#include "itc/spectra.hpp"
#include "itc/verdict.hpp"

namespace itc {

/// Threshold below which a computed form value counts as a refutation.
inline constexpr double kWitnessThreshold = -1e-12;

struct CertifyOptions {
  SolverOptions solver;
  /// PD needs a sound lower bound above margin, PSD one above -margin.
  double margin = 1e-8;
};

/**
 * @brief Definiteness of a point tensor of even order.
 *
 * Stages: Gershgorin bound on the symmetrization, the explicit 4th-order
 * 3-dimensional conditions, then a multi-start H-eigenvalue search. A
 * NOT_PSD verdict always carries x with A x^m < kWitnessThreshold. A PD
 * status backed only by the search is tagged "heuristic_h_eigen" and leaves
 * `certified` below kPd.
 */
Verdict CheckPointPd(const DenseTensor& a, DefinitenessMode mode, const CertifyOptions& opts = {});

/// Vertex reduction: CheckPointPd on A^z for every canonical z, reduced in
/// enumeration order. per_vertex is populated.
Verdict CheckIntervalPd(const IntervalTensor& interval, DefinitenessMode mode,
                        const CertifyOptions& opts = {});

/// CheckIntervalPd on the symmetrized interval.
Verdict CheckIntervalPdViaSymmetrization(const IntervalTensor& interval, DefinitenessMode mode,
                                         const CertifyOptions& opts = {});

/// CheckIntervalPd, then the interval-level theorem hypotheses for symmetric
/// 4th-order 3-dimensional input, which may raise `certified`.
Verdict CertifyIntervalPd(const IntervalTensor& interval, DefinitenessMode mode,
                          const CertifyOptions& opts = {});

/**
 * @brief Hurwitz stability of a symmetric interval tensor via PD of -I.
 *
 * per_vertex reports the stability of each plus-vertex. NOT_STABLE carries
 * x with WorstCaseValue(Negate(I), x) < kWitnessThreshold.
 * @throws PreconditionError if I is not symmetric (use CheckHurwitzGeneral).
 */
Verdict CheckHurwitzSymmetric(const IntervalTensor& interval, const CertifyOptions& opts = {});

/// Sufficient test for any interval: STABLE if the symmetrized interval is
/// stable, UNKNOWN otherwise. Never refutes.
Verdict CheckHurwitzGeneral(const IntervalTensor& interval, const CertifyOptions& opts = {});

}  // namespace itc
