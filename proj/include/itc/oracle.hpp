#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "itc/interval.hpp"
#include "itc/verdict.hpp"

namespace itc {

// Brute-force references for tests and the benchmark. Not used by the
// certification pipeline.

struct SphereMinimum {
  double value = 0.0;
  std::vector<double> argmin;
};

/**
 * @brief Minimum of fn over a fixed sample of the unit 2-sphere in R^n.
 *
 * n = 2: `resolution` angles on a half circle. n = 3: `resolution` polar
 * angles (poles included) times `resolution` azimuths. n >= 4: resolution^2
 * seeded Gaussian directions. The sample depends only on (n, resolution), so
 * two calls with the same arguments see the same points. With `refine`, a
 * compass search continues from the best sample point. The value is an upper
 * bound on the true minimum.
 */
SphereMinimum SphereGridMin(const std::function<double(std::span<const double>)>& fn, int n,
                            int resolution, bool refine);

/// Minimum of A x^m over the unit m-norm sphere sum x_i^m = 1. Even order.
SphereMinimum OracleSphereMin(const DenseTensor& a, int resolution, bool refine);

/// Minimum of the worst-case value over the unit m-norm sphere. Even order.
SphereMinimum OracleSphereMin(const IntervalTensor& interval, int resolution, bool refine);

struct OracleOptions {
  int resolution = 200;
  /// Minima within [-tolerance, tolerance] classify as PSD_NOT_PD.
  double tolerance = 1e-6;
  std::uint64_t cap = kDefaultExtremePointCap;
};

/**
 * @brief Definiteness of an interval by checking every extreme point.
 *
 * Order 2 uses exact symmetric eigenvalues; higher even orders use
 * OracleSphereMin with refinement. Status only: PD, PSD_NOT_PD or NOT_PSD.
 * @throws CapExceededError when there are more than `cap` extreme points.
 */
Verdict OracleExtremePointsPd(const IntervalTensor& interval, DefinitenessMode mode,
                              const OracleOptions& opts = {});

}  // namespace itc
