#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "itc/tensor.hpp"

namespace itc {

/// Inclusion disk: diagonal entry a_{i...i} and the absolute sum of the
/// other entries of slice i.
struct Disk {
  double center = 0.0;
  double radius = 0.0;
};

enum class EigenKind { kH, kZ };
enum class Extreme { kMin, kMax };

struct SolverOptions {
  int starts = 32;          // random starts, in addition to one start per basis vector
  int max_iter = 5000;      // per start
  double tol_residual = 1e-10;
  std::uint64_t seed = 0;
  int jobs = 1;
};

/**
 * @brief A computed real eigenpair.
 *
 * H: A x^{m-1} = lambda x^{[m-1]} with ||x||_m = 1.
 * Z: A x^{m-1} = lambda x with ||x||_2 = 1.
 * `residual` is exactly HResidual/ZResidual of (A, value, vector).
 */
struct EigenEstimate {
  EigenKind kind = EigenKind::kH;
  double value = 0.0;
  std::vector<double> vector;
  double residual = 0.0;
  bool converged = false;
  int starts_used = 0;
};

/// Sound lower bound and best-found upper bound on g(A) = min A x^m / sum x_i^m.
struct GBracket {
  double lower = 0.0;
  double upper = 0.0;
  std::vector<double> minimizer;
};

std::vector<Disk> GershgorinDisks(const DenseTensor& a);

/// min_i (center_i - radius_i); a lower bound on every H-eigenvalue. Symmetric input.
double HMinLowerBound(const DenseTensor& a);

/// max_i (|center_i| + radius_i); an upper bound on the H-spectral radius. Symmetric input.
double RhoHUpperBound(const DenseTensor& a);

double HResidual(const DenseTensor& a, double lambda, std::span<const double> x);
double ZResidual(const DenseTensor& a, double lambda, std::span<const double> x);

/// Multi-start minimization (or maximization) of A x^m / sum x_i^m over the
/// unit m-norm sphere, polished by Newton's method. Symmetric A, even order.
/// For `kMin` the value is an upper bound on lambda_Hmin.
EigenEstimate ExtremeHEigen(const DenseTensor& a, Extreme which, const SolverOptions& opts = {});

/// Shifted symmetric higher-order power iteration with Newton polishing.
/// `kMin` runs on -A and negates.
EigenEstimate ExtremeZEigen(const DenseTensor& a, Extreme which, const SolverOptions& opts = {});

/// Brackets g(A) on the symmetrization of A. Even order.
GBracket GBracketOf(const DenseTensor& a, const SolverOptions& opts = {});

}  // namespace itc
