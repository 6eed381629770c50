#include "itc/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include <Eigen/Dense>

#include "itc/errors.hpp"
#include "itc/parallel.hpp"

namespace itc {
namespace {

// Start Newton polishing once the local iteration is this close.
constexpr double kPolishThreshold = 1e-5;
constexpr int kNewtonSteps = 40;

double Norm2(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return std::sqrt(s);
}

double SumPowers(std::span<const double> x, int p) {
  double s = 0.0;
  for (double v : x) s += std::pow(v, p);
  return s;
}

void ScaleTo2Norm(std::vector<double>& x) {
  const double n = Norm2(x);
  for (double& v : x) v /= n;
}

void ScaleToMNorm(std::vector<double>& x, int m) {
  double s = 0.0;
  for (double v : x) s += std::pow(std::abs(v), m);
  const double n = std::pow(s, 1.0 / m);
  for (double& v : x) v /= n;
}

// x and -x describe the same eigenpair for even order.
void CanonicalSign(std::vector<double>& x) {
  for (double v : x) {
    if (std::abs(v) > 1e-12) {
      if (v < 0) {
        for (double& w : x) w = -w;
      }
      return;
    }
  }
}

double Quotient(const DenseTensor& a, std::span<const double> x) {
  return ApplyXm(a, x) / SumPowers(x, a.order());
}

Eigen::MatrixXd AsMatrix(const std::vector<double>& row_major, int n) {
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m(i, j) = row_major[static_cast<std::size_t>(i * n + j)];
  }
  return m;
}

std::vector<double> RandomUnitVector(int n, std::uint64_t master_seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(master_seed),
                    static_cast<std::uint32_t>(master_seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 rng(seq);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> x(static_cast<std::size_t>(n));
  do {
    for (double& v : x) v = normal(rng);
  } while (Norm2(x) < 1e-8);
  ScaleTo2Norm(x);
  return x;
}

std::vector<std::vector<double>> StartingPoints(int n, const SolverOptions& opts) {
  std::vector<std::vector<double>> starts;
  for (int i = 0; i < n; ++i) {
    std::vector<double> e(static_cast<std::size_t>(n), 0.0);
    e[static_cast<std::size_t>(i)] = 1.0;
    starts.push_back(std::move(e));
  }
  for (int s = 0; s < opts.starts; ++s) {
    starts.push_back(RandomUnitVector(n, opts.seed, static_cast<std::uint64_t>(s)));
  }
  return starts;
}

struct Candidate {
  double value;
  std::vector<double> x;  // normalized for the eigen kind
  double residual;
};

// True when `a` should replace `b` as the best candidate for minimization.
bool BetterMin(const Candidate& a, const Candidate& b) {
  const double tie = 1e-12 * (1.0 + std::abs(b.value));
  if (a.value < b.value - tie) return true;
  if (a.value > b.value + tie) return false;
  if (a.residual != b.residual) return a.residual < b.residual;
  return a.x < b.x;
}

// ---- H-eigenpairs: minimize A x^m / sum x_i^m ---------------------------------

double HResidualUnscaled(const DenseTensor& a, double lambda, std::span<const double> x) {
  std::vector<double> y(x.begin(), x.end());
  ScaleToMNorm(y, a.order());
  return HResidual(a, lambda, y);
}

// One Newton step on [A x^{m-1} - lambda x^{[m-1]}; (sum x^m - 1)/m] = 0.
bool NewtonH(const DenseTensor& a, std::vector<double>& x) {
  const int m = a.order();
  const int n = a.dim();
  std::vector<double> y = x;
  ScaleToMNorm(y, m);
  double lambda = Quotient(a, y);
  double residual = HResidual(a, lambda, y);
  bool improved = false;
  for (int step = 0; step < kNewtonSteps; ++step) {
    const std::vector<double> axm1 = ApplyXm1(a, y);
    const Eigen::MatrixXd axm2 = AsMatrix(ApplyXm2(a, y), n);
    Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(n + 1, n + 1);
    Eigen::VectorXd rhs(n + 1);
    for (int i = 0; i < n; ++i) {
      const double yi = y[static_cast<std::size_t>(i)];
      for (int j = 0; j < n; ++j) jac(i, j) = (m - 1) * axm2(i, j);
      jac(i, i) -= lambda * (m - 1) * std::pow(yi, m - 2);
      jac(i, n) = -std::pow(yi, m - 1);
      jac(n, i) = std::pow(yi, m - 1);
      rhs(i) = -(axm1[static_cast<std::size_t>(i)] - lambda * std::pow(yi, m - 1));
    }
    rhs(n) = -(SumPowers(y, m) - 1.0) / m;
    const Eigen::VectorXd delta = jac.completeOrthogonalDecomposition().solve(rhs);
    if (!delta.allFinite()) break;
    std::vector<double> trial = y;
    for (int i = 0; i < n; ++i) trial[static_cast<std::size_t>(i)] += delta(i);
    if (Norm2(trial) < 1e-12) break;
    ScaleToMNorm(trial, m);
    const double trial_lambda = Quotient(a, trial);
    const double trial_residual = HResidual(a, trial_lambda, trial);
    if (!(trial_residual < residual) ||
        std::abs(trial_lambda - lambda) > 1e-6 * (1.0 + std::abs(lambda))) {
      break;
    }
    y = std::move(trial);
    lambda = trial_lambda;
    residual = trial_residual;
    improved = true;
    if (residual <= 1e-15 * (1.0 + std::abs(lambda))) break;
  }
  if (improved) x = y;
  return improved;
}

Candidate LocalHMin(const DenseTensor& a, std::vector<double> x, const SolverOptions& opts) {
  const int m = a.order();
  const std::size_t n = x.size();
  ScaleTo2Norm(x);
  double value = Quotient(a, x);
  double step = 1.0;
  bool polished = false;
  std::vector<double> grad(n);
  std::vector<double> trial(n);
  for (int iter = 0; iter < opts.max_iter; ++iter) {
    const double residual = HResidualUnscaled(a, value, x);
    if (residual <= opts.tol_residual) break;
    if (!polished && residual <= kPolishThreshold) {
      polished = true;
      if (NewtonH(a, x)) {
        ScaleTo2Norm(x);
        value = Quotient(a, x);
        if (HResidualUnscaled(a, value, x) <= opts.tol_residual) break;
      }
    }
    const std::vector<double> axm1 = ApplyXm1(a, x);
    const double denom = SumPowers(x, m);
    double gnorm2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      grad[i] = m * (axm1[i] - value * std::pow(x[i], m - 1)) / denom;
      gnorm2 += grad[i] * grad[i];
    }
    if (gnorm2 == 0.0) break;
    step = std::min(step * 2.0, 1e6);
    bool accepted = false;
    while (step > 1e-20) {
      for (std::size_t i = 0; i < n; ++i) trial[i] = x[i] - step * grad[i];
      const double norm = Norm2(trial);
      if (norm > 1e-12) {
        for (double& v : trial) v /= norm;
        const double trial_value = Quotient(a, trial);
        if (trial_value <= value - 1e-4 * step * gnorm2) {
          x = trial;
          value = trial_value;
          accepted = true;
          break;
        }
      }
      step *= 0.5;
    }
    if (!accepted) break;
  }
  NewtonH(a, x);
  ScaleToMNorm(x, m);
  CanonicalSign(x);
  const double lambda = Quotient(a, x);
  return Candidate{lambda, x, HResidual(a, lambda, x)};
}

// ---- Z-eigenpairs: maximize A x^m on the unit 2-sphere ------------------------

bool NewtonZ(const DenseTensor& a, std::vector<double>& x) {
  const int m = a.order();
  const int n = a.dim();
  std::vector<double> y = x;
  ScaleTo2Norm(y);
  double lambda = ApplyXm(a, y);
  double residual = ZResidual(a, lambda, y);
  bool improved = false;
  for (int step = 0; step < kNewtonSteps; ++step) {
    const std::vector<double> axm1 = ApplyXm1(a, y);
    Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(n + 1, n + 1);
    Eigen::VectorXd rhs(n + 1);
    if (m >= 2) {
      const Eigen::MatrixXd axm2 = AsMatrix(ApplyXm2(a, y), n);
      jac.topLeftCorner(n, n) = (m - 1) * axm2;
    }
    for (int i = 0; i < n; ++i) {
      const double yi = y[static_cast<std::size_t>(i)];
      jac(i, i) -= lambda;
      jac(i, n) = -yi;
      jac(n, i) = yi;
      rhs(i) = -(axm1[static_cast<std::size_t>(i)] - lambda * yi);
    }
    double yy = 0.0;
    for (double v : y) yy += v * v;
    rhs(n) = -(yy - 1.0) / 2.0;
    const Eigen::VectorXd delta = jac.completeOrthogonalDecomposition().solve(rhs);
    if (!delta.allFinite()) break;
    std::vector<double> trial = y;
    for (int i = 0; i < n; ++i) trial[static_cast<std::size_t>(i)] += delta(i);
    if (Norm2(trial) < 1e-12) break;
    ScaleTo2Norm(trial);
    const double trial_lambda = ApplyXm(a, trial);
    const double trial_residual = ZResidual(a, trial_lambda, trial);
    if (!(trial_residual < residual) ||
        std::abs(trial_lambda - lambda) > 1e-6 * (1.0 + std::abs(lambda))) {
      break;
    }
    y = std::move(trial);
    lambda = trial_lambda;
    residual = trial_residual;
    improved = true;
    if (residual <= 1e-15 * (1.0 + std::abs(lambda))) break;
  }
  if (improved) x = y;
  return improved;
}

Candidate LocalZMax(const DenseTensor& a, std::vector<double> x, double shift,
                    const SolverOptions& opts) {
  ScaleTo2Norm(x);
  double lambda = ApplyXm(a, x);
  bool polished = false;
  for (int iter = 0; iter < opts.max_iter; ++iter) {
    const double residual = ZResidual(a, lambda, x);
    if (residual <= opts.tol_residual) break;
    if (!polished && residual <= kPolishThreshold) {
      polished = true;
      if (NewtonZ(a, x)) {
        lambda = ApplyXm(a, x);
        if (ZResidual(a, lambda, x) <= opts.tol_residual) break;
      }
    }
    std::vector<double> next = ApplyXm1(a, x);
    for (std::size_t i = 0; i < next.size(); ++i) next[i] += shift * x[i];
    if (Norm2(next) < 1e-300) break;
    ScaleTo2Norm(next);
    x = std::move(next);
    lambda = ApplyXm(a, x);
  }
  NewtonZ(a, x);
  ScaleTo2Norm(x);
  if (a.order() % 2 == 0) CanonicalSign(x);
  // Report the max as a minimization candidate of -lambda.
  const double value = ApplyXm(a, x);
  return Candidate{-value, x, ZResidual(a, value, x)};
}

template <typename Local>
Candidate BestOverStarts(const DenseTensor& a, const SolverOptions& opts, Local&& local,
                         int& starts_used) {
  const auto starts = StartingPoints(a.dim(), opts);
  starts_used = static_cast<int>(starts.size());
  std::vector<Candidate> results(starts.size(), Candidate{0.0, {}, 0.0});
  ParallelFor(starts.size(), opts.jobs, [&](std::size_t i) { results[i] = local(starts[i]); });
  Candidate best = results.front();
  for (std::size_t i = 1; i < results.size(); ++i) {
    if (BetterMin(results[i], best)) best = results[i];
  }
  return best;
}

void RequireEvenOrder(const DenseTensor& a, const char* op) {
  if (a.order() % 2 != 0) {
    throw UnsupportedOrderError(std::string(op) + " requires even order, got " +
                                std::to_string(a.order()));
  }
}

}  // namespace

std::vector<Disk> GershgorinDisks(const DenseTensor& a) {
  const int n = a.dim();
  std::vector<Disk> disks(static_cast<std::size_t>(n));
  const std::size_t slice = a.size() / static_cast<std::size_t>(n);
  for (int i = 0; i < n; ++i) {
    const std::vector<int> diagonal(static_cast<std::size_t>(a.order()), i);
    const std::size_t diag_linear = a.LinearIndex(diagonal);
    double radius = 0.0;
    for (std::size_t k = 0; k < slice; ++k) {
      const std::size_t linear = static_cast<std::size_t>(i) * slice + k;
      if (linear != diag_linear) radius += std::abs(a[linear]);
    }
    disks[static_cast<std::size_t>(i)] = Disk{a[diag_linear], radius};
  }
  return disks;
}

double HMinLowerBound(const DenseTensor& a) {
  RequireSymmetric(a, "HMinLowerBound");
  double lower = std::numeric_limits<double>::infinity();
  for (const Disk& d : GershgorinDisks(a)) lower = std::min(lower, d.center - d.radius);
  return lower;
}

double RhoHUpperBound(const DenseTensor& a) {
  RequireSymmetric(a, "RhoHUpperBound");
  double upper = 0.0;
  for (const Disk& d : GershgorinDisks(a)) upper = std::max(upper, std::abs(d.center) + d.radius);
  return upper;
}

double HResidual(const DenseTensor& a, double lambda, std::span<const double> x) {
  const std::vector<double> axm1 = ApplyXm1(a, x);
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = axm1[i] - lambda * std::pow(x[i], a.order() - 1);
    s += r * r;
  }
  return std::sqrt(s);
}

double ZResidual(const DenseTensor& a, double lambda, std::span<const double> x) {
  const std::vector<double> axm1 = ApplyXm1(a, x);
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = axm1[i] - lambda * x[i];
    s += r * r;
  }
  return std::sqrt(s);
}

EigenEstimate ExtremeHEigen(const DenseTensor& a, Extreme which, const SolverOptions& opts) {
  RequireSymmetric(a, "ExtremeHEigen");
  RequireEvenOrder(a, "ExtremeHEigen");
  const DenseTensor target = which == Extreme::kMin ? a : -a;
  int starts_used = 0;
  const Candidate best = BestOverStarts(
      target, opts, [&](const std::vector<double>& x0) { return LocalHMin(target, x0, opts); },
      starts_used);
  EigenEstimate est;
  est.kind = EigenKind::kH;
  est.vector = best.x;
  est.value = which == Extreme::kMin ? best.value : -best.value;
  est.residual = HResidual(a, est.value, est.vector);
  est.converged = est.residual <= opts.tol_residual;
  est.starts_used = starts_used;
  return est;
}

EigenEstimate ExtremeZEigen(const DenseTensor& a, Extreme which, const SolverOptions& opts) {
  RequireSymmetric(a, "ExtremeZEigen");
  const DenseTensor target = which == Extreme::kMax ? a : -a;
  // Kolda-Mayo convexity: shift > (m-1) max_x rho(A x^{m-2}), bounded by the slice sums.
  const double shift = (target.order() - 1) * RhoHUpperBound(target) + 1.0;
  int starts_used = 0;
  const Candidate best = BestOverStarts(
      target, opts,
      [&](const std::vector<double>& x0) { return LocalZMax(target, x0, shift, opts); },
      starts_used);
  EigenEstimate est;
  est.kind = EigenKind::kZ;
  est.vector = best.x;
  // best.value is -lambda_max(target).
  est.value = which == Extreme::kMax ? -best.value : best.value;
  est.residual = ZResidual(a, est.value, est.vector);
  est.converged = est.residual <= opts.tol_residual;
  est.starts_used = starts_used;
  return est;
}

GBracket GBracketOf(const DenseTensor& a, const SolverOptions& opts) {
  RequireEvenOrder(a, "GBracketOf");
  const DenseTensor sym = Symmetrize(a);
  const EigenEstimate est = ExtremeHEigen(sym, Extreme::kMin, opts);
  return GBracket{HMinLowerBound(sym), est.value, est.vector};
}

}  // namespace itc
