#include "itc/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>

#include <Eigen/Dense>

#include "itc/errors.hpp"

namespace itc {
namespace {

constexpr std::uint64_t kSampleSeed = 0x5eed5eedULL;

void Normalize(std::vector<double>& x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  s = std::sqrt(s);
  for (double& v : x) v /= s;
}

std::vector<std::vector<double>> SpherePoints(int n, int resolution) {
  std::vector<std::vector<double>> points;
  const double pi = std::numbers::pi;
  if (n == 1) {
    points.push_back({1.0});
  } else if (n == 2) {
    for (int k = 0; k < resolution; ++k) {
      const double t = pi * k / resolution;
      points.push_back({std::cos(t), std::sin(t)});
    }
  } else if (n == 3) {
    const int polar = std::max(resolution, 2);
    for (int i = 0; i < polar; ++i) {
      const double phi = pi * i / (polar - 1);
      const int azimuths = (i == 0 || i == polar - 1) ? 1 : resolution;
      for (int j = 0; j < azimuths; ++j) {
        const double theta = 2.0 * pi * j / resolution;
        points.push_back({std::sin(phi) * std::cos(theta), std::sin(phi) * std::sin(theta),
                          std::cos(phi)});
      }
    }
  } else {
    std::mt19937_64 rng(kSampleSeed + static_cast<std::uint64_t>(n));
    std::normal_distribution<double> normal;
    const long count = static_cast<long>(resolution) * resolution;
    for (long k = 0; k < count; ++k) {
      std::vector<double> x(static_cast<std::size_t>(n));
      for (double& v : x) v = normal(rng);
      Normalize(x);
      points.push_back(std::move(x));
    }
  }
  return points;
}

void CompassRefine(const std::function<double(std::span<const double>)>& fn, SphereMinimum& best,
                   double step) {
  const std::size_t n = best.argmin.size();
  std::vector<double> trial(n);
  while (step > 1e-12) {
    bool improved = false;
    for (std::size_t i = 0; i < n && !improved; ++i) {
      for (double sign : {1.0, -1.0}) {
        trial = best.argmin;
        trial[i] += sign * step;
        Normalize(trial);
        const double v = fn(trial);
        if (v < best.value) {
          best.value = v;
          best.argmin = trial;
          improved = true;
          break;
        }
      }
    }
    if (!improved) step *= 0.5;
  }
}

void RequireEvenOrder(int order, const char* op) {
  if (order % 2 != 0) {
    throw UnsupportedOrderError(std::string(op) + " requires an even order");
  }
}

Status Classify(double minimum, double tolerance) {
  if (minimum > tolerance) return Status::kPd;
  if (minimum < -tolerance) return Status::kNotPsd;
  return Status::kPsdNotPd;
}

}  // namespace

SphereMinimum SphereGridMin(const std::function<double(std::span<const double>)>& fn, int n,
                            int resolution, bool refine) {
  if (n < 1 || resolution < 1) throw InputError("SphereGridMin needs n >= 1 and resolution >= 1");
  SphereMinimum best;
  best.value = std::numeric_limits<double>::infinity();
  for (auto& x : SpherePoints(n, resolution)) {
    const double v = fn(x);
    if (v < best.value) {
      best.value = v;
      best.argmin = std::move(x);
    }
  }
  if (refine && n > 1) CompassRefine(fn, best, std::numbers::pi / resolution);
  return best;
}

namespace {

double MNormPower(std::span<const double> x, int m) {
  double s = 0.0;
  for (double v : x) s += std::pow(v, m);
  return s;
}

// Minimizes a degree-m form over {x : sum x_i^m = 1} through the Euclidean
// sample: f(x) / sum x_i^m is constant along rays.
SphereMinimum OnMNormSphere(const std::function<double(std::span<const double>)>& form, int m,
                            int n, int resolution, bool refine) {
  SphereMinimum best = SphereGridMin(
      [&](std::span<const double> x) { return form(x) / MNormPower(x, m); }, n, resolution,
      refine);
  const double scale = std::pow(MNormPower(best.argmin, m), -1.0 / m);
  for (double& v : best.argmin) v *= scale;
  return best;
}

}  // namespace

SphereMinimum OracleSphereMin(const DenseTensor& a, int resolution, bool refine) {
  RequireEvenOrder(a.order(), "OracleSphereMin");
  return OnMNormSphere(
      [&](std::span<const double> x) { return ApplyXm(a, x); }, a.order(), a.dim(), resolution,
      refine);
}

SphereMinimum OracleSphereMin(const IntervalTensor& interval, int resolution, bool refine) {
  RequireEvenOrder(interval.order(), "OracleSphereMin");
  return OnMNormSphere(
      [&](std::span<const double> x) { return WorstCaseValue(interval, x); }, interval.order(),
      interval.dim(), resolution, refine);
}

Verdict OracleExtremePointsPd(const IntervalTensor& interval, DefinitenessMode mode,
                              const OracleOptions& opts) {
  RequireEvenOrder(interval.order(), "OracleExtremePointsPd");
  (void)mode;
  const int n = interval.dim();
  Verdict verdict;
  verdict.status = Status::kPd;
  verdict.AddCertificate("extreme_point_oracle");
  for (const DenseTensor& a : EnumerateExtremePoints(interval, opts.cap)) {
    SphereMinimum m;
    if (a.order() == 2) {
      Eigen::MatrixXd mat(n, n);
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          const int ij[] = {i, j};
          const int ji[] = {j, i};
          mat(i, j) = 0.5 * (a.at(ij) + a.at(ji));
        }
      }
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(mat);
      m.value = solver.eigenvalues()(0);
      const Eigen::VectorXd v = solver.eigenvectors().col(0);
      m.argmin.assign(v.data(), v.data() + n);
    } else {
      m = OracleSphereMin(a, opts.resolution, true);
    }
    const Status s = Classify(m.value, opts.tolerance);
    if (s == Status::kNotPsd) {
      verdict.status = Status::kNotPsd;
      verdict.witness = m.argmin;
      return verdict;
    }
    if (s == Status::kPsdNotPd) verdict.status = Status::kPsdNotPd;
  }
  return verdict;
}

}  // namespace itc
