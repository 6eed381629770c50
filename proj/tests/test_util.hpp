#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "itc/interval.hpp"
#include "itc/verdict.hpp"

namespace itc::testing {

inline std::vector<double> RandomVector(int n, std::mt19937_64& rng, double scale = 1.0) {
  std::uniform_real_distribution<double> u(-scale, scale);
  std::vector<double> x(static_cast<std::size_t>(n));
  for (double& v : x) v = u(rng);
  return x;
}

inline DenseTensor RandomTensor(int order, int dim, std::mt19937_64& rng, double scale = 1.0) {
  const std::size_t size = static_cast<std::size_t>(std::pow(dim, order) + 0.5);
  std::uniform_real_distribution<double> u(-scale, scale);
  std::vector<double> entries(size);
  for (double& v : entries) v = u(rng);
  return DenseTensor(order, dim, std::move(entries));
}

/// Random tensor plus `shift` on every diagonal entry.
inline DenseTensor ShiftedTensor(int order, int dim, std::mt19937_64& rng, double shift,
                                 double scale = 1.0) {
  DenseTensor a = RandomTensor(order, dim, rng, scale);
  std::vector<double> entries(a.entries().begin(), a.entries().end());
  std::vector<int> diagonal(static_cast<std::size_t>(order));
  for (int i = 0; i < dim; ++i) {
    std::fill(diagonal.begin(), diagonal.end(), i);
    entries[a.LinearIndex(diagonal)] += shift;
  }
  return DenseTensor(order, dim, std::move(entries));
}

inline DenseTensor RandomRadius(int order, int dim, std::mt19937_64& rng, double scale) {
  DenseTensor r = RandomTensor(order, dim, rng, scale);
  return Abs(r);
}

/// Radius positive at `free` random positions only.
inline DenseTensor SparseRadius(int order, int dim, int free, std::mt19937_64& rng, double scale) {
  const std::size_t size = static_cast<std::size_t>(std::pow(dim, order) + 0.5);
  std::vector<double> entries(size, 0.0);
  std::uniform_real_distribution<double> u(0.05 * scale, scale);
  std::vector<std::size_t> positions(size);
  for (std::size_t k = 0; k < size; ++k) positions[k] = k;
  std::shuffle(positions.begin(), positions.end(), rng);
  for (int k = 0; k < free && static_cast<std::size_t>(k) < size; ++k) {
    entries[positions[static_cast<std::size_t>(k)]] = u(rng);
  }
  return DenseTensor(order, dim, std::move(entries));
}

/// Closed-form square sums for the A^z forms of the theorem boundary
/// instances, written for a general sign vector z.
inline double SosForm(const std::string& clause, std::span<const int> z, std::span<const double> x) {
  const double x1 = x[0], x2 = x[1], x3 = x[2];
  const double z12 = z[0] * z[1], z23 = z[1] * z[2], z13 = z[0] * z[2];
  auto sq = [](double v) { return v * v; };
  if (clause == "theorem-5.1") return 6.0 * sq(x1 * x2 - z23 * x1 * x3);
  if (clause == "theorem-5.2a") return sq(2.0 * x2 * x3 - z23 * x3 * x3);
  if (clause == "theorem-5.2b") {
    return sq(2.0 * x2 * x3 - z23 * x3 * x3) + 6.0 * sq(x1 * x2 - z23 * x1 * x3);
  }
  if (clause == "theorem-5.3a") {
    return sq(x2 * x2 - 2.0 * z23 * x2 * x3 + x3 * x3) + 6.0 * sq(x1 * x2 - z23 * x1 * x3);
  }
  if (clause == "theorem-5.3b") {
    return sq(x2 * x2 - 2.0 * z13 * x1 * x3) +
           sq(x3 * x3 - 2.0 * z23 * x2 * x3 + 2.0 * z23 * z13 * x1 * x2) +
           2.0 * sq(x1 * x3 - z23 * z13 * x2 * x3);
  }
  if (clause == "theorem-5.4a") {
    return sq(x1 * x1 - 2.0 * z12 * x1 * x2) + sq(x2 * x2 - 2.0 * z23 * x2 * x3) +
           sq(x3 * x3 - 2.0 * z13 * x1 * x3);
  }
  if (clause == "theorem-5.4b") {
    return sq(x1 * x1 - 2.0 * z12 * x1 * x2 + x3 * x3) +
           sq(x2 * x2 - 2.0 * z23 * x2 * x3 + 2.0 * z12 * z23 * x1 * x3) +
           2.0 * sq(x2 * x3 - z12 * z23 * x1 * x2);
  }
  return std::nan("");
}

/// Independent worst-case evaluation: A_c x^m - sum delta |x_i1 ... x_im|,
/// summed over all index tuples directly.
inline double BruteWorstCase(const IntervalTensor& interval, std::span<const double> x) {
  const DenseTensor& c = interval.center();
  const DenseTensor& r = interval.radius();
  double total = 0.0;
  for (std::size_t k = 0; k < c.size(); ++k) {
    double prod = 1.0;
    for (int i : c.MultiIndex(k)) prod *= x[static_cast<std::size_t>(i)];
    total += c[k] * prod - r[k] * std::abs(prod);
  }
  return total;
}

/// Records every refutation seen by a test binary and whether its witness
/// recomputes below -1e-12.
struct WitnessLedger {
  int checked = 0;
  int failures = 0;
  std::vector<std::string> failure_notes;

  /// `interval` is the set whose worst case must be negative at the witness
  /// (for stability verdicts, the negated interval).
  void Record(const Verdict& verdict, const IntervalTensor& interval, const std::string& where) {
    if (verdict.status != Status::kNotPsd && verdict.status != Status::kNotStable) return;
    ++checked;
    if (!verdict.witness || BruteWorstCase(interval, *verdict.witness) >= -1e-12) {
      ++failures;
      failure_notes.push_back(where);
    }
  }
};

inline WitnessLedger& GlobalWitnessLedger() {
  static WitnessLedger ledger;
  return ledger;
}

}  // namespace itc::testing
