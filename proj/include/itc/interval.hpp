#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "itc/tensor.hpp"

namespace itc {

/// A vector of +1/-1 entries; acts on tensors as the diagonal matrix T_z.
class SignVector {
 public:
  explicit SignVector(std::vector<int> signs);

  std::size_t size() const { return signs_.size(); }
  int operator[](std::size_t i) const { return signs_[i]; }
  std::span<const int> signs() const { return signs_; }
  SignVector Negated() const;
  /// First entry is +1.
  bool IsCanonical() const { return !signs_.empty() && signs_.front() == 1; }
  /// e.g. "(1,-1,1)".
  std::string ToString() const;

  friend bool operator==(const SignVector&, const SignVector&) = default;

 private:
  std::vector<int> signs_;
};

/// sgn with sgn(0) = +1.
SignVector SignOf(std::span<const double> x);

/// Sign vectors in lexicographic order with +1 before -1. With `canonical`
/// only the 2^{n-1} vectors whose first entry is +1 are returned.
std::vector<SignVector> EnumerateSignVectors(int n, bool canonical);

enum class VertexMode { kMinus, kPlus };

/**
 * @brief Interval tensor [center - radius, center + radius].
 *
 * The radius is nonnegative in every entry. The interval is symmetric when
 * both center and radius are symmetric tensors.
 */
class IntervalTensor {
 public:
  IntervalTensor(DenseTensor center, DenseTensor radius);

  /// Throws InputError naming the first (1-based) index where lower > upper.
  static IntervalTensor FromBounds(const DenseTensor& lower, const DenseTensor& upper);
  static IntervalTensor Point(DenseTensor center);

  const DenseTensor& center() const { return center_; }
  const DenseTensor& radius() const { return radius_; }
  DenseTensor Lower() const { return center_ - radius_; }
  DenseTensor Upper() const { return center_ + radius_; }
  int order() const { return center_.order(); }
  int dim() const { return center_.dim(); }

  bool IsSymmetric() const { return center_.IsSymmetric() && radius_.IsSymmetric(); }
  /// True iff lower <= a <= upper in every entry.
  bool Contains(const DenseTensor& a) const;

 private:
  DenseTensor center_;
  DenseTensor radius_;
};

/// [-upper, -lower]: center negated, radius kept.
IntervalTensor Negate(const IntervalTensor& interval);

/// kMinus: A^z = A_c - radius x T_z...; kPlus: the plus-signed counterpart.
DenseTensor VertexTensor(const IntervalTensor& interval, const SignVector& z, VertexMode mode);

/// Interval with symmetrized center and radius.
IntervalTensor SymmetrizedInterval(const IntervalTensor& interval);

/// Uniform draw from each entry's [lower, upper]; deterministic per seed.
DenseTensor SampleMember(const IntervalTensor& interval, std::uint64_t seed);

/// min over members A of A x^m, i.e. A_c x^m - radius |x|^m. Even order only.
double WorstCaseValue(const IntervalTensor& interval, std::span<const double> x);

inline constexpr std::uint64_t kDefaultExtremePointCap = std::uint64_t{1} << 20;

/// Number of entries with positive radius.
int FreeEntryCount(const IntervalTensor& interval);

/// Every tensor taking a bound value in each entry (2^k of them for k free
/// entries). Throws CapExceededError when 2^k > cap.
std::vector<DenseTensor> EnumerateExtremePoints(const IntervalTensor& interval,
                                                std::uint64_t cap = kDefaultExtremePointCap);

}  // namespace itc
