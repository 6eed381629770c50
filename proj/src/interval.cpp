#include "itc/interval.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "itc/errors.hpp"

namespace itc {
namespace {

std::string OneBased(const std::vector<int>& index) {
  std::ostringstream out;
  out << "(";
  for (std::size_t k = 0; k < index.size(); ++k) out << (k ? "," : "") << index[k] + 1;
  out << ")";
  return out.str();
}

}  // namespace

SignVector::SignVector(std::vector<int> signs) : signs_(std::move(signs)) {
  if (signs_.empty()) throw InputError("sign vector must be nonempty");
  for (int s : signs_) {
    if (s != 1 && s != -1) throw InputError("sign vector entries must be +1 or -1");
  }
}

SignVector SignVector::Negated() const {
  std::vector<int> out(signs_);
  for (int& s : out) s = -s;
  return SignVector(std::move(out));
}

std::string SignVector::ToString() const {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < signs_.size(); ++i) out << (i ? "," : "") << signs_[i];
  out << ")";
  return out.str();
}

SignVector SignOf(std::span<const double> x) {
  std::vector<int> signs(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) signs[i] = x[i] >= 0.0 ? 1 : -1;
  return SignVector(std::move(signs));
}

std::vector<SignVector> EnumerateSignVectors(int n, bool canonical) {
  if (n < 1) throw InputError("sign vector length must be positive");
  if (n > 30) throw InputError("sign vector enumeration limited to n <= 30");
  const int free_bits = canonical ? n - 1 : n;
  const std::uint64_t count = std::uint64_t{1} << free_bits;
  std::vector<SignVector> out;
  out.reserve(count);
  for (std::uint64_t code = 0; code < count; ++code) {
    std::vector<int> signs(static_cast<std::size_t>(n), 1);
    // The last coordinate is the least significant bit; bit set means -1.
    for (int b = 0; b < free_bits; ++b) {
      if ((code >> b) & 1U) signs[static_cast<std::size_t>(n - 1 - b)] = -1;
    }
    out.emplace_back(std::move(signs));
  }
  return out;
}

IntervalTensor::IntervalTensor(DenseTensor center, DenseTensor radius)
    : center_(std::move(center)), radius_(std::move(radius)) {
  if (!center_.SameShape(radius_)) {
    throw InputError("interval center and radius must have the same order and dimension");
  }
  for (std::size_t i = 0; i < radius_.size(); ++i) {
    if (!(radius_[i] >= 0.0)) {
      throw InputError("interval radius is negative at index " +
                       OneBased(radius_.MultiIndex(i)));
    }
  }
}

IntervalTensor IntervalTensor::FromBounds(const DenseTensor& lower, const DenseTensor& upper) {
  if (!lower.SameShape(upper)) {
    throw InputError("interval bounds must have the same order and dimension");
  }
  for (std::size_t i = 0; i < lower.size(); ++i) {
    if (!(lower[i] <= upper[i])) {
      throw InputError("lower bound exceeds upper bound at index " +
                       OneBased(lower.MultiIndex(i)));
    }
  }
  return IntervalTensor(0.5 * (lower + upper), 0.5 * (upper - lower));
}

IntervalTensor IntervalTensor::Point(DenseTensor center) {
  DenseTensor radius(center.order(), center.dim());
  return IntervalTensor(std::move(center), std::move(radius));
}

bool IntervalTensor::Contains(const DenseTensor& a) const {
  return a.SameShape(center_) && Leq(Lower(), a) && Leq(a, Upper());
}

IntervalTensor Negate(const IntervalTensor& interval) {
  return IntervalTensor(-interval.center(), interval.radius());
}

DenseTensor VertexTensor(const IntervalTensor& interval, const SignVector& z, VertexMode mode) {
  const DenseTensor signed_radius = ModeProductSigns(interval.radius(), z.signs());
  return mode == VertexMode::kMinus ? interval.center() - signed_radius
                                    : interval.center() + signed_radius;
}

IntervalTensor SymmetrizedInterval(const IntervalTensor& interval) {
  return IntervalTensor(Symmetrize(interval.center()), Symmetrize(interval.radius()));
}

DenseTensor SampleMember(const IntervalTensor& interval, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  const DenseTensor lower = interval.Lower();
  const DenseTensor upper = interval.Upper();
  std::vector<double> out(interval.center().size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double draw = unit(rng);
    if (interval.radius()[i] == 0.0) {
      out[i] = interval.center()[i];
    } else {
      out[i] = std::clamp(interval.center()[i] + draw * interval.radius()[i], lower[i], upper[i]);
    }
  }
  return DenseTensor(interval.order(), interval.dim(), std::move(out));
}

double WorstCaseValue(const IntervalTensor& interval, std::span<const double> x) {
  if (interval.order() % 2 != 0) {
    throw UnsupportedOrderError("worst-case value requires even order");
  }
  std::vector<double> magnitude(x.size());
  std::transform(x.begin(), x.end(), magnitude.begin(), [](double v) { return std::abs(v); });
  return ApplyXm(interval.center(), x) - ApplyXm(interval.radius(), magnitude);
}

int FreeEntryCount(const IntervalTensor& interval) {
  const auto r = interval.radius().entries();
  return static_cast<int>(std::count_if(r.begin(), r.end(), [](double v) { return v > 0.0; }));
}

std::vector<DenseTensor> EnumerateExtremePoints(const IntervalTensor& interval,
                                                std::uint64_t cap) {
  std::vector<std::size_t> free;
  for (std::size_t i = 0; i < interval.radius().size(); ++i) {
    if (interval.radius()[i] > 0.0) free.push_back(i);
  }
  const std::uint64_t k = free.size();
  if (k >= 63 || (std::uint64_t{1} << k) > cap) {
    throw CapExceededError("extreme-point enumeration refused: 2^" + std::to_string(k) +
                               " tensors exceed the cap of " + std::to_string(cap),
                           k);
  }
  const DenseTensor lower = interval.Lower();
  const DenseTensor upper = interval.Upper();
  std::vector<DenseTensor> out;
  out.reserve(std::size_t{1} << k);
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << k); ++code) {
    std::vector<double> values(lower.entries().begin(), lower.entries().end());
    for (std::uint64_t b = 0; b < k; ++b) {
      if ((code >> b) & 1U) values[free[b]] = upper[free[b]];
    }
    out.emplace_back(interval.order(), interval.dim(), std::move(values));
  }
  return out;
}

}  // namespace itc
