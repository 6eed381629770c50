#include "itc/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <string>
#include <unordered_set>

#include "itc/errors.hpp"

namespace itc {
namespace {

std::size_t CheckedPower(int dim, int order) {
  std::size_t count = 1;
  for (int k = 0; k < order; ++k) {
    if (count > (std::size_t{1} << 40) / static_cast<std::size_t>(dim)) {
      throw InputError("tensor too large: " + std::to_string(dim) + "^" +
                       std::to_string(order) + " entries");
    }
    count *= static_cast<std::size_t>(dim);
  }
  return count;
}

void CheckShapeArgs(int order, int dim) {
  if (order < 1) throw InputError("tensor order must be positive, got " + std::to_string(order));
  if (dim < 1) throw InputError("tensor dimension must be positive, got " + std::to_string(dim));
}

void RequireSameShape(const DenseTensor& a, const DenseTensor& b, const char* op) {
  if (!a.SameShape(b)) {
    std::ostringstream msg;
    msg << op << ": shape mismatch (order " << a.order() << ", dim " << a.dim()
        << ") vs (order " << b.order() << ", dim " << b.dim() << ")";
    throw InputError(msg.str());
  }
}

void RequireVectorLength(const DenseTensor& a, std::size_t len, const char* op) {
  if (len != static_cast<std::size_t>(a.dim())) {
    throw InputError(std::string(op) + ": vector length " + std::to_string(len) +
                     " does not match tensor dimension " + std::to_string(a.dim()));
  }
}

// Contracts the last index of a row-major block against x.
std::vector<double> ContractLast(std::span<const double> values, std::span<const double> x) {
  const std::size_t n = x.size();
  std::vector<double> out(values.size() / n, 0.0);
  for (std::size_t r = 0; r < out.size(); ++r) {
    const double* row = values.data() + r * n;
    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) acc += row[j] * x[j];
    out[r] = acc;
  }
  return out;
}

std::vector<double> ContractTrailing(const DenseTensor& a, std::span<const double> x,
                                     int keep) {
  std::vector<double> values(a.entries().begin(), a.entries().end());
  for (int k = a.order(); k > keep; --k) values = ContractLast(values, x);
  return values;
}

Symmetry CombinedSymmetry(const DenseTensor& a, const DenseTensor& b) {
  return a.symmetry() == Symmetry::kSymmetric && b.symmetry() == Symmetry::kSymmetric
             ? Symmetry::kSymmetric
             : Symmetry::kUnknown;
}

Symmetry PreservedSymmetry(const DenseTensor& a) {
  return a.symmetry() == Symmetry::kSymmetric ? Symmetry::kSymmetric : Symmetry::kUnknown;
}

}  // namespace

DenseTensor::DenseTensor(int order, int dim) : order_(order), dim_(dim) {
  CheckShapeArgs(order, dim);
  entries_.assign(CheckedPower(dim, order), 0.0);
  // The zero tensor is trivially symmetric.
  symmetry_ = Symmetry::kSymmetric;
}

DenseTensor::DenseTensor(int order, int dim, std::vector<double> entries)
    : DenseTensor(order, dim, std::move(entries), Symmetry::kUnknown) {}

DenseTensor::DenseTensor(int order, int dim, std::vector<double> entries, Symmetry symmetry)
    : order_(order), dim_(dim), entries_(std::move(entries)), symmetry_(symmetry) {
  CheckShapeArgs(order, dim);
  const std::size_t expected = CheckedPower(dim, order);
  if (entries_.size() != expected) {
    throw InputError("expected " + std::to_string(expected) + " entries for order " +
                     std::to_string(order) + ", dim " + std::to_string(dim) + "; got " +
                     std::to_string(entries_.size()));
  }
}

DenseTensor DenseTensor::FromCoo(int order, int dim, std::span<const CooEntry> entries) {
  if (order < 2) throw InputError("tensor order must be at least 2, got " + std::to_string(order));
  CheckShapeArgs(order, dim);
  std::vector<double> values(CheckedPower(dim, order), 0.0);
  std::unordered_set<std::size_t> seen;
  DenseTensor shape(order, dim, std::vector<double>(values.size(), 0.0), Symmetry::kUnknown);
  for (const CooEntry& entry : entries) {
    if (entry.index.size() != static_cast<std::size_t>(order)) {
      throw InputError("index tuple has " + std::to_string(entry.index.size()) +
                       " components, expected " + std::to_string(order));
    }
    std::vector<int> zero_based(entry.index.size());
    for (std::size_t k = 0; k < entry.index.size(); ++k) {
      const int i = entry.index[k];
      if (i < 1 || i > dim) {
        throw InputError("index component " + std::to_string(i) + " outside [1, " +
                         std::to_string(dim) + "]");
      }
      zero_based[k] = i - 1;
    }
    const std::size_t linear = shape.LinearIndex(zero_based);
    if (!seen.insert(linear).second) {
      std::ostringstream msg;
      msg << "duplicate index tuple (";
      for (std::size_t k = 0; k < entry.index.size(); ++k) {
        msg << (k ? "," : "") << entry.index[k];
      }
      msg << ")";
      throw InputError(msg.str());
    }
    values[linear] = entry.value;
  }
  return DenseTensor(order, dim, std::move(values), Symmetry::kUnknown);
}

double DenseTensor::at(std::span<const int> index) const {
  return entries_[LinearIndex(index)];
}

std::size_t DenseTensor::LinearIndex(std::span<const int> index) const {
  if (index.size() != static_cast<std::size_t>(order_)) {
    throw InputError("index tuple has wrong length");
  }
  std::size_t linear = 0;
  for (int i : index) {
    if (i < 0 || i >= dim_) throw InputError("index component out of range");
    linear = linear * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(i);
  }
  return linear;
}

std::vector<int> DenseTensor::MultiIndex(std::size_t linear) const {
  std::vector<int> index(static_cast<std::size_t>(order_));
  for (int k = order_ - 1; k >= 0; --k) {
    index[static_cast<std::size_t>(k)] = static_cast<int>(linear % static_cast<std::size_t>(dim_));
    linear /= static_cast<std::size_t>(dim_);
  }
  return index;
}

bool DenseTensor::IsSymmetric() const {
  if (symmetry_ != Symmetry::kUnknown) return symmetry_ == Symmetry::kSymmetric;
  // Comparing every entry with its sorted-index representative covers all permutations.
  for (std::size_t linear = 0; linear < entries_.size(); ++linear) {
    std::vector<int> index = MultiIndex(linear);
    std::sort(index.begin(), index.end());
    if (std::abs(entries_[linear] - entries_[LinearIndex(index)]) > kSymmetryTolerance) {
      return false;
    }
  }
  return true;
}

DenseTensor DenseTensor::WithVerifiedSymmetry() const {
  return DenseTensor(order_, dim_, entries_,
                     IsSymmetric() ? Symmetry::kSymmetric : Symmetry::kAsymmetric);
}

void RequireSymmetric(const DenseTensor& a, const char* operation) {
  if (!a.IsSymmetric()) {
    throw PreconditionError(std::string(operation) + " requires a symmetric tensor");
  }
}

namespace {

bool ExactlySymmetric(const DenseTensor& a) {
  if (a.symmetry() == Symmetry::kAsymmetric) return false;
  for (std::size_t linear = 0; linear < a.size(); ++linear) {
    std::vector<int> index = a.MultiIndex(linear);
    std::sort(index.begin(), index.end());
    if (a[linear] != a.at(index)) return false;
  }
  return true;
}

}  // namespace

DenseTensor Symmetrize(const DenseTensor& a) {
  const int m = a.order();
  // Averaging equal values can still round; keep exactly symmetric input as is.
  if (ExactlySymmetric(a)) {
    return TensorAccess::Make(m, a.dim(), {a.entries().begin(), a.entries().end()},
                              Symmetry::kSymmetric);
  }
  std::vector<int> positions(static_cast<std::size_t>(m));
  std::vector<double> out(a.size(), 0.0);
  std::vector<int> permuted(static_cast<std::size_t>(m));
  double factorial = 1.0;
  for (int k = 2; k <= m; ++k) factorial *= k;

  // One average per index multiset, copied to every permutation.
  for (std::size_t linear = 0; linear < a.size(); ++linear) {
    std::vector<int> index = a.MultiIndex(linear);
    if (!std::is_sorted(index.begin(), index.end())) {
      std::sort(index.begin(), index.end());
      out[linear] = out[a.LinearIndex(index)];
      continue;
    }
    std::iota(positions.begin(), positions.end(), 0);
    double sum = 0.0;
    do {
      for (std::size_t k = 0; k < positions.size(); ++k) {
        permuted[k] = index[static_cast<std::size_t>(positions[k])];
      }
      sum += a.at(permuted);
    } while (std::next_permutation(positions.begin(), positions.end()));
    out[linear] = sum / factorial;
  }
  return TensorAccess::Make(m, a.dim(), std::move(out), Symmetry::kSymmetric);
}

double ApplyXm(const DenseTensor& a, std::span<const double> x) {
  RequireVectorLength(a, x.size(), "ApplyXm");
  return ContractTrailing(a, x, 0).front();
}

std::vector<double> ApplyXm1(const DenseTensor& a, std::span<const double> x) {
  RequireVectorLength(a, x.size(), "ApplyXm1");
  return ContractTrailing(a, x, 1);
}

std::vector<double> ApplyXm2(const DenseTensor& a, std::span<const double> x) {
  RequireVectorLength(a, x.size(), "ApplyXm2");
  if (a.order() < 2) throw PreconditionError("ApplyXm2 requires order >= 2");
  return ContractTrailing(a, x, 2);
}

DenseTensor ModeProductSigns(const DenseTensor& a, std::span<const int> z) {
  RequireVectorLength(a, z.size(), "ModeProductSigns");
  for (int s : z) {
    if (s != 1 && s != -1) throw InputError("sign vector entries must be +1 or -1");
  }
  std::vector<double> out(a.entries().begin(), a.entries().end());
  for (std::size_t linear = 0; linear < out.size(); ++linear) {
    int sign = 1;
    for (int i : a.MultiIndex(linear)) sign *= z[static_cast<std::size_t>(i)];
    if (sign < 0) out[linear] = -out[linear];
  }
  return TensorAccess::Make(a.order(), a.dim(), std::move(out), PreservedSymmetry(a));
}

DenseTensor operator+(const DenseTensor& a, const DenseTensor& b) {
  RequireSameShape(a, b, "add");
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] + b[i];
  return TensorAccess::Make(a.order(), a.dim(), std::move(out), CombinedSymmetry(a, b));
}

DenseTensor operator-(const DenseTensor& a, const DenseTensor& b) {
  RequireSameShape(a, b, "subtract");
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] - b[i];
  return TensorAccess::Make(a.order(), a.dim(), std::move(out), CombinedSymmetry(a, b));
}

DenseTensor operator-(const DenseTensor& a) {
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = -a[i];
  return TensorAccess::Make(a.order(), a.dim(), std::move(out), a.symmetry());
}

DenseTensor operator*(double s, const DenseTensor& a) {
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = s * a[i];
  return TensorAccess::Make(a.order(), a.dim(), std::move(out), PreservedSymmetry(a));
}

DenseTensor Abs(const DenseTensor& a) {
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::abs(a[i]);
  return TensorAccess::Make(a.order(), a.dim(), std::move(out), PreservedSymmetry(a));
}

bool Leq(const DenseTensor& a, const DenseTensor& b) {
  RequireSameShape(a, b, "leq");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(a[i] <= b[i])) return false;
  }
  return true;
}

}  // namespace itc
