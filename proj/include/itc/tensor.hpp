#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace itc {

/// Absolute tolerance used when scanning a tensor for permutation symmetry.
inline constexpr double kSymmetryTolerance = 1e-12;

enum class Symmetry { kUnknown, kSymmetric, kAsymmetric };

/// One explicitly listed entry of a tensor; indices are 1-based.
struct CooEntry {
  std::vector<int> index;
  double value = 0.0;
};

/**
 * @brief Dense real tensor of order m and dimension n.
 *
 * Entries are stored contiguously in lexicographic index order (the first
 * index varies slowest), n^m values in total. Values are immutable after
 * construction. The symmetry flag is only ever set to kSymmetric by an
 * exhaustive scan or by an operation that provably yields a symmetric result.
 */
class DenseTensor {
 public:
  /// Zero tensor.
  DenseTensor(int order, int dim);

  /// Takes ownership of n^m entries in lexicographic order.
  DenseTensor(int order, int dim, std::vector<double> entries);

  /// Entries not listed are zero. Indices are 1-based; duplicates are rejected.
  static DenseTensor FromCoo(int order, int dim, std::span<const CooEntry> entries);

  int order() const { return order_; }
  int dim() const { return dim_; }
  std::size_t size() const { return entries_.size(); }
  Symmetry symmetry() const { return symmetry_; }
  std::span<const double> entries() const { return entries_; }

  double operator[](std::size_t linear) const { return entries_[linear]; }
  /// 0-based multi-index.
  double at(std::span<const int> index) const;

  std::size_t LinearIndex(std::span<const int> index) const;
  std::vector<int> MultiIndex(std::size_t linear) const;

  bool SameShape(const DenseTensor& other) const {
    return order_ == other.order_ && dim_ == other.dim_;
  }

  /// Exhaustive permutation scan (answers from the flag when already verified).
  bool IsSymmetric() const;

  /// Copy whose flag records the outcome of the exhaustive scan.
  DenseTensor WithVerifiedSymmetry() const;

  friend bool operator==(const DenseTensor& a, const DenseTensor& b) {
    return a.SameShape(b) && a.entries_ == b.entries_;
  }

 private:
  friend struct TensorAccess;

  DenseTensor(int order, int dim, std::vector<double> entries, Symmetry symmetry);

  int order_;
  int dim_;
  std::vector<double> entries_;
  Symmetry symmetry_ = Symmetry::kUnknown;
};

/// Library-internal construction with a known symmetry flag.
struct TensorAccess {
  static DenseTensor Make(int order, int dim, std::vector<double> entries,
                          Symmetry symmetry) {
    return DenseTensor(order, dim, std::move(entries), symmetry);
  }
};

/// Throws PreconditionError unless `a` is symmetric (scanning if the flag is unknown).
void RequireSymmetric(const DenseTensor& a, const char* operation);

/// Permutation average; the result carries the verified-symmetric flag.
DenseTensor Symmetrize(const DenseTensor& a);

/// f_A(x) = A x^m, the full m-fold contraction.
double ApplyXm(const DenseTensor& a, std::span<const double> x);

/// A x^{m-1}: contracts every index except the first.
std::vector<double> ApplyXm1(const DenseTensor& a, std::span<const double> x);

/// A x^{m-2} as a row-major n-by-n matrix: contracts every index except the first two.
std::vector<double> ApplyXm2(const DenseTensor& a, std::span<const double> x);

/// A x_1 T_z x_2 ... x_m T_z for the diagonal sign matrix T_z = diag(z).
DenseTensor ModeProductSigns(const DenseTensor& a, std::span<const int> z);

DenseTensor operator+(const DenseTensor& a, const DenseTensor& b);
DenseTensor operator-(const DenseTensor& a, const DenseTensor& b);
DenseTensor operator-(const DenseTensor& a);
DenseTensor operator*(double s, const DenseTensor& a);
DenseTensor Abs(const DenseTensor& a);
/// True iff a <= b in every entry.
bool Leq(const DenseTensor& a, const DenseTensor& b);

/// Polynomial view f_A(x) = A x^m over a borrowed tensor.
class HomogeneousForm {
 public:
  explicit HomogeneousForm(const DenseTensor& tensor) : tensor_(&tensor) {}

  double operator()(std::span<const double> x) const { return ApplyXm(*tensor_, x); }
  int degree() const { return tensor_->order(); }
  int variables() const { return tensor_->dim(); }

 private:
  const DenseTensor* tensor_;
};

}  // namespace itc
