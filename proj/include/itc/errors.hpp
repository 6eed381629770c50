#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace itc {

/// Malformed or out-of-range user input (bad indices, shape mismatch, bad documents).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was called on a value that violates its contract (e.g. a
/// non-symmetric tensor where a symmetric one is required).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Even order is required for definiteness and for the vertex reduction.
class UnsupportedOrderError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Brute-force enumeration refused because it would exceed the configured cap.
class CapExceededError : public std::runtime_error {
 public:
  CapExceededError(const std::string& what, std::uint64_t count_log2)
      : std::runtime_error(what), count_log2_(count_log2) {}

  /// The refused enumeration has 2^count_log2() elements.
  std::uint64_t count_log2() const { return count_log2_; }

 private:
  std::uint64_t count_log2_;
};

}  // namespace itc
