#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "itc/interval.hpp"

namespace itc {

enum class Status { kPd, kPsdNotPd, kNotPsd, kStable, kNotStable, kUnknown };

/// Strongest property backed by a sound certificate. For stability verdicts
/// kPd means "stability is certified".
enum class CertLevel { kNone, kPsd, kPd };

enum class DefinitenessMode { kPd, kPsd };

struct VertexVerdict {
  SignVector z;
  Status status;
  CertLevel certified;
};

/**
 * @brief Outcome of a definiteness or stability check.
 *
 * Refutations (kNotPsd, kNotStable) always carry a witness direction x.
 * Positive outcomes always carry at least one certificate tag; tags that
 * start with "heuristic" are not sound, and `certified` records what is.
 */
struct Verdict {
  Status status = Status::kUnknown;
  CertLevel certified = CertLevel::kNone;
  std::optional<std::vector<double>> witness;
  std::vector<std::string> certificates;
  std::vector<VertexVerdict> per_vertex;
  std::vector<std::string> diagnostics;

  void AddCertificate(std::string tag);
};

std::string_view ToString(Status status);
Status StatusFromString(std::string_view text);
std::string_view ToString(CertLevel level);
std::string_view ToString(DefinitenessMode mode);

/// The requested definiteness holds and is soundly certified. A kUnknown
/// status with certified = kPsd still satisfies psd mode (PD undecided).
bool HoldsSoundly(const Verdict& verdict, DefinitenessMode mode);
/// The requested definiteness is refuted.
bool Refutes(const Verdict& verdict, DefinitenessMode mode);

}  // namespace itc
