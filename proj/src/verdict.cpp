#include "itc/verdict.hpp"

#include <algorithm>

#include "itc/errors.hpp"

namespace itc {

void Verdict::AddCertificate(std::string tag) {
  if (std::find(certificates.begin(), certificates.end(), tag) == certificates.end()) {
    certificates.push_back(std::move(tag));
  }
}

std::string_view ToString(Status status) {
  switch (status) {
    case Status::kPd: return "PD";
    case Status::kPsdNotPd: return "PSD_NOT_PD";
    case Status::kNotPsd: return "NOT_PSD";
    case Status::kStable: return "STABLE";
    case Status::kNotStable: return "NOT_STABLE";
    case Status::kUnknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

Status StatusFromString(std::string_view text) {
  for (Status s : {Status::kPd, Status::kPsdNotPd, Status::kNotPsd, Status::kStable,
                   Status::kNotStable, Status::kUnknown}) {
    if (ToString(s) == text) return s;
  }
  throw InputError("unknown status '" + std::string(text) + "'");
}

std::string_view ToString(CertLevel level) {
  switch (level) {
    case CertLevel::kNone: return "none";
    case CertLevel::kPsd: return "psd";
    case CertLevel::kPd: return "pd";
  }
  return "none";
}

std::string_view ToString(DefinitenessMode mode) {
  return mode == DefinitenessMode::kPd ? "pd" : "psd";
}

bool HoldsSoundly(const Verdict& verdict, DefinitenessMode mode) {
  switch (mode) {
    case DefinitenessMode::kPd:
      return verdict.status == Status::kPd && verdict.certified == CertLevel::kPd;
    case DefinitenessMode::kPsd:
      return verdict.status != Status::kNotPsd && verdict.certified != CertLevel::kNone;
  }
  return false;
}

bool Refutes(const Verdict& verdict, DefinitenessMode mode) {
  if (verdict.status == Status::kNotPsd) return true;
  return mode == DefinitenessMode::kPd && verdict.status == Status::kPsdNotPd;
}

}  // namespace itc
