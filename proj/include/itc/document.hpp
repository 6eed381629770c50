#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "itc/interval.hpp"
#include "itc/verdict.hpp"

namespace itc {

using Json = nlohmann::json;

enum class TensorFormat { kCoo, kDense };

/**
 * @brief Parses a tensor document.
 *
 * {"order": m, "dim": n, "format": "coo"|"dense", "entries": ...,
 *  "symmetric_closure": bool}. COO entries are {"idx": [1-based], "value": v};
 * dense entries are a flat array of n^m values in lexicographic order. With
 * symmetric_closure every COO entry is copied to all permutations of its
 * index; two entries that disagree on a shared permutation are an error.
 * @throws InputError on any malformed field.
 */
DenseTensor ParseTensorDocument(const Json& doc);

/// COO output lists nonzero entries only. Values round-trip exactly.
Json EmitTensorDocument(const DenseTensor& a, TensorFormat format);

/// {"lower", "upper"} or {"center", "radius"}, each a tensor document.
IntervalTensor ParseIntervalDocument(const Json& doc);

/// {"center", "radius"} form.
Json EmitIntervalDocument(const IntervalTensor& interval, TensorFormat format);

/// A tensor document parses to a DenseTensor, an interval document to an
/// IntervalTensor.
std::variant<DenseTensor, IntervalTensor> ParseAnyDocument(const Json& doc);

/// {"schema": 1, "status", "certified", "witness"?, "certificates",
///  "per_vertex"?, "diagnostics"}.
Json VerdictToJson(const Verdict& verdict);

}  // namespace itc
