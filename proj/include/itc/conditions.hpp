#pragma once

#include <string>

#include "itc/interval.hpp"
#include "itc/verdict.hpp"

namespace itc {

/// Tolerance for the "entry equals value" hypotheses of the checkers below.
inline constexpr double kConditionTolerance = 1e-12;

/// Entry of an order-4 tensor addressed by a 1-based key such as "1123".
double Coefficient(const DenseTensor& a, const std::string& key);

/**
 * @brief Pattern matcher for explicit definiteness conditions on symmetric
 * 4th-order 3-dimensional tensors (corollary_5_1 .. corollary_5_4 clauses).
 *
 * Returns kPd or kPsdNotPd with a "corollary_5_<k><clause>:<pd|psd>" tag when a
 * sound clause matches, kUnknown otherwise. kPsdNotPd carries the basis vector
 * e_i of a zero diagonal entry (f(e_i) = a_{iiii} = 0). Clauses 5_3a, 5_3b and
 * 5_4b have counterexamples as stated; their hypotheses are still evaluated
 * and reported in diagnostics, but never certified.
 */
Verdict CheckCorollary43(const DenseTensor& a);

/**
 * @brief Bound-level hypotheses of the theorem_5_1 .. theorem_5_4 clauses for
 * symmetric 4th-order 3-dimensional interval tensors.
 *
 * Matches return kPsdNotPd (theorem_5_1 .. 5_3, witness e_1 with worst-case
 * value 0) or kPd (theorem_5_4a/b); no match gives kUnknown.
 */
Verdict CheckTheorem5xInterval(const IntervalTensor& interval);

}  // namespace itc
