#pragma once

#include <span>

#include "evid/evidence.hpp"

namespace evid {

// Normalizations at or below this are treated as total conflict.
inline constexpr double total_conflict_eps = 1e-12;

enum class CombineMethod { naive, commonality };

// Outcome of an orthogonal sum: the combined mass plus how much probability
// survived the intersection (normalization N) and how much collided away
// (conflict K = 1 - N).
struct CombinationResult {
  MassFunction mass;
  double normalization;
  double conflict;
};

// Dempster's rule over focal-element pairs; sparse, good for few focal sets.
CombinationResult dempster_pair(const MassFunction& m1,
                                const MassFunction& m2);

// Same sum computed by pointwise commonality product and Moebius inversion;
// dense O(n * 2^n), good for many focal sets.
CombinationResult dempster_via_commonality(const MassFunction& m1,
                                           const MassFunction& m2);

// Left fold of the pairwise rule. The reported normalization is the
// single-shot n-ary N over operand tuples, not the product of stage Ns.
CombinationResult dempster_n(std::span<const MassFunction> ms,
                             CombineMethod method = CombineMethod::naive);

// Conflict mass K between two operands; total conflict (K = 1) is a plain
// value here, not an error.
double conflict(const MassFunction& m1, const MassFunction& m2);

}  // namespace evid
