#pragma once

#include <span>

#include "evid/evidence.hpp"

namespace evid {

// Closed-form evaluation of the two discount/combine orders. "Discounted
// sum" means combine first, then discount; "sum of discounted" means
// discount each operand first, then combine. The two differ in general;
// compare_orders measures by how much.

// Result of evaluating both orders on the same inputs.
struct OrderComparison {
  MassFunction discounted_sum;     // (m1 (+) m2) discounted
  MassFunction sum_of_discounted;  // discounted m1 (+) discounted m2
  double max_abs_gap;
  SubsetKey witness;  // lowest key attaining max_abs_gap
};

// (m1 (+) m2)^alpha by direct formula, not by composing the two stages.
MassFunction discounted_sum_mass(const MassFunction& m1,
                                 const MassFunction& m2, DiscountRate alpha);

// m1^alpha (+) m2^alpha by direct formula. Its normalization
// (1-a)^2 N + 2a - a^2 is always positive, so this never totally conflicts.
MassFunction sum_of_discounted_mass(const MassFunction& m1,
                                    const MassFunction& m2,
                                    DiscountRate alpha);

// n-ary combine-then-discount over operand tuples; needs >= 2 operands.
MassFunction discounted_sum_mass_n(std::span<const MassFunction> ms,
                                   DiscountRate alpha);

// Value of the requested evidential function of the combine-then-discount
// result at one subset.
double discounted_sum_eval(ViewKind kind, std::span<const MassFunction> ms,
                           DiscountRate alpha, SubsetKey a);

// Value of the requested evidential function of the discount-then-combine
// result at one subset. The belief path is evaluated by its own closed
// formula rather than through the mass table.
double sum_of_discounted_eval(ViewKind kind, const MassFunction& m1,
                              const MassFunction& m2, DiscountRate alpha,
                              SubsetKey a);

// Build both orders and report the largest entrywise difference.
OrderComparison compare_orders(const MassFunction& m1, const MassFunction& m2,
                               DiscountRate alpha);

}  // namespace evid
