#pragma once

#include "evid/evidence.hpp"

namespace evid {

// Discounting at rate alpha: scale every proper subset's mass by 1 - alpha
// and move the removed mass to the whole frame. The discounted function
// always carries at least alpha on the frame itself.
MassFunction discount_mass(const MassFunction& m, DiscountRate alpha);

// Discount applied directly at the view level, without passing through the
// mass function. Agrees with to_view(discount_mass(...)) entrywise.
EvidentialView discount_view(const EvidentialView& v, DiscountRate alpha);

// The single rate equivalent to discounting at a1 then a2 (in either order):
// 1 - (1-a1)(1-a2). Note this is not the product a1*a2.
DiscountRate compose_rates(DiscountRate a1, DiscountRate a2);

}  // namespace evid
