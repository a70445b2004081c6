#pragma once

#include "evid/evidence.hpp"

namespace evid {

// Brute-force reference implementations. Each one works straight from the
// defining summation — no lattice transforms, no sparsity, no shared helpers —
// so tests can pit the fast paths against genuinely independent code.

// Direct summation over all 2^n subsets for one query point.
double oracle_transform(const MassFunction& m, ViewKind kind, SubsetKey a);

// Orthogonal sum by the full 4^n double loop over subset pairs.
MassFunction oracle_dempster(const MassFunction& m1, const MassFunction& m2);

// Literal two-case discount, entry by entry.
MassFunction oracle_discount(const MassFunction& m, DiscountRate alpha);

}  // namespace evid
