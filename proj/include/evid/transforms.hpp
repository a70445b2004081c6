#pragma once

#include <cstddef>
#include <span>

namespace evid {

// In-place zeta/Möbius transforms over the subset lattice. `table` must have
// power-of-two length 2^n indexed by bitmask; each runs in O(n * 2^n).

// table[A] <- sum over X subseteq A of table[X].
void subset_sum(std::span<double> table);

// Inverse of subset_sum.
void subset_sum_inv(std::span<double> table);

// table[A] <- sum over X supseteq A of table[X].
void superset_sum(std::span<double> table);

// Inverse of superset_sum.
void superset_sum_inv(std::span<double> table);

}  // namespace evid
