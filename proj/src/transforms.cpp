#include "evid/transforms.hpp"

namespace evid {

void subset_sum(std::span<double> table) {
  const std::size_t n = table.size();
  for (std::size_t bit = 1; bit < n; bit <<= 1) {
    for (std::size_t a = 0; a < n; ++a) {
      if (a & bit) table[a] += table[a ^ bit];
    }
  }
}

void subset_sum_inv(std::span<double> table) {
  const std::size_t n = table.size();
  for (std::size_t bit = 1; bit < n; bit <<= 1) {
    for (std::size_t a = 0; a < n; ++a) {
      if (a & bit) table[a] -= table[a ^ bit];
    }
  }
}

void superset_sum(std::span<double> table) {
  const std::size_t n = table.size();
  for (std::size_t bit = 1; bit < n; bit <<= 1) {
    for (std::size_t a = 0; a < n; ++a) {
      if (!(a & bit)) table[a] += table[a | bit];
    }
  }
}

void superset_sum_inv(std::span<double> table) {
  const std::size_t n = table.size();
  for (std::size_t bit = 1; bit < n; bit <<= 1) {
    for (std::size_t a = 0; a < n; ++a) {
      if (!(a & bit)) table[a] -= table[a | bit];
    }
  }
}

}  // namespace evid
