#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <vector>

#include "evid/errors.hpp"
#include "evid/evidence.hpp"

namespace evid::test {

inline Frame abc() { return make_frame({"a", "b", "c"}); }

// Worked example used throughout: m1 puts 1/2 on {a,b} and 1/2 on the frame,
// m2 puts 5/7 on {a,c} and 2/7 on the frame.
inline MassFunction example_m1() {
  const Frame f = abc();
  return make_mass(f, {{subset_from_elements(f, {"a", "b"}), 0.5},
                       {f.full_set(), 0.5}});
}

inline MassFunction example_m2() {
  const Frame f = abc();
  return make_mass(f, {{subset_from_elements(f, {"a", "c"}), 5.0 / 7.0},
                       {f.full_set(), 2.0 / 7.0}});
}

// Random mass function: a random nonempty focal support weighted by
// normalized exponential draws. theta_floor reserves that much mass for the
// whole frame (useful when a trial must stay far from total conflict).
inline MassFunction random_mass(const Frame& frame, std::mt19937_64& rng,
                                double theta_floor = 0.0) {
  const std::uint32_t max_key =
      static_cast<std::uint32_t>(frame.table_size() - 1);
  std::uniform_int_distribution<std::uint32_t> key_dist(1, max_key);
  std::uniform_int_distribution<int> count_dist(
      1, static_cast<int>(std::min<std::uint32_t>(max_key, 6)));
  std::set<std::uint32_t> support;
  const int want = count_dist(rng);
  while (static_cast<int>(support.size()) < want) {
    support.insert(key_dist(rng));
  }
  std::exponential_distribution<double> weight(1.0);
  std::vector<double> w;
  double total = 0.0;
  for (std::size_t i = 0; i < support.size(); ++i) {
    w.push_back(weight(rng) + 1e-6);
    total += w.back();
  }
  std::vector<std::pair<SubsetKey, double>> assignments;
  std::size_t i = 0;
  double theta_extra = 0.0;
  for (std::uint32_t key : support) {
    double mass = (1.0 - theta_floor) * w[i++] / total;
    if (key == max_key) {
      mass += theta_floor;
      theta_extra = mass;
    }
    assignments.emplace_back(SubsetKey{key}, mass);
  }
  if (theta_floor > 0.0 && theta_extra == 0.0) {
    assignments.emplace_back(SubsetKey{max_key}, theta_floor);
  }
  return make_mass(frame, assignments);
}

inline double max_abs_diff(const std::vector<double>& a,
                           const std::vector<double>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    worst = std::max(worst, std::abs(a[i] - b[i]));
  }
  return worst;
}

// True when f() throws an Error carrying exactly the given code.
template <typename F>
inline bool raises(errc code, F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code() == code;
  } catch (...) {
    return false;
  }
  return false;
}

}  // namespace evid::test
