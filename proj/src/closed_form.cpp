#include "evid/closed_form.hpp"

#include <algorithm>
#include <cmath>

#include "evid/errors.hpp"
#include "evid/transforms.hpp"

namespace evid {

namespace {

[[noreturn]] void raise_total_conflict() {
  raise(errc::total_conflict, "total conflict: orthogonal sum undefined");
}

// Pairwise intersection accumulator: acc[A] = sum over focal pairs with
// X cap Y = A of m1(X) m2(Y). Local to this module on purpose; the formulas
// here are meant to stand on their own, not lean on the combine module.
std::vector<double> intersection_products(const MassFunction& m1,
                                          const MassFunction& m2) {
  std::vector<double> acc(m1.frame().table_size(), 0.0);
  for (const auto& [x, mx] : focal_elements(m1)) {
    for (const auto& [y, my] : focal_elements(m2)) {
      acc[x.bits & y.bits] += mx * my;
    }
  }
  return acc;
}

double surviving_mass(const std::vector<double>& acc) {
  double n = 0.0;
  for (std::size_t a = 1; a < acc.size(); ++a) n += acc[a];
  return n;
}

}  // namespace

MassFunction discounted_sum_mass(const MassFunction& m1,
                                 const MassFunction& m2, DiscountRate alpha) {
  require_same_frame(m1.frame(), m2.frame());
  const double al = alpha.value();
  const auto acc = intersection_products(m1, m2);
  const double n = surviving_mass(acc);
  if (n <= 1e-12) raise_total_conflict();
  const std::size_t full = acc.size() - 1;
  std::vector<double> out(acc.size(), 0.0);
  for (std::size_t a = 1; a < full; ++a) out[a] = (1.0 - al) * acc[a] / n;
  out[full] = (1.0 - al) * m1.table()[full] * m2.table()[full] / n + al;
  return MassFunction::from_table(m1.frame(), std::move(out));
}

MassFunction sum_of_discounted_mass(const MassFunction& m1,
                                    const MassFunction& m2,
                                    DiscountRate alpha) {
  require_same_frame(m1.frame(), m2.frame());
  const double al = alpha.value();
  const double keep = 1.0 - al;
  const auto acc = intersection_products(m1, m2);
  const double n = surviving_mass(acc);
  // Normalization of the discounted pair; >= 2a - a^2 > 0, never conflicts.
  const double n_al = keep * keep * n + 2.0 * al - al * al;
  const std::size_t full = acc.size() - 1;
  std::vector<double> out(acc.size(), 0.0);
  for (std::size_t a = 1; a < full; ++a) {
    out[a] = (keep * keep * acc[a] +
              al * keep * (m1.table()[a] + m2.table()[a])) /
             n_al;
  }
  out[full] = (keep * keep * m1.table()[full] * m2.table()[full] +
               al * keep * (m1.table()[full] + m2.table()[full]) + al * al) /
              n_al;
  return MassFunction::from_table(m1.frame(), std::move(out));
}

MassFunction discounted_sum_mass_n(std::span<const MassFunction> ms,
                                   DiscountRate alpha) {
  if (ms.size() < 2) {
    raise(errc::empty_operand_list,
          "combine-then-discount needs at least two operands");
  }
  for (std::size_t i = 1; i < ms.size(); ++i) {
    require_same_frame(ms[0].frame(), ms[i].frame());
  }
  const double al = alpha.value();
  const std::size_t size = ms[0].frame().table_size();
  const std::size_t full = size - 1;

  // acc[A] = sum over operand tuples (X1..Xn) with X1 cap ... cap Xn = A of
  // the product of masses, built one operand at a time.
  std::vector<double> acc = ms[0].table();
  for (std::size_t i = 1; i < ms.size(); ++i) {
    std::vector<double> next(size, 0.0);
    const auto focal = focal_elements(ms[i]);
    for (std::size_t x = 0; x < size; ++x) {
      if (acc[x] == 0.0) continue;
      for (const auto& [y, my] : focal) {
        next[x & y.bits] += acc[x] * my;
      }
    }
    acc = std::move(next);
  }
  const double n = surviving_mass(acc);
  if (n <= 1e-12) raise_total_conflict();

  std::vector<double> out(size, 0.0);
  for (std::size_t a = 1; a < full; ++a) out[a] = (1.0 - al) * acc[a] / n;
  // acc[full] is exactly the product of the operands' whole-frame masses.
  out[full] = (1.0 - al) * acc[full] / n + al;
  return MassFunction::from_table(ms[0].frame(), std::move(out));
}

double discounted_sum_eval(ViewKind kind, std::span<const MassFunction> ms,
                           DiscountRate alpha, SubsetKey a) {
  return to_view(discounted_sum_mass_n(ms, alpha), kind).at(a);
}

double sum_of_discounted_eval(ViewKind kind, const MassFunction& m1,
                              const MassFunction& m2, DiscountRate alpha,
                              SubsetKey a) {
  require_same_frame(m1.frame(), m2.frame());
  m1.frame().require_key(a);
  if (kind != ViewKind::belief) {
    return to_view(sum_of_discounted_mass(m1, m2, alpha), kind).at(a);
  }
  // Belief has its own closed formula over the undiscounted operands.
  const std::size_t full = m1.frame().table_size() - 1;
  if (a.bits == 0) return 0.0;
  if (a.bits == full) return 1.0;
  const double al = alpha.value();
  const double keep = 1.0 - al;
  double pair_in = 0.0;  // focal pairs whose nonempty intersection lands in a
  double n = 0.0;
  for (const auto& [x, mx] : focal_elements(m1)) {
    for (const auto& [y, my] : focal_elements(m2)) {
      const std::uint32_t z = x.bits & y.bits;
      if (z == 0) continue;
      n += mx * my;
      if ((z & a.bits) == z) pair_in += mx * my;
    }
  }
  double point = 0.0;  // operands' own mass inside a
  for (std::uint32_t z = 1; z <= a.bits; ++z) {
    if ((z & a.bits) == z) point += m1.table()[z] + m2.table()[z];
  }
  const double n_al = keep * keep * n + 2.0 * al - al * al;
  return (keep * keep * pair_in + al * keep * point) / n_al;
}

OrderComparison compare_orders(const MassFunction& m1, const MassFunction& m2,
                               DiscountRate alpha) {
  MassFunction ds = discounted_sum_mass(m1, m2, alpha);
  MassFunction sd = sum_of_discounted_mass(m1, m2, alpha);
  double gap = 0.0;
  for (std::uint32_t a = 0; a < ds.table().size(); ++a) {
    gap = std::max(gap, std::abs(ds.table()[a] - sd.table()[a]));
  }
  // Lowest key attaining the maximum; the slack keeps float dust from
  // deciding what is mathematically a tie.
  SubsetKey witness{0};
  for (std::uint32_t a = 0; a < ds.table().size(); ++a) {
    if (std::abs(ds.table()[a] - sd.table()[a]) >= gap - 1e-12) {
      witness = SubsetKey{a};
      break;
    }
  }
  return OrderComparison{std::move(ds), std::move(sd), gap, witness};
}

}  // namespace evid
