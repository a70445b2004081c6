#include "evid/combine.hpp"

#include <algorithm>

#include "evid/errors.hpp"
#include "evid/transforms.hpp"

namespace evid {

namespace {

[[noreturn]] void raise_total_conflict() {
  raise(errc::total_conflict, "total conflict: orthogonal sum undefined");
}

CombinationResult normalize(Frame frame, std::vector<double> acc) {
  double norm = 0.0;
  for (std::size_t a = 1; a < acc.size(); ++a) norm += acc[a];
  if (norm <= total_conflict_eps) raise_total_conflict();
  acc[0] = 0.0;
  for (std::size_t a = 1; a < acc.size(); ++a) {
    if (acc[a] < 0.0) acc[a] = 0.0;  // Moebius dust
    acc[a] /= norm;
  }
  return CombinationResult{MassFunction::from_table(std::move(frame), std::move(acc)),
                           norm, 1.0 - norm};
}

}  // namespace

CombinationResult dempster_pair(const MassFunction& m1,
                                const MassFunction& m2) {
  require_same_frame(m1.frame(), m2.frame());
  const auto f1 = focal_elements(m1);
  const auto f2 = focal_elements(m2);
  std::vector<double> acc(m1.frame().table_size(), 0.0);
  for (const auto& [x, mx] : f1) {
    for (const auto& [y, my] : f2) {
      acc[x.bits & y.bits] += mx * my;
    }
  }
  return normalize(m1.frame(), std::move(acc));
}

CombinationResult dempster_via_commonality(const MassFunction& m1,
                                           const MassFunction& m2) {
  require_same_frame(m1.frame(), m2.frame());
  std::vector<double> com1 = m1.table();
  std::vector<double> com2 = m2.table();
  superset_sum(com1);
  superset_sum(com2);
  for (std::size_t a = 0; a < com1.size(); ++a) com1[a] *= com2[a];
  superset_sum_inv(com1);
  return normalize(m1.frame(), std::move(com1));
}

CombinationResult dempster_n(std::span<const MassFunction> ms,
                             CombineMethod method) {
  if (ms.empty()) {
    raise(errc::empty_operand_list, "combination needs at least one operand");
  }
  for (std::size_t i = 1; i < ms.size(); ++i) {
    require_same_frame(ms[0].frame(), ms[i].frame());
  }
  if (ms.size() == 1) return CombinationResult{ms[0], 1.0, 0.0};

  // Single-shot n-ary normalization: product of commonalities inverted back
  // to the tuple-intersection accumulator.
  std::vector<double> prod = ms[0].table();
  superset_sum(prod);
  for (std::size_t i = 1; i < ms.size(); ++i) {
    std::vector<double> com = ms[i].table();
    superset_sum(com);
    for (std::size_t a = 0; a < prod.size(); ++a) prod[a] *= com[a];
  }
  superset_sum_inv(prod);
  double norm = 0.0;
  for (std::size_t a = 1; a < prod.size(); ++a) norm += prod[a];

  const auto pair_op = (method == CombineMethod::naive)
                           ? dempster_pair
                           : dempster_via_commonality;
  MassFunction folded = pair_op(ms[0], ms[1]).mass;
  for (std::size_t i = 2; i < ms.size(); ++i) {
    folded = pair_op(folded, ms[i]).mass;
  }
  norm = std::clamp(norm, 0.0, 1.0);
  return CombinationResult{std::move(folded), norm, 1.0 - norm};
}

double conflict(const MassFunction& m1, const MassFunction& m2) {
  require_same_frame(m1.frame(), m2.frame());
  double k = 0.0;
  for (const auto& [x, mx] : focal_elements(m1)) {
    for (const auto& [y, my] : focal_elements(m2)) {
      if ((x.bits & y.bits) == 0) k += mx * my;
    }
  }
  return std::clamp(k, 0.0, 1.0);
}

}  // namespace evid
