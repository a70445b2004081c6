#include "evid/discount.hpp"

namespace evid {

MassFunction discount_mass(const MassFunction& m, DiscountRate alpha) {
  const double a = alpha.value();
  std::vector<double> out = m.table();
  for (double& v : out) v *= 1.0 - a;
  out.back() += a;
  return MassFunction::from_table(m.frame(), std::move(out));
}

EvidentialView discount_view(const EvidentialView& v, DiscountRate alpha) {
  const double a = alpha.value();
  const std::size_t last = v.table.size() - 1;
  std::vector<double> out(v.table.size());
  switch (v.kind) {
    case ViewKind::belief:
      for (std::size_t i = 0; i < last; ++i) out[i] = (1.0 - a) * v.table[i];
      out[last] = 1.0;
      break;
    case ViewKind::plausibility:
      out[0] = 0.0;
      for (std::size_t i = 1; i <= last; ++i)
        out[i] = (1.0 - a) * v.table[i] + a;
      break;
    case ViewKind::commonality:
      for (std::size_t i = 0; i <= last; ++i)
        out[i] = (1.0 - a) * v.table[i] + a;
      break;
    case ViewKind::doubt:
      out[0] = 1.0;
      for (std::size_t i = 1; i <= last; ++i)
        out[i] = (1.0 - a) * v.table[i];
      break;
  }
  return EvidentialView{v.frame, v.kind, std::move(out)};
}

DiscountRate compose_rates(DiscountRate a1, DiscountRate a2) {
  return DiscountRate(1.0 - (1.0 - a1.value()) * (1.0 - a2.value()));
}

}  // namespace evid
