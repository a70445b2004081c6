#include "evid/oracle.hpp"

#include "evid/errors.hpp"

namespace evid {

double oracle_transform(const MassFunction& m, ViewKind kind, SubsetKey a) {
  const Frame& frame = m.frame();
  frame.require_key(a);
  const std::uint32_t full = frame.full_set().bits;
  const std::uint32_t abar = a.bits ^ full;
  double sum = 0.0;
  for (std::uint32_t x = 0; x < frame.table_size(); ++x) {
    const double mx = m.table()[x];
    switch (kind) {
      case ViewKind::belief:
        if ((x & a.bits) == x) sum += mx;
        break;
      case ViewKind::plausibility:
        if ((x & a.bits) != 0) sum += mx;
        break;
      case ViewKind::commonality:
        if ((x & a.bits) == a.bits) sum += mx;
        break;
      case ViewKind::doubt:
        if ((x & abar) == x) sum += mx;
        break;
    }
  }
  return sum;
}

MassFunction oracle_dempster(const MassFunction& m1, const MassFunction& m2) {
  require_same_frame(m1.frame(), m2.frame());
  const std::size_t n = m1.frame().table_size();
  std::vector<double> acc(n, 0.0);
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y = 0; y < n; ++y) {
      acc[x & y] += m1.table()[x] * m2.table()[y];
    }
  }
  double norm = 0.0;
  for (std::uint32_t a = 1; a < n; ++a) norm += acc[a];
  if (norm <= 1e-12) {
    raise(errc::total_conflict, "total conflict: orthogonal sum undefined");
  }
  acc[0] = 0.0;
  for (std::uint32_t a = 1; a < n; ++a) acc[a] /= norm;
  return MassFunction::from_table(m1.frame(), std::move(acc));
}

MassFunction oracle_discount(const MassFunction& m, DiscountRate alpha) {
  const double a = alpha.value();
  const std::size_t n = m.frame().table_size();
  std::vector<double> out(n);
  for (std::uint32_t key = 0; key < n; ++key) {
    if (key == n - 1) {
      out[key] = (1.0 - a) * m.table()[key] + a;
    } else {
      out[key] = (1.0 - a) * m.table()[key];
    }
  }
  return MassFunction::from_table(m.frame(), std::move(out));
}

}  // namespace evid
