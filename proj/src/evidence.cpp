#include "evid/evidence.hpp"

#include <cmath>
#include <cstdio>

#include "evid/errors.hpp"
#include "evid/transforms.hpp"

namespace evid {

const char* to_string(ViewKind kind) {
  switch (kind) {
    case ViewKind::belief: return "bel";
    case ViewKind::plausibility: return "pls";
    case ViewKind::commonality: return "com";
    case ViewKind::doubt: return "dou";
  }
  return "?";
}

ViewKind view_kind_from_string(const std::string& name) {
  if (name == "bel" || name == "belief") return ViewKind::belief;
  if (name == "pls" || name == "plausibility") return ViewKind::plausibility;
  if (name == "com" || name == "commonality") return ViewKind::commonality;
  if (name == "dou" || name == "doubt") return ViewKind::doubt;
  raise(errc::invalid_kind, "unknown evidential function kind: " + name);
}

namespace {

std::string format_mass(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace

MassFunction MassFunction::from_table(Frame frame, std::vector<double> table) {
  if (table.size() != frame.table_size()) {
    raise(errc::invalid_mass,
          "mass table has " + std::to_string(table.size()) +
              " entries, frame needs " + std::to_string(frame.table_size()));
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < table.size(); ++i) {
    double v = table[i];
    if (!std::isfinite(v)) {
      raise(errc::invalid_mass,
            "mass of " + frame.subset_name(SubsetKey{std::uint32_t(i)}) +
                " is not finite");
    }
    if (v < -mass_clamp_eps) {
      raise(errc::negative_mass,
            "mass of " + frame.subset_name(SubsetKey{std::uint32_t(i)}) +
                " is negative: " + format_mass(v));
    }
    if (v < 0.0) v = 0.0;  // clamp dust
    table[i] = v;
    sum += v;
  }
  if (table[0] != 0.0) {
    raise(errc::mass_on_empty_set,
          "empty set carries mass " + format_mass(table[0]));
  }
  if (std::abs(sum - 1.0) > mass_sum_eps) {
    raise(errc::sum_not_one, "masses sum to " + format_mass(sum) + ", not 1");
  }
  return MassFunction(std::move(frame), std::move(table));
}

MassFunction MassFunction::vacuous(Frame frame) {
  std::vector<double> table(frame.table_size(), 0.0);
  table.back() = 1.0;
  return MassFunction(std::move(frame), std::move(table));
}

DiscountRate::DiscountRate(double value) : value_(value) {
  if (!std::isfinite(value) || value <= 0.0 || value >= 1.0) {
    raise(errc::invalid_rate,
          "discount rate must lie strictly between 0 and 1, got " +
              format_mass(value));
  }
}

MassFunction make_mass(
    const Frame& frame,
    const std::vector<std::pair<SubsetKey, double>>& assignments) {
  std::vector<double> table(frame.table_size(), 0.0);
  std::vector<bool> seen(frame.table_size(), false);
  for (const auto& [key, mass] : assignments) {
    frame.require_key(key);
    if (seen[key.bits]) {
      raise(errc::duplicate_focal_element,
            "subset " + frame.subset_name(key) + " assigned twice");
    }
    seen[key.bits] = true;
    if (!std::isfinite(mass)) {
      raise(errc::invalid_mass,
            "mass of " + frame.subset_name(key) + " is not finite");
    }
    if (key == empty_key && mass != 0.0) {
      raise(errc::mass_on_empty_set,
            "empty set carries mass " + format_mass(mass));
    }
    if (mass < -mass_clamp_eps) {
      raise(errc::negative_mass, "mass of " + frame.subset_name(key) +
                                     " is negative: " + format_mass(mass));
    }
    table[key.bits] = mass;
  }
  return MassFunction::from_table(frame, std::move(table));
}

EvidentialView to_view(const MassFunction& m, ViewKind kind) {
  const Frame& frame = m.frame();
  const std::uint32_t full = frame.full_set().bits;
  std::vector<double> t = m.table();
  switch (kind) {
    case ViewKind::belief:
      subset_sum(t);
      break;
    case ViewKind::commonality:
      superset_sum(t);
      break;
    case ViewKind::plausibility: {
      subset_sum(t);
      std::vector<double> out(t.size());
      for (std::uint32_t a = 0; a < t.size(); ++a) out[a] = 1.0 - t[a ^ full];
      t = std::move(out);
      break;
    }
    case ViewKind::doubt: {
      subset_sum(t);
      std::vector<double> out(t.size());
      for (std::uint32_t a = 0; a < t.size(); ++a) out[a] = t[a ^ full];
      t = std::move(out);
      break;
    }
  }
  return EvidentialView{frame, kind, std::move(t)};
}

MassFunction from_view(const EvidentialView& v) {
  const std::uint32_t full = v.frame.full_set().bits;
  if (v.table.size() != v.frame.table_size()) {
    raise(errc::not_a_mass_function, "view table has wrong size");
  }
  std::vector<double> t;
  switch (v.kind) {
    case ViewKind::belief:
      t = v.table;
      subset_sum_inv(t);
      break;
    case ViewKind::plausibility:
      t.resize(v.table.size());
      for (std::uint32_t a = 0; a < t.size(); ++a)
        t[a] = 1.0 - v.table[a ^ full];
      subset_sum_inv(t);
      break;
    case ViewKind::doubt:
      t.resize(v.table.size());
      for (std::uint32_t a = 0; a < t.size(); ++a) t[a] = v.table[a ^ full];
      subset_sum_inv(t);
      break;
    case ViewKind::commonality:
      t = v.table;
      superset_sum_inv(t);
      break;
  }
  double sum = 0.0;
  for (double x : t) {
    if (!std::isfinite(x) || x < -view_inversion_eps) {
      raise(errc::not_a_mass_function,
            "inversion produced a significantly negative mass");
    }
    sum += x;
  }
  if (std::abs(sum - 1.0) > view_inversion_eps) {
    raise(errc::not_a_mass_function,
          "inverted masses sum to " + format_mass(sum) + ", not 1");
  }
  if (std::abs(t[0]) > view_inversion_eps) {
    raise(errc::not_a_mass_function,
          "inversion puts mass " + format_mass(t[0]) + " on the empty set");
  }
  // Scrub inversion dust so round-trips land back on a valid table.
  t[0] = 0.0;
  double total = 0.0;
  for (double& x : t) {
    if (x < 0.0) x = 0.0;
    total += x;
  }
  for (double& x : t) x /= total;
  return MassFunction::from_table(v.frame, std::move(t));
}

std::vector<std::pair<SubsetKey, double>> focal_elements(
    const MassFunction& m) {
  std::vector<std::pair<SubsetKey, double>> out;
  const auto& t = m.table();
  for (std::uint32_t a = 0; a < t.size(); ++a) {
    if (t[a] > focal_eps) out.emplace_back(SubsetKey{a}, t[a]);
  }
  return out;
}

}  // namespace evid
