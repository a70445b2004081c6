#pragma once

#include <string>
#include <utility>
#include <vector>

#include "evid/frame.hpp"

namespace evid {

// |sum(m) - 1| allowed when constructing a mass function.
inline constexpr double mass_sum_eps = 1e-9;
// Negative dust below this magnitude is clamped to zero on construction.
inline constexpr double mass_clamp_eps = 1e-12;
// Entries above this count as focal elements.
inline constexpr double focal_eps = 1e-12;
// Gate for from_view: how far an inverted table may stray from a mass
// function before the view is rejected outright.
inline constexpr double view_inversion_eps = 1e-6;

enum class ViewKind { belief, plausibility, commonality, doubt };

const char* to_string(ViewKind kind);
ViewKind view_kind_from_string(const std::string& name);

// Basic probability assignment m over the powerset of a frame: m(empty) = 0,
// entries nonnegative, total mass 1. Stored dense; construction validates.
class MassFunction {
 public:
  static MassFunction from_table(Frame frame, std::vector<double> table);
  static MassFunction vacuous(Frame frame);

  const Frame& frame() const { return frame_; }
  const std::vector<double>& table() const { return table_; }
  double at(SubsetKey a) const {
    frame_.require_key(a);
    return table_[a.bits];
  }

  friend bool operator==(const MassFunction&, const MassFunction&) = default;

 private:
  MassFunction(Frame frame, std::vector<double> table)
      : frame_(std::move(frame)), table_(std::move(table)) {}

  Frame frame_;
  std::vector<double> table_;
};

// One of bel/pls/com/dou tabulated over the whole powerset.
struct EvidentialView {
  Frame frame;
  ViewKind kind;
  std::vector<double> table;

  double at(SubsetKey a) const {
    frame.require_key(a);
    return table[a.bits];
  }
};

// Discount rate alpha, strictly between 0 and 1.
class DiscountRate {
 public:
  explicit DiscountRate(double value);
  double value() const { return value_; }

 private:
  double value_;
};

MassFunction make_mass(
    const Frame& frame,
    const std::vector<std::pair<SubsetKey, double>>& assignments);

EvidentialView to_view(const MassFunction& m, ViewKind kind);

// Moebius inversion back to a mass function. Rejects views that are not
// (numerically close to) images of a valid mass function.
MassFunction from_view(const EvidentialView& v);

std::vector<std::pair<SubsetKey, double>> focal_elements(
    const MassFunction& m);

}  // namespace evid
