#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace evid {

// A subset of the frame encoded as a bitmask: bit i stands for element i.
// Key 0 is the empty set; key 2^n - 1 is the whole frame.
struct SubsetKey {
  std::uint32_t bits = 0;

  friend constexpr bool operator==(SubsetKey, SubsetKey) = default;
  friend constexpr auto operator<=>(SubsetKey, SubsetKey) = default;
};

inline constexpr SubsetKey empty_key{0};

constexpr SubsetKey intersect(SubsetKey a, SubsetKey b) {
  return SubsetKey{a.bits & b.bits};
}

constexpr std::size_t cardinality(SubsetKey a) {
  return static_cast<std::size_t>(std::popcount(a.bits));
}

constexpr bool is_subset_of(SubsetKey a, SubsetKey b) {
  return (a.bits & b.bits) == a.bits;
}

// Frame of discernment: an ordered set of named hypotheses. Element order is
// fixed at construction and defines both bit positions and display order.
// Capped at 24 elements so dense powerset tables stay allocatable.
class Frame {
public:
  static constexpr std::size_t max_elements = 24;

  explicit Frame(std::vector<std::string> elements);

  std::size_t size() const { return elements_.size(); }
  std::size_t table_size() const { return std::size_t{1} << elements_.size(); }
  const std::vector<std::string>& elements() const { return elements_; }

  SubsetKey full_set() const {
    return SubsetKey{static_cast<std::uint32_t>(table_size() - 1)};
  }

  bool valid_key(SubsetKey a) const { return a.bits < table_size(); }
  void require_key(SubsetKey a) const;

  std::size_t index_of(const std::string& name) const;

  // "{a,b}" with elements in bit order; "{}" for the empty set.
  std::string subset_name(SubsetKey a) const;

  friend bool operator==(const Frame&, const Frame&) = default;

private:
  std::vector<std::string> elements_;
};

Frame make_frame(std::vector<std::string> names);

SubsetKey subset_from_elements(const Frame& frame,
                               std::span<const std::string> names);
SubsetKey subset_from_elements(const Frame& frame,
                               std::initializer_list<std::string> names);

SubsetKey complement(const Frame& frame, SubsetKey a);

void require_same_frame(const Frame& a, const Frame& b);

}  // namespace evid
