#include "evid/frame.hpp"

#include <algorithm>
#include <unordered_set>

#include "evid/errors.hpp"

namespace evid {

Frame::Frame(std::vector<std::string> elements)
    : elements_(std::move(elements)) {
  if (elements_.empty()) {
    raise(errc::empty_frame, "frame needs at least one element");
  }
  if (elements_.size() > max_elements) {
    raise(errc::frame_too_large,
          "frame has " + std::to_string(elements_.size()) +
              " elements, maximum is " + std::to_string(max_elements));
  }
  std::unordered_set<std::string> seen;
  for (const auto& name : elements_) {
    if (name.empty()) {
      raise(errc::empty_element_name, "element names must be non-empty");
    }
    if (!seen.insert(name).second) {
      raise(errc::duplicate_element, "duplicate element name: " + name);
    }
  }
}

void Frame::require_key(SubsetKey a) const {
  if (!valid_key(a)) {
    raise(errc::invalid_key,
          "subset key " + std::to_string(a.bits) + " out of range for a " +
              std::to_string(size()) + "-element frame");
  }
}

std::size_t Frame::index_of(const std::string& name) const {
  auto it = std::find(elements_.begin(), elements_.end(), name);
  if (it == elements_.end()) {
    raise(errc::unknown_element, "unknown element: " + name);
  }
  return static_cast<std::size_t>(it - elements_.begin());
}

std::string Frame::subset_name(SubsetKey a) const {
  require_key(a);
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < size(); ++i) {
    if ((a.bits >> i) & 1u) {
      if (!first) out += ',';
      out += elements_[i];
      first = false;
    }
  }
  out += '}';
  return out;
}

Frame make_frame(std::vector<std::string> names) {
  return Frame(std::move(names));
}

SubsetKey subset_from_elements(const Frame& frame,
                               std::span<const std::string> names) {
  SubsetKey key{0};
  for (const auto& name : names) {
    key.bits |= std::uint32_t{1} << frame.index_of(name);
  }
  return key;
}

SubsetKey subset_from_elements(const Frame& frame,
                               std::initializer_list<std::string> names) {
  return subset_from_elements(
      frame, std::span<const std::string>(names.begin(), names.size()));
}

SubsetKey complement(const Frame& frame, SubsetKey a) {
  frame.require_key(a);
  return SubsetKey{a.bits ^ frame.full_set().bits};
}

void require_same_frame(const Frame& a, const Frame& b) {
  if (!(a == b)) {
    raise(errc::frame_mismatch, "operands are bound to different frames");
  }
}

}  // namespace evid
