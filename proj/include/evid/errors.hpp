#pragma once

#include <stdexcept>
#include <string>

namespace evid {

// Failure categories raised by validation and combination.
enum class errc {
  empty_frame,
  empty_element_name,
  duplicate_element,
  frame_too_large,
  unknown_element,
  invalid_key,
  frame_mismatch,
  invalid_mass,
  negative_mass,
  mass_on_empty_set,
  sum_not_one,
  duplicate_focal_element,
  not_a_mass_function,
  total_conflict,
  empty_operand_list,
  invalid_kind,
  invalid_rate,
  invalid_document,
  io_error,
  oracle_mismatch,
};

class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  errc code() const { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace evid
