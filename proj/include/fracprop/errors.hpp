#pragma once

#include <stdexcept>
#include <string>

namespace fracprop {

enum class errc {
  invalid_order,
  eval_failure,
  order_constraint_violated,
  empty_admissible_region,
  invalid_angular_size,
  non_positive_input,
  invalid_mode,
  singular_shift,
  unsupported_backend,
  cache_mismatch,
  ml_eval_failure,
  no_convergence,
  bounds_violation,
  not_reached,
  invalid_config,
  io_error,
};

/// Library-wide exception carrying a machine-checkable error code.
class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, errc code, const std::string& what) {
  if (!cond) raise(code, what);
}

}  // namespace fracprop
