#pragma once

#include <stdexcept>
#include <string>

namespace circulant {

/// Error classes shared by the whole library; the CLI maps them to exit codes.
enum class errc {
  // graph construction
  not_strictly_increasing,
  jump_out_of_range,
  disconnected,
  invalid_probability,
  empty_jump_set,
  // secular evaluation
  too_close_to_pole,
  pole_hit,
  // spectrum assembly
  monotonicity_violation,
  dimension_too_small,
  weyl_count_mismatch,
  symmetric_metric,
  empty_spectrum,
  // statistics
  too_few_levels,
  xmax_too_large,
  no_bracket,
  // zeta / determinants
  pole_at_one,
  argument_out_of_range,
  quadrature_failure,
  near_singular_mhat,
  degenerate_c,
  // I/O and CLI
  usage_error,
  file_not_found,
  schema_error,
  io_error,
};

const char* errc_name(errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool ok, errc code, const std::string& what) {
  if (!ok) fail(code, what);
}

}  // namespace circulant
