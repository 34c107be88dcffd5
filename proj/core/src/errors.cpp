#include "circulant/errors.hpp"

namespace circulant {

const char* errc_name(errc code) noexcept {
  switch (code) {
    case errc::not_strictly_increasing: return "not_strictly_increasing";
    case errc::jump_out_of_range: return "jump_out_of_range";
    case errc::disconnected: return "disconnected";
    case errc::invalid_probability: return "invalid_probability";
    case errc::empty_jump_set: return "empty_jump_set";
    case errc::too_close_to_pole: return "too_close_to_pole";
    case errc::pole_hit: return "pole_hit";
    case errc::monotonicity_violation: return "monotonicity_violation";
    case errc::dimension_too_small: return "dimension_too_small";
    case errc::weyl_count_mismatch: return "weyl_count_mismatch";
    case errc::symmetric_metric: return "symmetric_metric";
    case errc::empty_spectrum: return "empty_spectrum";
    case errc::too_few_levels: return "too_few_levels";
    case errc::xmax_too_large: return "xmax_too_large";
    case errc::no_bracket: return "no_bracket";
    case errc::pole_at_one: return "pole_at_one";
    case errc::argument_out_of_range: return "argument_out_of_range";
    case errc::quadrature_failure: return "quadrature_failure";
    case errc::near_singular_mhat: return "near_singular_mhat";
    case errc::degenerate_c: return "degenerate_c";
    case errc::usage_error: return "usage_error";
    case errc::file_not_found: return "file_not_found";
    case errc::schema_error: return "schema_error";
    case errc::io_error: return "io_error";
  }
  return "unknown";
}

}  // namespace circulant
