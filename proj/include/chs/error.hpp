#pragma once

#include <stdexcept>
#include <string>

namespace chs {

/// Failure categories used across the library. CLI maps extremal_violation
/// to exit code 3 and everything else to exit code 2.
enum class errc {
  // graph construction
  loop_rejected,
  index_out_of_range,
  invalid_parameter,
  // graph6 / edge-list parsing
  malformed_header,
  character_out_of_range,
  truncated_bits,
  trailing_garbage,
  non_integer_token,
  count_mismatch,
  // spectra
  convergence_failure,
  invalid_k,
  invalid_p,
  unsupported_family,
  // chs norms
  odd_degree,
  degree_too_small,
  unsupported_degree,
  // analysis
  length_mismatch,
  order_mismatch,
  not_singularly_cospectral,
  bipartite_input,
  order_too_small,
  order_too_large,
  extremal_violation,
};

inline const char* errc_name(errc c) noexcept {
  switch (c) {
    case errc::loop_rejected: return "LoopRejected";
    case errc::index_out_of_range: return "IndexOutOfRange";
    case errc::invalid_parameter: return "InvalidParameter";
    case errc::malformed_header: return "MalformedHeader";
    case errc::character_out_of_range: return "CharacterOutOfRange";
    case errc::truncated_bits: return "TruncatedBits";
    case errc::trailing_garbage: return "TrailingGarbage";
    case errc::non_integer_token: return "NonIntegerToken";
    case errc::count_mismatch: return "CountMismatch";
    case errc::convergence_failure: return "ConvergenceFailure";
    case errc::invalid_k: return "InvalidK";
    case errc::invalid_p: return "InvalidP";
    case errc::unsupported_family: return "UnsupportedFamily";
    case errc::odd_degree: return "OddDegree";
    case errc::degree_too_small: return "DegreeTooSmall";
    case errc::unsupported_degree: return "UnsupportedDegree";
    case errc::length_mismatch: return "LengthMismatch";
    case errc::order_mismatch: return "OrderMismatch";
    case errc::not_singularly_cospectral: return "NotSingularlyCospectral";
    case errc::bipartite_input: return "BipartiteInput";
    case errc::order_too_small: return "OrderTooSmall";
    case errc::order_too_large: return "OrderTooLarge";
    case errc::extremal_violation: return "ExtremalViolation";
  }
  return "UnknownError";
}

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

}  // namespace chs
