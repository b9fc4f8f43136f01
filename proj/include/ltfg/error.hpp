#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ltfg {

// Stable machine-readable failure categories. The CLI prints code_name()
// verbatim, so renaming an enumerator is an interface change.
enum class Errc {
  invalid_argument,
  prime_mismatch,
  division_by_zero,
  shape_mismatch,
  nonzero_constant_term,
  jacobian_not_identity,
  precondition_failed,
  precision_exhausted,
  parse_error,
  ambiguous_branch,
  empty_bounding_box,
};

constexpr std::string_view code_name(Errc code) {
  switch (code) {
    case Errc::invalid_argument: return "E_INVALID_ARGUMENT";
    case Errc::prime_mismatch: return "E_PRIME_MISMATCH";
    case Errc::division_by_zero: return "E_DIVISION_BY_ZERO";
    case Errc::shape_mismatch: return "E_SHAPE_MISMATCH";
    case Errc::nonzero_constant_term: return "E_NONZERO_CONSTANT_TERM";
    case Errc::jacobian_not_identity: return "E_JACOBIAN_NOT_IDENTITY";
    case Errc::precondition_failed: return "E_PRECONDITION";
    case Errc::precision_exhausted: return "E_PRECISION_EXHAUSTED";
    case Errc::parse_error: return "E_PARSE";
    case Errc::ambiguous_branch: return "E_AMBIGUOUS_BRANCH";
    case Errc::empty_bounding_box: return "E_EMPTY_BOUNDING_BOX";
  }
  return "E_UNKNOWN";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace ltfg
