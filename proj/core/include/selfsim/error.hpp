#ifndef SELFSIM_ERROR_HPP_
#define SELFSIM_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace selfsim {

enum class ErrorCode {
  kIllegalComposition,
  kDepthExceeded,
  kBackendMismatch,
  kInvalidCayleyTable,
  kInvalidGraph,
  kSourceConditionViolated,
  kNotIdempotent,
  kNotComposable,
  kUnknownAtDepth,
  kInvalidMatrices,
  kNonBijectiveOutput,
  kResidualFreenessRequired,
  kIntegerOverflow,
  kInvalidArgument,
  kParse,
  kUnknownLabel,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Outcome of a comparison that may not be decidable with the information at
// hand (depth-bounded streams, automaton words without a faithfulness flag).
enum class Equality { kEqual, kDistinct, kUnknown };

// Distinct dominates Unknown, which dominates Equal.
constexpr Equality operator&&(Equality a, Equality b) noexcept {
  if (a == Equality::kDistinct || b == Equality::kDistinct) {
    return Equality::kDistinct;
  }
  if (a == Equality::kUnknown || b == Equality::kUnknown) {
    return Equality::kUnknown;
  }
  return Equality::kEqual;
}

constexpr Equality from_bool(bool equal) noexcept {
  return equal ? Equality::kEqual : Equality::kDistinct;
}

std::string_view to_string(Equality e) noexcept;

}  // namespace selfsim

#endif  // SELFSIM_ERROR_HPP_
