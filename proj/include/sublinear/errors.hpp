#pragma once

#include <stdexcept>
#include <string>

namespace sublinear {

/// Base of every error raised by the library. The CLI maps all of these to
/// exit code 2 (input or configuration error).
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define SUBLINEAR_DEFINE_ERROR(Name)                              \
  class Name : public Error {                                     \
   public:                                                        \
    explicit Name(const std::string& what) : Error(what) {}       \
  }

SUBLINEAR_DEFINE_ERROR(InvalidInput);
SUBLINEAR_DEFINE_ERROR(NegativeWeight);
SUBLINEAR_DEFINE_ERROR(NotNormalized);
SUBLINEAR_DEFINE_ERROR(IndexOutOfRange);
SUBLINEAR_DEFINE_ERROR(SupportMismatch);
SUBLINEAR_DEFINE_ERROR(DimensionMismatch);
SUBLINEAR_DEFINE_ERROR(NoUncertainty);
SUBLINEAR_DEFINE_ERROR(SizeGuardExceeded);
SUBLINEAR_DEFINE_ERROR(HypothesisViolated);

#undef SUBLINEAR_DEFINE_ERROR

}  // namespace sublinear
