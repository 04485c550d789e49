#pragma once

#include <stdexcept>
#include <string>

namespace ballspec {

// Base class for every error raised by the library. `module()` names the
// component that detected the problem; `numerical()` separates genuine
// numerical failures from requests outside the supported domain.
class Error : public std::runtime_error {
 public:
  Error(std::string module, const std::string& what)
      : std::runtime_error(module + ": " + what), module_(std::move(module)) {}

  const std::string& module() const noexcept { return module_; }
  virtual bool numerical() const noexcept { return false; }

 private:
  std::string module_;
};

#define BALLSPEC_DEFINE_ERROR(Name, is_numerical)                  \
  class Name : public Error {                                      \
   public:                                                         \
    using Error::Error;                                            \
    bool numerical() const noexcept override { return is_numerical; } \
  };

// Argument or result outside the supported box.
BALLSPEC_DEFINE_ERROR(RangeError, false)
BALLSPEC_DEFINE_ERROR(InvalidArgument, false)
BALLSPEC_DEFINE_ERROR(Unsupported, false)
// Exact integer result does not fit the integer width.
BALLSPEC_DEFINE_ERROR(OverflowError, false)

BALLSPEC_DEFINE_ERROR(LossOfPrecision, true)
BALLSPEC_DEFINE_ERROR(BracketFailure, true)
BALLSPEC_DEFINE_ERROR(StepTooCoarse, true)
BALLSPEC_DEFINE_ERROR(DegenerateOrdering, true)
BALLSPEC_DEFINE_ERROR(CertificateFailure, true)

#undef BALLSPEC_DEFINE_ERROR

}  // namespace ballspec
