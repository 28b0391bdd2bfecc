#pragma once

#include <stdexcept>
#include <string>

namespace theta {

/// Base for every error raised by the library. `kind()` is a stable
/// identifier used by the CLI diagnostics and by tests.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define THETA_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                      \
   public:                                                         \
    explicit Name(const std::string& what) : Error(#Name, what) {} \
  }

// Caller supplied malformed or out-of-contract data.
THETA_DEFINE_ERROR(InvalidInput);
THETA_DEFINE_ERROR(InvalidModel);
THETA_DEFINE_ERROR(UnsupportedModel);
THETA_DEFINE_ERROR(DegeneratePencil);
THETA_DEFINE_ERROR(SynthesisFailed);
// Raised by the recovery algorithms when the configuration does not have
// the structure they invert.
THETA_DEFINE_ERROR(NotASpanConfiguration);
THETA_DEFINE_ERROR(InconsistentConfiguration);
THETA_DEFINE_ERROR(NotASplitConfiguration);
THETA_DEFINE_ERROR(WrongStratification);
THETA_DEFINE_ERROR(GenericityFailure);
THETA_DEFINE_ERROR(ParseError);

#undef THETA_DEFINE_ERROR

/// The points handed to hyperplane_through span less than a hyperplane.
/// `defect` is (r - 1) - dim(span), always >= 1.
class DegenerateSpan : public Error {
 public:
  DegenerateSpan(int defect, const std::string& what)
      : Error("DegenerateSpan", what), defect_(defect) {}
  int defect() const noexcept { return defect_; }

 private:
  int defect_;
};

}  // namespace theta
