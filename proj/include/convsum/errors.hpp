#pragma once

#include <stdexcept>
#include <string>

namespace convsum {

// Input errors are caller mistakes; solver errors mean the mathematics did
// not go through (rank deficiency, a target outside the span, ...).
enum class ErrorCategory { Input, Solver };

class Error : public std::runtime_error {
 public:
  Error(std::string name, ErrorCategory category, const std::string& what)
      : std::runtime_error(what), name_(std::move(name)), category_(category) {}

  const std::string& name() const noexcept { return name_; }
  ErrorCategory category() const noexcept { return category_; }

 private:
  std::string name_;
  ErrorCategory category_;
};

#define CONVSUM_DEFINE_ERROR(Name, Category)                        \
  class Name : public Error {                                       \
   public:                                                          \
    explicit Name(const std::string& what)                          \
        : Error(#Name, ErrorCategory::Category, what) {}            \
  }

CONVSUM_DEFINE_ERROR(InvalidArgument, Input);
CONVSUM_DEFINE_ERROR(ZeroConstantTerm, Input);
CONVSUM_DEFINE_ERROR(FractionalLeadingExponent, Input);
CONVSUM_DEFINE_ERROR(NegativeLeadingExponent, Input);
CONVSUM_DEFINE_ERROR(TruncationExceeded, Input);
CONVSUM_DEFINE_ERROR(BoundExceeded, Input);
CONVSUM_DEFINE_ERROR(UnsupportedPair, Input);
CONVSUM_DEFINE_ERROR(WrongCount, Solver);
CONVSUM_DEFINE_ERROR(NotIndependent, Solver);
CONVSUM_DEFINE_ERROR(SingularSystem, Solver);
CONVSUM_DEFINE_ERROR(Inconsistent, Solver);
CONVSUM_DEFINE_ERROR(BasisIncomplete, Solver);

#undef CONVSUM_DEFINE_ERROR

}  // namespace convsum
