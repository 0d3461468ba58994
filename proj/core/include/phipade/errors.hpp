#pragma once

#include <stdexcept>
#include <string>

namespace phipade {

// Base of every error raised by the library. name() is the stable identifier
// the CLI prints on numeric failure.
class Error : public std::runtime_error {
public:
  Error(std::string name, const std::string& what)
      : std::runtime_error(name + ": " + what), name_(std::move(name)) {}
  const std::string& name() const noexcept { return name_; }

private:
  std::string name_;
};

#define PHIPADE_DEFINE_ERROR(Type)                                             \
  class Type : public Error {                                                  \
  public:                                                                      \
    explicit Type(const std::string& what) : Error(#Type, what) {}             \
  }

PHIPADE_DEFINE_ERROR(InvalidArgument);
PHIPADE_DEFINE_ERROR(DegeneratePade);
PHIPADE_DEFINE_ERROR(RootFindingFailure);
PHIPADE_DEFINE_ERROR(MultiplePoleError);
PHIPADE_DEFINE_ERROR(BranchCutError);
PHIPADE_DEFINE_ERROR(QuadratureError);
PHIPADE_DEFINE_ERROR(UnsupportedDegenerateCase);
PHIPADE_DEFINE_ERROR(FitBracketError);
PHIPADE_DEFINE_ERROR(RootBracketError);
PHIPADE_DEFINE_ERROR(MatchingViolation);
PHIPADE_DEFINE_ERROR(ParseError);

#undef PHIPADE_DEFINE_ERROR

} // namespace phipade
