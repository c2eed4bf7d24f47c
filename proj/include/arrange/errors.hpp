#pragma once

#include <stdexcept>
#include <string>

namespace arrange {

// Base class for all domain errors raised by the library. CLI maps these
// to a dedicated exit code; tests catch the concrete types.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define ARRANGE_DEFINE_ERROR(Name)                                   \
    class Name : public Error {                                      \
    public:                                                          \
        explicit Name(const std::string& msg = #Name) : Error(msg) {} \
    };

ARRANGE_DEFINE_ERROR(NotACoking)
ARRANGE_DEFINE_ERROR(NotAKing)
ARRANGE_DEFINE_ERROR(EmptyWeight)
ARRANGE_DEFINE_ERROR(ParamOutOfRange)
ARRANGE_DEFINE_ERROR(TooLarge)
ARRANGE_DEFINE_ERROR(NotRepresentable)
ARRANGE_DEFINE_ERROR(MalformedL1)
ARRANGE_DEFINE_ERROR(UnclassifiableFlat)
ARRANGE_DEFINE_ERROR(FlatNotInPoset)
ARRANGE_DEFINE_ERROR(PrimeTooSmall)
ARRANGE_DEFINE_ERROR(InconsistentInterpolation)
ARRANGE_DEFINE_ERROR(ConditionCViolated)
ARRANGE_DEFINE_ERROR(NotACoatom)
ARRANGE_DEFINE_ERROR(NotCentral)
ARRANGE_DEFINE_ERROR(DegreeSumMismatch)
ARRANGE_DEFINE_ERROR(ParseError)

#undef ARRANGE_DEFINE_ERROR

} // namespace arrange
