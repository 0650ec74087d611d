#pragma once

#include <stdexcept>
#include <string>

namespace tauscope {

// Base class for every failure the engine reports.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define TAUSCOPE_ERROR(Name)                 \
  class Name : public Error {                \
   public:                                   \
    explicit Name(const std::string& what)   \
        : Error(#Name ": " + what) {}        \
  }

TAUSCOPE_ERROR(ParseError);
TAUSCOPE_ERROR(MalformedRelation);
TAUSCOPE_ERROR(NotFiniteDimensional);
TAUSCOPE_ERROR(UnsupportedCharacteristic);
TAUSCOPE_ERROR(InvalidAlgebra);
TAUSCOPE_ERROR(InvalidModule);
TAUSCOPE_ERROR(NonSplitEndomorphism);
TAUSCOPE_ERROR(IsProjective);
TAUSCOPE_ERROR(NotInCensus);
TAUSCOPE_ERROR(RoundtripFailure);
TAUSCOPE_ERROR(SiltingCheckFailure);
TAUSCOPE_ERROR(ConeCheckFailure);
TAUSCOPE_ERROR(CrossCheckFailure);
TAUSCOPE_ERROR(ReflectionNotUnique);
TAUSCOPE_ERROR(InvariantFailure);

#undef TAUSCOPE_ERROR

}  // namespace tauscope
