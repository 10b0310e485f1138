#pragma once

#include <stdexcept>
#include <string>

namespace jvoa {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define JVOA_DEFINE_ERROR(Name)            \
  class Name : public Error {              \
   public:                                 \
    using Error::Error;                    \
  };

JVOA_DEFINE_ERROR(ZeroPolynomial)
JVOA_DEFINE_ERROR(IndexOutOfRange)
JVOA_DEFINE_ERROR(FamilyMismatch)
JVOA_DEFINE_ERROR(UnsupportedFamily)
JVOA_DEFINE_ERROR(InvalidSpace)
JVOA_DEFINE_ERROR(DimensionTooSmall)
JVOA_DEFINE_ERROR(NoPresentation)
JVOA_DEFINE_ERROR(DegreeMismatch)
JVOA_DEFINE_ERROR(InvalidPair)
JVOA_DEFINE_ERROR(SingularWindow)
JVOA_DEFINE_ERROR(ParseError)

#undef JVOA_DEFINE_ERROR

}  // namespace jvoa
