#pragma once

#include <stdexcept>
#include <string>

namespace schurforge {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define SCHURFORGE_DEFINE_ERROR(Name) \
  class Name : public Error {         \
   public:                            \
    using Error::Error;               \
  }

SCHURFORGE_DEFINE_ERROR(ConstructionError);
SCHURFORGE_DEFINE_ERROR(DivisionByZero);
SCHURFORGE_DEFINE_ERROR(ContextError);
SCHURFORGE_DEFINE_ERROR(NotFinite);
SCHURFORGE_DEFINE_ERROR(ZeroPolynomial);
SCHURFORGE_DEFINE_ERROR(BadSubstitution);
SCHURFORGE_DEFINE_ERROR(BadPermutation);
SCHURFORGE_DEFINE_ERROR(BadBounds);
SCHURFORGE_DEFINE_ERROR(BadSequence);
SCHURFORGE_DEFINE_ERROR(SizeError);
SCHURFORGE_DEFINE_ERROR(BadParameter);
SCHURFORGE_DEFINE_ERROR(CaseError);
SCHURFORGE_DEFINE_ERROR(ParseError);

#undef SCHURFORGE_DEFINE_ERROR

}  // namespace schurforge
