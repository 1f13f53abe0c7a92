#pragma once

#include <stdexcept>
#include <string>

namespace hjx {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define HJX_DEFINE_ERROR(Name)            \
  class Name : public Error {             \
   public:                                \
    using Error::Error;                   \
  }

/// a ⊎ b requested on words whose domains intersect.
HJX_DEFINE_ERROR(UndefinedProduct);
HJX_DEFINE_ERROR(NotAVariableWord);
HJX_DEFINE_ERROR(OverlappingDomains);
HJX_DEFINE_ERROR(WindowTooSmall);
HJX_DEFINE_ERROR(OutOfRange);
HJX_DEFINE_ERROR(InvalidArgument);
HJX_DEFINE_ERROR(VariableInConstantReduction);
HJX_DEFINE_ERROR(UnsupportedKind);
HJX_DEFINE_ERROR(MissingBaseColor);
HJX_DEFINE_ERROR(ParseError);

/// A configured cap (universe size, search nodes, partitions) was hit.
HJX_DEFINE_ERROR(ResourceLimit);

#undef HJX_DEFINE_ERROR

}  // namespace hjx
