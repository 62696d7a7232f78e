#ifndef QAM_ERROR_HPP
#define QAM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace qam {

/// Base of every domain error raised by the library. The CLI maps these to
/// exit code 2 and prints name() alongside the message.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
  virtual const char* name() const noexcept { return "Error"; }
};

#define QAM_DEFINE_ERROR(Type)                                      \
  class Type : public Error {                                       \
   public:                                                          \
    explicit Type(const std::string& what) : Error(what) {}         \
    const char* name() const noexcept override { return #Type; }    \
  }

// hilbert-core
QAM_DEFINE_ERROR(DimensionError);
QAM_DEFINE_ERROR(ZeroVectorError);
QAM_DEFINE_ERROR(NormError);
QAM_DEFINE_ERROR(FieldError);
QAM_DEFINE_ERROR(PreconditionError);
// measurement
QAM_DEFINE_ERROR(BasisError);
// patterns
QAM_DEFINE_ERROR(OrthogonalityError);
QAM_DEFINE_ERROR(InsufficientCopiesError);
QAM_DEFINE_ERROR(BankError);
// aaam
QAM_DEFINE_ERROR(AllDegenerateError);
QAM_DEFINE_ERROR(OutOfSpanError);
// io
QAM_DEFINE_ERROR(FormatError);
QAM_DEFINE_ERROR(RangeError);

#undef QAM_DEFINE_ERROR

}  // namespace qam

#endif  // QAM_ERROR_HPP
