#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dac {

/// Root of every error raised by the library. `kind()` is a stable class
/// name used in run reports for failed instances.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define DAC_DEFINE_ERROR(Name, Base)                                   \
  class Name : public Base {                                           \
   public:                                                             \
    explicit Name(const std::string& what) : Base(#Name, what) {}      \
                                                                       \
   protected:                                                          \
    Name(std::string kind, const std::string& what)                    \
        : Base(std::move(kind), what) {}                               \
  };

// Configuration and input validation.
DAC_DEFINE_ERROR(ConfigError, Error)
DAC_DEFINE_ERROR(PreconditionViolation, Error)

// Backends.
DAC_DEFINE_ERROR(BackendError, Error)
DAC_DEFINE_ERROR(TransportError, BackendError)
DAC_DEFINE_ERROR(AuthError, BackendError)
DAC_DEFINE_ERROR(ReplayMiss, BackendError)
DAC_DEFINE_ERROR(UnrecognizedPrompt, BackendError)
DAC_DEFINE_ERROR(StoreIOError, Error)

// Solver.
DAC_DEFINE_ERROR(DecomposeParseError, Error)
DAC_DEFINE_ERROR(AnswerParseError, Error)
DAC_DEFINE_ERROR(MaxDepthExceeded, Error)
DAC_DEFINE_ERROR(UnsupportedStrategy, Error)
DAC_DEFINE_ERROR(EmptyInput, Error)

// Tasks.
DAC_DEFINE_ERROR(TooShort, Error)
DAC_DEFINE_ERROR(NonDigitInput, Error)
DAC_DEFINE_ERROR(VerdictParseError, Error)
DAC_DEFINE_ERROR(MergeInconsistency, Error)

// BSI reference.
DAC_DEFINE_ERROR(MalformedTree, Error)
DAC_DEFINE_ERROR(NullPattern, Error)
DAC_DEFINE_ERROR(LengthMismatch, Error)
DAC_DEFINE_ERROR(BadInput, Error)

// Evaluation.
DAC_DEFINE_ERROR(DatasetError, Error)

#undef DAC_DEFINE_ERROR

/// Dataset or report line that fails schema validation. `line()` is 1-based.
class SchemaError : public DatasetError {
 public:
  SchemaError(std::size_t line, const std::string& what)
      : DatasetError("SchemaError",
                     "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace dac
